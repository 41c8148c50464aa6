// From a neighborhood chain to the gyrometric ϱ_N on the Möbius disk.
//
// cargo run --example prenorm_metric

use gyrometric::prelude::*;
use num_complex::Complex64;

pub fn run_example() -> Result<()> {
    let disk = make_mobius();
    let chain = build_chain(0.8, 12)?;
    println!("chain radii r0..r4: {:?}", &chain.radii()[..5]);

    let family = build_dyadic_family(&chain, 12)?;
    for (m, n) in [(1, 0), (1, 1), (3, 2), (5, 3), (5, 2)] {
        println!("rho({m}/2^{n}) = {}", family.rho(m, n)?);
    }
    let audit = family.audit();
    println!("dyadic family audit passed: {}", audit.passed);

    let x = Complex64::new(0.3, 0.1);
    let y = Complex64::new(-0.2, 0.45);
    println!("N(x) = {}", prenorm(&family, &disk, &x)?);
    println!("rho_N(x, y) = {}", gyro_metric(&family, &disk, &x, &y)?);
    println!("rho_N(y, x) = {}", gyro_metric(&family, &disk, &y, &x)?);
    println!(
        "sub-pseudometric = {}",
        sub_pseudometric(&family, &disk, &x, &y)?
    );

    let ball = metric_ball(&family, 0.25)?;
    println!("x in B_N(1/4): {}", ball.contains(&disk, &x));

    let sampling = Sampling::new(7, 2_000);
    let metric = metric_axiom_check(&family, &disk, &sampling, 1e-9);
    let sandwich = sandwich_check(&family, &disk, 3, &sampling)?;
    let invariance = gyration_invariance_check(&family, &disk, &sampling);
    println!(
        "metric axioms {}, sandwich at n=3 {}, gyration invariance {}",
        metric.passed, sandwich.passed, invariance.passed
    );
    assert!(audit.passed && metric.passed && sandwich.passed && invariance.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("prenorm example");
}

// The Möbius disk: gyrogroup axioms, closed-form gyrations and the
// gyrator identity.
//
// cargo run --example mobius_axioms

use gyrometric::models::MobiusDisk;
use gyrometric::prelude::*;
use num_complex::Complex64;

pub fn run_example() -> Result<()> {
    let disk = make_mobius();
    let a = Complex64::new(0.5, 0.0);
    let b = Complex64::new(0.1, 0.6);

    println!("0.5 ⊕ 0.5 = {}", disk.op(&a, &a)?);
    println!("a ⊕ b = {}", disk.op(&a, &b)?);
    println!("⊖b = {}", disk.inv(&b)?);

    let factor = MobiusDisk::gyration_factor(&a, &b);
    println!(
        "gyr[a, b] rotates by {factor} (|factor| = {})",
        factor.norm()
    );

    let z = Complex64::new(-0.3, 0.2);
    let closed = disk.gyr(&a, &b, &z)?;
    let derived = disk.derived_gyr(&a, &b, &z)?;
    println!("gyr[a, b]z = {closed}, gyrator identity gives {derived}");

    let sampling = Sampling::new(7, 2_000);
    let mut suite = check_axioms(&disk, &sampling, 1e-9);
    suite.extend(check_difference_identities(&disk, &sampling, 1e-9));
    for c in &suite.checks {
        println!("{:<45} max violation {:.3e}", c.property, c.max_violation);
    }
    assert!(suite.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("mobius example");
}

// Relativistic velocity addition in the Einstein ball.
//
// cargo run --example einstein_velocity

use gyrometric::prelude::*;
use nalgebra::Vector3;

fn show(v: &Vector3<f64>) -> String {
    format!("({:.6}, {:.6}, {:.6})", v.x, v.y, v.z)
}

pub fn run_example() -> Result<()> {
    let ball = make_einstein();
    let u = Vector3::new(0.5, 0.0, 0.0);
    let collinear = ball.op(&u, &u)?;
    println!("0.5c ⊕ 0.5c along x = {}", show(&collinear));

    let v = Vector3::new(0.0, 0.6, 0.0);
    let uv = ball.op(&u, &v)?;
    let vu = ball.op(&v, &u)?;
    println!("u ⊕ v = {}", show(&uv));
    println!("v ⊕ u = {}", show(&vu));
    let w = Vector3::new(0.2, -0.1, 0.4);
    let rotated = ball.gyr(&u, &v, &w)?;
    println!(
        "gyr[u, v] keeps speeds: |w| = {:.15}, |gyr[u, v]w| = {:.15}",
        w.norm(),
        rotated.norm()
    );

    let sampling = Sampling::new(3, 2_000);
    let suite = check_axioms(&ball, &sampling, 1e-9);
    println!(
        "axioms pass on {} samples: {}",
        sampling.samples, suite.passed
    );
    let ball_check = check_gyr_invariance(&ball, &GyrInvariantBall::new(0.9)?, &sampling);
    println!("gyrations preserve the 0.9-ball: {}", ball_check.passed);
    assert!(suite.passed && ball_check.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("einstein example");
}

//! Concrete gyrogroups: the Möbius disk, the Einstein ball and table-driven
//! finite models.

mod einstein;
mod mobius;
mod table;

pub use einstein::{make_einstein, EinsteinBall};
pub use mobius::{make_mobius, MobiusDisk};
pub use table::{
    check_associativity, cyclic_group, klein_four, make_group_adapter, make_table_gyrogroup,
    validate_table, CayleyTable, GyrationRule, TableGyrogroup, ASSOCIATIVITY, LATIN,
};

use nalgebra::Vector3;
use num_complex::Complex64;
use rand::Rng;

/// Inputs with norm at or beyond `1 - DOMAIN_MARGIN` are rejected.
pub const DOMAIN_MARGIN: f64 = 1e-12;

/// Samplers stay inside this radius.
pub const SAMPLE_RADIUS: f64 = 0.99;

/// Default equality tolerance of the continuous models.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

pub(crate) fn in_open_unit_ball(norm: f64) -> bool {
    norm.is_finite() && norm < 1.0 - DOMAIN_MARGIN
}

/// Uniform point of the disk `|z| < radius`.
pub fn sample_disk<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, theta)
}

/// Uniform point of the ball `‖v‖ < radius` in ℝ³, by rejection.
pub fn sample_ball<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n < 1.0 {
            return v * radius;
        }
    }
}

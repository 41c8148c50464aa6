use nalgebra::Vector3;
use rand::Rng;

use super::{in_open_unit_ball, sample_ball, DEFAULT_TOLERANCE, SAMPLE_RADIUS};
use crate::gyro::{Gyrogroup, Radial};

/// Relativistic velocity addition on the open unit ball of ℝ³ (c = 1).
///
/// Gyrations come from the gyrator identity; no closed form is used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinBall {
    tolerance: f64,
}

pub fn make_einstein() -> EinsteinBall {
    EinsteinBall::default()
}

impl Default for EinsteinBall {
    fn default() -> Self {
        EinsteinBall {
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl EinsteinBall {
    pub fn with_tolerance(tolerance: f64) -> Self {
        EinsteinBall { tolerance }
    }

    /// Lorentz factor `1 / √(1 − ‖u‖²)`.
    pub fn gamma(u: &Vector3<f64>) -> f64 {
        1.0 / (1.0 - u.norm_squared()).sqrt()
    }
}

impl Gyrogroup for EinsteinBall {
    type Element = Vector3<f64>;

    fn name(&self) -> String {
        "einstein".into()
    }

    fn identity(&self) -> Vector3<f64> {
        Vector3::zeros()
    }

    fn contains(&self, a: &Vector3<f64>) -> bool {
        in_open_unit_ball(a.norm())
    }

    fn add(&self, u: &Vector3<f64>, v: &Vector3<f64>) -> Vector3<f64> {
        // exact cancellation; the general formula leaves ~1e-17 residue
        if *v == -u {
            return Vector3::zeros();
        }
        let gu = Self::gamma(u);
        let uv = u.dot(v);
        (u + v / gu + u * (gu / (1.0 + gu) * uv)) / (1.0 + uv)
    }

    fn neg(&self, u: &Vector3<f64>) -> Vector3<f64> {
        -u
    }

    fn distance(&self, a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
        (a - b).norm()
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn label(&self, a: &Vector3<f64>) -> String {
        format!("({}, {}, {})", a.x, a.y, a.z)
    }

    fn elements(&self) -> Option<Vec<Vector3<f64>>> {
        None
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vector3<f64> {
        sample_ball(rng, SAMPLE_RADIUS)
    }
}

impl Radial for EinsteinBall {
    fn norm(&self, a: &Vector3<f64>) -> f64 {
        a.norm()
    }

    fn sample_in_ball<R: Rng + ?Sized>(&self, rng: &mut R, radius: f64) -> Vector3<f64> {
        sample_ball(rng, radius.min(SAMPLE_RADIUS))
    }
}

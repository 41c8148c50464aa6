use num_complex::Complex64;
use rand::Rng;

use super::{in_open_unit_ball, sample_disk, DEFAULT_TOLERANCE, SAMPLE_RADIUS};
use crate::gyro::{Gyrogroup, Radial};

/// The open complex unit disk with `a ⊕ b = (a + b) / (1 + āb)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusDisk {
    tolerance: f64,
}

pub fn make_mobius() -> MobiusDisk {
    MobiusDisk::default()
}

impl Default for MobiusDisk {
    fn default() -> Self {
        MobiusDisk {
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl MobiusDisk {
    pub fn with_tolerance(tolerance: f64) -> Self {
        MobiusDisk { tolerance }
    }

    /// The unimodular factor `(1 + ab̄) / (1 + āb)` by which `gyr[a, b]` rotates.
    pub fn gyration_factor(a: &Complex64, b: &Complex64) -> Complex64 {
        (1.0 + a * b.conj()) / (1.0 + a.conj() * b)
    }
}

impl Gyrogroup for MobiusDisk {
    type Element = Complex64;

    fn name(&self) -> String {
        "mobius".into()
    }

    fn identity(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn contains(&self, a: &Complex64) -> bool {
        in_open_unit_ball(a.norm())
    }

    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        (a + b) / (1.0 + a.conj() * b)
    }

    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }

    fn gyration(&self, a: &Complex64, b: &Complex64, z: &Complex64) -> Complex64 {
        Self::gyration_factor(a, b) * z
    }

    fn distance(&self, a: &Complex64, b: &Complex64) -> f64 {
        (a - b).norm()
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn label(&self, a: &Complex64) -> String {
        format!("{}{:+}i", a.re, a.im)
    }

    fn elements(&self) -> Option<Vec<Complex64>> {
        None
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Complex64 {
        sample_disk(rng, SAMPLE_RADIUS)
    }
}

impl Radial for MobiusDisk {
    fn norm(&self, a: &Complex64) -> f64 {
        a.norm()
    }

    fn sample_in_ball<R: Rng + ?Sized>(&self, rng: &mut R, radius: f64) -> Complex64 {
        sample_disk(rng, radius.min(SAMPLE_RADIUS))
    }
}

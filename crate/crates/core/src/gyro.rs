//! The gyrogroup contract and the derived operations every model shares.
//!
//! A model supplies the raw operation [`Gyrogroup::add`], the inverse
//! [`Gyrogroup::neg`] and optionally a closed-form [`Gyrogroup::gyration`].
//! Everything else (the gyrator identity, left differences, the `q` map) is
//! expressed through those three. The checked entry points (`op`, `inv`,
//! `gyr`, ...) reject inputs outside the model domain; the raw methods do not
//! and are what the check engine uses on intermediate values.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GyroError, Result};

pub trait Gyrogroup: Send + Sync {
    type Element: Clone + fmt::Debug + Send + Sync;

    fn name(&self) -> String;

    fn identity(&self) -> Self::Element;

    /// Whether `a` lies in the model domain.
    fn contains(&self, a: &Self::Element) -> bool;

    /// Raw `a ⊕ b`, no domain check.
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Raw `⊖a`, no domain check.
    fn neg(&self, a: &Self::Element) -> Self::Element;

    /// Raw `gyr[a, b](z)`. Models with a closed form override this; the
    /// default is the gyrator identity.
    fn gyration(&self, a: &Self::Element, b: &Self::Element, z: &Self::Element) -> Self::Element {
        self.gyrator(a, b, z)
    }

    /// `⊖(a ⊕ b) ⊕ (a ⊕ (b ⊕ z))`, computed from `add` and `neg` only.
    /// Not meant to be overridden.
    fn gyrator(&self, a: &Self::Element, b: &Self::Element, z: &Self::Element) -> Self::Element {
        let ab = self.add(a, b);
        let a_bz = self.add(a, &self.add(b, z));
        self.add(&self.neg(&ab), &a_bz)
    }

    /// Distance used to compare elements. Finite models return 0 or 1.
    fn distance(&self, a: &Self::Element, b: &Self::Element) -> f64;

    /// Equality tolerance: 0 for finite models.
    fn tolerance(&self) -> f64;

    /// Human-readable rendering used in witnesses and reports.
    fn label(&self, a: &Self::Element) -> String;

    /// Every element, for finite models. Checks enumerate these exhaustively
    /// instead of sampling.
    fn elements(&self) -> Option<Vec<Self::Element>>;

    /// Draws an element from the model's sampling region.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Element;

    fn equal(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.distance(a, b) <= self.tolerance()
    }

    fn ensure(&self, a: &Self::Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(GyroError::Domain(format!("{a:?}")))
        }
    }

    fn op(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.add(a, b))
    }

    fn inv(&self, a: &Self::Element) -> Result<Self::Element> {
        self.ensure(a)?;
        Ok(self.neg(a))
    }

    fn gyr(
        &self,
        a: &Self::Element,
        b: &Self::Element,
        z: &Self::Element,
    ) -> Result<Self::Element> {
        self.ensure(a)?;
        self.ensure(b)?;
        self.ensure(z)?;
        Ok(self.gyration(a, b, z))
    }

    fn derived_gyr(
        &self,
        a: &Self::Element,
        b: &Self::Element,
        z: &Self::Element,
    ) -> Result<Self::Element> {
        self.ensure(a)?;
        self.ensure(b)?;
        self.ensure(z)?;
        Ok(self.gyrator(a, b, z))
    }

    /// `⊖x ⊕ y`, the argument of the gyrometric.
    fn left_difference(&self, x: &Self::Element, y: &Self::Element) -> Result<Self::Element> {
        self.ensure(x)?;
        self.ensure(y)?;
        Ok(self.add(&self.neg(x), y))
    }

    /// `x ⊕ (⊖y)`.
    fn q_map(&self, x: &Self::Element, y: &Self::Element) -> Result<Self::Element> {
        self.ensure(x)?;
        self.ensure(y)?;
        Ok(self.add(x, &self.neg(y)))
    }
}

/// Models whose identity neighborhoods are norm balls preserved by every
/// gyration.
pub trait Radial: Gyrogroup {
    fn norm(&self, a: &Self::Element) -> f64;

    /// Draws an element with norm strictly below `radius`.
    fn sample_in_ball<R: Rng + ?Sized>(&self, rng: &mut R, radius: f64) -> Self::Element;
}

/// Seed and sample count of a randomized check.
///
/// Each check draws from its own ChaCha stream, so adding or reordering
/// checks never changes the inputs another check sees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: usize,
}

impl Sampling {
    pub fn new(seed: u64, samples: usize) -> Self {
        Sampling { seed, samples }
    }

    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// The `K`-tuples a check runs over: every tuple for finite models,
/// `sampling.samples` seeded draws otherwise.
pub fn tuples<M: Gyrogroup, const K: usize>(
    model: &M,
    sampling: &Sampling,
    stream: u64,
) -> Vec<[M::Element; K]> {
    match model.elements() {
        Some(all) => {
            let n = all.len();
            let total = n.pow(K as u32);
            (0..total)
                .map(|mut code| {
                    std::array::from_fn(|_| {
                        let i = code % n;
                        code /= n;
                        all[i].clone()
                    })
                })
                .collect()
        }
        None => {
            let mut rng = sampling.rng(stream);
            (0..sampling.samples)
                .map(|_| std::array::from_fn(|_| model.sample(&mut rng)))
                .collect()
        }
    }
}

pub(crate) fn labels<M: Gyrogroup>(model: &M, items: &[&M::Element]) -> Vec<String> {
    items.iter().map(|e| model.label(e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{cyclic_group, make_group_adapter, make_mobius};
    use num_complex::Complex64;

    #[test]
    fn exhaustive_tuples_cover_every_combination() {
        let z4 = make_group_adapter(cyclic_group(4)).unwrap();
        let t = tuples::<_, 3>(&z4, &Sampling::new(0, 1), 0);
        assert_eq!(t.len(), 64);
        let mut sorted = t.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 64);
    }

    #[test]
    fn sampled_tuples_are_reproducible() {
        let m = make_mobius();
        let a = tuples::<_, 2>(&m, &Sampling::new(9, 50), 3);
        let b = tuples::<_, 2>(&m, &Sampling::new(9, 50), 3);
        let c = tuples::<_, 2>(&m, &Sampling::new(9, 50), 4);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn checked_ops_reject_out_of_domain() {
        let m = make_mobius();
        let bad = Complex64::new(1.0, 0.0);
        let ok = Complex64::new(0.1, 0.0);
        assert!(matches!(m.op(&bad, &ok), Err(GyroError::Domain(_))));
        assert!(m.inv(&bad).is_err());
        assert!(m.gyr(&ok, &ok, &bad).is_err());
        assert!(m.left_difference(&ok, &bad).is_err());
        assert!(m.q_map(&bad, &ok).is_err());
        let nearly = Complex64::new(1.0 - 1e-13, 0.0);
        assert!(m.op(&nearly, &ok).is_err());
    }
}

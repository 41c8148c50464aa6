//! Axiom and identity verification over any [`Gyrogroup`].
//!
//! Finite models are checked over every tuple, continuous models over seeded
//! samples. Failures end up in the returned reports, never as errors.

use crate::check::{CheckReport, CheckSuite};
use crate::gyro::{labels, tuples, Gyrogroup, Sampling};

pub const G1: &str = "G1 identity";
pub const G2: &str = "G2 inverse";
pub const G3: &str = "G3 left gyroassociative law";
pub const G4: &str = "G4 left loop property";
pub const AUTOMORPHISM: &str = "gyration automorphism";
pub const GYRATOR_WELD: &str = "closed-form gyration matches gyrator identity";
pub const SYMMETRY_IDENTITY: &str = "difference symmetry identity";
pub const SYMMETRY_IDENTITY_UNNEGATED: &str = "difference symmetry identity without negation";
pub const TRIANGLE_IDENTITY: &str = "difference triangle identity";
pub const GYRATION_BIJECTIVE: &str = "gyrations are bijections";

pub fn check_identity<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let zero = m.identity();
    let mut check = CheckReport::builder(G1, tol);
    for [a] in tuples::<M, 1>(m, sampling, 1) {
        let v = m
            .distance(&m.add(&zero, &a), &a)
            .max(m.distance(&m.add(&a, &zero), &a));
        check.record(v, || labels(m, &[&a]));
    }
    check.finish()
}

pub fn check_inverse<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let zero = m.identity();
    let mut check = CheckReport::builder(G2, tol);
    for [a] in tuples::<M, 1>(m, sampling, 2) {
        let na = m.neg(&a);
        let v = m
            .distance(&m.add(&na, &a), &zero)
            .max(m.distance(&m.add(&a, &na), &zero));
        check.record(v, || labels(m, &[&a]));
    }
    check.finish()
}

pub fn check_left_gyroassociative<M: Gyrogroup>(
    m: &M,
    sampling: &Sampling,
    tol: f64,
) -> CheckReport {
    let mut check = CheckReport::builder(G3, tol);
    for [a, b, z] in tuples::<M, 3>(m, sampling, 3) {
        let lhs = m.add(&a, &m.add(&b, &z));
        let rhs = m.add(&m.add(&a, &b), &m.gyration(&a, &b, &z));
        check.record(m.distance(&lhs, &rhs), || labels(m, &[&a, &b, &z]));
    }
    check.finish()
}

pub fn check_left_loop<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let mut check = CheckReport::builder(G4, tol);
    for [a, b, z] in tuples::<M, 3>(m, sampling, 4) {
        let lhs = m.gyration(&m.add(&a, &b), &b, &z);
        let rhs = m.gyration(&a, &b, &z);
        check.record(m.distance(&lhs, &rhs), || labels(m, &[&a, &b, &z]));
    }
    check.finish()
}

pub fn check_automorphism<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let mut check = CheckReport::builder(AUTOMORPHISM, tol);
    for [a, b, u, v] in tuples::<M, 4>(m, sampling, 5) {
        let lhs = m.gyration(&a, &b, &m.add(&u, &v));
        let rhs = m.add(&m.gyration(&a, &b, &u), &m.gyration(&a, &b, &v));
        check.record(m.distance(&lhs, &rhs), || labels(m, &[&a, &b, &u, &v]));
    }
    check.finish()
}

/// G1 through G4 plus the automorphism law.
pub fn check_axioms<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckSuite {
    CheckSuite::new(
        format!("axioms/{}", m.name()),
        seed_of(m, sampling),
        vec![
            check_identity(m, sampling, tol),
            check_inverse(m, sampling, tol),
            check_left_gyroassociative(m, sampling, tol),
            check_left_loop(m, sampling, tol),
            check_automorphism(m, sampling, tol),
        ],
    )
}

/// The model's gyration against the gyrator identity.
pub fn check_gyrator_weld<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let mut check = CheckReport::builder(GYRATOR_WELD, tol);
    for [a, b, z] in tuples::<M, 3>(m, sampling, 6) {
        let v = m.distance(&m.gyration(&a, &b, &z), &m.gyrator(&a, &b, &z));
        check.record(v, || labels(m, &[&a, &b, &z]));
    }
    check.finish()
}

/// `⊖y ⊕ x = ⊖gyr[⊖y, x](⊖x ⊕ y)`.
///
/// This is the element-level form behind `N(⊖y ⊕ x) = N(⊖x ⊕ y)`; the
/// negation disappears under any symmetric `N`.
pub fn check_symmetry_identity<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let mut check = CheckReport::builder(SYMMETRY_IDENTITY, tol);
    for [x, y] in tuples::<M, 2>(m, sampling, 7) {
        let lhs = m.add(&m.neg(&y), &x);
        let rhs = m.neg(&m.gyration(&m.neg(&y), &x, &m.add(&m.neg(&x), &y)));
        check.record(m.distance(&lhs, &rhs), || labels(m, &[&x, &y]));
    }
    check.finish()
}

/// `⊖y ⊕ x = gyr[⊖y, x](⊖x ⊕ y)`, read literally as an identity between
/// elements. It does not hold in general (it is off by a negation); it holds
/// only after taking a symmetric norm of both sides. Kept so the discrepancy
/// can be measured.
pub fn check_symmetry_identity_unnegated<M: Gyrogroup>(
    m: &M,
    sampling: &Sampling,
    tol: f64,
) -> CheckReport {
    let mut check = CheckReport::builder(SYMMETRY_IDENTITY_UNNEGATED, tol);
    for [x, y] in tuples::<M, 2>(m, sampling, 7) {
        let lhs = m.add(&m.neg(&y), &x);
        let rhs = m.gyration(&m.neg(&y), &x, &m.add(&m.neg(&x), &y));
        check.record(m.distance(&lhs, &rhs), || labels(m, &[&x, &y]));
    }
    check.finish()
}

/// `⊖x ⊕ y = (⊖x ⊕ z) ⊕ gyr[⊖x, z](⊖z ⊕ y)`.
pub fn check_triangle_identity<M: Gyrogroup>(m: &M, sampling: &Sampling, tol: f64) -> CheckReport {
    let mut check = CheckReport::builder(TRIANGLE_IDENTITY, tol);
    for [x, y, z] in tuples::<M, 3>(m, sampling, 8) {
        let nx = m.neg(&x);
        let lhs = m.add(&nx, &y);
        let rhs = m.add(
            &m.add(&nx, &z),
            &m.gyration(&nx, &z, &m.add(&m.neg(&z), &y)),
        );
        check.record(m.distance(&lhs, &rhs), || labels(m, &[&x, &y, &z]));
    }
    check.finish()
}

pub fn check_difference_identities<M: Gyrogroup>(
    m: &M,
    sampling: &Sampling,
    tol: f64,
) -> CheckSuite {
    CheckSuite::new(
        format!("difference-identities/{}", m.name()),
        seed_of(m, sampling),
        vec![
            check_symmetry_identity(m, sampling, tol),
            check_triangle_identity(m, sampling, tol),
        ],
    )
}

/// Every `gyr[a, b]` permutes the element set. Finite models only; returns
/// `None` otherwise.
pub fn check_gyrations_bijective<M: Gyrogroup>(m: &M) -> Option<CheckReport> {
    let all = m.elements()?;
    let mut check = CheckReport::builder(GYRATION_BIJECTIVE, 0.0);
    for a in &all {
        for b in &all {
            let image: Vec<_> = all.iter().map(|z| m.gyration(a, b, z)).collect();
            let missing = all
                .iter()
                .filter(|z| !image.iter().any(|w| m.equal(w, z)))
                .count();
            check.record(missing as f64, || labels(m, &[a, b]));
        }
    }
    Some(check.finish())
}

fn seed_of<M: Gyrogroup>(m: &M, sampling: &Sampling) -> Option<u64> {
    m.elements().is_none().then_some(sampling.seed)
}

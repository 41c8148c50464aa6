//! The dyadic neighborhood family `V(m/2ⁿ)`, the prenorm `N` it induces and
//! the gyrometric `ϱ_N(x, y) = N(⊖x ⊕ y)`.
//!
//! Every `V(q)` is a norm ball, so the family is stored as a radius per
//! dyadic `q`:
//!
//! * `ρ(1) = r₀` and `ρ(1/2ⁿ) = r_n`,
//! * `ρ(2m/2ⁿ) = ρ(m/2ⁿ⁻¹)`,
//! * `ρ((2m+1)/2ⁿ) = r_n ⊕ ρ(m/2ⁿ⁻¹)` for `1 ≤ m < 2ⁿ⁻¹`,
//! * `ρ(q) = ∞` (the whole space) for `q > 1`.
//!
//! `N(x)` is the smallest grid dyadic `q` with `‖x‖ < ρ(q)`, capped at 1, and
//! `N(0) = 0`. On a grid of depth `d` this overestimates the exact infimum by
//! at most `2⁻ᵈ`; checks carry that slack explicitly.

use std::fmt;

use crate::base::{scalar_add, NeighborhoodChain, MAX_DEPTH};
use crate::check::{CheckBuilder, CheckReport, CheckSuite};
use crate::error::{GyroError, Result};
use crate::gyro::{labels, Radial, Sampling};

/// Families up to this depth keep every level in memory; deeper ones
/// evaluate `ρ` through the recursion on demand.
pub const MATERIALIZE_DEPTH: usize = 20;

pub const RULE_TOP: &str = "V(1) = U_0";
pub const RULE_UNIT: &str = "V(1/2^n) = U_n";
pub const RULE_EVEN: &str = "V(2m/2^n) = V(m/2^(n-1))";
pub const RULE_ODD: &str = "V((2m+1)/2^n) = U_n + V(m/2^(n-1))";
pub const RULE_BEYOND: &str = "V(q) = G for q > 1";
pub const MONOTONE: &str = "radius nondecreasing in q";

pub const SANDWICH_INNER: &str = "N(x) < 1/2^n implies x in U_n";
pub const SANDWICH_OUTER: &str = "x in U_n implies N(x) <= 2/2^n";

pub const NONNEGATIVE: &str = "metric nonnegative";
pub const SELF_DISTANCE: &str = "metric vanishes on the diagonal";
pub const SYMMETRY: &str = "metric symmetric";
pub const TRIANGLE: &str = "triangle inequality";
pub const INDISCERNIBLE: &str = "zero distance implies close points";
pub const PSEUDOMETRIC_DOMINATES: &str = "sub-pseudometric dominates metric";

pub const GYRATION_INVARIANT: &str = "prenorm invariant under gyrations";
pub const SUBADDITIVE: &str = "prenorm subadditive";
pub const REFINEMENT: &str = "refinement never increases prenorm";

/// `numerator / 2^level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    pub numerator: u64,
    pub level: u32,
}

impl Dyadic {
    pub fn new(numerator: u64, level: u32) -> Result<Self> {
        if numerator == 0 || level > 62 {
            return Err(GyroError::Input(format!(
                "dyadic {numerator}/2^{level} not representable"
            )));
        }
        Ok(Dyadic { numerator, level })
    }

    /// Lowest terms.
    pub fn reduced(self) -> Self {
        let shift = self.numerator.trailing_zeros().min(self.level);
        Dyadic {
            numerator: self.numerator >> shift,
            level: self.level - shift,
        }
    }

    pub fn value(self) -> f64 {
        self.numerator as f64 / (1u64 << self.level) as f64
    }

    pub fn exceeds_one(self) -> bool {
        self.numerator > 1u64 << self.level
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.level)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DyadicFamily {
    radii: Vec<f64>,
    /// `levels[n][m - 1] = ρ(m/2ⁿ)` for `1 ≤ m ≤ 2ⁿ`, when materialized.
    levels: Option<Vec<Vec<f64>>>,
}

pub fn build_dyadic_family(chain: &NeighborhoodChain, depth: usize) -> Result<DyadicFamily> {
    if depth == 0 || depth > chain.depth() {
        return Err(GyroError::Input(format!(
            "family depth {depth} outside 1..={}",
            chain.depth()
        )));
    }
    debug_assert!(depth <= MAX_DEPTH);
    let radii = chain.radii()[..=depth].to_vec();
    let levels = (depth <= MATERIALIZE_DEPTH).then(|| {
        let mut levels: Vec<Vec<f64>> = vec![vec![radii[0]]];
        for (n, &r_n) in radii.iter().enumerate().skip(1) {
            let prev = &levels[n - 1];
            let row: Vec<f64> = (1..=1usize << n)
                .map(|m| {
                    if m % 2 == 0 {
                        prev[m / 2 - 1]
                    } else if m == 1 {
                        r_n
                    } else {
                        scalar_add(r_n, prev[(m - 1) / 2 - 1])
                    }
                })
                .collect();
            levels.push(row);
        }
        levels
    });
    Ok(DyadicFamily { radii, levels })
}

impl DyadicFamily {
    pub fn depth(&self) -> usize {
        self.radii.len() - 1
    }

    /// `r_n`, the radius of `U_n`.
    pub fn chain_radius(&self, n: usize) -> f64 {
        self.radii[n]
    }

    pub fn is_materialized(&self) -> bool {
        self.levels.is_some()
    }

    /// Grid spacing `2^-depth`, the overestimate bound of [`Self::prenorm_of_norm`].
    pub fn grid_step(&self) -> f64 {
        (-(self.depth() as f64)).exp2()
    }

    /// `ρ(m/2ⁿ)`, read as stored (no reduction of the fraction).
    pub fn rho(&self, m: u64, n: usize) -> Result<f64> {
        if n > self.depth() || m == 0 {
            return Err(GyroError::Input(format!(
                "dyadic {m}/2^{n} outside the family of depth {}",
                self.depth()
            )));
        }
        if m > 1u64 << n {
            return Ok(f64::INFINITY);
        }
        Ok(match &self.levels {
            Some(levels) => levels[n][m as usize - 1],
            None => self.rho_recursive(m, n),
        })
    }

    pub fn rho_at(&self, q: Dyadic) -> Result<f64> {
        self.rho(q.numerator, q.level as usize)
    }

    fn rho_recursive(&self, m: u64, n: usize) -> f64 {
        if n == 0 {
            return self.radii[0];
        }
        if m.is_multiple_of(2) {
            self.rho_recursive(m / 2, n - 1)
        } else if m == 1 {
            self.radii[n]
        } else {
            scalar_add(self.radii[n], self.rho_recursive((m - 1) / 2, n - 1))
        }
    }

    fn grid_rho(&self, k: u64) -> f64 {
        let d = self.depth();
        match &self.levels {
            Some(levels) => levels[d][k as usize - 1],
            None => self.rho_recursive(k, d),
        }
    }

    /// `N` as a function of the norm.
    ///
    /// Binary search over the finest level; valid because `ρ` is monotone
    /// (see [`Self::audit`]).
    pub fn prenorm_of_norm(&self, norm: f64) -> f64 {
        if norm == 0.0 {
            return 0.0;
        }
        let top = 1u64 << self.depth();
        let (mut lo, mut hi) = (1u64, top + 1);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if norm < self.grid_rho(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if lo > top {
            1.0
        } else {
            lo as f64 / top as f64
        }
    }

    /// Rows `q,value` ordered by level then numerator, one row per reduced
    /// dyadic up to `max_level`. Values carry 17 significant digits.
    pub fn rho_csv(&self, max_level: usize) -> String {
        let max_level = max_level.min(self.depth());
        let mut out = String::from("q,value\n");
        for n in 0..=max_level {
            let step = if n == 0 { 1 } else { 2 };
            let mut m = 1u64;
            while m <= 1u64 << n {
                let q = Dyadic {
                    numerator: m,
                    level: n as u32,
                };
                let v = self.rho(m, n).expect("in range");
                out.push_str(&format!("{q},{v:.16e}\n"));
                m += step;
            }
        }
        out
    }

    /// Re-reads `ρ` and re-verifies each defining rule exactly, then checks
    /// monotonicity over the finest level. Deep unmaterialized families are
    /// audited up to [`MATERIALIZE_DEPTH`].
    pub fn audit(&self) -> CheckSuite {
        let d = self.depth().min(MATERIALIZE_DEPTH);
        let rho = |m: u64, n: usize| self.rho(m, n).expect("in range");
        let q = |m: u64, n: usize| {
            vec![Dyadic {
                numerator: m,
                level: n as u32,
            }
            .to_string()]
        };

        let mut top = CheckReport::builder(RULE_TOP, 0.0);
        top.record(exact(rho(1, 0), self.radii[0]), || vec!["1".into()]);

        let mut unit = CheckReport::builder(RULE_UNIT, 0.0);
        let mut even = CheckReport::builder(RULE_EVEN, 0.0);
        let mut odd = CheckReport::builder(RULE_ODD, 0.0);
        let mut beyond = CheckReport::builder(RULE_BEYOND, 0.0);
        for n in 0..=d {
            if n >= 1 {
                unit.record(exact(rho(1, n), self.radii[n]), || q(1, n));
                for m in 1..=1u64 << (n - 1) {
                    even.record(exact(rho(2 * m, n), rho(m, n - 1)), || q(2 * m, n));
                }
                for m in 1..(1u64 << (n - 1)) {
                    let expected = scalar_add(self.radii[n], rho(m, n - 1));
                    odd.record(exact(rho(2 * m + 1, n), expected), || q(2 * m + 1, n));
                }
            }
            let lo = (1u64 << n) + 1;
            for m in lo..=(lo + (1u64 << n)).min(lo + 64) {
                let v = if rho(m, n) == f64::INFINITY { 0.0 } else { 1.0 };
                beyond.record(v, || q(m, n));
            }
        }

        let mut mono = CheckReport::builder(MONOTONE, 0.0);
        let finest: Vec<f64> = (1..=1u64 << d).map(|m| rho(m, d)).collect();
        for (i, w) in finest.windows(2).enumerate() {
            mono.record(w[0] - w[1], || q(i as u64 + 1, d));
        }

        CheckSuite::new(
            format!("dyadic-family[{}]", self.depth()),
            None,
            vec![
                top.finish(),
                unit.finish(),
                even.finish(),
                odd.finish(),
                beyond.finish(),
                mono.finish(),
            ],
        )
    }
}

/// 0 when bitwise equal, otherwise the absolute gap (at least the smallest
/// positive double so a mismatch always registers).
fn exact(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs().max(f64::MIN_POSITIVE)
    }
}

pub fn prenorm<M: Radial>(f: &DyadicFamily, m: &M, x: &M::Element) -> Result<f64> {
    m.ensure(x)?;
    Ok(f.prenorm_of_norm(m.norm(x)))
}

/// `ϱ_N(x, y) = N(⊖x ⊕ y)`.
pub fn gyro_metric<M: Radial>(
    f: &DyadicFamily,
    m: &M,
    x: &M::Element,
    y: &M::Element,
) -> Result<f64> {
    let d = m.left_difference(x, y)?;
    Ok(f.prenorm_of_norm(m.norm(&d)))
}

/// `N(⊖x ⊕ y) + N(⊖y ⊕ x)`. On the radial models here this is `2ϱ_N`.
pub fn sub_pseudometric<M: Radial>(
    f: &DyadicFamily,
    m: &M,
    x: &M::Element,
    y: &M::Element,
) -> Result<f64> {
    Ok(gyro_metric(f, m, x, y)? + gyro_metric(f, m, y, x)?)
}

fn raw_metric<M: Radial>(f: &DyadicFamily, m: &M, x: &M::Element, y: &M::Element) -> f64 {
    f.prenorm_of_norm(m.norm(&m.add(&m.neg(x), y)))
}

/// `{N < 1/2ⁿ} ⊆ U_n ⊆ {N ≤ 2/2ⁿ}`, the outer bound widened by the grid step.
pub fn sandwich_check<M: Radial>(
    f: &DyadicFamily,
    m: &M,
    level: usize,
    sampling: &Sampling,
) -> Result<CheckSuite> {
    if level > f.depth() {
        return Err(GyroError::Input(format!(
            "sandwich level {level} exceeds family depth {}",
            f.depth()
        )));
    }
    let r_n = f.chain_radius(level);
    let inner_bound = (-(level as f64)).exp2();
    let outer_bound = 2.0 * inner_bound + f.grid_step();
    let mut rng = sampling.rng(30 + level as u64);
    let mut inner = CheckReport::builder(format!("{SANDWICH_INNER} (n={level})"), 0.0);
    let mut outer = CheckReport::builder(format!("{SANDWICH_OUTER} (n={level})"), 0.0);
    let mut points = Vec::with_capacity(sampling.samples + 1);
    points.push(m.identity());
    for i in 0..sampling.samples {
        points.push(match i % 3 {
            0 => m.sample(&mut rng),
            1 => m.sample_in_ball(&mut rng, 2.0 * r_n),
            _ => m.sample_in_ball(&mut rng, r_n),
        });
    }
    for x in &points {
        let norm = m.norm(x);
        let n_x = f.prenorm_of_norm(norm);
        if n_x < inner_bound {
            inner.record(exact_excess(norm, r_n), || labels(m, &[x]));
        }
        if norm < r_n {
            outer.record(n_x - outer_bound, || labels(m, &[x]));
        }
    }
    Ok(CheckSuite::new(
        format!("sandwich[{level}]"),
        Some(sampling.seed),
        vec![inner.finish(), outer.finish()],
    ))
}

/// `a ≥ b` measured as a positive violation of `a < b`.
fn exact_excess(a: f64, b: f64) -> f64 {
    if a < b {
        0.0
    } else {
        (a - b).max(f64::MIN_POSITIVE)
    }
}

/// Metric axioms of `ϱ_N` on sampled triples.
///
/// Alongside each triple a pair `(x, x ⊕ d)` with `‖d‖` around the finest
/// chain radius exercises the indiscernibility direction.
pub fn metric_axiom_check<M: Radial>(
    f: &DyadicFamily,
    m: &M,
    sampling: &Sampling,
    tol: f64,
) -> CheckSuite {
    let step = f.grid_step();
    let finest = f.chain_radius(f.depth());
    let mut rng = sampling.rng(40);
    let mut nonneg = CheckReport::builder(NONNEGATIVE, 0.0);
    let mut diag = CheckReport::builder(SELF_DISTANCE, 0.0);
    let mut sym = CheckReport::builder(SYMMETRY, tol);
    let mut tri = CheckReport::builder(TRIANGLE, tol + 2.0 * step);
    let mut indisc = CheckReport::builder(INDISCERNIBLE, 0.0);
    let mut dominated = CheckReport::builder(PSEUDOMETRIC_DOMINATES, 0.0);

    let check_pair = |x: &M::Element, y: &M::Element, indisc: &mut CheckBuilder| {
        let diff = m.add(&m.neg(x), y);
        if f.prenorm_of_norm(m.norm(&diff)) <= step {
            indisc.record(exact_excess(m.norm(&diff), finest), || labels(m, &[x, y]));
        }
    };

    for _ in 0..sampling.samples {
        let x = m.sample(&mut rng);
        let y = m.sample(&mut rng);
        let z = m.sample(&mut rng);
        let xy = raw_metric(f, m, &x, &y);
        let yx = raw_metric(f, m, &y, &x);
        let xz = raw_metric(f, m, &x, &z);
        let zy = raw_metric(f, m, &z, &y);
        nonneg.record(-xy, || labels(m, &[&x, &y]));
        diag.record(raw_metric(f, m, &x, &x), || labels(m, &[&x]));
        sym.record((xy - yx).abs(), || labels(m, &[&x, &y]));
        tri.record(xy - xz - zy, || labels(m, &[&x, &y, &z]));
        dominated.record(xy - (xy + yx), || labels(m, &[&x, &y]));
        check_pair(&x, &y, &mut indisc);

        let d = m.sample_in_ball(&mut rng, 2.0 * finest);
        let near = m.add(&x, &d);
        check_pair(&x, &near, &mut indisc);
    }

    CheckSuite::new(
        format!("metric/{}", m.name()),
        Some(sampling.seed),
        vec![
            nonneg.finish(),
            diag.finish(),
            sym.finish(),
            tri.finish(),
            indisc.finish(),
            dominated.finish(),
        ],
    )
}

/// `N(gyr[x, y]z) = N(z)`, compared exactly.
pub fn gyration_invariance_check<M: Radial>(
    f: &DyadicFamily,
    m: &M,
    sampling: &Sampling,
) -> CheckReport {
    let mut rng = sampling.rng(50);
    let mut check = CheckReport::builder(GYRATION_INVARIANT, 0.0);
    for i in 0..sampling.samples {
        let x = m.sample(&mut rng);
        let y = m.sample(&mut rng);
        // every other z sits inside a random chain ball so small N values
        // are exercised too
        let z = if i % 2 == 0 {
            m.sample(&mut rng)
        } else {
            let level = (i / 2) % (f.depth() + 1);
            m.sample_in_ball(&mut rng, f.chain_radius(level))
        };
        let before = f.prenorm_of_norm(m.norm(&z));
        let after = f.prenorm_of_norm(m.norm(&m.gyration(&x, &y, &z)));
        check.record((after - before).abs(), || labels(m, &[&x, &y, &z]));
    }
    check.finish()
}

/// `N(a ⊕ b) ≤ N(a) + N(b)` up to the grid step.
pub fn subadditivity_check<M: Radial>(f: &DyadicFamily, m: &M, sampling: &Sampling) -> CheckReport {
    let mut rng = sampling.rng(51);
    let mut check = CheckReport::builder(SUBADDITIVE, f.grid_step());
    for _ in 0..sampling.samples {
        let a = m.sample(&mut rng);
        let b = m.sample(&mut rng);
        let v = f.prenorm_of_norm(m.norm(&m.add(&a, &b)))
            - f.prenorm_of_norm(m.norm(&a))
            - f.prenorm_of_norm(m.norm(&b));
        check.record(v, || labels(m, &[&a, &b]));
    }
    check.finish()
}

/// `N_fine(x) ≤ N_coarse(x)` on the given points.
pub fn refinement_check<M: Radial>(
    coarse: &DyadicFamily,
    fine: &DyadicFamily,
    m: &M,
    points: &[M::Element],
) -> CheckReport {
    let mut check = CheckReport::builder(REFINEMENT, 0.0);
    for x in points {
        let norm = m.norm(x);
        let v = fine.prenorm_of_norm(norm) - coarse.prenorm_of_norm(norm);
        check.record(v, || labels(m, &[x]));
    }
    check.finish()
}

/// `B_N(ε) = {x : N(x) < ε}`.
#[derive(Debug, Clone, Copy)]
pub struct MetricBall<'a> {
    family: &'a DyadicFamily,
    eps: f64,
}

pub fn metric_ball(f: &DyadicFamily, eps: f64) -> Result<MetricBall<'_>> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(GyroError::Input(format!(
            "ball radius {eps} must be positive"
        )));
    }
    Ok(MetricBall { family: f, eps })
}

impl MetricBall<'_> {
    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn contains<M: Radial>(&self, m: &M, x: &M::Element) -> bool {
        self.family.prenorm_of_norm(m.norm(x)) < self.eps
    }
}

//! Symmetric, gyration-invariant norm balls at the identity and the chains
//! `r₀ > r₁ > …` with `r_{n+1} ⊕ r_{n+1} ≤ r_n` built from them.
//!
//! Both continuous models add collinear norms by `s ⊕ t = (s + t)/(1 + st)`,
//! so a ball `{‖x‖ < s}` summed with `{‖x‖ < t}` lands inside `{‖x‖ < s ⊕ t}`.

use crate::check::CheckReport;
use crate::error::{GyroError, Result};
use crate::gyro::{labels, Gyrogroup, Radial, Sampling};

/// Deepest chain that is still above double-precision resolution.
pub const MAX_DEPTH: usize = 48;

/// Slack allowed on `r_{n+1} ⊕ r_{n+1} ≤ r_n` for user-supplied chains.
pub const CHAIN_SLACK: f64 = 1e-12;

pub const GYR_INVARIANCE: &str = "gyrations preserve the ball";
pub const BALL_SUM: &str = "ball sum closure";

/// Scalar addition `(s + t) / (1 + st)`.
pub fn scalar_add(s: f64, t: f64) -> f64 {
    (s + t) / (1.0 + s * t)
}

/// The `s ∈ (0, 1)` with `s ⊕ s = r`.
///
/// Evaluated as `r / (1 + √(1 − r²))`, which equals `(1 − √(1 − r²)) / r`
/// without the cancellation for small `r`.
pub fn half_radius(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(GyroError::Input(format!("radius {r} outside (0, 1)")));
    }
    Ok(r / (1.0 + (1.0 - r * r).sqrt()))
}

/// The open ball `{x : ‖x‖ < radius}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GyrInvariantBall {
    radius: f64,
}

impl GyrInvariantBall {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius < 1.0) {
            return Err(GyroError::Input(format!(
                "ball radius {radius} outside (0, 1)"
            )));
        }
        Ok(GyrInvariantBall { radius })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn contains<M: Radial>(&self, m: &M, x: &M::Element) -> bool {
        m.norm(x) < self.radius
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodChain {
    radii: Vec<f64>,
}

impl NeighborhoodChain {
    /// Accepts any strictly decreasing chain in `(0, 1)` with
    /// `r_{n+1} ⊕ r_{n+1} ≤ r_n` (up to [`CHAIN_SLACK`]).
    pub fn from_radii(radii: Vec<f64>) -> Result<Self> {
        if radii.len() < 2 {
            return Err(GyroError::Input("chain needs at least two radii".into()));
        }
        if radii.len() > MAX_DEPTH + 1 {
            return Err(GyroError::Input(format!(
                "chain depth {} exceeds {MAX_DEPTH}",
                radii.len() - 1
            )));
        }
        if let Some(r) = radii.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(GyroError::Input(format!("radius {r} outside (0, 1)")));
        }
        for (n, w) in radii.windows(2).enumerate() {
            if w[1] >= w[0] {
                return Err(GyroError::Input(format!(
                    "radii not strictly decreasing at level {}",
                    n + 1
                )));
            }
            if scalar_add(w[1], w[1]) > w[0] + CHAIN_SLACK {
                return Err(GyroError::Input(format!(
                    "r_{0} ⊕ r_{0} exceeds r_{1}",
                    n + 1,
                    n
                )));
            }
        }
        Ok(NeighborhoodChain { radii })
    }

    /// Number of halving steps, i.e. the index of the last radius.
    pub fn depth(&self) -> usize {
        self.radii.len() - 1
    }

    pub fn radius(&self, n: usize) -> f64 {
        self.radii[n]
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn ball(&self, n: usize) -> GyrInvariantBall {
        GyrInvariantBall {
            radius: self.radii[n],
        }
    }
}

/// The tight chain `r_{n+1} = half_radius(r_n)`.
pub fn build_chain(r0: f64, depth: usize) -> Result<NeighborhoodChain> {
    if depth == 0 || depth > MAX_DEPTH {
        return Err(GyroError::Input(format!(
            "chain depth {depth} outside 1..={MAX_DEPTH}"
        )));
    }
    let mut radii = Vec::with_capacity(depth + 1);
    radii.push(r0);
    for _ in 0..depth {
        let next = half_radius(*radii.last().unwrap())?;
        radii.push(next);
    }
    Ok(NeighborhoodChain { radii })
}

/// Samples `x, y` and `z` inside the ball and checks `‖gyr[x, y]z‖ = ‖z‖`.
pub fn check_gyr_invariance<M: Radial>(
    m: &M,
    ball: &GyrInvariantBall,
    sampling: &Sampling,
) -> CheckReport {
    let mut rng = sampling.rng(20);
    let mut check = CheckReport::builder(GYR_INVARIANCE, m.tolerance());
    let mut run = |x: M::Element, y: M::Element, z: M::Element| {
        let image = m.gyration(&x, &y, &z);
        let v = (m.norm(&image) - m.norm(&z)).abs();
        check.record(v, || labels(m, &[&x, &y, &z]));
    };
    match m.elements() {
        Some(all) => {
            let inner: Vec<_> = all
                .iter()
                .filter(|z| ball.contains(m, z))
                .cloned()
                .collect();
            for x in &all {
                for y in &all {
                    for z in &inner {
                        run(x.clone(), y.clone(), z.clone());
                    }
                }
            }
        }
        None => {
            for _ in 0..sampling.samples {
                let x = m.sample(&mut rng);
                let y = m.sample(&mut rng);
                let z = m.sample_in_ball(&mut rng, ball.radius);
                run(x, y, z);
            }
        }
    }
    check.finish()
}

/// `S ∪ (⊖S)` as a membership predicate.
pub fn symmetrize<'a, M, S>(m: &'a M, set: S) -> impl Fn(&M::Element) -> bool + 'a
where
    M: Gyrogroup,
    S: Fn(&M::Element) -> bool + 'a,
{
    move |x| set(x) || set(&m.neg(x))
}

/// Samples `‖a‖ < s`, `‖b‖ < t` and checks `‖a ⊕ b‖ ≤ s ⊕ t`.
pub fn check_ball_sum<M: Radial>(m: &M, s: f64, t: f64, sampling: &Sampling) -> CheckReport {
    let bound = scalar_add(s, t);
    let mut rng = sampling.rng(21);
    let mut check = CheckReport::builder(BALL_SUM, 1e-12);
    for _ in 0..sampling.samples {
        let a = m.sample_in_ball(&mut rng, s);
        let b = m.sample_in_ball(&mut rng, t);
        let v = m.norm(&m.add(&a, &b)) - bound;
        check.record(v, || labels(m, &[&a, &b]));
    }
    check.finish()
}

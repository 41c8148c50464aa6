//! Subgyrogroups, L-subgyrogroups, left cosets and the `q` map image.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::check::{CheckReport, CheckSuite};
use crate::error::{GyroError, Result};
use crate::gyro::{labels, Gyrogroup, Sampling};
use crate::models::TableGyrogroup;

pub const CONTAINS_IDENTITY: &str = "contains identity";
pub const CLOSED_UNDER_OP: &str = "closed under op";
pub const CLOSED_UNDER_INV: &str = "closed under inverse";
pub const GYR_CLOSED: &str = "closed under its own gyrations";
pub const L_INVARIANT: &str = "gyr[a, h](H) = H";

type Membership<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;

/// A candidate subset `H`.
///
/// Finite candidates list their members; continuous ones pair a membership
/// predicate with a finite set of witness members that checks draw from.
#[derive(Clone)]
pub struct SubgyroCandidate<E> {
    members: Vec<E>,
    predicate: Option<Membership<E>>,
}

impl<E: Clone> SubgyroCandidate<E> {
    pub fn from_elements(members: Vec<E>) -> Result<Self> {
        if members.is_empty() {
            return Err(GyroError::Input("candidate subset is empty".into()));
        }
        Ok(SubgyroCandidate {
            members,
            predicate: None,
        })
    }

    pub fn from_predicate<P>(predicate: P, witnesses: Vec<E>) -> Result<Self>
    where
        P: Fn(&E) -> bool + Send + Sync + 'static,
    {
        if witnesses.is_empty() {
            return Err(GyroError::Input("candidate needs witness members".into()));
        }
        Ok(SubgyroCandidate {
            members: witnesses,
            predicate: Some(Arc::new(predicate)),
        })
    }

    pub fn members(&self) -> &[E] {
        &self.members
    }

    pub fn contains<M: Gyrogroup<Element = E>>(&self, m: &M, x: &E) -> bool {
        match &self.predicate {
            Some(p) => p(x),
            None => self.members.iter().any(|h| m.equal(h, x)),
        }
    }
}

impl SubgyroCandidate<usize> {
    /// Resolves element labels against a table model.
    pub fn from_labels<S: AsRef<str>>(m: &TableGyrogroup, labels: &[S]) -> Result<Self> {
        let set: BTreeSet<usize> = labels
            .iter()
            .map(|l| m.table().index_of(l.as_ref()))
            .collect::<Result<_>>()?;
        Self::from_elements(set.into_iter().collect())
    }
}

impl<E: std::fmt::Debug> std::fmt::Debug for SubgyroCandidate<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgyroCandidate")
            .field("members", &self.members)
            .field("predicate", &self.predicate.is_some())
            .finish()
    }
}

fn member_tuples<E: Clone, const K: usize>(h: &SubgyroCandidate<E>) -> Vec<[E; K]> {
    let n = h.members.len();
    (0..n.pow(K as u32))
        .map(|mut code| {
            std::array::from_fn(|_| {
                let i = code % n;
                code /= n;
                h.members[i].clone()
            })
        })
        .collect()
}

/// Closure under `⊕`, `⊖` and `gyr[a, b]` for `a, b ∈ H`, plus identity
/// membership. Exhaustive over the listed members.
pub fn is_subgyrogroup<M: Gyrogroup>(m: &M, h: &SubgyroCandidate<M::Element>) -> CheckSuite {
    let miss = |x: &M::Element| if h.contains(m, x) { 0.0 } else { 1.0 };

    let mut identity = CheckReport::builder(CONTAINS_IDENTITY, 0.0);
    let zero = m.identity();
    identity.record(miss(&zero), || labels(m, &[&zero]));

    let mut op = CheckReport::builder(CLOSED_UNDER_OP, 0.0);
    for [a, b] in member_tuples::<_, 2>(h) {
        op.record(miss(&m.add(&a, &b)), || labels(m, &[&a, &b]));
    }

    let mut inv = CheckReport::builder(CLOSED_UNDER_INV, 0.0);
    for a in h.members() {
        inv.record(miss(&m.neg(a)), || labels(m, &[a]));
    }

    let mut gyr = CheckReport::builder(GYR_CLOSED, 0.0);
    for [a, b, z] in member_tuples::<_, 3>(h) {
        gyr.record(miss(&m.gyration(&a, &b, &z)), || labels(m, &[&a, &b, &z]));
    }

    CheckSuite::new(
        "subgyrogroup",
        None,
        vec![identity.finish(), op.finish(), inv.finish(), gyr.finish()],
    )
}

/// `gyr[a, h](H) = H` for all `a ∈ G`, `h ∈ H`.
///
/// Finite models: `a` ranges over every element and the image is compared
/// with `H` as a set. Continuous models: `a` is sampled and the forward
/// inclusion `gyr[a, h](H) ⊆ H` is checked on the witness members.
pub fn is_l_subgyrogroup<M: Gyrogroup>(
    m: &M,
    h: &SubgyroCandidate<M::Element>,
    sampling: &Sampling,
) -> CheckReport {
    let mut check = CheckReport::builder(L_INVARIANT, 0.0);
    let outer: Vec<M::Element> = match m.elements() {
        Some(all) => all,
        None => {
            let mut rng = sampling.rng(60);
            (0..sampling.samples).map(|_| m.sample(&mut rng)).collect()
        }
    };
    let finite = m.elements().is_some();
    for a in &outer {
        for hh in h.members() {
            let image: Vec<M::Element> = h.members().iter().map(|z| m.gyration(a, hh, z)).collect();
            let escaped = image.iter().filter(|z| !h.contains(m, z)).count();
            let uncovered = if finite {
                h.members()
                    .iter()
                    .filter(|z| !image.iter().any(|w| m.equal(w, z)))
                    .count()
            } else {
                0
            };
            check.record((escaped + uncovered) as f64, || labels(m, &[a, hh]));
        }
    }
    check.finish()
}

/// Left cosets `x ⊕ H` of a finite model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct PartitionJson {
    blocks: Vec<Vec<String>>,
}

impl CosetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `{"blocks": [[labels…]…]}`
    pub fn to_json(&self, m: &TableGyrogroup) -> serde_json::Value {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| m.label(&i)).collect())
            .collect();
        serde_json::to_value(PartitionJson { blocks }).expect("partition serializes")
    }
}

/// Blocks `{x ⊕ h : h ∈ H}` in order of their smallest element.
///
/// Fails when two cosets overlap without coinciding, which means `H` was not
/// an L-subgyrogroup, or when block sizes differ.
pub fn left_cosets(m: &TableGyrogroup, h: &SubgyroCandidate<usize>) -> Result<CosetPartition> {
    let n = m.order();
    if let Some(bad) = h.members().iter().find(|&&x| x >= n) {
        return Err(GyroError::Input(format!(
            "member index {bad} outside table"
        )));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; n];
    let mut origin: Vec<usize> = Vec::new();
    for x in 0..n {
        let coset: BTreeSet<usize> = h.members().iter().map(|hh| m.add(&x, hh)).collect();
        let coset: Vec<usize> = coset.into_iter().collect();
        if blocks.contains(&coset) {
            continue;
        }
        if let Some(&shared) = coset.iter().find(|&&y| block_of[y] != usize::MAX) {
            return Err(GyroError::NotAPartition {
                element: m.label(&shared),
                first: m.label(&origin[block_of[shared]]),
                second: m.label(&x),
            });
        }
        for &y in &coset {
            block_of[y] = blocks.len();
        }
        blocks.push(coset);
        origin.push(x);
    }
    if let Some(y) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(GyroError::NotAPartition {
            element: m.label(&y),
            first: "no coset".into(),
            second: "no coset".into(),
        });
    }
    let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    if sizes.iter().any(|&s| s != sizes[0]) {
        return Err(GyroError::UnevenCosets { sizes });
    }
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&i| blocks[i][0]);
    let mut renumber = vec![0; blocks.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    let blocks = order.iter().map(|&i| blocks[i].clone()).collect();
    let block_of = block_of.into_iter().map(|b| renumber[b]).collect();
    Ok(CosetPartition { blocks, block_of })
}

/// The block containing `x`.
pub fn quotient_map(p: &CosetPartition, x: usize) -> Result<usize> {
    p.block_of
        .get(x)
        .copied()
        .ok_or_else(|| GyroError::Input(format!("element {x} not in the partition")))
}

/// The image `{x ⊕ (⊖y) : (x, y) ∈ C}`.
#[derive(Debug, Clone)]
pub struct QImage<E> {
    pub points: Vec<E>,
    pub contains_identity: bool,
    /// Smallest distance from an image point to the identity.
    pub min_distance: Option<f64>,
}

/// Applies [`Gyrogroup::q_map`] to every pair. Finite models deduplicate the
/// image; identity membership is decided with the model tolerance.
pub fn q_image<M: Gyrogroup>(
    m: &M,
    pairs: &[(M::Element, M::Element)],
) -> Result<QImage<M::Element>> {
    let zero = m.identity();
    let mut points: Vec<M::Element> = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        let q = m.q_map(x, y)?;
        if m.elements().is_some() && points.iter().any(|p| m.equal(p, &q)) {
            continue;
        }
        points.push(q);
    }
    let min_distance = points
        .iter()
        .map(|p| m.distance(p, &zero))
        .min_by(f64::total_cmp);
    Ok(QImage {
        contains_identity: min_distance.is_some_and(|d| d <= m.tolerance()),
        min_distance,
        points,
    })
}

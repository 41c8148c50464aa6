//! Finite gyrogroups given by a Cayley table.
//!
//! Tables carry only the operation. Inverses are read off the table and
//! gyrations are either derived through the gyrator identity or, for the
//! group adapter, the identity map.

use std::collections::HashSet;
use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::axioms::{
    check_automorphism, check_gyrations_bijective, check_left_gyroassociative, check_left_loop, G1,
    G2,
};
use crate::check::{CheckReport, CheckSuite};
use crate::error::{GyroError, Result};
use crate::gyro::{Gyrogroup, Radial, Sampling};

pub const LATIN: &str = "latin square";
pub const ASSOCIATIVITY: &str = "associativity";

/// `{ "elements": [labels…], "identity": index, "op": [[row…]…] }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyTable {
    pub elements: Vec<String>,
    pub identity: usize,
    pub op: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(elements: Vec<String>, identity: usize, op: Vec<Vec<usize>>) -> Result<Self> {
        let t = CayleyTable {
            elements,
            identity,
            op,
        };
        t.check_well_formed()?;
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::parse(text, "<input>")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| GyroError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    fn parse(text: &str, origin: &str) -> Result<Self> {
        let t: CayleyTable = serde_json::from_str(text).map_err(|source| GyroError::Json {
            path: origin.to_string(),
            source,
        })?;
        t.check_well_formed()
            .map_err(|e| GyroError::MalformedTable(format!("{origin}: {e}")))?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GyroError::UnknownElement(label.to_string()))
    }

    /// Shape and range checks. Axioms are not looked at here.
    pub fn check_well_formed(&self) -> Result<()> {
        let n = self.order();
        let bad = |msg: String| Err(GyroError::MalformedTable(msg));
        if n == 0 {
            return bad("elements: table has no elements".into());
        }
        let mut seen = HashSet::new();
        for label in &self.elements {
            if !seen.insert(label) {
                return bad(format!("elements: duplicate label {label:?}"));
            }
        }
        if self.identity >= n {
            return bad(format!(
                "identity: index {} out of range 0..{n}",
                self.identity
            ));
        }
        if self.op.len() != n {
            return bad(format!("op: expected {n} rows, found {}", self.op.len()));
        }
        for (i, row) in self.op.iter().enumerate() {
            if row.len() != n {
                return bad(format!(
                    "op[{i}]: expected {n} entries, found {}",
                    row.len()
                ));
            }
            if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return bad(format!("op[{i}][{j}]: entry {v} out of range 0..{n}"));
            }
        }
        Ok(())
    }
}

/// Cyclic group `Z_n` with labels `"0"…"n-1"`.
pub fn cyclic_group(n: usize) -> CayleyTable {
    assert!(n > 0, "cyclic group needs at least one element");
    CayleyTable {
        elements: (0..n).map(|i| i.to_string()).collect(),
        identity: 0,
        op: (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect(),
    }
}

/// Klein four-group `{e, a, b, c}`, the bitwise xor on two bits.
pub fn klein_four() -> CayleyTable {
    CayleyTable {
        elements: ["e", "a", "b", "c"].map(String::from).to_vec(),
        identity: 0,
        op: (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GyrationRule {
    /// Gyrator identity.
    Derived,
    /// Identity map; only valid for associative tables.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGyrogroup {
    table: CayleyTable,
    inverse: Vec<usize>,
    rule: GyrationRule,
}

impl TableGyrogroup {
    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn rule(&self) -> GyrationRule {
        self.rule
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }
}

impl Gyrogroup for TableGyrogroup {
    type Element = usize;

    fn name(&self) -> String {
        match self.rule {
            GyrationRule::Derived => format!("table[{}]", self.order()),
            GyrationRule::Trivial => format!("group[{}]", self.order()),
        }
    }

    fn identity(&self) -> usize {
        self.table.identity
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.order()
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        self.table.get(*a, *b)
    }

    fn neg(&self, a: &usize) -> usize {
        self.inverse[*a]
    }

    fn gyration(&self, a: &usize, b: &usize, z: &usize) -> usize {
        match self.rule {
            GyrationRule::Derived => self.gyrator(a, b, z),
            GyrationRule::Trivial => *z,
        }
    }

    fn distance(&self, a: &usize, b: &usize) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }

    fn tolerance(&self) -> f64 {
        0.0
    }

    fn label(&self, a: &usize) -> String {
        self.table.label(*a).to_string()
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.order()).collect())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.gen_range(0..self.order())
    }
}

/// Discrete norm: 0 at the identity, 1 elsewhere. Every automorphism
/// preserves it.
impl Radial for TableGyrogroup {
    fn norm(&self, a: &usize) -> f64 {
        if *a == self.table.identity {
            0.0
        } else {
            1.0
        }
    }

    fn sample_in_ball<R: Rng + ?Sized>(&self, rng: &mut R, radius: f64) -> usize {
        if radius <= 1.0 {
            self.table.identity
        } else {
            self.sample(rng)
        }
    }
}

fn check_latin(t: &CayleyTable) -> CheckReport {
    let n = t.order();
    let mut check = CheckReport::builder(LATIN, 0.0);
    for i in 0..n {
        let row: HashSet<usize> = t.op[i].iter().copied().collect();
        check.record((n - row.len()) as f64, || {
            vec![format!("row {}", t.label(i))]
        });
        let col: HashSet<usize> = (0..n).map(|r| t.op[r][i]).collect();
        check.record((n - col.len()) as f64, || {
            vec![format!("column {}", t.label(i))]
        });
    }
    check.finish()
}

fn check_table_identity(t: &CayleyTable) -> CheckReport {
    let e = t.identity;
    let mut check = CheckReport::builder(G1, 0.0);
    for a in 0..t.order() {
        let ok = t.get(e, a) == a && t.get(a, e) == a;
        check.record(if ok { 0.0 } else { 1.0 }, || vec![t.label(a).to_string()]);
    }
    check.finish()
}

/// Unique two-sided inverses, returned when they all exist.
fn table_inverses(t: &CayleyTable) -> (CheckReport, Option<Vec<usize>>) {
    let n = t.order();
    let e = t.identity;
    let mut check = CheckReport::builder(G2, 0.0);
    let mut inverse = Vec::with_capacity(n);
    for a in 0..n {
        let left: Vec<usize> = (0..n).filter(|&x| t.get(x, a) == e).collect();
        let right: Vec<usize> = (0..n).filter(|&x| t.get(a, x) == e).collect();
        let ok = left.len() == 1 && left == right;
        check.record(if ok { 0.0 } else { 1.0 }, || vec![t.label(a).to_string()]);
        if ok {
            inverse.push(left[0]);
        }
    }
    let report = check.finish();
    let inverse = report.passed.then_some(inverse);
    (report, inverse)
}

/// Exhaustive G1–G4 and automorphism verification with derived gyrations.
///
/// G3 onwards needs inverses, so those checks only appear when G1 and G2
/// hold.
pub fn validate_table(t: &CayleyTable) -> Result<CheckSuite> {
    t.check_well_formed()?;
    let mut checks = vec![check_latin(t), check_table_identity(t)];
    let (inverse_check, inverse) = table_inverses(t);
    let identity_ok = checks[1].passed;
    checks.push(inverse_check);
    if let (true, Some(inverse)) = (identity_ok, inverse) {
        let model = TableGyrogroup {
            table: t.clone(),
            inverse,
            rule: GyrationRule::Derived,
        };
        let exhaustive = Sampling::new(0, 0);
        checks.push(check_left_gyroassociative(&model, &exhaustive, 0.0));
        checks.push(check_left_loop(&model, &exhaustive, 0.0));
        checks.push(check_automorphism(&model, &exhaustive, 0.0));
        checks.extend(check_gyrations_bijective(&model));
    }
    Ok(CheckSuite::new(
        format!("validate-table[{}]", t.order()),
        None,
        checks,
    ))
}

fn first_violation(suite: &CheckSuite) -> Option<GyroError> {
    suite.first_failure().map(|f| GyroError::TableInvalid {
        axiom: f.property.clone(),
        witness: f
            .witnesses
            .first()
            .map(|w| w.inputs.join(", "))
            .unwrap_or_default(),
    })
}

/// A table model with derived gyrations, if the table passes
/// [`validate_table`].
pub fn make_table_gyrogroup(t: CayleyTable) -> Result<TableGyrogroup> {
    let suite = validate_table(&t)?;
    if let Some(err) = first_violation(&suite) {
        return Err(err);
    }
    let (_, inverse) = table_inverses(&t);
    Ok(TableGyrogroup {
        table: t,
        inverse: inverse.expect("validated table has inverses"),
        rule: GyrationRule::Derived,
    })
}

pub fn check_associativity(t: &CayleyTable) -> CheckReport {
    let n = t.order();
    let mut check = CheckReport::builder(ASSOCIATIVITY, 0.0);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ok = t.get(a, t.get(b, c)) == t.get(t.get(a, b), c);
                check.record(if ok { 0.0 } else { 1.0 }, || {
                    [a, b, c].iter().map(|&i| t.label(i).to_string()).collect()
                });
            }
        }
    }
    check.finish()
}

/// A group viewed as a gyrogroup with identity gyrations.
pub fn make_group_adapter(t: CayleyTable) -> Result<TableGyrogroup> {
    t.check_well_formed()?;
    let identity = check_table_identity(&t);
    let (inverse_check, inverse) = table_inverses(&t);
    let prelim = CheckSuite::new("group", None, vec![identity, inverse_check]);
    if let Some(err) = first_violation(&prelim) {
        return Err(err);
    }
    let assoc = check_associativity(&t);
    if let Some(w) = assoc.witnesses.first() {
        return Err(GyroError::NotAssociative {
            a: w.inputs[0].clone(),
            b: w.inputs[1].clone(),
            c: w.inputs[2].clone(),
        });
    }
    Ok(TableGyrogroup {
        table: t,
        inverse: inverse.expect("checked above"),
        rule: GyrationRule::Trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axioms, G3};

    #[test]
    fn z4_adapter_basics() {
        let z4 = make_group_adapter(cyclic_group(4)).unwrap();
        assert_eq!(z4.op(&1, &2).unwrap(), 3);
        assert_eq!(z4.op(&3, &3).unwrap(), 2);
        assert_eq!(z4.inv(&1).unwrap(), 3);
        assert_eq!(z4.inv(&0).unwrap(), 0);
        assert_eq!(z4.derived_gyr(&1, &2, &3).unwrap(), 3);
        for a in 0..4 {
            for b in 0..4 {
                for z in 0..4 {
                    assert_eq!(z4.gyr(&a, &b, &z).unwrap(), z);
                }
            }
        }
        assert!(z4.op(&4, &0).is_err());
    }

    #[test]
    fn groups_validate() {
        assert!(validate_table(&cyclic_group(4)).unwrap().passed);
        assert!(validate_table(&klein_four()).unwrap().passed);
        let k = make_group_adapter(klein_four()).unwrap();
        assert!(check_axioms(&k, &Sampling::new(0, 0), 0.0).passed);
    }

    #[test]
    fn broken_identity_row() {
        let mut t = cyclic_group(4);
        t.op[0].swap(1, 2);
        match make_table_gyrogroup(t) {
            Err(GyroError::TableInvalid { axiom, .. }) => assert_eq!(axiom, LATIN),
            other => panic!("unexpected {other:?}"),
        }
        // keep the table latin but break the identity row
        let mut t = cyclic_group(3);
        t.op[0] = vec![1, 2, 0];
        t.op[1] = vec![0, 1, 2];
        t.op[2] = vec![2, 0, 1];
        let suite = validate_table(&t).unwrap();
        assert!(suite.check(LATIN).unwrap().passed);
        assert!(!suite.check(G1).unwrap().passed);
        match make_table_gyrogroup(t) {
            Err(GyroError::TableInvalid { axiom, .. }) => assert_eq!(axiom, G1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_unique_inverse() {
        // identity row and column intact, but 1 ⊕ x = 0 never happens
        let t = CayleyTable::new(
            ["0", "1", "2"].map(String::from).to_vec(),
            0,
            vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 0, 0]],
        )
        .unwrap();
        let suite = validate_table(&t).unwrap();
        let g2 = suite.check(G2).unwrap();
        assert!(!g2.passed);
        assert!(!g2.witnesses.is_empty());
        assert!(suite.check(G3).is_none());
    }

    #[test]
    fn malformed_tables_are_input_errors() {
        let t = CayleyTable {
            elements: vec!["0".into(), "1".into()],
            identity: 0,
            op: vec![vec![0, 1], vec![1]],
        };
        assert!(matches!(
            validate_table(&t),
            Err(GyroError::MalformedTable(_))
        ));
        let t = CayleyTable {
            elements: vec!["0".into(), "1".into()],
            identity: 0,
            op: vec![vec![0, 1], vec![1, 2]],
        };
        let err = validate_table(&t).unwrap_err().to_string();
        assert!(err.contains("op[1][1]"), "{err}");
        let t = CayleyTable {
            elements: vec!["x".into(), "x".into()],
            identity: 0,
            op: vec![vec![0, 1], vec![1, 0]],
        };
        assert!(validate_table(&t).is_err());
        let t = CayleyTable {
            elements: vec!["x".into()],
            identity: 3,
            op: vec![vec![0]],
        };
        assert!(validate_table(&t).is_err());
    }

    #[test]
    fn json_diagnostics() {
        let err = CayleyTable::from_json(
            "{\n  \"elements\": [\"0\"],\n  \"identity\": 0,\n  \"op\": [[0]\n",
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("line"), "{err}");
        let err = CayleyTable::from_json(r#"{"elements": ["0"], "identity": 0}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("op"), "{err}");
        let err = CayleyTable::from_json(
            r#"{"elements": ["0","1"], "identity": 0, "op": [[0,1],[1,5]]}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("op[1][1]"), "{err}");
        let t = CayleyTable::from_json(&cyclic_group(3).to_json()).unwrap();
        assert_eq!(t, cyclic_group(3));
    }

    #[test]
    fn non_associative_table_rejected_by_adapter() {
        let t = CayleyTable::from_json(include_str!("../../fixtures/broken.json")).unwrap();
        // brute-force associativity scan
        let n = t.order();
        let witness = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| t.get(a, t.get(b, c)) != t.get(t.get(a, b), c));
        assert!(witness.is_some());
        assert!(matches!(
            make_group_adapter(t),
            Err(GyroError::NotAssociative { .. })
        ));
    }
}

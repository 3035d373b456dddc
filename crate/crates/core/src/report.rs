//! Machine-readable reports.
//!
//! Key order is the field order of each struct and maps are `BTreeMap`s, so
//! the same input always serializes to the same bytes. Rationals are written
//! as `"p/q"` in lowest terms with `q > 0`, integers included (`"1/1"`).

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::diagnostics::Diagnostics;

pub fn fmt_rational(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub lattice: bool,
    pub modular: bool,
    pub distributive: bool,
    pub ortho: bool,
    pub abelian: bool,
    pub factorial: bool,
    pub r_property: bool,
    pub irreducible: bool,
}

impl Flags {
    fn set(&self) -> Vec<&'static str> {
        [
            ("lattice", self.lattice),
            ("modular", self.modular),
            ("distributive", self.distributive),
            ("ortho", self.ortho),
            ("abelian", self.abelian),
            ("factorial", self.factorial),
            ("r_property", self.r_property),
            ("irreducible", self.irreducible),
        ]
        .into_iter()
        .filter(|(_, on)| *on)
        .map(|(name, _)| name)
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<String>) -> Self {
        Self {
            law: law.into(),
            witness,
        }
    }

    pub fn from_failures(d: &Diagnostics) -> Vec<Self> {
        d.failures()
            .map(|c| match &c.status {
                crate::diagnostics::Status::Fail { witness } => Self::new(c.law.clone(), witness.clone()),
                _ => unreachable!("failures() yields only Fail"),
            })
            .collect()
    }
}

/// Either a count or the fact that no scan was run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationCount {
    Found(usize),
    NotEnumerated,
}

impl Serialize for RelationCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RelationCount::Found(n) => s.serialize_u64(*n as u64),
            RelationCount::NotEnumerated => s.serialize_str("not-enumerated"),
        }
    }
}

impl fmt::Display for RelationCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationCount::Found(n) => write!(f, "{n}"),
            RelationCount::NotEnumerated => f.write_str("not-enumerated"),
        }
    }
}

/// The `check` report.
///
/// `violations` is empty exactly when the requested structure holds: the
/// file is a lattice, it is modular, the orthocomplement (when given)
/// satisfies its axioms, and every derived law that was checked holds.
/// Failing to be factorial or of type I is a classification outcome, not a
/// violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub element_count: usize,
    pub flags: Flags,
    pub center: Vec<String>,
    pub minimal: Vec<String>,
    pub type_tag: String,
    /// Present only when `type_tag` is `I_n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<BTreeMap<String, String>>,
    pub regular_relations_found: RelationCount,
    pub violations: Vec<Violation>,
    pub waivers: Vec<String>,
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(" ")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {} ({} elements)", self.name, self.element_count)?;
        writeln!(f, "type: {}", self.type_tag)?;
        writeln!(f, "flags: {}", self.flags.set().join(" "))?;
        writeln!(f, "center: {}", list(&self.center))?;
        writeln!(f, "minimal: {}", list(&self.minimal))?;
        if let Some(dims) = &self.dimensions {
            let parts: Vec<String> = dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(f, "dimensions: {}", parts.join(" "))?;
        }
        writeln!(f, "regular relations found: {}", self.regular_relations_found)?;
        if self.violations.is_empty() {
            writeln!(f, "violations: none")?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {} [{}]", v.law, v.witness.join(", "))?;
        }
        for w in &self.waivers {
            writeln!(f, "waiver: {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerspectivityReport {
    pub classes: Vec<Vec<String>>,
    /// Whether "shares an inverse" was already transitive before closure.
    pub raw_is_equivalence: bool,
    pub regular: bool,
    pub checks: Diagnostics,
}

/// The `regular` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularReport {
    pub name: String,
    pub element_count: usize,
    pub perspectivity: PerspectivityReport,
    pub regular_relations_found: RelationCount,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partitions_scanned: Option<u64>,
    /// Each regular relation as its list of classes.
    pub relations: Vec<Vec<Vec<String>>>,
}

fn classes(c: &[Vec<String>]) -> String {
    let parts: Vec<String> = c.iter().map(|k| format!("{{{}}}", k.join(" "))).collect();
    parts.join(" ")
}

impl fmt::Display for RegularReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.perspectivity;
        writeln!(f, "lattice {} ({} elements)", self.name, self.element_count)?;
        writeln!(f, "perspectivity: {}", classes(&p.classes))?;
        writeln!(
            f,
            "perspectivity transitive before closure: {}",
            p.raw_is_equivalence
        )?;
        writeln!(f, "perspectivity regular: {}", p.regular)?;
        for v in Violation::from_failures(&p.checks) {
            writeln!(f, "  fails {} [{}]", v.law, v.witness.join(", "))?;
        }
        match self.partitions_scanned {
            Some(n) => writeln!(
                f,
                "regular relations found: {} (of {n} partitions)",
                self.regular_relations_found
            )?,
            None => writeln!(f, "regular relations found: {}", self.regular_relations_found)?,
        }
        for r in &self.relations {
            writeln!(f, "  {}", classes(r))?;
        }
        Ok(())
    }
}

/// The `decompose` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub name: String,
    pub element_count: usize,
    pub boolean_exponent: usize,
    pub sum_sizes: Vec<usize>,
    /// Same, with each `L_1` folded into the Boolean exponent.
    pub normalized: Signature,
    pub signature: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub boolean_exponent: usize,
    pub sum_sizes: Vec<usize>,
}

pub fn signature_text(boolean_exponent: usize, sum_sizes: &[usize]) -> String {
    let mut parts = Vec::new();
    if boolean_exponent > 0 || sum_sizes.is_empty() {
        parts.push(format!("2^{boolean_exponent}"));
    }
    parts.extend(sum_sizes.iter().map(|m| format!("L_{m}")));
    parts.join(" x ")
}

impl fmt::Display for DecomposeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {} ({} elements)", self.name, self.element_count)?;
        writeln!(f, "signature: {}", self.signature)?;
        writeln!(
            f,
            "normalized: {}",
            signature_text(self.normalized.boolean_exponent, &self.normalized.sum_sizes)
        )
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_always_have_a_denominator() {
        assert_eq!(fmt_rational(Rational64::new(2, 4)), "1/2");
        assert_eq!(fmt_rational(Rational64::from_integer(1)), "1/1");
        assert_eq!(fmt_rational(Rational64::from_integer(0)), "0/1");
    }

    #[test]
    fn relation_count_serializes() {
        assert_eq!(to_json(&RelationCount::Found(3)), "3\n");
        assert_eq!(to_json(&RelationCount::NotEnumerated), "\"not-enumerated\"\n");
    }

    #[test]
    fn signatures() {
        assert_eq!(signature_text(3, &[]), "2^3");
        assert_eq!(signature_text(0, &[2]), "L_2");
        assert_eq!(signature_text(1, &[2, 3]), "2^1 x L_2 x L_3");
        assert_eq!(signature_text(0, &[]), "2^0");
    }
}

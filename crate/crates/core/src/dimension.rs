//! Minimal elements, type `I_n` detection, references, and the dimension
//! function obtained by counting orthogonal minimal decompositions.
//!
//! `D(l)` is defined as the size of a greedy decomposition of `l` into
//! mutually orthogonal minimal elements, divided by the size of a reference.
//! The five dimension axioms are then verified exhaustively, not assumed.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::diagnostics::Diagnostics;
use crate::equivalence::{
    perspectivity, verify_regular, EquivRelation, OrthogonalFamilies, DEFAULT_FAMILY_CAP,
};
use crate::error::{Error, Result};
use crate::lattice::{Elem, ElementSet, Lattice};
use crate::modularity::check_modular;
use crate::ops::{LatticeOps, OrthoOps, TieBreak};
use crate::ortho::OrthoLattice;

pub const CARDINALITY_WAIVER: &str = "cardinality axiom waived (finite model)";

/// The atoms. On a finite lattice these are exactly the minimal elements.
pub fn minimal_elements(l: &Lattice) -> ElementSet {
    l.atoms().collect()
}

pub fn min_below(l: &Lattice, e: Elem) -> ElementSet {
    l.atoms().filter(|&m| l.leq(m, e)).collect()
}

/// Minimal elements straight from the definition: `l != 0` and
/// `l ^ l' in {0, l}` for every `l'`. Used to cross-check [`minimal_elements`].
pub fn minimal_by_definition(l: &Lattice) -> ElementSet {
    l.elements()
        .filter(|&e| {
            e != l.bottom()
                && l.elements().all(|x| {
                    let m = l.meet(e, x);
                    m == l.bottom() || m == e
                })
        })
        .collect()
}

/// Every element other than the bounds has zero or several inverses.
pub fn is_irreducible(l: &Lattice) -> bool {
    l.elements()
        .filter(|&e| e != l.bottom() && e != l.top())
        .all(|e| l.inverses(e).len() != 1)
}

/// A factorial lattice is of type I when it has a nonzero abelian element.
pub fn is_type_i(ol: &OrthoLattice) -> Result<bool> {
    if !ol.is_factorial() {
        return Err(Error::NotFactorial);
    }
    Ok(ol.abelian_elements().len() > 1)
}

/// Greedy family of mutually orthogonal minimal elements joining to `l`.
/// Among the minimal elements below the remainder, `tie` picks the lowest
/// or highest index.
pub fn decompose_minimal_orthogonal(ol: &OrthoLattice, l: Elem, tie: TieBreak) -> Result<Vec<Elem>> {
    let family = ol.greedy_orthogonal_atoms(&l, tie);
    let joined = family.iter().fold(ol.bottom(), |acc, &m| ol.join(acc, m));
    if joined == l {
        return Ok(family);
    }
    let rest = ol.meet(ol.perp(joined), l);
    if rest != ol.bottom() && min_below(ol, rest).is_empty() {
        Err(Error::NoMinimalBelow(ol.name_of(rest).to_string()))
    } else {
        Err(Error::DecompositionIncomplete(ol.name_of(l).to_string()))
    }
}

/// A maximal orthogonal family of minimal elements: the decomposition of
/// the top.
pub fn find_reference(ol: &OrthoLattice) -> Result<Vec<Elem>> {
    decompose_minimal_orthogonal(ol, ol.top(), TieBreak::First)
}

/// A reference containing the minimal element `start`.
pub fn find_reference_from(ol: &OrthoLattice, start: Elem) -> Result<Vec<Elem>> {
    if !LatticeOps::is_atom(ol, &start) {
        return Err(Error::NotMinimal(ol.name_of(start).to_string()));
    }
    let mut family = vec![start];
    family.extend(decompose_minimal_orthogonal(ol, ol.perp(start), TieBreak::First)?);
    Ok(family)
}

/// Checks that every member is an atom, the family joins to the top, and
/// no family with one member removed still does. `Err(i)` names the first
/// member that is not an atom.
pub fn affine_reference_check<L: LatticeOps>(lat: &L, family: &[L::Elem]) -> Result<bool, usize> {
    if let Some(i) = family.iter().position(|m| !lat.is_atom(m)) {
        return Err(i);
    }
    let top = lat.top();
    if lat.join_all(family) != top {
        return Ok(false);
    }
    // Joins are monotone, so dropping single members covers every proper subfamily.
    Ok((0..family.len()).all(|skip| {
        let rest = family
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, m)| m);
        lat.join_all(rest) != top
    }))
}

pub fn is_affine_reference(l: &Lattice, family: &ElementSet) -> Result<bool> {
    let members: Vec<Elem> = family.iter().copied().collect();
    affine_reference_check(l, &members).map_err(|i| Error::NotMinimal(l.name_of(members[i]).to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeTag {
    I(usize),
    Unclassified { stage: String, reason: String },
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::I(n) => write!(f, "I_{n}"),
            TypeTag::Unclassified { stage, .. } => write!(f, "unclassified at {stage}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DimensionTable {
    pub lattice: String,
    /// Size of a reference.
    pub n: usize,
    pub dims: Vec<Rational64>,
    pub type_tag: TypeTag,
    /// The axioms as verified, one entry each.
    pub checks: Diagnostics,
}

impl DimensionTable {
    pub fn dim(&self, e: Elem) -> Rational64 {
        self.dims[e]
    }

    pub fn image(&self) -> BTreeSet<Rational64> {
        self.dims.iter().copied().collect()
    }
}

/// `Δ_n = {0, 1/n, ..., 1}`.
pub fn delta(n: usize) -> BTreeSet<Rational64> {
    (0..=n as i64).map(|k| Rational64::new(k, n as i64)).collect()
}

/// Verifies the preconditions, computes `D` by decomposition counting, and
/// checks the five axioms, the image and well-definedness.
pub fn dimension_function(ol: &OrthoLattice, rel: &EquivRelation) -> Result<DimensionTable> {
    if !ol.is_factorial() {
        return Err(Error::NotFactorial);
    }
    if !check_modular(ol).holds {
        return Err(Error::NotModular);
    }
    if let Some(f) = ol.check_r_property().failures().next() {
        return Err(Error::NotRLattice(f.law.clone()));
    }
    if let Some(f) = verify_regular(ol, rel, Some(DEFAULT_FAMILY_CAP))
        .failures()
        .next()
    {
        return Err(Error::NotRegular(f.law.clone()));
    }
    if !is_type_i(ol)? {
        return Err(Error::NotTypeI);
    }
    let table = compute_dimensions(ol, rel)?;
    if let Some(f) = table.checks.failures().next() {
        let witness = match &f.status {
            crate::diagnostics::Status::Fail { witness } => witness.clone(),
            _ => Vec::new(),
        };
        return Err(Error::AxiomFails {
            axiom: f.law.clone(),
            witness,
        });
    }
    Ok(table)
}

fn compute_dimensions(ol: &OrthoLattice, rel: &EquivRelation) -> Result<DimensionTable> {
    let reference = find_reference(ol)?;
    let n = reference.len();
    let counts: Vec<usize> = ol
        .elements()
        .map(|e| decompose_minimal_orthogonal(ol, e, TieBreak::First).map(|f| f.len()))
        .collect::<Result<_>>()?;
    let dims: Vec<Rational64> = counts
        .iter()
        .map(|&c| Rational64::new(c as i64, n as i64))
        .collect();
    let names = |ids: &[Elem]| ol.names_of(ids);
    let pairs = || ol.elements().flat_map(|a| ol.elements().map(move |b| (a, b)));
    let mut d = Diagnostics::new();

    d.record(
        "D1-normalization",
        (!(dims[ol.bottom()].is_zero() && dims[ol.top()].is_one())).then(|| names(&[ol.bottom(), ol.top()])),
    );
    d.record(
        "D2-valuation",
        pairs()
            .find(|&(a, b)| dims[ol.join(a, b)] + dims[ol.meet(a, b)] != dims[a] + dims[b])
            .map(|(a, b)| names(&[a, b])),
    );
    d.record(
        "D3-equivalence",
        pairs()
            .find(|&(a, b)| (dims[a] == dims[b]) != rel.related(a, b))
            .map(|(a, b)| names(&[a, b])),
    );
    d.record(
        "D4-domination",
        pairs()
            .find(|&(a, b)| (dims[a] <= dims[b]) != crate::equivalence::sim_dominates(ol, rel, a, b))
            .map(|(a, b)| names(&[a, b])),
    );
    let families = OrthogonalFamilies::enumerate(ol, Some(DEFAULT_FAMILY_CAP));
    d.record(
        "D5-additivity",
        families
            .iter()
            .find(|(fam, join)| fam.iter().map(|&m| dims[m]).sum::<Rational64>() != dims[*join])
            .map(|(fam, _)| names(fam)),
    );
    let image: BTreeSet<Rational64> = dims.iter().copied().collect();
    d.record(
        "image",
        (image != delta(n)).then(|| {
            image
                .iter()
                .map(|r| format!("{}/{}", r.numer(), r.denom()))
                .collect()
        }),
    );
    let reversed = ol
        .elements()
        .find(|&e| decompose_minimal_orthogonal(ol, e, TieBreak::Last).map(|f| f.len()) != Ok(counts[e]));
    d.record("well-defined", reversed.map(|e| names(&[e])));
    let unit = Rational64::new(1, n as i64);
    let atoms = minimal_elements(ol);
    d.record(
        "minimal-iff-unit",
        ol.elements()
            .find(|e| (dims[*e] == unit) != atoms.contains(e))
            .map(|e| names(&[e])),
    );
    let bad_reference = atoms
        .iter()
        .find(|&&m| find_reference_from(ol, m).map(|r| r.len()) != Ok(n));
    d.record("reference-size", bad_reference.map(|&m| names(&[m])));

    Ok(DimensionTable {
        lattice: ol.name().to_string(),
        n,
        dims,
        type_tag: TypeTag::I(n),
        checks: d,
    })
}

/// Outcome of the full pipeline on one lattice.
#[derive(Debug, Clone)]
pub struct Classification {
    pub type_tag: TypeTag,
    /// One entry per stage reached, in pipeline order.
    pub stages: Diagnostics,
    pub dimension: Option<DimensionTable>,
    pub waivers: Vec<String>,
}

pub const STAGES: [&str; 7] = [
    "modular",
    "ortho",
    "factorial",
    "r-property",
    "regular",
    "type-I",
    "dimension",
];

/// Runs modularity, orthocomplement, factoriality, the restriction property,
/// regularity of perspectivity, type I and the dimension function, stopping
/// at the first failing stage.
///
/// Modularity comes before the orthocomplement so that a lattice with
/// neither (the pentagon) is reported at modularity.
pub fn classify_type(l: &Lattice, ortho: Option<&OrthoLattice>) -> Classification {
    let mut stages = Diagnostics::new();
    let waivers = vec![CARDINALITY_WAIVER.to_string()];
    let stop = |stages: Diagnostics, stage: &str, reason: String| Classification {
        type_tag: TypeTag::Unclassified {
            stage: stage.to_string(),
            reason,
        },
        stages,
        dimension: None,
        waivers: waivers.clone(),
    };

    let modular = check_modular(l);
    if let Some(w) = modular.witness {
        stages.fail("modular", l.names_of(&w));
        return stop(stages, "modular", "modular law fails".into());
    }
    stages.pass("modular");
    let Some(ol) = ortho else {
        stages.fail("ortho", Vec::new());
        return stop(stages, "ortho", "no orthocomplement given".into());
    };
    stages.pass("ortho");
    if !ol.is_factorial() {
        stages.fail("factorial", ol.names_of(&ol.center()));
        return stop(stages, "factorial", "center is larger than {0, 1}".into());
    }
    stages.pass("factorial");
    let r = ol.check_r_property();
    let failed = r.failures().next().map(|f| format!("{} fails", f.law));
    if let Some(reason) = failed {
        stages.extend(r);
        return stop(stages, "r-property", reason);
    }
    stages.pass("r-property");
    let rel = perspectivity(ol);
    let reg = verify_regular(ol, &rel, Some(DEFAULT_FAMILY_CAP));
    if let Some(f) = reg.failures().next() {
        let reason = format!("perspectivity fails {}", f.law);
        let witness = match &f.status {
            crate::diagnostics::Status::Fail { witness } => witness.clone(),
            _ => Vec::new(),
        };
        stages.fail("regular", witness);
        return stop(stages, "regular", reason);
    }
    stages.pass("regular");
    if !matches!(is_type_i(ol), Ok(true)) {
        stages.fail("type-I", Vec::new());
        return stop(stages, "type-I", "no nonzero abelian element".into());
    }
    stages.pass("type-I");
    match dimension_function(ol, &rel) {
        Ok(table) => {
            stages.pass("dimension");
            Classification {
                type_tag: table.type_tag.clone(),
                stages,
                dimension: Some(table),
                waivers,
            }
        }
        Err(e) => {
            let witness = match &e {
                Error::AxiomFails { witness, .. } => witness.clone(),
                _ => Vec::new(),
            };
            stages.fail("dimension", witness);
            stop(stages, "dimension", e.to_string())
        }
    }
}

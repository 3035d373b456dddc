//! Equivalence relations on finite lattices: perspectivity, domination,
//! the five regularity axioms, brute-force enumeration of regular
//! relations, and division of equivalence classes.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::diagnostics::Diagnostics;
use crate::error::{Error, Result};
use crate::lattice::{Elem, ElementSet, Lattice};
use crate::modularity::check_modular;
use crate::ops::{OrthoOps, TieBreak};
use crate::ortho::OrthoLattice;

pub type ClassId = usize;

/// Largest lattice [`enumerate_regular_relations`] scans by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Largest orthogonal family checked for additivity by default.
pub const DEFAULT_FAMILY_CAP: usize = 4;

/// A partition of the elements of a lattice.
///
/// Classes are numbered in order of their smallest member, so two relations
/// are equal exactly when they are the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EquivRelation {
    class_of: Vec<ClassId>,
    classes: Vec<Vec<Elem>>,
}

impl EquivRelation {
    /// Builds the partition whose blocks are the label classes of `labels`.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut ids: HashMap<&T, ClassId> = HashMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for (e, label) in labels.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(label).or_insert(next);
            if id == classes.len() {
                classes.push(Vec::new());
            }
            classes[id].push(e);
            class_of.push(id);
        }
        Self { class_of, classes }
    }

    /// Equality relation on `n` elements.
    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, e: Elem) -> ClassId {
        self.class_of[e]
    }

    pub fn class(&self, id: ClassId) -> &[Elem] {
        &self.classes[id]
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_names(&self, l: &Lattice) -> Vec<Vec<String>> {
        self.classes.iter().map(|c| l.names_of(c)).collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Elements are perspective when they share an inverse; the relation is
/// closed transitively into a partition.
pub fn perspectivity(l: &Lattice) -> EquivRelation {
    perspectivity_with_info(l).0
}

/// Perspectivity plus whether the raw common-inverse relation was already
/// an equivalence (so that closing it changed nothing).
pub fn perspectivity_with_info(l: &Lattice) -> (EquivRelation, bool) {
    let n = l.len();
    let inverses: Vec<ElementSet> = l.elements().map(|a| l.inverses(a)).collect();
    let raw = |a: Elem, b: Elem| !inverses[a].is_disjoint(&inverses[b]);
    let mut parent: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for b in a + 1..n {
            if raw(a, b) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
    let rel = EquivRelation::from_labels(&roots);
    let raw_is_equivalence = (0..n).all(|a| {
        rel.class(rel.class_of(a))
            .iter()
            .all(|&b| raw(a, b) || (a == b && rel.class(rel.class_of(a)).len() == 1))
    });
    (rel, raw_is_equivalence)
}

/// `a <=~ b`: some element below `b` is equivalent to `a`.
pub fn sim_dominates(l: &Lattice, rel: &EquivRelation, a: Elem, b: Elem) -> bool {
    l.down_set(b).any(|c| rel.related(c, a))
}

/// `a <~ b`: some element strictly below `b` is equivalent to `a`.
pub fn strictly_sim_dominates(l: &Lattice, rel: &EquivRelation, a: Elem, b: Elem) -> bool {
    l.down_set(b).any(|c| c != b && rel.related(c, a))
}

/// Mutually orthogonal families of nonzero elements with their joins.
#[derive(Debug, Clone)]
pub struct OrthogonalFamilies {
    families: Vec<(Vec<Elem>, Elem)>,
}

impl OrthogonalFamilies {
    /// Every family of size at most `cap` (`None`: no limit), plus, when
    /// capped, the maximal families built greedily from each start element.
    pub fn enumerate(ol: &OrthoLattice, cap: Option<usize>) -> Self {
        let nonzero: Vec<Elem> = ol.elements().filter(|&e| e != ol.bottom()).collect();
        let limit = cap.unwrap_or(usize::MAX);
        let mut families = Vec::new();
        let mut stack = Vec::new();
        fn extend(
            ol: &OrthoLattice,
            nonzero: &[Elem],
            from: usize,
            limit: usize,
            stack: &mut Vec<Elem>,
            out: &mut Vec<(Vec<Elem>, Elem)>,
        ) {
            for i in from..nonzero.len() {
                let e = nonzero[i];
                if stack.iter().all(|&s| ol.leq(e, ol.perp(s))) {
                    stack.push(e);
                    let join = stack.iter().fold(ol.bottom(), |acc, &x| ol.join(acc, x));
                    out.push((stack.clone(), join));
                    if stack.len() < limit {
                        extend(ol, nonzero, i + 1, limit, stack, out);
                    }
                    stack.pop();
                }
            }
        }
        extend(ol, &nonzero, 0, limit, &mut stack, &mut families);
        if cap.is_some() {
            for &start in &nonzero {
                let mut fam = vec![start];
                for &e in &nonzero {
                    if fam.iter().all(|&s| e != s && ol.leq(e, ol.perp(s))) {
                        fam.push(e);
                    }
                }
                if fam.len() > limit {
                    fam.sort_unstable();
                    let join = fam.iter().fold(ol.bottom(), |acc, &x| ol.join(acc, x));
                    families.push((fam, join));
                }
            }
        }
        Self { families }
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Vec<Elem>, Elem)> {
        self.families.iter()
    }

    /// Two families whose members are pairwise equivalent (after reordering)
    /// but whose joins are not equivalent.
    fn additivity_witness(&self, rel: &EquivRelation) -> Option<(&[Elem], &[Elem])> {
        let mut seen: HashMap<Vec<ClassId>, (ClassId, &[Elem])> = HashMap::new();
        for (fam, join) in &self.families {
            let mut key: Vec<ClassId> = fam.iter().map(|&e| rel.class_of(e)).collect();
            key.sort_unstable();
            let join_class = rel.class_of(*join);
            match seen.get(&key) {
                Some(&(c, other)) if c != join_class => return Some((other, fam)),
                Some(_) => {}
                None => {
                    seen.insert(key, (join_class, fam));
                }
            }
        }
        None
    }
}

/// Domination tables for one relation.
struct Domination {
    /// `dom[a * n + b]`: `a <=~ b`.
    dom: Vec<bool>,
    strict: Vec<bool>,
    n: usize,
}

impl Domination {
    fn new(l: &Lattice, rel: &EquivRelation) -> Self {
        let n = l.len();
        let k = rel.class_count();
        let mut dom = vec![false; n * n];
        let mut strict = vec![false; n * n];
        for b in l.elements() {
            let mut below = vec![false; k];
            let mut strictly = vec![false; k];
            for c in l.down_set(b) {
                below[rel.class_of(c)] = true;
                if c != b {
                    strictly[rel.class_of(c)] = true;
                }
            }
            for a in l.elements() {
                dom[a * n + b] = below[rel.class_of(a)];
                strict[a * n + b] = strictly[rel.class_of(a)];
            }
        }
        Self { dom, strict, n }
    }

    fn dom(&self, a: Elem, b: Elem) -> bool {
        self.dom[a * self.n + b]
    }

    fn strict(&self, a: Elem, b: Elem) -> bool {
        self.strict[a * self.n + b]
    }
}

/// Checks the five regularity axioms. Axiom 3 is read as: at least one of
/// `a ~ b`, `a <=~ b`, `b <=~ a` holds, and at most one of `a ~ b`,
/// `a <~ b`, `b <~ a` holds.
///
/// Additivity is checked on orthogonal families of size at most
/// `family_cap` (`None`: all families) plus greedy maximal families.
pub fn verify_regular(ol: &OrthoLattice, rel: &EquivRelation, family_cap: Option<usize>) -> Diagnostics {
    let families = OrthogonalFamilies::enumerate(ol, family_cap);
    verify_with_families(ol, rel, &families)
}

fn verify_with_families(
    ol: &OrthoLattice,
    rel: &EquivRelation,
    families: &OrthogonalFamilies,
) -> Diagnostics {
    let mut d = Diagnostics::new();
    let n = ol.len();
    let names = |ids: &[Elem]| ol.names_of(ids);
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let dom = Domination::new(ol, rel);

    let bottom = ol.bottom();
    d.record(
        "nondegenerate",
        ol.elements()
            .find(|&e| e != bottom && rel.related(e, bottom))
            .map(|e| names(&[e])),
    );
    d.record(
        "order-compatible",
        pairs()
            .find(|&(a, b)| ol.leq(b, a) && dom.dom(a, b) && !rel.related(a, b))
            .map(|(a, b)| names(&[a, b])),
    );
    d.record(
        "comparability",
        pairs()
            .find(|&(a, b)| {
                let exists = rel.related(a, b) || dom.dom(a, b) || dom.dom(b, a);
                let count = [rel.related(a, b), dom.strict(a, b), dom.strict(b, a)]
                    .iter()
                    .filter(|&&x| x)
                    .count();
                !exists || count > 1
            })
            .map(|(a, b)| names(&[a, b])),
    );
    d.record(
        "orthogonal-additivity",
        families.additivity_witness(rel).map(|(f, g)| {
            let mut w = names(f);
            w.push("|".into());
            w.extend(names(g));
            w
        }),
    );
    d.record(
        "finiteness",
        pairs()
            .find(|&(a, b)| a != b && ol.leq(b, a) && rel.related(a, b))
            .map(|(a, b)| names(&[a, b])),
    );
    d
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularEnumeration {
    pub partitions_scanned: u64,
    pub regular: Vec<EquivRelation>,
}

/// Scans every set partition of the elements and keeps those passing all
/// five axioms with unrestricted additivity.
pub fn enumerate_regular_relations(ol: &OrthoLattice, size_cap: usize) -> Result<RegularEnumeration> {
    if ol.len() > size_cap {
        return Err(Error::TooLarge {
            what: "partition scan",
            size: ol.len(),
            limit: size_cap,
        });
    }
    let families = OrthogonalFamilies::enumerate(ol, None);
    let n = ol.len();
    let mut scanned = 0u64;
    let mut regular = Vec::new();
    // Restricted growth strings: labels[i] <= 1 + max(labels[..i]).
    let mut labels = vec![0usize; n];
    fn walk(i: usize, max: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i == labels.len() {
            visit(labels);
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for v in 0..=top {
            labels[i] = v;
            walk(i + 1, max.max(v), labels, visit);
        }
    }
    let bottom = ol.bottom();
    let mut visit = |labels: &[usize]| {
        scanned += 1;
        // Cheap rejections before building the relation.
        if labels
            .iter()
            .enumerate()
            .any(|(e, &c)| e != bottom && c == labels[bottom])
        {
            return;
        }
        let rel = EquivRelation::from_labels(labels);
        if verify_with_families(ol, &rel, &families).all_pass() {
            regular.push(rel);
        }
    };
    if n > 0 {
        walk(0, 0, &mut labels, &mut visit);
    }
    Ok(RegularEnumeration {
        partitions_scanned: scanned,
        regular,
    })
}

/// Repeatedly subtracts elements of the divisor class from `b`:
/// `r <- r - a` for an `a` below `r` picked by `pick`. Returns the number of
/// subtractions and the final remainder.
pub fn divide_greedy<L: OrthoOps>(
    lat: &L,
    b: &L::Elem,
    mut pick: impl FnMut(&L::Elem) -> Option<L::Elem>,
) -> (usize, L::Elem) {
    let mut rest = b.clone();
    let mut count = 0;
    while let Some(a) = pick(&rest) {
        debug_assert!(!lat.is_bottom(&a) && lat.leq(&a, &rest));
        rest = lat.difference(&rest, &a);
        count += 1;
    }
    (count, rest)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Division {
    pub quotient: usize,
    pub remainder: ClassId,
}

/// Writes class `b` as `n·A + B1` with `B1` strictly dominated by `A`.
///
/// The greedy subtraction is run from every representative of `b` under
/// both tie-breaks; all runs must agree.
pub fn class_divide(ol: &OrthoLattice, rel: &EquivRelation, b: ClassId, a: ClassId) -> Result<Division> {
    if !check_modular(ol).holds {
        return Err(Error::NotModular);
    }
    let diag = verify_regular(ol, rel, Some(DEFAULT_FAMILY_CAP));
    if let Some(f) = diag.failures().next() {
        return Err(Error::NotRegular(f.law.clone()));
    }
    if a == rel.class_of(ol.bottom()) {
        return Err(Error::ZeroClass);
    }
    let divisor = rel.class(a);
    let mut result: Option<(Division, Elem)> = None;
    for &rep in rel.class(b) {
        for tie in [TieBreak::First, TieBreak::Last] {
            let pick = |r: &Elem| {
                let mut below = divisor.iter().copied().filter(|&x| ol.leq(x, *r));
                match tie {
                    TieBreak::First => below.next(),
                    TieBreak::Last => below.last(),
                }
            };
            let (quotient, rest) = divide_greedy(ol, &rep, pick);
            let div = Division {
                quotient,
                remainder: rel.class_of(rest),
            };
            match result {
                None => result = Some((div, rep)),
                Some((prev, from)) if prev != div => {
                    return Err(Error::DivisionNotUnique(format!(
                        "{} gives {:?}, {} gives {:?}",
                        ol.name_of(from),
                        prev,
                        ol.name_of(rep),
                        div
                    )))
                }
                Some(_) => {}
            }
        }
    }
    Ok(result.expect("equivalence classes are nonempty").0)
}

/// Classes rendered by member names, keyed by class id.
pub fn describe_classes(l: &Lattice, rel: &EquivRelation) -> BTreeMap<ClassId, Vec<String>> {
    rel.classes()
        .iter()
        .enumerate()
        .map(|(i, c)| (i, l.names_of(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{gen_boolean, gen_horizontal_sum};

    fn ids(l: &Lattice, names: &[&str]) -> Vec<Elem> {
        names.iter().map(|s| l.elem(s).unwrap()).collect()
    }

    #[test]
    fn from_labels_normalizes() {
        let a = EquivRelation::from_labels(&[7, 3, 7, 9]);
        let b = EquivRelation::from_labels(&[0, 1, 0, 2]);
        assert_eq!(a, b);
        assert_eq!(a.class(0), &[0, 2]);
        assert_eq!(EquivRelation::identity(3).class_count(), 3);
    }

    #[test]
    fn l2_perspectivity_classes() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let (rel, raw_ok) = perspectivity_with_info(&l2);
        assert!(raw_ok);
        assert_eq!(rel.class(rel.class_of(l2.bottom())), &[l2.bottom()]);
        assert_eq!(rel.class(rel.class_of(l2.top())), &[l2.top()]);
        let mid = ids(&l2, &["x", "x'", "y", "y'"]);
        assert_eq!(rel.class(rel.class_of(mid[0])), mid.as_slice());
    }

    #[test]
    fn domination_examples() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let rel = perspectivity(&l2);
        let x = l2.elem("x").unwrap();
        for e in l2.elements() {
            assert!(sim_dominates(&l2, &rel, e, e));
            assert!(sim_dominates(&l2, &rel, l2.bottom(), e));
        }
        assert!(sim_dominates(&l2, &rel, x, l2.top()));
        assert!(!sim_dominates(&l2, &rel, l2.top(), x));
    }

    #[test]
    fn l2_perspectivity_is_regular() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let d = verify_regular(&l2, &perspectivity(&l2), None);
        assert!(d.all_pass(), "{d:?}");
    }

    #[test]
    fn diamond_perspectivity_fails_comparability() {
        let p2 = gen_boolean(2).unwrap();
        let d = verify_regular(&p2, &perspectivity(&p2), None);
        assert!(d.failed("comparability"));
    }

    #[test]
    fn equality_on_l2_fails_comparability() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let d = verify_regular(&l2, &EquivRelation::identity(6), None);
        assert!(d.failed("comparability"));
    }

    #[test]
    fn enumeration_on_small_lattices() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let e = enumerate_regular_relations(&l2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(e.partitions_scanned, 203);
        assert_eq!(e.regular, vec![perspectivity(&l2)]);

        let chain = gen_boolean(1).unwrap();
        let e = enumerate_regular_relations(&chain, 12).unwrap();
        assert_eq!(e.partitions_scanned, 2);
        assert_eq!(e.regular, vec![EquivRelation::identity(2)]);

        // The diamond is reducible: its only regular relation merges the atoms,
        // which perspectivity does not.
        let p2 = gen_boolean(2).unwrap();
        let e = enumerate_regular_relations(&p2, 12).unwrap();
        assert_eq!(e.partitions_scanned, 15);
        assert_eq!(e.regular, vec![EquivRelation::from_labels(&[0, 1, 1, 2])]);
        assert_ne!(e.regular[0], perspectivity(&p2));
    }

    #[test]
    fn enumeration_refuses_large_lattices() {
        let l = gen_boolean(4).unwrap();
        assert!(matches!(
            enumerate_regular_relations(&l, 12),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn class_division_on_l2() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let rel = perspectivity(&l2);
        let mid = rel.class_of(l2.elem("x").unwrap());
        let top = rel.class_of(l2.top());
        let zero = rel.class_of(l2.bottom());
        assert_eq!(
            class_divide(&l2, &rel, top, mid).unwrap(),
            Division {
                quotient: 2,
                remainder: zero
            }
        );
        assert_eq!(
            class_divide(&l2, &rel, mid, mid).unwrap(),
            Division {
                quotient: 1,
                remainder: zero
            }
        );
        // B strictly dominated by A: nothing to subtract.
        assert_eq!(
            class_divide(&l2, &rel, mid, top).unwrap(),
            Division {
                quotient: 0,
                remainder: mid
            }
        );
        assert_eq!(class_divide(&l2, &rel, top, zero), Err(Error::ZeroClass));
    }

    #[test]
    fn class_division_rejects_irregular_relation() {
        let p2 = gen_boolean(2).unwrap();
        let rel = perspectivity(&p2);
        assert!(matches!(class_divide(&p2, &rel, 3, 1), Err(Error::NotRegular(_))));
    }

    #[test]
    fn orthogonal_families_of_l2() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let fams = OrthogonalFamilies::enumerate(&l2, None);
        // 5 singletons and the pairs {x, x'}, {y, y'}.
        assert_eq!(fams.len(), 7);
        assert!(fams.iter().all(|(f, _)| f.len() <= 2));
    }
}

//! Modular and distributive laws, and pentagon (N5) detection.
//!
//! Triples are scanned in lexicographic index order so the reported witness
//! is reproducible.

use serde::Serialize;

use crate::lattice::{Elem, Lattice};
use crate::ops::LatticeOps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LawVerdict {
    pub holds: bool,
    pub witness: Option<[Elem; 3]>,
}

impl LawVerdict {
    fn from_witness(witness: Option<[Elem; 3]>) -> Self {
        Self {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn first_triple(l: &Lattice, fails: impl Fn(Elem, Elem, Elem) -> bool) -> Option<[Elem; 3]> {
    for a in l.elements() {
        for b in l.elements() {
            for c in l.elements() {
                if fails(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// First `(l, l', l'')` with `l <= l''` and `(l v l') ^ l'' != l v (l' ^ l'')`.
pub fn check_modular(l: &Lattice) -> LawVerdict {
    // For fixed l only the l'' above it matter.
    for a in l.elements() {
        for b in l.elements() {
            for c in l.up_set(a) {
                if !l.modular_law_holds(&a, &b, &c) {
                    return LawVerdict::from_witness(Some([a, b, c]));
                }
            }
        }
    }
    LawVerdict::from_witness(None)
}

/// First `(l, l', l'')` with `(l v l') ^ l'' != (l ^ l'') v (l' ^ l'')`.
pub fn check_distributive(l: &Lattice) -> LawVerdict {
    LawVerdict::from_witness(first_triple(l, |a, b, c| !l.distributive_law_holds(&a, &b, &c)))
}

/// An N5 sublattice `(bottom', x, y, z, top')`: `x < y`, `z` incomparable
/// to both, `x v z = y v z = top'` and `x ^ z = y ^ z = bottom'`.
pub fn find_pentagon(l: &Lattice) -> Option<[Elem; 5]> {
    for x in l.elements() {
        for y in l.up_set(x).filter(|&y| y != x) {
            for z in l.elements() {
                if l.comparable(z, x) || l.comparable(z, y) {
                    continue;
                }
                let (lo, hi) = (l.meet(y, z), l.join(x, z));
                if l.meet(x, z) == lo && l.join(y, z) == hi {
                    return Some([lo, x, y, z, hi]);
                }
            }
        }
    }
    None
}

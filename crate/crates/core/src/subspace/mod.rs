//! The lattice of subspaces of `Q^n`, `2 <= n <= 6`, in exact arithmetic.
//!
//! Elements are produced on demand; nothing is enumerated. The orthocomplement
//! is the orthogonal complement under the standard dot product.

pub mod laws;
pub mod matrix;
pub mod sample;
pub mod space;
mod suite;

pub use laws::{SubspaceLaw, Suite};
pub use sample::{sample_subspace, Sampler};
pub use space::{
    s_canonicalize, s_common_complement, s_dimension, s_join, s_leq, s_meet, s_ortho_decompose, s_perp,
    Subspace,
};
pub use suite::{run_property_suite, LawReport, SuiteReport, SUBSPACE_WAIVERS};

use crate::equivalence::divide_greedy;
use crate::error::{Error, Result};
use crate::ops::{LatticeOps, OrthoOps, TieBreak};

/// `Sub(Q^n)` behind the shared lattice traits. The operations panic when
/// given subspaces of a different ambient dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceLattice {
    n: usize,
}

impl SubspaceLattice {
    pub fn new(n: usize) -> Result<Self> {
        if (space::MIN_AMBIENT..=space::MAX_AMBIENT).contains(&n) {
            Ok(Self { n })
        } else {
            Err(Error::AmbientOutOfRange(n))
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }
}

impl LatticeOps for SubspaceLattice {
    type Elem = Subspace;

    fn bottom(&self) -> Subspace {
        Subspace::zero(self.n)
    }

    fn top(&self) -> Subspace {
        Subspace::full(self.n)
    }

    fn leq(&self, a: &Subspace, b: &Subspace) -> bool {
        s_leq(a, b).expect("ambient mismatch")
    }

    fn meet(&self, a: &Subspace, b: &Subspace) -> Subspace {
        s_meet(a, b).expect("ambient mismatch")
    }

    fn join(&self, a: &Subspace, b: &Subspace) -> Subspace {
        s_join(a, b).expect("ambient mismatch")
    }

    fn is_atom(&self, a: &Subspace) -> bool {
        a.dim() == 1
    }
}

impl OrthoOps for SubspaceLattice {
    fn perp(&self, a: &Subspace) -> Subspace {
        s_perp(a)
    }

    /// The line through the first or last row of the canonical basis.
    fn atom_below(&self, a: &Subspace, tie: TieBreak) -> Option<Subspace> {
        let row = match tie {
            TieBreak::First => a.basis().first(),
            TieBreak::Last => a.basis().last(),
        }?;
        Some(s_canonicalize(self.n, std::slice::from_ref(row)).expect("same ambient"))
    }
}

/// Division of the dimension class `b` by the dimension class `a` in
/// `Sub(Q^n)`, where equivalence is perspectivity (equal dimension).
///
/// Each representative in `reps` (all of dimension `b`) is divided greedily
/// under both tie-breaks, subtracting subspaces of dimension `a` taken from
/// the canonical basis of the remainder; every run must agree. Returns the
/// quotient and the dimension of the remainder class.
pub fn class_divide_subspaces(lat: &SubspaceLattice, reps: &[Subspace], a: usize) -> Result<(usize, usize)> {
    if a == 0 {
        return Err(Error::ZeroClass);
    }
    let mut result = None;
    for rep in reps {
        for tie in [TieBreak::First, TieBreak::Last] {
            let pick = |r: &Subspace| {
                if r.dim() < a {
                    return None;
                }
                let rows = match tie {
                    TieBreak::First => &r.basis()[..a],
                    TieBreak::Last => &r.basis()[r.dim() - a..],
                };
                Some(s_canonicalize(lat.ambient_dim(), rows).expect("same ambient"))
            };
            let (q, rest) = divide_greedy(lat, rep, pick);
            let got = (q, rest.dim());
            match result {
                None => result = Some(got),
                Some(prev) if prev != got => {
                    return Err(Error::DivisionNotUnique(format!("{rep}: {prev:?} vs {got:?}")))
                }
                Some(_) => {}
            }
        }
    }
    result.ok_or_else(|| Error::DivisionNotUnique("no representatives".into()))
}

//! The lattice contract shared by the explicit (table-backed) lattices and
//! the rational subspace lattice, plus the elementary identities written
//! once against it.

use std::fmt::Debug;

/// Order in which greedy procedures pick among equally valid candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieBreak {
    First,
    Last,
}

impl TieBreak {
    pub fn reversed(self) -> Self {
        match self {
            TieBreak::First => TieBreak::Last,
            TieBreak::Last => TieBreak::First,
        }
    }
}

pub trait LatticeOps {
    type Elem: Clone + Eq + Debug;

    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Minimal nonzero element (an atom).
    fn is_atom(&self, a: &Self::Elem) -> bool;

    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a != b && self.leq(a, b)
    }

    fn is_bottom(&self, a: &Self::Elem) -> bool {
        *a == self.bottom()
    }

    fn meet_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.top(), |acc, x| self.meet(&acc, x))
    }

    fn join_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(&acc, x))
    }

    /// `a` and `b` are inverses (complements) of each other.
    fn is_inverse(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.join(a, b) == self.top() && self.meet(a, b) == self.bottom()
    }

    /// `c <= a` implies `(c v b) ^ a = c v (b ^ a)`; vacuous when `c` is not below `a`.
    fn modular_law_holds(&self, c: &Self::Elem, b: &Self::Elem, a: &Self::Elem) -> bool {
        if !self.leq(c, a) {
            return true;
        }
        self.meet(&self.join(c, b), a) == self.join(c, &self.meet(b, a))
    }

    /// `(a v b) ^ c = (a ^ c) v (b ^ c)`.
    fn distributive_law_holds(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> bool {
        self.meet(&self.join(a, b), c) == self.join(&self.meet(a, c), &self.meet(b, c))
    }
}

pub trait OrthoOps: LatticeOps {
    fn perp(&self, a: &Self::Elem) -> Self::Elem;

    /// Some atom below `a`, chosen according to `tie`; `None` when there is none.
    fn atom_below(&self, a: &Self::Elem, tie: TieBreak) -> Option<Self::Elem>;

    /// `b <= perp(a)`.
    fn orthogonal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.leq(b, &self.perp(a))
    }

    /// `a = (a ^ b) v (a ^ perp(b))`.
    fn commutes(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        let pb = self.perp(b);
        *a == self.join(&self.meet(a, b), &self.meet(a, &pb))
    }

    /// `a - b = perp(b) ^ a`, meaningful for `b <= a`.
    fn difference(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.meet(&self.perp(b), a)
    }

    /// Greedy family of mutually orthogonal atoms below `a`: pick an atom
    /// below the remainder, subtract it, repeat. The family joins to `a`
    /// whenever the lattice is modular and atomic; callers check.
    fn greedy_orthogonal_atoms(&self, a: &Self::Elem, tie: TieBreak) -> Vec<Self::Elem> {
        let mut family = Vec::new();
        let mut rest = a.clone();
        while !self.is_bottom(&rest) {
            let Some(m) = self.atom_below(&rest, tie) else {
                break;
            };
            rest = self.difference(&rest, &m);
            family.push(m);
        }
        family
    }
}

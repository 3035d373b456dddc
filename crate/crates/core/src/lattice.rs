//! Finite lattices given by their Hasse diagram.
//!
//! A [`Poset`] is built from cover pairs and closed reflexively and
//! transitively; [`Poset::validate`] reports which lattice axioms hold and
//! [`Poset::into_lattice`] materializes the meet and join tables.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::diagnostics::Diagnostics;
use crate::error::{BoundKind, Error, Result};
use crate::ops::LatticeOps;

/// Element handle: an index into the owning lattice.
pub type Elem = usize;

/// Order-free set of element handles.
pub type ElementSet = BTreeSet<Elem>;

/// Largest lattice the table representation accepts.
pub const MAX_ELEMENTS: usize = 4096;

const CONTINUITY_WAIVER: &str =
    "net continuity accepted by construction: every monotone net in a finite lattice stabilizes";

#[derive(Debug, Clone)]
pub struct Poset {
    name: String,
    names: Vec<String>,
    index: HashMap<String, Elem>,
    covers: Vec<(Elem, Elem)>,
    /// `up[a]` holds every `b` with `a <= b`.
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl Poset {
    /// Closes `covers` reflexively and transitively. Fails only on
    /// duplicate or unknown ids; order-theoretic defects are left for
    /// [`Poset::validate`] and [`Poset::into_lattice`].
    pub fn from_covers<S: AsRef<str>>(
        name: impl Into<String>,
        elements: &[S],
        covers: &[(S, S)],
    ) -> Result<Self> {
        let mut names = Vec::with_capacity(elements.len());
        let mut index = HashMap::with_capacity(elements.len());
        for e in elements {
            let e = e.as_ref();
            if index.insert(e.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateElement(e.to_string()));
            }
            names.push(e.to_string());
        }
        if names.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "lattice",
                size: names.len(),
                limit: MAX_ELEMENTS,
            });
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut cover_ids = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            cover_ids.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        let n = names.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter_mut().enumerate() {
            row.insert(a);
        }
        for &(a, b) in &cover_ids {
            up[a].insert(b);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        let down = transpose(&up);
        Ok(Self {
            name: name.into(),
            names,
            index,
            covers: cover_ids,
            up,
            down,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    fn antisymmetry_witness(&self) -> Option<(Elem, Elem)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.leq(a, b) && self.leq(b, a))
    }

    fn extremes(&self) -> (Vec<Elem>, Vec<Elem>) {
        let minimal = (0..self.len())
            .filter(|&a| self.down[a].count_ones(..) == 1)
            .collect();
        let maximal = (0..self.len())
            .filter(|&a| self.up[a].count_ones(..) == 1)
            .collect();
        (minimal, maximal)
    }

    /// Greatest element of `set`, if `set` has one.
    fn greatest_in(&self, set: &FixedBitSet) -> Option<Elem> {
        let size = set.count_ones(..);
        set.ones().find(|&m| self.down[m].count_ones(..) == size)
    }

    fn least_in(&self, set: &FixedBitSet) -> Option<Elem> {
        let size = set.count_ones(..);
        set.ones().find(|&m| self.up[m].count_ones(..) == size)
    }

    fn bound(&self, a: Elem, b: Elem, kind: BoundKind) -> Option<Elem> {
        match kind {
            BoundKind::Meet => {
                let mut s = self.down[a].clone();
                s.intersect_with(&self.down[b]);
                self.greatest_in(&s)
            }
            BoundKind::Join => {
                let mut s = self.up[a].clone();
                s.intersect_with(&self.up[b]);
                self.least_in(&s)
            }
        }
    }

    fn missing_bound(&self, kind: BoundKind) -> Option<(Elem, Elem)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.bound(a, b, kind).is_none())
    }

    fn names_of(&self, ids: &[Elem]) -> Vec<String> {
        ids.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Reports, per axiom of a complete lattice, whether it holds, with a
    /// witness for each failure.
    pub fn validate(&self) -> Diagnostics {
        let mut d = Diagnostics::new();
        d.record(
            "partial-order",
            self.antisymmetry_witness().map(|(a, b)| self.names_of(&[a, b])),
        );
        let (minimal, maximal) = self.extremes();
        if minimal.len() == 1 && maximal.len() == 1 {
            d.pass("bounds");
        } else {
            let mut w = minimal.clone();
            w.extend(maximal.iter().copied());
            d.fail("bounds", self.names_of(&w));
        }
        for (law, kind) in [("meets", BoundKind::Meet), ("joins", BoundKind::Join)] {
            d.record(law, self.missing_bound(kind).map(|(a, b)| self.names_of(&[a, b])));
        }
        d.waive("continuity", CONTINUITY_WAIVER);
        d
    }

    pub fn into_lattice(self) -> Result<Lattice> {
        if let Some((a, b)) = self.antisymmetry_witness() {
            return Err(Error::CycleDetected(self.names[a].clone(), self.names[b].clone()));
        }
        let (minimal, maximal) = self.extremes();
        if minimal.len() != 1 || maximal.len() != 1 {
            return Err(Error::NoBottomTop);
        }
        let n = self.len();
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for a in 0..n {
            for b in a..n {
                for (table, kind) in [(&mut meet, BoundKind::Meet), (&mut join, BoundKind::Join)] {
                    let m = self.bound(a, b, kind).ok_or_else(|| {
                        Error::NoUniqueBound(self.names[a].clone(), self.names[b].clone(), kind)
                    })?;
                    table[a * n + b] = m as u16;
                    table[b * n + a] = m as u16;
                }
            }
        }
        let covers = OnceLock::new();
        let _ = covers.set(normalize_covers(&self));
        Ok(Lattice {
            name: self.name,
            names: self.names,
            index: self.index,
            up: self.up,
            down: self.down,
            meet,
            join,
            bottom: minimal[0],
            top: maximal[0],
            covers,
        })
    }
}

/// Keeps only the genuine covers of the closed order, sorted.
fn normalize_covers(p: &Poset) -> Vec<(Elem, Elem)> {
    let mut out: Vec<_> = p
        .covers
        .iter()
        .copied()
        .filter(|&(a, b)| a != b)
        .filter(|&(a, b)| {
            let mut between = p.up[a].clone();
            between.intersect_with(&p.down[b]);
            between.count_ones(..) == 2
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn transpose(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (a, row) in rows.iter().enumerate() {
        for b in row.ones() {
            out[b].insert(a);
        }
    }
    out
}

/// A validated finite lattice with materialized meet and join tables.
///
/// Immutable after construction. Element handles are indices; passing an
/// index that does not belong to the lattice panics, as slice indexing
/// does. Use [`Lattice::elem`] to resolve names at API boundaries.
#[derive(Debug, Clone)]
pub struct Lattice {
    name: String,
    names: Vec<String>,
    index: HashMap<String, Elem>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: Elem,
    top: Elem,
    covers: OnceLock<Vec<(Elem, Elem)>>,
}

impl Lattice {
    /// Builds and validates a lattice from its Hasse diagram.
    pub fn from_covers<S: AsRef<str>>(
        name: impl Into<String>,
        elements: &[S],
        covers: &[(S, S)],
    ) -> Result<Self> {
        Poset::from_covers(name, elements, covers)?.into_lattice()
    }

    /// Builds a lattice whose order and operations are already known, such as
    /// a product. `leq`, `meet` and `join` must agree; the bound properties
    /// of every pair are checked.
    pub fn from_operations(
        name: impl Into<String>,
        names: Vec<String>,
        leq: impl Fn(Elem, Elem) -> bool,
        meet: impl Fn(Elem, Elem) -> Elem,
        join: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "lattice",
                size: n,
                limit: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, s) in names.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateElement(s.clone()));
            }
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    row.insert(b);
                }
            }
        }
        let down = transpose(&up);
        let mut meet_t = vec![0u16; n * n];
        let mut join_t = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let (m, j) = (meet(a, b), join(a, b));
                let bad_meet = !(up[m].contains(a) && up[m].contains(b));
                let bad_join = !(up[a].contains(j) && up[b].contains(j));
                if bad_meet || bad_join {
                    let kind = if bad_meet {
                        BoundKind::Meet
                    } else {
                        BoundKind::Join
                    };
                    return Err(Error::NoUniqueBound(names[a].clone(), names[b].clone(), kind));
                }
                meet_t[a * n + b] = m as u16;
                join_t[a * n + b] = j as u16;
            }
        }
        let bottom = (0..n).find(|&a| up[a].count_ones(..) == n);
        let top = (0..n).find(|&a| down[a].count_ones(..) == n);
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Err(Error::NoBottomTop);
        };
        Ok(Self {
            name: name.into(),
            names,
            index,
            up,
            down,
            meet: meet_t,
            join: join_t,
            bottom,
            top,
            covers: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn names_of<'a>(&self, ids: impl IntoIterator<Item = &'a Elem>) -> Vec<String> {
        ids.into_iter().map(|&e| self.names[e].clone()).collect()
    }

    /// Resolves an element name.
    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.len() + b] as Elem
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.len() + b] as Elem
    }

    /// Meet of a set; the empty meet is the top.
    pub fn meet_all(&self, set: &ElementSet) -> Elem {
        set.iter().fold(self.top, |acc, &x| self.meet(acc, x))
    }

    /// Join of a set; the empty join is the bottom.
    pub fn join_all(&self, set: &ElementSet) -> Elem {
        set.iter().fold(self.bottom, |acc, &x| self.join(acc, x))
    }

    /// Elements below `a`, including `a`.
    pub fn down_set(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.down[a].ones()
    }

    pub fn up_set(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.up[a].ones()
    }

    pub fn down_count(&self, a: Elem) -> usize {
        self.down[a].count_ones(..)
    }

    pub fn up_count(&self, a: Elem) -> usize {
        self.up[a].count_ones(..)
    }

    /// Hasse diagram, sorted by (lower, upper).
    pub fn covers(&self) -> &[(Elem, Elem)] {
        self.covers.get_or_init(|| {
            let mut out = Vec::new();
            for a in self.elements() {
                for b in self.up[a].ones() {
                    if a == b {
                        continue;
                    }
                    let mut between = self.up[a].clone();
                    between.intersect_with(&self.down[b]);
                    if between.count_ones(..) == 2 {
                        out.push((a, b));
                    }
                }
            }
            out
        })
    }

    /// Elements `b` with `a v b = top` and `a ^ b = bottom`.
    pub fn inverses(&self, a: Elem) -> ElementSet {
        self.elements()
            .filter(|&b| self.join(a, b) == self.top && self.meet(a, b) == self.bottom)
            .collect()
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements()
            .filter(move |&a| a != self.bottom && self.down_count(a) == 2)
    }

    /// Length of the longest chain from the bottom to `a`.
    pub fn height_of(&self, a: Elem) -> usize {
        // Elements sorted by down-set size form a linear extension.
        let mut order: Vec<Elem> = self.down[a].ones().collect();
        order.sort_by_key(|&x| self.down_count(x));
        let mut h = vec![0usize; self.len()];
        for &x in &order {
            h[x] = self.down[x]
                .ones()
                .filter(|&y| y != x)
                .map(|y| h[y] + 1)
                .max()
                .unwrap_or(0);
        }
        h[a]
    }

    /// Bottom and top are unique and every pair has its tables; continuity is waived.
    pub fn validate(&self) -> Diagnostics {
        let mut d = Diagnostics::new();
        for law in ["partial-order", "bounds", "meets", "joins"] {
            d.pass(law);
        }
        d.waive("continuity", CONTINUITY_WAIVER);
        d
    }
}

impl LatticeOps for Lattice {
    type Elem = Elem;

    fn bottom(&self) -> Elem {
        self.bottom
    }

    fn top(&self) -> Elem {
        self.top
    }

    fn leq(&self, a: &Elem, b: &Elem) -> bool {
        Lattice::leq(self, *a, *b)
    }

    fn meet(&self, a: &Elem, b: &Elem) -> Elem {
        Lattice::meet(self, *a, *b)
    }

    fn join(&self, a: &Elem, b: &Elem) -> Elem {
        Lattice::join(self, *a, *b)
    }

    fn is_atom(&self, a: &Elem) -> bool {
        *a != self.bottom && self.down_count(*a) == 2
    }
}

//! Orthocomplemented lattices and the structure derived from the
//! orthocomplement: commutation, center, reduced lattices, abelian
//! elements and the restriction property of the center.

use std::ops::Deref;

use crate::diagnostics::Diagnostics;
use crate::error::{Error, Result};
use crate::lattice::{Elem, ElementSet, Lattice};
use crate::ops::{LatticeOps, OrthoOps, TieBreak};

/// A lattice with a validated orthocomplement `l -> perp(l)` (also written `1 - l`).
#[derive(Debug, Clone)]
pub struct OrthoLattice {
    base: Lattice,
    perp: Vec<Elem>,
}

impl Deref for OrthoLattice {
    type Target = Lattice;

    fn deref(&self) -> &Lattice {
        &self.base
    }
}

/// Attaches an orthocomplement given as pairs `(a, perp(a))`.
///
/// Each pair is stated once; the symmetric pair is implied. Fixed points are
/// written `(a, a)`.
pub fn attach_orthocomplement(base: Lattice, pairs: &[(Elem, Elem)]) -> Result<OrthoLattice> {
    let mut map: Vec<Option<Elem>> = vec![None; base.len()];
    for &(a, b) in pairs {
        for (x, y) in [(a, b), (b, a)] {
            match map[x] {
                Some(prev) if prev != y => {
                    return Err(Error::IncompleteInvolution(base.name_of(x).to_string()))
                }
                _ => map[x] = Some(y),
            }
        }
    }
    let perp = map
        .iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::IncompleteInvolution(base.name_of(i).to_string())))
        .collect::<Result<Vec<_>>>()?;
    OrthoLattice::new(base, perp)
}

impl OrthoLattice {
    /// Validates `perp` exhaustively: involution, complement laws, antitone.
    pub fn new(base: Lattice, perp: Vec<Elem>) -> Result<Self> {
        let n = base.len();
        if perp.len() != n || perp.iter().any(|&p| p >= n) {
            let at = perp.len().min(n.saturating_sub(1));
            return Err(Error::IncompleteInvolution(base.name_of(at).to_string()));
        }
        let name = |e: Elem| base.name_of(e).to_string();
        if let Some(a) = base.elements().find(|&a| perp[perp[a]] != a) {
            return Err(Error::NotInvolution(name(a)));
        }
        if let Some(a) = base
            .elements()
            .find(|&a| base.join(a, perp[a]) != base.top() || base.meet(a, perp[a]) != base.bottom())
        {
            return Err(Error::ComplementLawFails(name(a)));
        }
        for a in base.elements() {
            for b in base.up_set(a) {
                if !base.leq(perp[b], perp[a]) {
                    return Err(Error::NotAntitone(name(a), name(b)));
                }
            }
        }
        Ok(Self { base, perp })
    }

    // By-value order operations. They shadow the by-reference trait methods
    // so that `ol.meet(a, b)` reads the same as on a plain `Lattice`.
    pub fn bottom(&self) -> Elem {
        self.base.bottom()
    }

    pub fn top(&self) -> Elem {
        self.base.top()
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.base.leq(a, b)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        self.base.lt(a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.base.meet(a, b)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.base.join(a, b)
    }

    pub fn meet_all(&self, set: &ElementSet) -> Elem {
        self.base.meet_all(set)
    }

    pub fn join_all(&self, set: &ElementSet) -> Elem {
        self.base.join_all(set)
    }

    pub fn base(&self) -> &Lattice {
        &self.base
    }

    pub fn into_base(self) -> Lattice {
        self.base
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.base.set_name(name);
    }

    pub fn perp(&self, a: Elem) -> Elem {
        self.perp[a]
    }

    pub fn perp_map(&self) -> &[Elem] {
        &self.perp
    }

    /// `{l' : l' <= perp(l)}`.
    pub fn orthogonal_set(&self, l: Elem) -> ElementSet {
        self.base.down_set(self.perp[l]).collect()
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        OrthoOps::commutes(self, &a, &b)
    }

    /// `c(l)`: every `l'` such that `l` commutes with `l'`.
    pub fn commutant(&self, l: Elem) -> ElementSet {
        self.elements().filter(|&x| self.commutes(l, x)).collect()
    }

    /// Elements lying in every commutant.
    pub fn center(&self) -> ElementSet {
        self.elements()
            .filter(|&x| self.elements().all(|l| self.commutes(l, x)))
            .collect()
    }

    pub fn is_factorial(&self) -> bool {
        self.center().len() == if self.len() == 1 { 1 } else { 2 }
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.len()
    }

    /// `l - l' = perp(l') ^ l`, defined for `l' <= l`.
    pub fn relative_complement(&self, l: Elem, sub: Elem) -> Result<Elem> {
        if !self.leq(sub, l) {
            return Err(Error::NotDominated(
                self.name_of(l).to_string(),
                self.name_of(sub).to_string(),
            ));
        }
        Ok(self.meet(self.perp[sub], l))
    }

    /// The interval `[0, l]` with complement `l' -> l - l'`.
    ///
    /// Fails with the first violated ortho axiom when the relative complement
    /// is not an orthocomplement, which happens only without modularity.
    pub fn reduced(&self, l: Elem) -> Result<Reduced> {
        let embed: Vec<Elem> = self.down_set(l).collect();
        let mut local = vec![usize::MAX; self.len()];
        for (i, &e) in embed.iter().enumerate() {
            local[e] = i;
        }
        let names = embed.iter().map(|&e| self.name_of(e).to_string()).collect();
        let lat = Lattice::from_operations(
            format!("{}^{}", self.name(), self.name_of(l)),
            names,
            |a, b| self.leq(embed[a], embed[b]),
            |a, b| local[self.meet(embed[a], embed[b])],
            |a, b| local[self.join(embed[a], embed[b])],
        )?;
        let perp = embed.iter().map(|&e| local[self.meet(self.perp[e], l)]).collect();
        Ok(Reduced {
            ortho: OrthoLattice::new(lat, perp)?,
            embed,
        })
    }

    /// Elements whose reduced lattice is an abelian ortholattice. The bottom
    /// always qualifies.
    pub fn abelian_elements(&self) -> ElementSet {
        self.elements()
            .filter(|&l| self.reduced(l).is_ok_and(|r| r.ortho.is_abelian()))
            .collect()
    }

    /// Checks `C(L ^ l) = C(L) ^ l` for every `l`.
    pub fn check_r_property(&self) -> Diagnostics {
        let mut d = Diagnostics::new();
        let center = self.center();
        for l in self.elements() {
            let reduced = match self.reduced(l) {
                Ok(r) => r,
                Err(_) => {
                    d.not_applicable(
                        "r-property",
                        format!("reduced lattice at {} is not orthocomplemented", self.name_of(l)),
                    );
                    return d;
                }
            };
            let local: ElementSet = reduced.ortho.center().iter().map(|&c| reduced.embed[c]).collect();
            let restricted: ElementSet = center.iter().map(|&c| self.meet(c, l)).collect();
            if local != restricted {
                d.fail("r-property", vec![self.name_of(l).to_string()]);
                return d;
            }
        }
        d.pass("r-property");
        d
    }

    pub fn is_r_lattice(&self) -> bool {
        self.check_r_property().passed("r-property")
    }

    /// Exhaustive checks of the consequences of the orthocomplement axioms.
    ///
    /// Laws whose derivation uses the modular law are reported as not
    /// applicable when `modular` is false.
    pub fn theorem_checks(&self, modular: bool) -> Diagnostics {
        let mut d = Diagnostics::new();
        let n = self.len();
        let names = |ids: &[Elem]| self.names_of(ids);
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));

        d.record(
            "de-morgan",
            pairs()
                .find(|&(a, b)| {
                    self.perp[self.join(a, b)] != self.meet(self.perp[a], self.perp[b])
                        || self.perp[self.meet(a, b)] != self.join(self.perp[a], self.perp[b])
                })
                .map(|(a, b)| names(&[a, b])),
        );
        d.record(
            "orthogonal-commutes",
            pairs()
                .find(|&(a, b)| self.leq(b, self.perp[a]) && !self.commutes(a, b))
                .map(|(a, b)| names(&[a, b])),
        );

        let modular_only = [
            "commutation-symmetric",
            "distributive-on-commuting",
            "abelian-iff-distributive",
            "orthogonal-cancellation",
            "commuting-inverse-is-perp",
        ];
        if !modular {
            for law in modular_only {
                d.not_applicable(law, "derivation uses the modular law");
            }
            return d;
        }

        let commutes: Vec<bool> = pairs().map(|(a, b)| self.commutes(a, b)).collect();
        let com = |a: Elem, b: Elem| commutes[a * n + b];

        d.record(
            "commutation-symmetric",
            pairs()
                .find(|&(a, b)| com(a, b) != com(b, a))
                .map(|(a, b)| names(&[a, b])),
        );

        let mut witness = None;
        'outer: for c in 0..n {
            for a in (0..n).filter(|&a| com(a, c)) {
                for b in (0..n).filter(|&b| com(b, c)) {
                    if !self.distributive_law_holds(&a, &b, &c) {
                        witness = Some(names(&[a, b, c]));
                        break 'outer;
                    }
                }
            }
        }
        d.record("distributive-on-commuting", witness);

        let distributive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.distributive_law_holds(&a, &b, &c))));
        if distributive == self.is_abelian() {
            d.pass("abelian-iff-distributive");
        } else {
            d.fail("abelian-iff-distributive", Vec::new());
        }

        let mut witness = None;
        'cancel: for l in 0..n {
            let orth: Vec<Elem> = self.down_set(self.perp[l]).collect();
            for &x in &orth {
                for &y in &orth {
                    if x != y && self.join(l, x) == self.join(l, y) {
                        witness = Some(names(&[l, x, y]));
                        break 'cancel;
                    }
                }
            }
        }
        d.record("orthogonal-cancellation", witness);

        d.record(
            "commuting-inverse-is-perp",
            (0..n)
                .find(|&l| {
                    let hits: Vec<Elem> = self.inverses(l).into_iter().filter(|&x| com(l, x)).collect();
                    hits != [self.perp[l]]
                })
                .map(|l| names(&[l])),
        );
        d
    }
}

impl LatticeOps for OrthoLattice {
    type Elem = Elem;

    fn bottom(&self) -> Elem {
        self.base.bottom()
    }

    fn top(&self) -> Elem {
        self.base.top()
    }

    fn leq(&self, a: &Elem, b: &Elem) -> bool {
        self.base.leq(*a, *b)
    }

    fn meet(&self, a: &Elem, b: &Elem) -> Elem {
        self.base.meet(*a, *b)
    }

    fn join(&self, a: &Elem, b: &Elem) -> Elem {
        self.base.join(*a, *b)
    }

    fn is_atom(&self, a: &Elem) -> bool {
        LatticeOps::is_atom(&self.base, a)
    }
}

impl OrthoOps for OrthoLattice {
    fn perp(&self, a: &Elem) -> Elem {
        self.perp[*a]
    }

    fn atom_below(&self, a: &Elem, tie: TieBreak) -> Option<Elem> {
        let mut below = self.base.atoms().filter(|&m| self.base.leq(m, *a));
        match tie {
            TieBreak::First => below.next(),
            TieBreak::Last => below.last(),
        }
    }
}

/// A reduced lattice together with its embedding into the parent.
#[derive(Debug, Clone)]
pub struct Reduced {
    pub ortho: OrthoLattice,
    /// `embed[i]` is the parent element for local element `i`.
    pub embed: Vec<Elem>,
}

impl Reduced {
    pub fn lift(&self, local: Elem) -> Elem {
        self.embed[local]
    }
}

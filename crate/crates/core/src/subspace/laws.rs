//! Property laws checked on sampled subspaces, one trait object per law.
//!
//! The relation `~` on subspaces is perspectivity, decided by constructing a
//! common complement. Statements quantified over minimal elements are
//! checked through lines: the basis lines of a subspace, or sampled lines.

use num_rational::Rational64;
use serde::Serialize;

use super::sample::Sampler;
use super::space::{
    s_canonicalize, s_common_complement, s_dimension, s_join, s_leq, s_meet, s_ortho_decompose, s_perp,
    Subspace,
};
use super::SubspaceLattice;
use crate::ops::{OrthoOps, TieBreak};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Lattice,
    Modular,
    Commutation,
    Regular,
    Dimension,
    Lemmas,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "all",
        "lattice",
        "modular",
        "commutation",
        "regular",
        "dimension",
        "lemmas",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Lattice => "lattice",
            Suite::Modular => "modular",
            Suite::Commutation => "commutation",
            Suite::Regular => "regular",
            Suite::Dimension => "dimension",
            Suite::Lemmas => "lemmas",
        }
    }

    pub fn selects(self, law_suite: Suite) -> bool {
        self == Suite::All || self == law_suite
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "lattice" => Suite::Lattice,
            "modular" => Suite::Modular,
            "commutation" => Suite::Commutation,
            "regular" => Suite::Regular,
            "dimension" => Suite::Dimension,
            "lemmas" => Suite::Lemmas,
            _ => {
                return Err(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

/// `Err` carries the offending sample, rendered.
pub type Outcome = Result<(), Vec<String>>;

pub trait SubspaceLaw: Sync {
    fn name(&self) -> &'static str;
    fn suite(&self) -> Suite;
    /// Draws one sample from `s` and checks the law on it.
    fn check(&self, s: &mut Sampler) -> Outcome;
}

struct Law {
    name: &'static str,
    suite: Suite,
    check: fn(&mut Sampler) -> Outcome,
}

impl SubspaceLaw for Law {
    fn name(&self) -> &'static str {
        self.name
    }
    fn suite(&self) -> Suite {
        self.suite
    }
    fn check(&self, s: &mut Sampler) -> Outcome {
        (self.check)(s)
    }
}

macro_rules! require {
    ($cond:expr, $($w:expr),+ $(,)?) => {
        if !$cond {
            return Err(vec![$($w.to_string()),+]);
        }
    };
}

fn m(a: &Subspace, b: &Subspace) -> Subspace {
    s_meet(a, b).expect("one ambient space per run")
}

fn j(a: &Subspace, b: &Subspace) -> Subspace {
    s_join(a, b).expect("one ambient space per run")
}

fn le(a: &Subspace, b: &Subspace) -> bool {
    s_leq(a, b).expect("one ambient space per run")
}

fn p(a: &Subspace) -> Subspace {
    s_perp(a)
}

fn commutes(a: &Subspace, b: &Subspace) -> bool {
    *a == j(&m(a, b), &m(a, &p(b)))
}

fn perspective(a: &Subspace, b: &Subspace) -> bool {
    s_common_complement(a, b).is_ok()
}

fn d(u: &Subspace) -> Rational64 {
    s_dimension(u)
}

fn basis_lines(u: &Subspace) -> Vec<Subspace> {
    u.basis()
        .iter()
        .map(|r| s_canonicalize(u.ambient_dim(), std::slice::from_ref(r)).expect("same ambient"))
        .collect()
}

fn join_all(n: usize, items: &[Subspace]) -> Subspace {
    items.iter().fold(Subspace::zero(n), |acc, x| j(&acc, x))
}

fn lattice_bounds(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    let (meet, join) = (m(&u, &v), j(&u, &v));
    require!(
        le(&meet, &u) && le(&meet, &v) && le(&u, &join) && le(&v, &join),
        u,
        v
    );
    require!(le(&u, &v) == (meet == u) && le(&u, &v) == (join == v), u, v);
    require!(le(&Subspace::zero(s.n), &u) && le(&u, &Subspace::full(s.n)), u);
    Ok(())
}

fn lattice_identities(s: &mut Sampler) -> Outcome {
    let (u, v, w) = (s.subspace(), s.subspace(), s.subspace());
    require!(m(&u, &j(&u, &v)) == u && j(&u, &m(&u, &v)) == u, u, v);
    require!(m(&u, &v) == m(&v, &u) && j(&u, &v) == j(&v, &u), u, v);
    require!(m(&m(&u, &v), &w) == m(&u, &m(&v, &w)), u, v, w);
    require!(j(&j(&u, &v), &w) == j(&u, &j(&v, &w)), u, v, w);
    Ok(())
}

fn ortho_involution(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    require!(p(&p(&u)) == u, u);
    Ok(())
}

fn ortho_complement(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    require!(m(&u, &p(&u)).is_zero() && j(&u, &p(&u)).is_full(), u);
    Ok(())
}

fn ortho_antitone(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let v = j(&u, &s.subspace());
    require!(le(&p(&v), &p(&u)), u, v);
    Ok(())
}

fn de_morgan(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    require!(p(&j(&u, &v)) == m(&p(&u), &p(&v)), u, v);
    require!(p(&m(&u, &v)) == j(&p(&u), &p(&v)), u, v);
    Ok(())
}

fn meet_cross_check(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    require!(m(&u, &v) == p(&j(&p(&u), &p(&v))), u, v);
    Ok(())
}

fn canonical_form(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    require!(s_canonicalize(s.n, u.basis()).as_ref() == Ok(&u), u);
    // Reversed rows plus an extra dependent combination: same subspace.
    let mut rows: Vec<_> = u.basis().iter().rev().cloned().collect();
    let extra = s.inside_of_dim(&u, u.dim().min(1));
    rows.extend(extra.basis().iter().cloned());
    require!(s_canonicalize(s.n, &rows).as_ref() == Ok(&u), u);
    Ok(())
}

fn modular_law(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    let w = j(&u, &s.subspace());
    require!(m(&j(&u, &v), &w) == j(&u, &m(&v, &w)), u, v, w);
    Ok(())
}

fn parallelogram(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    let a = m(&p(&u), &j(&u, &v));
    let meet = m(&u, &v);
    let b = m(&p(&meet), &v);
    require!(a.dim() == b.dim() && perspective(&a, &b), u, v);
    Ok(())
}

fn orthogonal_commutes(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let v = s.inside(&p(&u));
    require!(commutes(&u, &v) && commutes(&v, &u), u, v);
    Ok(())
}

fn commutation_symmetric(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    if s.coin() {
        let v = s.commuting_with(&u);
        require!(commutes(&v, &u) && commutes(&u, &v), u, v);
    } else {
        let v = s.subspace();
        require!(commutes(&u, &v) == commutes(&v, &u), u, v);
    }
    Ok(())
}

fn distributive_on_commuting(s: &mut Sampler) -> Outcome {
    let c = s.subspace();
    let (a, b) = (s.commuting_with(&c), s.commuting_with(&c));
    require!(m(&j(&a, &b), &c) == j(&m(&a, &c), &m(&b, &c)), a, b, c);
    Ok(())
}

fn orthogonal_cancellation(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let pu = p(&u);
    let v = s.inside(&pu);
    let w = m(&j(&u, &v), &pu);
    require!(j(&u, &w) == j(&u, &v) && w == v, u, v);
    let x = s.inside(&pu);
    require!(j(&u, &x) != j(&u, &v) || x == v, u, v, x);
    Ok(())
}

fn commuting_inverse_is_perp(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let pu = p(&u);
    require!(commutes(&u, &pu), u);
    let mut candidates = vec![pu.clone()];
    for _ in 0..3 {
        candidates.push(s.complement_of(&u));
        candidates.push(s.commuting_with(&u));
    }
    for c in candidates {
        let inverse = j(&u, &c).is_full() && m(&u, &c).is_zero();
        require!(!(inverse && commutes(&u, &c)) || c == pu, u, c);
    }
    Ok(())
}

fn perspectivity_iff_equal_dim(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let v = if s.coin() { s.of_dim(u.dim()) } else { s.subspace() };
    if u.dim() == v.dim() {
        let w = s_common_complement(&u, &v).map_err(|e| vec![u.to_string(), v.to_string(), e.to_string()])?;
        require!(w.dim() + u.dim() == s.n, u, v, w);
    } else {
        require!(s_common_complement(&u, &v).is_err(), u, v);
        let w = s.complement_of(&u);
        require!(!(j(&w, &v).is_full() && m(&w, &v).is_zero()), u, v, w);
    }
    Ok(())
}

fn regular_axioms(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    // Nondegenerate.
    require!(perspective(&u, &Subspace::zero(s.n)) == u.is_zero(), u);
    // Order compatibility and finiteness: below u, only u itself is equivalent.
    let v = s.inside(&u);
    require!(!perspective(&u, &v) || v == u, u, v);
    // Comparability: a witness below the larger side is equivalent to the smaller.
    let x = s.subspace();
    let (small, big) = if u.dim() <= x.dim() { (&u, &x) } else { (&x, &u) };
    let w = s.inside_of_dim(big, small.dim());
    require!(perspective(&w, small), u, x, w);
    // Additivity on orthogonal pairs of equivalent members.
    let u2 = s.inside(&p(&u));
    let v1 = s.of_dim(u.dim());
    let v2 = s.inside_of_dim(&p(&v1), u2.dim());
    require!(perspective(&j(&u, &u2), &j(&v1, &v2)), u, u2, v1, v2);
    Ok(())
}

fn lattice_for(s: &Sampler) -> SubspaceLattice {
    SubspaceLattice::new(s.n).expect("ambient checked before the run")
}

fn d1_normalization(s: &mut Sampler) -> Outcome {
    require!(d(&Subspace::zero(s.n)) == Rational64::from(0), "0");
    require!(d(&Subspace::full(s.n)) == Rational64::from(1), "1");
    Ok(())
}

fn d2_valuation(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    require!(d(&j(&u, &v)) + d(&m(&u, &v)) == d(&u) + d(&v), u, v);
    Ok(())
}

fn d3_equivalence(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let v = if s.coin() { s.of_dim(u.dim()) } else { s.subspace() };
    require!((d(&u) == d(&v)) == perspective(&u, &v), u, v);
    Ok(())
}

fn d4_domination(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    let dominated = u.dim() <= v.dim() && {
        let w = s.inside_of_dim(&v, u.dim());
        perspective(&w, &u)
    };
    require!((d(&u) <= d(&v)) == dominated, u, v);
    Ok(())
}

fn d5_additivity(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let lines = s_ortho_decompose(&u);
    let total: Rational64 = lines.iter().map(d).sum();
    require!(total == d(&u) && join_all(s.n, &lines) == u, u);
    let v = s.inside(&p(&u));
    require!(d(&j(&u, &v)) == d(&u) + d(&v), u, v);
    Ok(())
}

fn dimension_image(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let k = d(&u) * Rational64::from(s.n as i64);
    require!(
        k.is_integer() && k >= Rational64::from(0) && k <= Rational64::from(s.n as i64),
        u
    );
    let l = s.line();
    require!(d(&l) == Rational64::new(1, s.n as i64), l);
    Ok(())
}

fn well_defined(s: &mut Sampler) -> Outcome {
    let lat = lattice_for(s);
    let u = s.subspace();
    for tie in [TieBreak::First, TieBreak::Last] {
        let fam = lat.greedy_orthogonal_atoms(&u, tie);
        require!(fam.len() == u.dim() && join_all(s.n, &fam) == u, u);
        for (i, a) in fam.iter().enumerate() {
            for b in &fam[i + 1..] {
                require!(le(b, &p(a)), u, a, b);
            }
        }
    }
    require!(s_ortho_decompose(&u).len() == u.dim(), u);
    Ok(())
}

fn lines_abelian(s: &mut Sampler) -> Outcome {
    // [0, L] = {0, L}: its relative complement swaps the two and it is abelian.
    let l = s.line();
    let x = s.inside(&l);
    require!(x.is_zero() || x == l, l, x);
    require!(m(&p(&l), &l).is_zero(), l);
    Ok(())
}

fn factorial(s: &mut Sampler) -> Outcome {
    // A proper nonzero U fails to commute with the line through u + w,
    // u in U and w in perp(U), so only 0 and 1 are central.
    let k = s.rng_dim();
    let u = s.of_dim(1 + (s.n - 2).min(k));
    let a = s.line_inside(&u);
    let b = s.line_inside(&p(&u));
    let mut sum = a.basis()[0].clone();
    for (x, y) in sum.iter_mut().zip(&b.basis()[0]) {
        *x += y;
    }
    let v = s_canonicalize(s.n, &[sum]).expect("same ambient");
    require!(!commutes(&u, &v), u, v);
    Ok(())
}

fn lemma_min_join(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    require!(join_all(s.n, &basis_lines(&u)) == u, u);
    require!(join_all(s.n, &s_ortho_decompose(&u)) == u, u);
    let l = s.line_inside(&u);
    require!(le(&l, &u), u, l);
    Ok(())
}

fn lemma_min_order(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let v = if s.coin() {
        j(&u, &s.subspace())
    } else {
        s.subspace()
    };
    let lines_inside = basis_lines(&u).iter().all(|l| le(l, &v));
    require!(le(&u, &v) == lines_inside, u, v);
    if le(&u, &v) {
        let l = s.line_inside(&u);
        require!(le(&l, &v), u, v, l);
    }
    Ok(())
}

fn lemma_perp_join(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    let pj = p(&j(&u, &v));
    require!(pj == m(&p(&u), &p(&v)), u, v);
    let w = s.inside(&pj);
    require!(le(&w, &p(&u)) && le(&w, &p(&v)), u, v, w);
    Ok(())
}

fn lemma_min_outside(s: &mut Sampler) -> Outcome {
    let (u, v) = (s.subspace(), s.subspace());
    let both = m(&p(&u), &p(&v));
    require!(m(&j(&u, &v), &both).is_zero(), u, v);
    let l = s.line_inside(&both);
    require!(l.is_zero() || !le(&l, &j(&u, &v)), u, v, l);
    Ok(())
}

fn lemma_lines_perspective(s: &mut Sampler) -> Outcome {
    let (a, b) = (s.line(), s.line());
    require!(perspective(&a, &b), a, b);
    let k = s.rng_dim();
    let big = s.of_dim(2 + k % (s.n - 1));
    require!(!perspective(&a, &big), a, big);
    Ok(())
}

fn lemma_min_difference(s: &mut Sampler) -> Outcome {
    let u = s.subspace();
    let v = s.inside(&u);
    let diff = m(&u, &p(&v));
    let l = if s.coin() && !diff.is_zero() {
        s.line_inside(&diff)
    } else {
        s.line()
    };
    require!(le(&l, &diff) == (le(&l, &u) && le(&l, &p(&v))), u, v, l);
    Ok(())
}

impl Sampler {
    fn rng_dim(&mut self) -> usize {
        use rand::Rng;
        self.rng.gen_range(0..=self.n)
    }
}

static LAWS: &[&dyn SubspaceLaw] = &[
    &Law {
        name: "lattice-bounds",
        suite: Suite::Lattice,
        check: lattice_bounds,
    },
    &Law {
        name: "lattice-identities",
        suite: Suite::Lattice,
        check: lattice_identities,
    },
    &Law {
        name: "ortho-involution",
        suite: Suite::Lattice,
        check: ortho_involution,
    },
    &Law {
        name: "ortho-complement",
        suite: Suite::Lattice,
        check: ortho_complement,
    },
    &Law {
        name: "ortho-antitone",
        suite: Suite::Lattice,
        check: ortho_antitone,
    },
    &Law {
        name: "de-morgan",
        suite: Suite::Lattice,
        check: de_morgan,
    },
    &Law {
        name: "meet-cross-check",
        suite: Suite::Lattice,
        check: meet_cross_check,
    },
    &Law {
        name: "canonical-form",
        suite: Suite::Lattice,
        check: canonical_form,
    },
    &Law {
        name: "modular-law",
        suite: Suite::Modular,
        check: modular_law,
    },
    &Law {
        name: "parallelogram",
        suite: Suite::Modular,
        check: parallelogram,
    },
    &Law {
        name: "orthogonal-commutes",
        suite: Suite::Commutation,
        check: orthogonal_commutes,
    },
    &Law {
        name: "commutation-symmetric",
        suite: Suite::Commutation,
        check: commutation_symmetric,
    },
    &Law {
        name: "distributive-on-commuting",
        suite: Suite::Commutation,
        check: distributive_on_commuting,
    },
    &Law {
        name: "orthogonal-cancellation",
        suite: Suite::Commutation,
        check: orthogonal_cancellation,
    },
    &Law {
        name: "commuting-inverse-is-perp",
        suite: Suite::Commutation,
        check: commuting_inverse_is_perp,
    },
    &Law {
        name: "perspectivity-iff-equal-dim",
        suite: Suite::Regular,
        check: perspectivity_iff_equal_dim,
    },
    &Law {
        name: "regular-axioms",
        suite: Suite::Regular,
        check: regular_axioms,
    },
    &Law {
        name: "D1-normalization",
        suite: Suite::Dimension,
        check: d1_normalization,
    },
    &Law {
        name: "D2-valuation",
        suite: Suite::Dimension,
        check: d2_valuation,
    },
    &Law {
        name: "D3-equivalence",
        suite: Suite::Dimension,
        check: d3_equivalence,
    },
    &Law {
        name: "D4-domination",
        suite: Suite::Dimension,
        check: d4_domination,
    },
    &Law {
        name: "D5-additivity",
        suite: Suite::Dimension,
        check: d5_additivity,
    },
    &Law {
        name: "image",
        suite: Suite::Dimension,
        check: dimension_image,
    },
    &Law {
        name: "well-defined",
        suite: Suite::Dimension,
        check: well_defined,
    },
    &Law {
        name: "lines-abelian",
        suite: Suite::Dimension,
        check: lines_abelian,
    },
    &Law {
        name: "factorial",
        suite: Suite::Dimension,
        check: factorial,
    },
    &Law {
        name: "lemma-min-join",
        suite: Suite::Lemmas,
        check: lemma_min_join,
    },
    &Law {
        name: "lemma-min-order",
        suite: Suite::Lemmas,
        check: lemma_min_order,
    },
    &Law {
        name: "lemma-perp-join",
        suite: Suite::Lemmas,
        check: lemma_perp_join,
    },
    &Law {
        name: "lemma-min-outside",
        suite: Suite::Lemmas,
        check: lemma_min_outside,
    },
    &Law {
        name: "lemma-lines-perspective",
        suite: Suite::Lemmas,
        check: lemma_lines_perspective,
    },
    &Law {
        name: "lemma-min-difference",
        suite: Suite::Lemmas,
        check: lemma_min_difference,
    },
];

pub fn laws() -> &'static [&'static dyn SubspaceLaw] {
    LAWS
}

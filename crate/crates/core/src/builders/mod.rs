//! Constructors for the standard example lattices and for products.

mod decompose;
mod iso;
mod registry;

pub use decompose::{decompose_central, CentralSignature};
pub use iso::{is_isomorphic, ISO_LIMIT};
pub use registry::{corpus, generator, generators, CorpusEntry, GenParams, Generated, Generator};

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, MAX_ELEMENTS};
use crate::ortho::OrthoLattice;

/// Largest ground set for [`gen_boolean`]; 2^12 is the element cap.
pub const MAX_BOOLEAN_ATOMS: usize = 12;

/// Largest `m` for [`gen_horizontal_sum`].
pub const MAX_HORIZONTAL_SUM: usize = 64;

const LETTERS: &[u8; 26] = b"abcdefghijklmnopqrstuvwxyz";
const SUM_LETTERS: &[u8; 26] = b"xyzuvwabcdefghijklmnopqrst";

fn subset_name(mask: usize, k: usize) -> String {
    if mask == 0 {
        return "0".into();
    }
    if mask == (1 << k) - 1 {
        return "1".into();
    }
    (0..k)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| LETTERS[i] as char)
        .collect()
}

fn boolean_with_names(name: String, k: usize, names: Vec<String>) -> Result<OrthoLattice> {
    let full = (1usize << k) - 1;
    let base = Lattice::from_operations(name, names, |a, b| a & !b == 0, |a, b| a & b, |a, b| a | b)?;
    OrthoLattice::new(base, (0..=full).map(|a| full ^ a).collect())
}

/// The subsets of a `k`-element set, ordered by inclusion, with set
/// complement. Element `i` is the subset with bitmask `i`.
pub fn gen_boolean(k: usize) -> Result<OrthoLattice> {
    if k > MAX_BOOLEAN_ATOMS {
        return Err(Error::TooLarge {
            what: "boolean atoms",
            size: k,
            limit: MAX_BOOLEAN_ATOMS,
        });
    }
    let names = (0..1usize << k).map(|m| subset_name(m, k)).collect();
    boolean_with_names(format!("P{k}"), k, names)
}

fn sum_letter(i: usize) -> String {
    if i < SUM_LETTERS.len() {
        (SUM_LETTERS[i] as char).to_string()
    } else {
        format!("l{}", i + 1)
    }
}

/// `L_m`: bottom, top and `m` pairs `l, l'` of middle elements, any two
/// distinct middle elements meeting to bottom and joining to top.
///
/// Elements are ordered `0, x, x', y, y', ..., 1`.
pub fn gen_horizontal_sum(m: usize) -> Result<OrthoLattice> {
    if m > MAX_HORIZONTAL_SUM {
        return Err(Error::TooLarge {
            what: "horizontal sum",
            size: m,
            limit: MAX_HORIZONTAL_SUM,
        });
    }
    let mut names = vec!["0".to_string()];
    for i in 0..m {
        let l = sum_letter(i);
        names.push(format!("{l}'"));
        names.insert(names.len() - 1, l);
    }
    names.push("1".into());
    let mut covers = Vec::new();
    for mid in &names[1..names.len() - 1] {
        covers.push(("0".to_string(), mid.clone()));
        covers.push((mid.clone(), "1".to_string()));
    }
    if m == 0 {
        covers.push(("0".into(), "1".into()));
    }
    let base = Lattice::from_covers(format!("L{m}"), &names, &covers)?;
    let top = base.top();
    let mut perp = vec![0; base.len()];
    perp[0] = top;
    perp[top] = 0;
    for i in 0..m {
        perp[1 + 2 * i] = 2 + 2 * i;
        perp[2 + 2 * i] = 1 + 2 * i;
    }
    OrthoLattice::new(base, perp)
}

/// N5 with elements `0, x, y, z, 1`: the chain `0 < x < y < 1` and `z`
/// incomparable to `x` and `y`. It admits no orthocomplement.
pub fn gen_pentagon() -> Lattice {
    Lattice::from_covers(
        "pentagon",
        &["0", "x", "y", "z", "1"],
        &[("0", "x"), ("x", "y"), ("y", "1"), ("0", "z"), ("z", "1")],
    )
    .expect("pentagon is a lattice")
}

/// The hexagon `0 < a < b < 1`, `0 < b' < a' < 1` with `a <-> a'`,
/// `b <-> b'`.
pub fn gen_hexagon() -> OrthoLattice {
    let base = Lattice::from_covers(
        "hexagon",
        &["0", "a", "b", "b'", "a'", "1"],
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "b'"),
            ("b'", "a'"),
            ("a'", "1"),
        ],
    )
    .expect("hexagon is a lattice");
    OrthoLattice::new(base, vec![5, 4, 3, 2, 1, 0]).expect("hexagon is orthocomplemented")
}

/// Atoms of the 16-element example, as bits of the underlying 4-set.
const SECTION3_NAMES: [&str; 16] = [
    "0", "xy", "xy'", "x", "x'y", "y", "q", "x|y", "x'y'", "p", "y'", "x|y'", "x'", "x'|y", "x'|y'", "1",
];

/// Hasse diagram of the 14-element ortho example as drawn: the 16-element
/// lattice below without `p = xy v x'y'` and `q = xy' v x'y`. It is not a
/// lattice (`xy` and `x'y'` have two minimal upper bounds).
pub fn section3_diagram() -> (Vec<String>, Vec<(String, String)>) {
    let keep = |m: usize| m != 6 && m != 9;
    let names: Vec<String> = (0..16)
        .filter(|&m| keep(m))
        .map(|m| SECTION3_NAMES[m].to_string())
        .collect();
    let below = |a: usize, b: usize| a != b && a & !b == 0;
    let mut covers = Vec::new();
    for a in (0..16).filter(|&m| keep(m)) {
        for b in (0..16).filter(|&m| keep(m)) {
            if below(a, b) && !(0..16).any(|c| keep(c) && below(a, c) && below(c, b)) {
                covers.push((SECTION3_NAMES[a].to_string(), SECTION3_NAMES[b].to_string()));
            }
        }
    }
    (names, covers)
}

/// Completion of the 14-element diagram: adding `p` and `q` gives a lattice,
/// isomorphic to the Boolean algebra on four atoms.
pub fn gen_section3_ortho() -> OrthoLattice {
    let names = SECTION3_NAMES.iter().map(|s| s.to_string()).collect();
    boolean_with_names("section3".into(), 4, names).expect("16 elements")
}

/// Componentwise product. Element indices are mixed-radix with the first
/// factor most significant; names are `(a,b,...)`.
pub fn gen_product(factors: &[OrthoLattice]) -> Result<OrthoLattice> {
    let mut size: usize = 1;
    for f in factors {
        size = size.saturating_mul(f.len());
        if size > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "product",
                size,
                limit: MAX_ELEMENTS,
            });
        }
    }
    let digits = |mut e: Elem| {
        let mut d = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            d[i] = e % f.len();
            e /= f.len();
        }
        d
    };
    let compose = |d: &[Elem]| d.iter().zip(factors).fold(0, |acc, (&x, f)| acc * f.len() + x);
    let tuples: Vec<Vec<Elem>> = (0..size).map(digits).collect();
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&x, f)| f.name_of(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let pointwise = |a: Elem, b: Elem, op: &dyn Fn(&OrthoLattice, Elem, Elem) -> Elem| {
        let d: Vec<Elem> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| op(f, tuples[a][i], tuples[b][i]))
            .collect();
        compose(&d)
    };
    let fnames: Vec<&str> = factors.iter().map(|f| f.name()).collect();
    let base = Lattice::from_operations(
        format!("product({})", fnames.join(",")),
        names,
        |a, b| {
            factors
                .iter()
                .enumerate()
                .all(|(i, f)| f.leq(tuples[a][i], tuples[b][i]))
        },
        |a, b| pointwise(a, b, &|f, x, y| f.meet(x, y)),
        |a, b| pointwise(a, b, &|f, x, y| f.join(x, y)),
    )?;
    let perp = (0..size)
        .map(|e| {
            let d: Vec<Elem> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.perp(tuples[e][i]))
                .collect();
            compose(&d)
        })
        .collect();
    OrthoLattice::new(base, perp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Poset;
    use crate::modularity::check_modular;
    use crate::ops::LatticeOps;

    #[test]
    fn boolean_shapes() {
        let c = gen_boolean(1).unwrap();
        assert_eq!(c.names(), ["0", "1"]);
        let d = gen_boolean(2).unwrap();
        assert_eq!(d.names(), ["0", "a", "b", "1"]);
        assert_eq!(d.perp(1), 2);
        let p3 = gen_boolean(3).unwrap();
        assert_eq!(p3.len(), 8);
        assert_eq!(p3.atoms().count(), 3);
        assert!(matches!(gen_boolean(13), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn horizontal_sum_shapes() {
        let l2 = gen_horizontal_sum(2).unwrap();
        assert_eq!(l2.names(), ["0", "x", "x'", "y", "y'", "1"]);
        assert_eq!(l2.perp(1), 2);
        let x = l2.elem("x").unwrap();
        let y = l2.elem("y'").unwrap();
        assert_eq!(l2.meet(x, y), l2.bottom());
        assert_eq!(l2.join(x, y), l2.top());
        let l1 = gen_horizontal_sum(1).unwrap();
        assert_eq!(l1.len(), 4);
        assert!(l1.is_abelian());
        let big = gen_horizontal_sum(64).unwrap();
        assert_eq!(big.len(), 130);
        assert_eq!(big.name_of(127), "l64");
        assert!(matches!(gen_horizontal_sum(65), Err(Error::TooLarge { .. })));
        for m in 2..6 {
            assert!(gen_horizontal_sum(m).unwrap().is_factorial());
        }
    }

    #[test]
    fn pentagon_and_hexagon() {
        let p = gen_pentagon();
        assert_eq!(p.len(), 5);
        assert!(p.validate().all_pass());
        let h = gen_hexagon();
        assert_eq!(h.len(), 6);
    }

    #[test]
    fn section3_diagram_is_not_a_lattice() {
        let (names, covers) = section3_diagram();
        assert_eq!(names.len(), 14);
        let poset = Poset::from_covers("diagram", &names, &covers).unwrap();
        assert!(poset.validate().failed("joins"));
        assert!(matches!(poset.into_lattice(), Err(Error::NoUniqueBound(..))));
    }

    #[test]
    fn section3_completion_is_boolean() {
        let s = gen_section3_ortho();
        assert_eq!(s.len(), 16);
        assert_eq!(s.center().len(), 16);
        assert!(check_modular(&s).holds);
        let (x, y) = (s.elem("x").unwrap(), s.elem("y").unwrap());
        assert_eq!(s.name_of(s.perp(x)), "x'");
        assert_eq!(s.name_of(s.join(x, y)), "x|y");
        assert_eq!(s.name_of(s.meet(x, y)), "xy");
        let (xy, xy_) = (s.elem("xy").unwrap(), s.elem("x'y'").unwrap());
        assert_eq!(s.name_of(s.join(xy, xy_)), "p");
        assert_eq!(s.name_of(s.perp(s.elem("p").unwrap())), "q");
    }

    #[test]
    fn products() {
        let chain = gen_boolean(1).unwrap();
        let sq = gen_product(&[chain.clone(), chain.clone()]).unwrap();
        assert!(is_isomorphic(&sq, &gen_boolean(2).unwrap()).unwrap().is_some());
        let cube = gen_product(&[chain.clone(), chain.clone(), chain.clone()]).unwrap();
        assert!(is_isomorphic(&cube, &gen_boolean(3).unwrap()).unwrap().is_some());

        let l2 = gen_horizontal_sum(2).unwrap();
        let p = gen_product(&[l2.clone(), chain.clone()]).unwrap();
        assert_eq!(p.len(), 12);
        assert!(check_modular(&p).holds);
        let center = p.center();
        for name in ["(1,0)", "(0,1)"] {
            assert!(center.contains(&p.elem(name).unwrap()));
        }
        assert_eq!(center.len(), 4);

        let h = gen_hexagon();
        assert!(!check_modular(&gen_product(&[h, chain]).unwrap()).holds);
        assert!(matches!(
            gen_product(&[gen_boolean(12).unwrap(), gen_boolean(1).unwrap()]),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(gen_product(&[]).unwrap().len(), 1);
    }

    #[test]
    fn product_order_is_componentwise() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let p = gen_product(&[l2.clone(), l2]).unwrap();
        let a = p.elem("(x,0)").unwrap();
        let b = p.elem("(0,y)").unwrap();
        assert!(!p.leq(a, b) && !p.leq(b, a));
        assert_eq!(p.name_of(p.join(a, b)), "(x,y)");
        assert!(LatticeOps::is_atom(&*p, &a));
    }
}

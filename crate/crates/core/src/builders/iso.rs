//! Isomorphism of small ortholattices by backtracking.

use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::ortho::OrthoLattice;

pub const ISO_LIMIT: usize = 64;

/// Cheap invariants that any isomorphism preserves.
fn signature(l: &OrthoLattice, e: Elem) -> (usize, usize, usize, bool) {
    (l.height_of(e), l.down_count(e), l.up_count(e), l.perp(e) == e)
}

/// An order- and perp-preserving bijection `A -> B`, if one exists.
///
/// Elements of `A` are assigned in index order; candidates in `B` are tried
/// in index order, so the result is deterministic.
pub fn is_isomorphic(a: &OrthoLattice, b: &OrthoLattice) -> Result<Option<Vec<Elem>>> {
    for l in [a, b] {
        if l.len() > ISO_LIMIT {
            return Err(Error::TooLarge {
                what: "isomorphism test",
                size: l.len(),
                limit: ISO_LIMIT,
            });
        }
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let sa: Vec<_> = a.elements().map(|e| signature(a, e)).collect();
    let sb: Vec<_> = b.elements().map(|e| signature(b, e)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return Ok(None);
    }
    let n = a.len();
    let mut map: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];

    fn consistent(a: &OrthoLattice, b: &OrthoLattice, map: &[Option<Elem>], x: Elem, y: Elem) -> bool {
        map.iter().enumerate().all(|(u, v)| match v {
            Some(v) => a.leq(x, u) == b.leq(y, *v) && a.leq(u, x) == b.leq(*v, y),
            None => true,
        })
    }

    // Assigning x forces perp(x); both are placed or rolled back together.
    fn search(
        a: &OrthoLattice,
        b: &OrthoLattice,
        sa: &[(usize, usize, usize, bool)],
        sb: &[(usize, usize, usize, bool)],
        map: &mut Vec<Option<Elem>>,
        used: &mut Vec<bool>,
        next: Elem,
    ) -> bool {
        let Some(x) = (next..a.len()).find(|&x| map[x].is_none()) else {
            return true;
        };
        let px = a.perp(x);
        for y in b.elements() {
            if used[y] || sa[x] != sb[y] || !consistent(a, b, map, x, y) {
                continue;
            }
            map[x] = Some(y);
            used[y] = true;
            let py = b.perp(y);
            let paired = px == x
                || (map[px].is_none() && !used[py] && sa[px] == sb[py] && consistent(a, b, map, px, py));
            if paired {
                if px != x {
                    map[px] = Some(py);
                    used[py] = true;
                }
                if search(a, b, sa, sb, map, used, x + 1) {
                    return true;
                }
                if px != x {
                    map[px] = None;
                    used[py] = false;
                }
            }
            map[x] = None;
            used[y] = false;
        }
        false
    }

    if search(a, b, &sa, &sb, &mut map, &mut used, 0) {
        Ok(Some(map.into_iter().map(|v| v.expect("complete map")).collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{gen_boolean, gen_hexagon, gen_horizontal_sum, gen_product};

    fn check_bijection(a: &OrthoLattice, b: &OrthoLattice, f: &[Elem]) {
        let mut seen = vec![false; b.len()];
        for &y in f {
            assert!(!seen[y]);
            seen[y] = true;
        }
        for x in a.elements() {
            assert_eq!(f[a.perp(x)], b.perp(f[x]));
            for z in a.elements() {
                assert_eq!(a.leq(x, z), b.leq(f[x], f[z]));
            }
        }
    }

    #[test]
    fn identity_and_mismatch() {
        let l2 = gen_horizontal_sum(2).unwrap();
        let f = is_isomorphic(&l2, &l2).unwrap().unwrap();
        assert_eq!(f, (0..6).collect::<Vec<_>>());
        assert!(is_isomorphic(&gen_boolean(2).unwrap(), &l2).unwrap().is_none());
        // Same size, same order type, different perp.
        let l3 = gen_horizontal_sum(3).unwrap();
        let p3 = gen_boolean(3).unwrap();
        assert!(is_isomorphic(&l3, &p3).unwrap().is_none());
    }

    #[test]
    fn perp_must_be_respected() {
        // L_1 and the diamond are the same ortholattice.
        let l1 = gen_horizontal_sum(1).unwrap();
        let d = gen_boolean(2).unwrap();
        let f = is_isomorphic(&l1, &d).unwrap().unwrap();
        check_bijection(&l1, &d, &f);
    }

    #[test]
    fn products_are_found() {
        let chain = gen_boolean(1).unwrap();
        let l2 = gen_horizontal_sum(2).unwrap();
        let a = gen_product(&[l2.clone(), chain.clone()]).unwrap();
        let b = gen_product(&[chain, l2]).unwrap();
        let f = is_isomorphic(&a, &b).unwrap().unwrap();
        check_bijection(&a, &b, &f);
    }

    #[test]
    fn hexagon_is_not_boolean_like() {
        let h = gen_hexagon();
        assert!(is_isomorphic(&h, &gen_horizontal_sum(2).unwrap())
            .unwrap()
            .is_none());
        assert!(is_isomorphic(&h, &h).unwrap().is_some());
    }

    #[test]
    fn size_limit() {
        let big = gen_boolean(7).unwrap();
        assert!(matches!(is_isomorphic(&big, &big), Err(Error::TooLarge { .. })));
    }
}

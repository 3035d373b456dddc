//! Exact row reduction over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type Row = Vec<Q>;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_row(r: &[Q]) -> bool {
    r.iter().all(Zero::is_zero)
}

/// Reduced row-echelon form with zero rows dropped, and the pivot column
/// of each remaining row.
pub fn rref(rows: &[Row], width: usize) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Row> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (d, s) in row.iter_mut().zip(&pivot_row) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Subtracts multiples of RREF rows from `v` to clear their pivot columns.
/// The result is zero exactly when `v` lies in the row space.
pub fn reduce(v: &[Q], basis: &[Row], pivots: &[usize]) -> Row {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        if !out[p].is_zero() {
            let f = out[p].clone();
            for (o, b) in out.iter_mut().zip(row) {
                *o -= &f * b;
            }
        }
    }
    out
}

/// A basis of `{x : r . x = 0 for every row r}`.
pub fn null_space(rows: &[Row], width: usize) -> Vec<Row> {
    let (m, pivots) = rref(rows, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); width];
            v[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Scales a nonzero row to coprime integers with a positive leading entry,
/// for display.
pub fn primitive(row: &[Q]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| if sign { -(x / &g) } else { x / &g })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(data: &[&[i64]]) -> Vec<Row> {
        data.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rref_examples() {
        let (m, p) = rref(&rows(&[&[2, 0, 0]]), 3);
        assert_eq!(m, rows(&[&[1, 0, 0]]));
        assert_eq!(p, [0]);
        let (m, _) = rref(&rows(&[&[1, 1, 0], &[2, 2, 0]]), 3);
        assert_eq!(m, rows(&[&[1, 1, 0]]));
        let (m, p) = rref(&rows(&[&[0, 0, 0]]), 3);
        assert!(m.is_empty() && p.is_empty());
        let (m, p) = rref(&rows(&[&[0, 2, 4], &[1, 1, 1], &[1, 2, 3]]), 3);
        assert_eq!(m, rows(&[&[1, 0, -1], &[0, 1, 2]]));
        assert_eq!(p, [0, 1]);
    }

    #[test]
    fn null_space_is_orthogonal() {
        let r = rows(&[&[1, 1, 1]]);
        let ns = null_space(&r, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(v, &r[0]).is_zero());
        }
        assert_eq!(null_space(&[], 2).len(), 2);
    }

    #[test]
    fn reduce_detects_membership() {
        let (b, p) = rref(&rows(&[&[1, 1, 0], &[0, 1, 1]]), 3);
        assert!(is_zero_row(&reduce(&rows(&[&[1, 2, 1]])[0], &b, &p)));
        assert!(!is_zero_row(&reduce(&rows(&[&[0, 0, 1]])[0], &b, &p)));
    }

    #[test]
    fn primitive_rows() {
        let r = vec![q(0), Q::new(BigInt::from(-1), BigInt::from(2)), q(3)];
        assert_eq!(primitive(&r), [0, 1, -6].map(BigInt::from));
    }
}

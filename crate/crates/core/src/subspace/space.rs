use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use super::matrix::{dot, is_zero_row, null_space, primitive, q, reduce, rref, Row, Q};
use crate::error::{Error, Result};

pub const MIN_AMBIENT: usize = 2;
pub const MAX_AMBIENT: usize = 6;

/// A subspace of `Q^n` stored by its reduced row-echelon basis, so equal
/// subspaces have identical fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    basis: Vec<Row>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| q((i == j) as i64)).collect())
            .collect();
        Self {
            n,
            basis,
            pivots: (0..n).collect(),
        }
    }

    /// Span of integer rows.
    pub fn span(n: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Row> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        s_canonicalize(n, &rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.n
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_row(&reduce(v, &self.basis, &self.pivots))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                let ints: Vec<String> = primitive(r).iter().map(|x| x.to_string()).collect();
                format!("({})", ints.join(","))
            })
            .collect();
        write!(f, "span[{}]", rows.join(","))
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if (MIN_AMBIENT..=MAX_AMBIENT).contains(&n) {
        Ok(())
    } else {
        Err(Error::AmbientOutOfRange(n))
    }
}

pub fn s_canonicalize(n: usize, rows: &[Row]) -> Result<Subspace> {
    check_ambient(n)?;
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::WidthMismatch {
            expected: n,
            found: r.len(),
        });
    }
    let (basis, pivots) = rref(rows, n);
    Ok(Subspace { n, basis, pivots })
}

fn same_ambient(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.n == v.n {
        Ok(())
    } else {
        Err(Error::AmbientMismatch {
            left: u.n,
            right: v.n,
        })
    }
}

fn canon(n: usize, rows: &[Row]) -> Subspace {
    let (basis, pivots) = rref(rows, n);
    Subspace { n, basis, pivots }
}

pub fn s_leq(u: &Subspace, v: &Subspace) -> Result<bool> {
    same_ambient(u, v)?;
    Ok(u.dim() <= v.dim() && u.basis.iter().all(|r| v.contains(r)))
}

/// Intersection by the kernel method: coefficient vectors `(a, b)` with
/// `a·U + b·V = 0` give the common vectors `a·U`.
pub fn s_meet(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    same_ambient(u, v)?;
    let n = u.n;
    let k = u.dim();
    let stacked: Vec<&Row> = u.basis.iter().chain(&v.basis).collect();
    // Columns of the stacked matrix, as rows of its transpose.
    let transpose: Vec<Row> = (0..n)
        .map(|c| stacked.iter().map(|r| r[c].clone()).collect())
        .collect();
    let kernel = null_space(&transpose, stacked.len());
    let common: Vec<Row> = kernel
        .iter()
        .map(|coeffs| {
            let mut v = vec![Q::zero(); n];
            for (c, row) in coeffs[..k].iter().zip(&u.basis) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x += c * y;
                }
            }
            v
        })
        .collect();
    Ok(canon(n, &common))
}

pub fn s_join(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    same_ambient(u, v)?;
    let rows: Vec<Row> = u.basis.iter().chain(&v.basis).cloned().collect();
    Ok(canon(u.n, &rows))
}

/// Orthogonal complement under the standard dot product.
pub fn s_perp(u: &Subspace) -> Subspace {
    canon(u.n, &null_space(&u.basis, u.n))
}

/// Gram–Schmidt without normalization: `dim U` mutually orthogonal lines
/// joining to `U`, taken in basis order.
pub fn s_ortho_decompose(u: &Subspace) -> Vec<Subspace> {
    let mut done: Vec<Row> = Vec::new();
    for v in &u.basis {
        let mut w = v.clone();
        for b in &done {
            let f = dot(v, b) / dot(b, b);
            for (x, y) in w.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
        done.push(w);
    }
    done.into_iter().map(|w| canon(u.n, &[w])).collect()
}

/// Nonzero integer vectors ordered by max-norm, then lexicographically.
pub fn small_vectors(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (1i64..).flat_map(move |k| {
        let side = (2 * k + 1) as u64;
        (0..side.pow(n as u32)).filter_map(move |mut idx| {
            let mut v = vec![0i64; n];
            for x in v.iter_mut().rev() {
                *x = (idx % side) as i64 - k;
                idx /= side;
            }
            (v.iter().any(|x| x.abs() == k)).then_some(v)
        })
    })
}

/// A common complement of two subspaces of equal dimension, built greedily
/// from [`small_vectors`]: a vector is added when it lies outside both
/// `U + W` and `V + W`.
pub fn s_common_complement(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    same_ambient(u, v)?;
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let n = u.n;
    let target = n - u.dim();
    let mut w = Subspace::zero(n);
    let mut uw = u.clone();
    let mut vw = v.clone();
    for cand in small_vectors(n) {
        if w.dim() == target {
            break;
        }
        let c: Row = cand.iter().map(|&x| q(x)).collect();
        if !uw.contains(&c) && !vw.contains(&c) {
            let line = canon(n, &[c]);
            w = s_join(&w, &line)?;
            uw = s_join(&uw, &line)?;
            vw = s_join(&vw, &line)?;
        }
    }
    let full = Subspace::full(n);
    let zero = Subspace::zero(n);
    for x in [u, v] {
        assert!(
            s_join(&w, x)? == full && s_meet(&w, x)? == zero,
            "common complement invariant"
        );
    }
    Ok(w)
}

pub fn s_dimension(u: &Subspace) -> Rational64 {
    Rational64::new(u.dim() as i64, u.n as i64)
}

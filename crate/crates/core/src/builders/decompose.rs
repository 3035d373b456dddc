//! Splitting a finite modular ortholattice along the atoms of its center.

use serde::Serialize;

use super::{gen_boolean, gen_horizontal_sum, gen_product, is_isomorphic, ISO_LIMIT};
use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::modularity::check_modular;
use crate::ortho::OrthoLattice;

/// `{0,1}^boolean_exponent` times `L_m` for each `m` in `sum_sizes`
/// (sorted ascending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralSignature {
    pub boolean_exponent: usize,
    pub sum_sizes: Vec<usize>,
}

impl CentralSignature {
    /// Builds the product this signature describes.
    pub fn build(&self) -> Result<OrthoLattice> {
        let mut factors = vec![gen_boolean(1)?; self.boolean_exponent];
        for &m in &self.sum_sizes {
            factors.push(gen_horizontal_sum(m)?);
        }
        gen_product(&factors)
    }

    /// The same product with every `L_1` counted as two Boolean factors.
    pub fn normalized(&self) -> Self {
        let ones = self.sum_sizes.iter().filter(|&&m| m == 1).count();
        Self {
            boolean_exponent: self.boolean_exponent + 2 * ones,
            sum_sizes: self.sum_sizes.iter().copied().filter(|&m| m != 1).collect(),
        }
    }
}

enum Factor {
    Chain,
    Sum(usize),
}

fn classify(f: &OrthoLattice) -> Option<Factor> {
    match f.len() {
        2 => Some(Factor::Chain),
        n if n >= 4 && n % 2 == 0 => {
            let (lo, hi) = (f.bottom(), f.top());
            let flat = f
                .elements()
                .filter(|&e| e != lo && e != hi)
                .all(|e| f.height_of(e) == 1 && f.up_count(e) == 2 && f.perp(e) != e);
            flat.then_some(Factor::Sum((n - 2) / 2))
        }
        _ => None,
    }
}

/// Factors the lattice as `L ∧ c` over the atoms `c` of the center and
/// recognizes each factor as a 2-chain or some `L_m`.
///
/// The canonical map `e -> (e ∧ c)_c` is checked to be an isomorphism onto
/// the product of the factors; for lattices of at most 64 elements the
/// signature is also rebuilt and compared with [`is_isomorphic`].
pub fn decompose_central(ol: &OrthoLattice) -> Result<CentralSignature> {
    if !check_modular(ol).holds {
        return Err(Error::NotModular);
    }
    let center = ol.center();
    let bottom = ol.bottom();
    let central_atoms: Vec<Elem> = center
        .iter()
        .copied()
        .filter(|&c| c != bottom && center.iter().all(|&d| d == bottom || d == c || !ol.leq(d, c)))
        .collect();

    let mut signature = CentralSignature {
        boolean_exponent: 0,
        sum_sizes: Vec::new(),
    };
    let mut factors = Vec::new();
    for &c in &central_atoms {
        let reduced = ol
            .reduced(c)
            .map_err(|e| Error::NotDecomposable(format!("{}: {e}", ol.name_of(c))))?;
        match classify(&reduced.ortho) {
            Some(Factor::Chain) => signature.boolean_exponent += 1,
            Some(Factor::Sum(m)) => signature.sum_sizes.push(m),
            None => {
                return Err(Error::NotDecomposable(format!(
                    "{} ({} elements)",
                    ol.name_of(c),
                    reduced.ortho.len()
                )))
            }
        }
        factors.push(reduced);
    }
    signature.sum_sizes.sort_unstable();

    // e -> (e ^ c) must be a bijection onto the product preserving order
    // and perp, where perp inside L ^ c is perp(x) ^ c.
    let size: usize = factors.iter().map(|f| f.ortho.len()).product();
    let project = |e: Elem| -> Vec<Elem> { central_atoms.iter().map(|&c| ol.meet(e, c)).collect() };
    let images: Vec<Vec<Elem>> = ol.elements().map(project).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let canonical = size == ol.len()
        && sorted.len() == ol.len()
        && ol.elements().all(|e| {
            let pe = project(ol.perp(e));
            let expected: Vec<Elem> = images[e]
                .iter()
                .zip(&central_atoms)
                .map(|(&x, &c)| ol.meet(ol.perp(x), c))
                .collect();
            pe == expected
        })
        && ol.elements().all(|a| {
            ol.elements().all(|b| {
                let componentwise = images[a].iter().zip(&images[b]).all(|(&x, &y)| ol.leq(x, y));
                ol.leq(a, b) == componentwise
            })
        });
    if !canonical {
        return Err(Error::NotDecomposable(
            "central factors do not multiply back".into(),
        ));
    }
    if ol.len() <= ISO_LIMIT && is_isomorphic(ol, &signature.build()?)?.is_none() {
        return Err(Error::NotDecomposable("rebuilt product is not isomorphic".into()));
    }
    Ok(signature)
}

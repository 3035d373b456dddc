//! Seeded sampling of subspaces.
//!
//! Each law in a property suite draws from its own ChaCha8 stream: the
//! generator is seeded with the run seed and its stream number is the FNV-1a
//! hash of the law name. Adding or reordering laws leaves the draws of every
//! other law unchanged.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{q, Row};
use super::space::{s_canonicalize, s_meet, s_perp, Subspace};

pub const ENTRY_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

pub fn law_stream(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn law_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(law_stream(name));
    rng
}

fn random_row(rng: &mut ChaCha8Rng, n: usize) -> Row {
    (0..n).map(|_| q(rng.gen_range(ENTRY_RANGE))).collect()
}

/// Draws a dimension from `weights` (index = dimension, length `n + 1`),
/// then integer rows in `[-3, 3]` until they have that rank.
pub fn sample_subspace(rng: &mut ChaCha8Rng, n: usize, weights: &[u32]) -> Subspace {
    let dist = WeightedIndex::new(weights).expect("weights must be nonempty and not all zero");
    let d = dist.sample(rng).min(n);
    sample_of_dim(rng, n, d)
}

pub fn sample_of_dim(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Subspace {
    loop {
        let rows: Vec<Row> = (0..d).map(|_| random_row(rng, n)).collect();
        let s = s_canonicalize(n, &rows).expect("ambient checked by caller");
        if s.dim() == d {
            return s;
        }
    }
}

/// Draws what the property laws need from one stream.
pub struct Sampler {
    pub n: usize,
    pub rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(n: usize, rng: ChaCha8Rng) -> Self {
        Self { n, rng }
    }

    /// Dimension uniform on `0..=n`.
    pub fn subspace(&mut self) -> Subspace {
        let weights = vec![1; self.n + 1];
        sample_subspace(&mut self.rng, self.n, &weights)
    }

    pub fn of_dim(&mut self, d: usize) -> Subspace {
        sample_of_dim(&mut self.rng, self.n, d)
    }

    pub fn line(&mut self) -> Subspace {
        self.of_dim(1)
    }

    /// A subspace of `u` with dimension uniform on `0..=dim u`: random
    /// integer combinations of its basis, redrawn until independent.
    pub fn inside(&mut self, u: &Subspace) -> Subspace {
        let d = self.rng.gen_range(0..=u.dim());
        self.inside_of_dim(u, d)
    }

    pub fn inside_of_dim(&mut self, u: &Subspace, d: usize) -> Subspace {
        let n = self.n;
        loop {
            let rows: Vec<Row> = (0..d)
                .map(|_| {
                    let mut v = vec![q(0); n];
                    for b in u.basis() {
                        let c = q(self.rng.gen_range(ENTRY_RANGE));
                        for (x, y) in v.iter_mut().zip(b) {
                            *x += &c * y;
                        }
                    }
                    v
                })
                .collect();
            let s = s_canonicalize(n, &rows).expect("same ambient");
            if s.dim() == d {
                return s;
            }
        }
    }

    /// A line of `u`, or zero when `u` is zero.
    pub fn line_inside(&mut self, u: &Subspace) -> Subspace {
        let d = u.dim().min(1);
        self.inside_of_dim(u, d)
    }

    /// A complement of `u` (meets it in zero, dimension `n - dim u`).
    pub fn complement_of(&mut self, u: &Subspace) -> Subspace {
        let zero = Subspace::zero(self.n);
        loop {
            let w = self.of_dim(self.n - u.dim());
            if s_meet(&w, u).expect("same ambient") == zero {
                return w;
            }
        }
    }

    /// `a v b` with `a <= u` and `b <= perp(u)`: an element commuting with `u`.
    pub fn commuting_with(&mut self, u: &Subspace) -> Subspace {
        let a = self.inside(u);
        let b = self.inside(&s_perp(u));
        super::space::s_join(&a, &b).expect("same ambient")
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}

//! Finite orthocomplemented lattices and the machinery around them:
//! commutation and the center, regular equivalence relations, dimension
//! functions of type `I_n`, and the lattice of subspaces of `Q^n` as a
//! sampled model.
//!
//! Explicit lattices ([`Lattice`], [`OrthoLattice`]) store full meet and join
//! tables. [`subspace::SubspaceLattice`] computes on demand. Both implement
//! [`LatticeOps`] and [`OrthoOps`].

pub mod builders;
pub mod commands;
pub mod diagnostics;
pub mod dimension;
pub mod equivalence;
pub mod error;
pub mod format;
pub mod lattice;
pub mod modularity;
pub mod ops;
pub mod ortho;
pub mod report;
pub mod subspace;

pub use diagnostics::{Check, Diagnostics, Status};
pub use equivalence::EquivRelation;
pub use error::{Error, Result};
pub use lattice::{Elem, ElementSet, Lattice, Poset};
pub use ops::{LatticeOps, OrthoOps, TieBreak};
pub use ortho::OrthoLattice;

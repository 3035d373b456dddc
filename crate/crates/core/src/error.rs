use std::fmt;

use thiserror::Error;

/// Which bound a pair of elements failed to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => f.write_str("meet"),
            BoundKind::Join => f.write_str("join"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("`{0}` and `{1}` have no unique {2}")]
    NoUniqueBound(String, String, BoundKind),
    #[error("order has no unique bottom and top")]
    NoBottomTop,

    #[error("orthocomplement is not an involution at `{0}`")]
    NotInvolution(String),
    #[error("complement law fails at `{0}`")]
    ComplementLawFails(String),
    #[error("orthocomplement is not antitone on `{0}` <= `{1}`")]
    NotAntitone(String, String),
    #[error("orthocomplement is not a total involution at `{0}`")]
    IncompleteInvolution(String),
    #[error("`{1}` is not below `{0}`")]
    NotDominated(String, String),

    #[error("{what} would have {size} elements, limit is {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("lattice is not modular")]
    NotModular,
    #[error("lattice is not factorial")]
    NotFactorial,
    #[error("restriction of the center fails at `{0}`")]
    NotRLattice(String),
    #[error("factorial lattice has no nonzero abelian element")]
    NotTypeI,
    #[error("equivalence relation is not regular: {0}")]
    NotRegular(String),
    #[error("divisor class is the class of the bottom element")]
    ZeroClass,
    #[error("class division is not unique: {0}")]
    DivisionNotUnique(String),
    #[error("no minimal element below `{0}`")]
    NoMinimalBelow(String),
    #[error("orthogonal minimal family does not join to `{0}`")]
    DecompositionIncomplete(String),
    #[error("dimension axiom {axiom} fails at {witness:?}")]
    AxiomFails { axiom: String, witness: Vec<String> },
    #[error("`{0}` is not minimal")]
    NotMinimal(String),
    #[error("not decomposable: {0}")]
    NotDecomposable(String),

    #[error("row has width {found}, ambient dimension is {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("subspaces of dimension {left} and {right} are not perspective")]
    DimensionMismatch { left: usize, right: usize },
    #[error("ambient dimension {0} outside the supported range 2..=6")]
    AmbientOutOfRange(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("pair `{0}` `{1}` is stated twice")]
    DuplicatePair(String, String),
    #[error("the file has no `ortho` lines; this command needs an orthocomplement")]
    MissingOrtho,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

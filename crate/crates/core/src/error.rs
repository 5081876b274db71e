use alloc::string::String;

use crate::algebra::Side;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension {dim} is outside the supported range 1..={max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid bit string {0:?}")]
    InvalidBitString(String),
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot combine a {left} polynomial with a {right} polynomial")]
    SideMismatch { left: Side, right: Side },
    #[error("the zero homomorphism cannot be a factor")]
    ZeroFactor,
    #[error("monomial factors do not form a basis")]
    NotABasis,
    #[error("polynomial is not faithful")]
    NotFaithful,
    #[error("polynomial is not a cycle: d(h) != 0")]
    NotACycle,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("d(g*) != 0: {unpaired} degree n-1 labels cannot be paired")]
    BoundaryNonzero { unpaired: usize },
    #[error("vertex monomials differ, connected sum is undefined")]
    MonomialMismatch,
    #[error("vertex {vertex} is out of range")]
    NoSuchVertex { vertex: usize },
    #[error("coloring is not independent at vertex {vertex:?}")]
    InvalidColoring { vertex: alloc::vec::Vec<usize> },
    #[error("expected a homogeneous polynomial of degree {expected}")]
    WrongDegree { expected: usize },
    #[error("degree {degree} is outside the allowed range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("monomial is not in the ambient monomial space")]
    NotInMonomialSpace,
    #[error("vector is not in the span")]
    NotInSpan,
    #[error("table row {row}: index {index} is out of range")]
    TableIndex { row: usize, index: usize },
    #[error("partition must be weakly decreasing with positive parts")]
    InvalidPartition,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
}

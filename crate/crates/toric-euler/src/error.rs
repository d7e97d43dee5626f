//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice dimension must be at least 1")]
    ZeroDimension,

    #[error("fan has {got} rays; at most {max} are supported")]
    TooManyRays { got: usize, max: usize },

    #[error("ray {ray} has {got} coordinates, expected {expected}")]
    RayLength {
        ray: usize,
        expected: usize,
        got: usize,
    },

    #[error("maximal cone {cone} lists {got} rays, expected exactly {expected}")]
    ConeSize {
        cone: usize,
        expected: usize,
        got: usize,
    },

    #[error("maximal cone {cone} references ray index {index}, valid range is 1..={count}")]
    ConeIndexRange {
        cone: usize,
        index: usize,
        count: usize,
    },

    #[error("maximal cone {cone} repeats a ray index")]
    ConeRepeatedIndex { cone: usize },

    #[error("divisor has {got} coefficients, expected {expected} (one per ray)")]
    DivisorLength { expected: usize, got: usize },

    #[error("vertex index {index} out of range, ground set has {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("weight entry at position {position} is {value}, expected 0 or 1")]
    WeightEntry { position: usize, value: i64 },

    #[error("vector has {got} entries, expected {expected}")]
    VectorLength { expected: usize, got: usize },

    #[error("Alexander dual is undefined on zero variables")]
    EmptyAmbient,

    #[error("exponent must be a positive integer, got {0}")]
    BadExponent(i64),

    #[error("ray matrix has no invertible maximal square subsystem; the fan is degenerate")]
    DegenerateRays,

    #[error("divisor polyhedron is unbounded; the fan does not cover the ambient space")]
    UnboundedPolyhedron,
}

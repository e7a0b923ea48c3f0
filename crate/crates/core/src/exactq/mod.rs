//! Exact rational scalars, dense matrices, graded vector spaces and
//! multilinear maps.
//!
//! Sign convention: moving an element of degree `p` past one of degree `q`
//! costs `(−1)^{pq}`.

mod graded;
mod matrix;
mod rational;

pub use graded::{flatten, multi_indices, unflatten, BasisElement, GradedVectorSpace, MultilinearMap};
pub use matrix::{dot, homology_dimension, is_zero_vec, Matrix};
pub use rational::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("rows have different lengths")]
    Ragged,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    Shape {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("d_out · d_in is not zero")]
    CompositionNotZero,
    #[error("duplicate basis label {0:?} within one degree")]
    DuplicateBasis(String),
    #[error("index {index} out of range in slot {slot} (0 = output)")]
    InvalidIndex { slot: usize, index: usize },
    #[error("expected {expected} inputs, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("entry has degree {found}, map declared degree {expected}")]
    DegreeMismatch { expected: i64, found: i64 },
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
}

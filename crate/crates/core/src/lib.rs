//! Exact combinatorial and algebraic structures from string topology.
//!
//! Everything here works over ℚ with exact arithmetic:
//!
//! - [`exactq`]: rationals, dense matrices, graded vector spaces and
//!   multilinear maps, with rank/kernel/homology primitives.
//! - [`fatgraph`]: ribbon graphs, boundary cycles, genus, Sullivan chord
//!   diagrams and their reduction.
//! - [`operad`]: free operads on planar decorated trees, composition,
//!   symmetric-group action, evaluation into endomorphism operads and
//!   relation checking for Comm, Ass, Lie and Poisson.
//! - [`frob2tqft`]: Frobenius algebras, evaluation of 2D cobordism words,
//!   closed-surface invariants and the Dijkgraaf-Witten model.
//! - [`hochschild`]: Hochschild chain/cochain complexes, truncated homology,
//!   cup product and Gerstenhaber bracket.
//! - [`gbv`]: Gerstenhaber, BV and BV_{n+1} axiom checkers.
//! - [`cacti`]: the combinatorial cacti operad.
//! - [`cli`]: the command-line front end used by the `loopforge` binary.
//!
//! Runnable walkthroughs live in this crate's `examples/` directory.

pub mod cacti;
pub mod cli;
pub mod exactq;
pub mod fatgraph;
pub mod frob2tqft;
pub mod gbv;
pub mod hochschild;
pub mod io;
pub mod operad;

pub use exactq::{GradedVectorSpace, Matrix, MultilinearMap, Rational};

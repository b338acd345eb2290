//! Exact computation of localized v-numbers of binomial edge ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`graphcore`]: simple graphs, minimal k-cuts, connected domination.
//! * [`matroidtrans`]: the rank-two matroids attached to cuts, their
//!   dependency-difference families and minimum-weight transversals.
//! * [`polykernel`]: sparse polynomials over the rationals, permuted lex
//!   orders, a Buchberger engine and ideal operations built on elimination.
//! * [`beialgebra`]: binomial edge ideals, their minimal primes, admissible
//!   path bases and the v-number pipeline with an independent oracle.
//! * [`cyclelab`]: the cycle-graph specialisation (interval decompositions,
//!   consistent permutations, cut polynomials, bound windows).

pub mod beialgebra;
pub mod cyclelab;
mod error;
pub mod graphcore;
pub mod matroidtrans;
pub mod polykernel;

pub use error::{Error, ResourceKind, Result};
pub use graphcore::{CutRecord, Graph, VertexSet};
pub use polykernel::{GroebnerBasis, Limits, Monomial, MonomialOrder, Polynomial};

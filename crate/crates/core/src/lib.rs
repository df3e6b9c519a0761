//! Squarefree-divisor complexes and iterated barycentric subdivision.
//!
//! For `n >= 1` the complex `Δ_n` has one simplex `P(k)` (the set of prime
//! factors of `k`) for every squarefree `k <= n`. Its reduced Euler
//! characteristic is `-M(n)`, minus the Mertens function. This crate builds
//! those complexes, the exact transfer machinery describing what barycentric
//! subdivision does to f-vectors, and tracks the zeros of h-polynomials under
//! repeated subdivision.
//!
//! * [`exact`]: subdivision counts `f_{i,d}`, eigenvector rationals `F_{i,d}`,
//!   the limit polynomials `H_d(z)`, and the transfer, shift and descent
//!   matrices. Everything is exact big-integer or rational arithmetic.
//! * [`complex`]: Möbius sieve, Mertens function, weight counting, `Δ_n`
//!   summaries and explicit complexes with a barycentric subdivision operator.
//! * [`zeros`]: subdivided f-vectors, growth expansions, an arbitrary
//!   precision Aberth–Ehrlich root finder, zero trajectories and `α_n`.
//! * [`cli`]: table generation and verification commands with CSV/JSON output.

pub mod cli;
pub mod complex;
pub mod error;
pub mod exact;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};

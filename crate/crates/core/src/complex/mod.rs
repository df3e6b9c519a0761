//! The squarefree-divisor complexes `Δ_n`.
//!
//! Large `n` are handled through f-vectors alone: `f_i(Δ_n)` is the number
//! of squarefree `k <= n` with exactly `i + 1` prime factors. Explicit
//! complexes exist at small scale to check the transfer matrices against an
//! actual barycentric subdivision.

mod fvector;
mod sieve;
mod simplicial;
mod summary;

pub use fvector::{h_poly, FVector};
pub use sieve::{build_sieve, SieveTable, DEFAULT_MAX_SIEVE_LIMIT, DEFAULT_SIEVE_LIMIT};
pub use simplicial::{
    barycentric_subdivide, euler_char, explicit_complex, f_vector, SimplicialComplex, VertexLabel,
    DEFAULT_EXPLICIT_BOUND, DEFAULT_MAX_SIMPLICES,
};
pub use summary::{dim_of, primorials, ComplexSummary, Summaries};

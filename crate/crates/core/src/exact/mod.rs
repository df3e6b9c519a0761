//! Exact subdivision combinatorics.
//!
//! Matrices and vectors here are indexed from `-1` to `d`, the natural range
//! for face counts `f_{-1}, f_0, ..., f_d` of a `d`-dimensional complex.
//! Storage is 0-based with an offset of one.

mod combinatorics;
mod det;
mod eigen;
mod matrix;
mod poly;
mod subdivision;

pub use combinatorics::{binomial, factorial, stirling2, CombinatorialTables};
pub use det::{det_sign, det_sign_check, det_sign_check_replaced, determinant, Sign};
pub use eigen::{
    eigen_rationals, eigen_rationals_direct, h_limit_coefficients, h_polynomial_limit,
    EigenRationals,
};
pub use matrix::{
    descent_matrix, descent_matrix_bruteforce, shift_matrix, shift_matrix_inverse, transfer_matrix,
    DescentMatrix, ShiftMatrix, SimplexMatrix, TransferMatrix, DEFAULT_BRUTE_FORCE_BOUND,
};
pub use poly::{poly_shift, RationalPoly};
pub use subdivision::{subdivision_count, subdivision_count_recurrence, SubdivisionCountTable};

#[cfg(test)]
use num_bigint::BigInt;
#[cfg(test)]
use num_rational::BigRational;

#[cfg(test)]
pub(crate) fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
pub(crate) fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

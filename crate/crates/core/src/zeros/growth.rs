//! f-vectors of iterated barycentric subdivisions and their closed form as a
//! combination of factorial powers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::FVector;
use crate::exact::{factorial, transfer_matrix, TransferMatrix};
use crate::{Error, Result};

/// Largest number of subdivisions [`subdivided_f`] accepts.
pub const DEFAULT_MAX_SUBDIVISIONS: u32 = 64;

/// `F_d^k · f`, the f-vector of the `k`-th barycentric subdivision.
pub fn subdivided_f(fv: &FVector, k: u32) -> Result<FVector> {
    subdivided_f_bounded(fv, k, DEFAULT_MAX_SUBDIVISIONS)
}

pub fn subdivided_f_bounded(fv: &FVector, k: u32, max_k: u32) -> Result<FVector> {
    if k > max_k {
        return Err(Error::ResourceLimit {
            what: "subdivisions",
            requested: k.into(),
            limit: max_k.into(),
        });
    }
    if fv.dim() < 0 {
        return Ok(fv.clone());
    }
    let f = transfer_matrix(fv.dim() as usize);
    Ok(iterate(&f, fv, k).pop().expect("k + 1 vectors"))
}

/// `f, F f, ..., F^k f`.
pub(crate) fn iterate(f: &TransferMatrix, fv: &FVector, k: u32) -> Vec<FVector> {
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(fv.clone());
    for _ in 0..k {
        let next = f.mul_vec(out.last().expect("nonempty").counts());
        out.push(FVector::from_counts_unchecked(next));
    }
    out
}

/// Rationals `C_{j,i}` with `f_i^{(k)} = sum_{j=0}^{d-i} C_{j,i} (d+1-j)!^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthExpansion {
    d: usize,
    /// `coeffs[i][j] = C_{j,i}`.
    coeffs: Vec<Vec<BigRational>>,
}

impl GrowthExpansion {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// `C_{j,i}` for `0 <= i <= d`, `0 <= j <= d - i`.
    pub fn coefficient(&self, j: usize, i: usize) -> &BigRational {
        &self.coeffs[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.coeffs[i]
    }

    /// The closed form evaluated at `k`.
    pub fn evaluate(&self, i: usize, k: u32) -> BigRational {
        self.coeffs[i]
            .iter()
            .enumerate()
            .map(|(j, c)| c * BigRational::from_integer(factorial(self.d + 1 - j).pow(k)))
            .sum()
    }
}

/// Solves for the `C_{j,i}` from the exact f-vectors at `k = 0..=d-i`.
pub fn growth_expansion(fv: &FVector) -> Result<GrowthExpansion> {
    if fv.dim() < 0 {
        return Err(Error::Precondition(
            "growth expansion needs dimension at least 0".into(),
        ));
    }
    let d = fv.dim() as usize;
    let values = iterate(&transfer_matrix(d), fv, d as u32);
    let nodes: Vec<BigInt> = (0..=d).map(|j| factorial(d + 1 - j)).collect();
    let coeffs = (0..=d)
        .map(|i| {
            let m = d - i + 1;
            let system: Vec<Vec<BigRational>> = (0..m)
                .map(|k| {
                    let mut row: Vec<BigRational> = nodes[..m]
                        .iter()
                        .map(|x| BigRational::from_integer(x.pow(k as u32)))
                        .collect();
                    row.push(BigRational::from_integer(values[k].get(i as isize).clone()));
                    row
                })
                .collect();
            solve(system)
        })
        .collect();
    Ok(GrowthExpansion { d, coeffs })
}

/// Gauss–Jordan elimination on an augmented nonsingular system.
fn solve(mut a: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Vandermonde system is nonsingular");
        a.swap(col, pivot);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n].clone()).collect()
}

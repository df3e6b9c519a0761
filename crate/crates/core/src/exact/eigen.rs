use num_rational::BigRational;
use num_traits::{One, Zero};

use super::combinatorics::factorial;
use super::poly::{poly_shift, RationalPoly};
use super::subdivision::SubdivisionCountTable;
use crate::{Error, Result};

/// The rationals `F_{-1,d}, ..., F_{d,d}`: the eigenvector of the transfer
/// matrix for its top eigenvalue `(d+1)!`, normalized by `F_{d,d} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenRationals {
    d: usize,
    // entries[i + 1] = F_{i,d}
    entries: Vec<BigRational>,
}

impl EigenRationals {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// `F_{i,d}` for `-1 <= i <= d`.
    pub fn get(&self, i: isize) -> &BigRational {
        &self.entries[(i + 1) as usize]
    }

    /// The column `(F_{-1,d}, ..., F_{d,d})`.
    pub fn as_slice(&self) -> &[BigRational] {
        &self.entries
    }

    /// `F_d(z) = sum_i F_{i,d} z^{d-i}`.
    pub fn polynomial(&self) -> RationalPoly {
        RationalPoly::from_desc(self.entries.clone())
    }
}

/// `F_{i,d}` by the descending recurrence
/// `F_{i,d} = (sum_{j>i} f_{i,j} F_{j,d}) / ((d+1)! - (i+1)!)`.
pub fn eigen_rationals(d: usize) -> EigenRationals {
    let table = SubdivisionCountTable::new(d);
    eigen_rationals_with(&table, d)
}

pub(crate) fn eigen_rationals_with(table: &SubdivisionCountTable, d: usize) -> EigenRationals {
    let top = factorial(d + 1);
    let mut entries = vec![BigRational::zero(); d + 2];
    entries[d + 1] = BigRational::one();
    for i in (0..d as isize).rev() {
        let mut acc = BigRational::zero();
        for j in (i + 1)..=(d as isize) {
            acc += BigRational::from_integer(table.get(i, j).clone()) * &entries[(j + 1) as usize];
        }
        let gap = &top - factorial(i as usize + 1);
        entries[(i + 1) as usize] = acc / BigRational::from_integer(gap);
    }
    // F_{-1,d} = 0 for d >= 0: row -1 of the transfer matrix is (1, 0, ..., 0).
    EigenRationals { d, entries }
}

/// `F_{i,d}` as the sum over increasing chains `i = i_0 < i_1 < ... < i_l < d`
/// of `prod_m f_{i_m, i_{m+1}} / ((d+1)! - (i_m + 1)!)` with `i_{l+1} = d`.
///
/// Enumerates all `2^(d-i-1)` chains explicitly.
pub fn eigen_rationals_direct(d: usize, i: isize) -> Result<BigRational> {
    if i < 0 || i >= d as isize {
        return Err(Error::InvalidIndex(format!(
            "F_{{{i},{d}}} chain sum requires 0 <= i < d"
        )));
    }
    let i = i as usize;
    let table = SubdivisionCountTable::new(d);
    let top = factorial(d + 1);
    let weight = |a: usize, b: usize| {
        BigRational::new(
            table.get(a as isize, b as isize).clone(),
            &top - factorial(a + 1),
        )
    };
    let inner: Vec<usize> = ((i + 1)..d).collect();
    let mut total = BigRational::zero();
    for mask in 0u64..(1u64 << inner.len()) {
        let mut chain = vec![i];
        chain.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &v)| v),
        );
        chain.push(d);
        let term = chain
            .windows(2)
            .fold(BigRational::one(), |acc, w| acc * weight(w[0], w[1]));
        total += term;
    }
    Ok(total)
}

/// The limit polynomial `H_d(z) = F_d(z - 1)`.
///
/// `H_{0,d} = H_{d+1,d} = 0`, so for `d >= 1` it has degree `d` and no
/// constant term.
pub fn h_polynomial_limit(d: usize) -> RationalPoly {
    poly_shift(&eigen_rationals(d).polynomial())
}

/// `H_{0,d}, ..., H_{d+1,d}` where `H_d(z) = sum_i H_{i,d} z^{d+1-i}`.
pub fn h_limit_coefficients(d: usize) -> Vec<BigRational> {
    let h = h_polynomial_limit(d);
    (0..=d + 1).map(|i| h.coefficient(d + 1 - i)).collect()
}

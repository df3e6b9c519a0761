use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{poly_shift, RationalPoly};
use crate::{Error, Result};

/// Face counts `f_{-1}, f_0, ..., f_d` with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    /// Checks `f_{-1} = 1`, nonnegative counts and `f_d >= 1`.
    pub fn new(counts: Vec<BigInt>) -> Result<Self> {
        match counts.first() {
            Some(first) if first.is_one() => {}
            _ => {
                return Err(Error::Precondition(
                    "f-vector must start with f_{-1} = 1".into(),
                ))
            }
        }
        if counts.iter().any(|c| c < &BigInt::zero()) {
            return Err(Error::Precondition(
                "f-vector entries must be nonnegative".into(),
            ));
        }
        if counts.last().is_some_and(Zero::is_zero) {
            return Err(Error::Precondition(
                "top entry f_d must be at least 1".into(),
            ));
        }
        Ok(Self { counts })
    }

    pub fn from_u64(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn from_counts_unchecked(counts: Vec<BigInt>) -> Self {
        Self { counts }
    }

    /// Dimension `d`, which is `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 2
    }

    /// `f_i` for `-1 <= i <= d`.
    pub fn get(&self, i: isize) -> &BigInt {
        &self.counts[(i + 1) as usize]
    }

    /// The top count `f_d`.
    pub fn top(&self) -> &BigInt {
        self.counts.last().expect("nonempty")
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Reduced Euler characteristic `sum_{i=-1}^{d} (-1)^i f_i`.
    pub fn euler_char(&self) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { -c } else { c.clone() })
            .sum()
    }

    /// `f(z) = sum_i f_i z^{d-i}`.
    pub fn f_polynomial(&self) -> RationalPoly {
        RationalPoly::from_integers_desc(&self.counts)
    }
}

/// `h(z) = f(z - 1)`: monic with constant term `(-1)^d χ̃`.
pub fn h_poly(fv: &FVector) -> RationalPoly {
    poly_shift(&fv.f_polynomial())
}

//! Exact `α_n = χ̃(Δ_n) / (H_{1,d_n} f_{d_n})` and the conjectured growth bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::complex::{dim_of, ComplexSummary, SieveTable};
use crate::exact::{eigen_rationals, factorial};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaRecord {
    pub n: u64,
    pub dim: usize,
    pub euler_char: i64,
    /// `H_{1,d_n}`.
    pub h1: BigRational,
    /// `f_{d_n}`.
    pub top: BigInt,
    pub alpha: BigRational,
    /// `ln |α_n| / ln (d_n+1)!`, absent when `α_n = 0`.
    pub exponent: Option<f64>,
}

impl AlphaRecord {
    /// `α_n H_{1,d_n} f_{d_n} = χ̃(Δ_n)`.
    pub fn is_exact(&self) -> bool {
        &self.alpha * &self.h1 * BigRational::from_integer(self.top.clone())
            == BigRational::from_integer(self.euler_char.into())
    }
}

/// `H_{1,d}` for every dimension up to a bound, computed once.
#[derive(Debug, Clone)]
pub struct AlphaContext {
    h1: Vec<BigRational>,
}

impl AlphaContext {
    pub fn new(max_dim: usize) -> Self {
        Self {
            h1: (0..=max_dim)
                .map(|d| eigen_rationals(d).get(0).clone())
                .collect(),
        }
    }

    /// Covers every `n` up to `limit`.
    pub fn for_limit(limit: u64) -> Self {
        Self::new(dim_of(limit).max(1) as usize)
    }

    pub fn h1(&self, d: usize) -> BigRational {
        match self.h1.get(d) {
            Some(v) => v.clone(),
            None => eigen_rationals(d).get(0).clone(),
        }
    }

    pub fn record(&self, summary: &ComplexSummary) -> Result<AlphaRecord> {
        if summary.dim < 1 {
            return Err(Error::DimensionTooSmall {
                n: summary.n,
                dim: summary.dim,
            });
        }
        let d = summary.dim as usize;
        let h1 = self.h1(d);
        let top = summary.f_vector.top().clone();
        let chi = BigRational::from_integer(summary.euler_char.into());
        let alpha = chi / (&h1 * BigRational::from_integer(top.clone()));
        let exponent = if alpha.is_zero() {
            None
        } else {
            let base = factorial(d + 1).to_f64().expect("small factorial").ln();
            Some(alpha.abs().to_f64().expect("finite").ln() / base)
        };
        Ok(AlphaRecord {
            n: summary.n,
            dim: d,
            euler_char: summary.euler_char,
            h1,
            top,
            alpha,
            exponent,
        })
    }
}

/// `α_n` for a single `n`.
pub fn alpha(sieve: &SieveTable, n: u64) -> Result<AlphaRecord> {
    let summary = sieve.summary(n)?;
    AlphaContext::new(summary.dim.max(1) as usize).record(&summary)
}

/// `α_n` for every `n` in `from..=to` with `dim Δ_n >= 1`.
pub fn alpha_records(sieve: &SieveTable, from: u64, to: u64) -> Result<Vec<AlphaRecord>> {
    let ctx = AlphaContext::for_limit(to);
    let mut out = Vec::new();
    for summary in sieve.summaries(to)? {
        let summary = summary?;
        if summary.n >= from && summary.dim >= 1 {
            out.push(ctx.record(&summary)?);
        }
    }
    Ok(out)
}

/// One row of the conjecture report. The flags compare `|α_n|` with
/// `(d_n+1)!^{3/2}` and `(d_n+1)!^2`; nothing is asserted.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureRow {
    pub record: AlphaRecord,
    pub bound_three_halves: f64,
    pub bound_square: BigInt,
    pub within_three_halves: bool,
    pub within_square: bool,
}

pub fn conjecture_report(sieve: &SieveTable, n_max: u64) -> Result<Vec<ConjectureRow>> {
    Ok(alpha_records(sieve, 1, n_max)?
        .into_iter()
        .map(conjecture_row)
        .collect())
}

pub fn conjecture_row(record: AlphaRecord) -> ConjectureRow {
    let g = factorial(record.dim + 1);
    let a = record.alpha.abs();
    let within_three_halves = &a * &a <= BigRational::from_integer(g.pow(3));
    let bound_square = g.pow(2);
    let within_square = a <= BigRational::from_integer(bound_square.clone());
    let bound_three_halves = g.to_f64().expect("small factorial").powf(1.5);
    ConjectureRow {
        record,
        bound_three_halves,
        bound_square,
        within_three_halves,
        within_square,
    }
}

use num_bigint::BigInt;

use super::fvector::FVector;
use super::sieve::SieveTable;
use crate::{Error, Result};

/// The first primorials `2, 6, 30, 210, ...` that fit in a `u64`.
pub fn primorials() -> Vec<u64> {
    let mut out = Vec::new();
    let mut product: u64 = 1;
    let mut candidate: u64 = 2;
    loop {
        if (2..candidate)
            .take_while(|q| q * q <= candidate)
            .all(|q| candidate % q != 0)
        {
            match product.checked_mul(candidate) {
                Some(next) => {
                    product = next;
                    out.push(product);
                }
                None => return out,
            }
        }
        candidate += 1;
    }
}

/// `dim Δ_n`: the largest `d` with `p_1 p_2 ... p_{d+1} <= n`, or `-1` for `n = 1`.
pub fn dim_of(n: u64) -> isize {
    primorials().iter().take_while(|&&p| p <= n).count() as isize - 1
}

/// `n`, `dim Δ_n`, its f-vector, `χ̃(Δ_n)` and `M(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexSummary {
    pub n: u64,
    pub dim: isize,
    pub f_vector: FVector,
    pub euler_char: i64,
    pub mertens: i64,
}

impl ComplexSummary {
    fn assemble(n: u64, dim: isize, counts: Vec<BigInt>, mertens: i64) -> Result<Self> {
        let f_vector = FVector::new(counts)?;
        let alternating = f_vector.euler_char();
        let euler_char = i64::try_from(&alternating)
            .map_err(|_| Error::Inconsistent(format!("χ̃(Δ_{n}) does not fit in i64")))?;
        if euler_char != -mertens {
            return Err(Error::Inconsistent(format!(
                "n = {n}: alternating face sum {euler_char} differs from -M(n) = {}",
                -mertens
            )));
        }
        Ok(Self {
            n,
            dim,
            f_vector,
            euler_char,
            mertens,
        })
    }
}

impl SieveTable {
    /// Summary of `Δ_n` with `f_i = π_{i+1}(n)`, cross-checked against `-M(n)`.
    pub fn summary(&self, n: u64) -> Result<ComplexSummary> {
        let mertens = self.mertens(n)?;
        let dim = dim_of(n);
        let mut counts = vec![BigInt::from(1)];
        for i in 0..=dim {
            counts.push(self.weight_count(i as u32 + 1, n)?.into());
        }
        ComplexSummary::assemble(n, dim, counts, mertens)
    }

    /// Summaries of `Δ_1, ..., Δ_to` in one pass, keeping running weight counts.
    pub fn summaries(&self, to: u64) -> Result<Summaries<'_>> {
        if to > self.limit() {
            return Err(Error::SieveRange {
                x: to,
                limit: self.limit(),
            });
        }
        Ok(Summaries {
            sieve: self,
            next: 1,
            to,
            by_weight: Vec::new(),
        })
    }
}

/// Iterator returned by [`SieveTable::summaries`].
#[derive(Debug)]
pub struct Summaries<'a> {
    sieve: &'a SieveTable,
    next: u64,
    to: u64,
    // by_weight[w] = squarefree k <= current n with w prime factors
    by_weight: Vec<u64>,
}

impl Iterator for Summaries<'_> {
    type Item = Result<ComplexSummary>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next > self.to {
            return None;
        }
        let n = self.next;
        self.next += 1;
        Some(self.step(n))
    }
}

impl Summaries<'_> {
    fn step(&mut self, n: u64) -> Result<ComplexSummary> {
        if let Some(w) = self.sieve.weight(n)? {
            let w = w as usize;
            if self.by_weight.len() <= w {
                self.by_weight.resize(w + 1, 0);
            }
            self.by_weight[w] += 1;
        }
        let dim = self.by_weight.len() as isize - 2;
        let counts = self.by_weight.iter().map(|&c| BigInt::from(c)).collect();
        let mertens = self.sieve.mertens(n)?;
        ComplexSummary::assemble(n, dim, counts, mertens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_sieve;

    #[test]
    fn dimensions() {
        assert_eq!(dim_of(1), -1);
        assert_eq!(dim_of(2), 0);
        assert_eq!(dim_of(5), 0);
        assert_eq!(dim_of(6), 1);
        assert_eq!(dim_of(29), 1);
        assert_eq!(dim_of(30), 2);
        assert_eq!(dim_of(210), 3);
        assert_eq!(dim_of(2309), 3);
        assert_eq!(dim_of(u64::MAX), primorials().len() as isize - 1);
        assert_eq!(primorials()[..5], [2, 6, 30, 210, 2310]);
    }

    #[test]
    fn summary_examples() {
        let s = build_sieve(100).unwrap();
        let six = s.summary(6).unwrap();
        assert_eq!(six.f_vector, FVector::from_u64(&[1, 3, 1]).unwrap());
        assert_eq!((six.dim, six.euler_char, six.mertens), (1, 1, -1));
        let thirty = s.summary(30).unwrap();
        assert_eq!(thirty.f_vector, FVector::from_u64(&[1, 10, 7, 1]).unwrap());
        assert_eq!(thirty.euler_char, 3);
        let one = s.summary(1).unwrap();
        assert_eq!(one.f_vector, FVector::from_u64(&[1]).unwrap());
        assert_eq!((one.dim, one.euler_char), (-1, -1));
    }

    #[test]
    fn running_summaries_match_single_queries() {
        let s = build_sieve(3000).unwrap();
        for (n, running) in (1..).zip(s.summaries(3000).unwrap()) {
            let running = running.unwrap();
            assert_eq!(running.n, n);
            if n % 97 == 0 || n < 60 {
                assert_eq!(running, s.summary(n).unwrap());
            }
            assert_eq!(running.dim, dim_of(n));
        }
        assert!(s.summaries(3001).is_err());
    }

    #[test]
    fn smallest_negative_euler_characteristic() {
        let s = build_sieve(200).unwrap();
        let first = s
            .summaries(200)
            .unwrap()
            .map(Result::unwrap)
            .find(|c| c.n >= 2 && c.euler_char < 0)
            .unwrap();
        assert_eq!(first.n, 94);
        assert_eq!(first.euler_char, -1);
    }
}

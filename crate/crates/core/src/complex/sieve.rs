use crate::{Error, Result};

/// Default sieve size for the command-line tools.
pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;
/// Memory budget: the table costs about ten bytes per entry.
pub const DEFAULT_MAX_SIEVE_LIMIT: u64 = 50_000_000;

/// Smallest prime factors, Möbius values and prime-factor counts up to `limit`.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    smallest_prime_factor: Vec<u32>,
    moebius: Vec<i8>,
    // number of prime factors for squarefree k, u8::MAX otherwise
    weight: Vec<u8>,
    // mertens[k] = M(k)
    mertens: Vec<i32>,
    primes: Vec<u32>,
}

pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    SieveTable::with_budget(limit, DEFAULT_MAX_SIEVE_LIMIT)
}

impl SieveTable {
    /// Linear sieve up to `limit`, refusing anything above `max_limit`.
    pub fn with_budget(limit: u64, max_limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::Precondition("sieve limit must be at least 1".into()));
        }
        if limit > max_limit || limit > u32::MAX as u64 {
            return Err(Error::ResourceLimit {
                what: "sieve limit",
                requested: limit.into(),
                limit: max_limit.min(u32::MAX as u64).into(),
            });
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes = Vec::new();
        for k in 2..=n {
            if spf[k] == 0 {
                spf[k] = k as u32;
                primes.push(k as u32);
            }
            let p_k = spf[k];
            for &p in &primes {
                let m = k * p as usize;
                if p > p_k || m > n {
                    break;
                }
                spf[m] = p;
            }
        }

        let mut moebius = vec![0i8; n + 1];
        let mut weight = vec![u8::MAX; n + 1];
        moebius[1] = 1;
        weight[1] = 0;
        for k in 2..=n {
            let p = spf[k] as usize;
            let rest = k / p;
            if rest % p == 0 || moebius[rest] == 0 {
                continue;
            }
            moebius[k] = -moebius[rest];
            weight[k] = weight[rest] + 1;
        }

        let mut mertens = vec![0i32; n + 1];
        for k in 1..=n {
            mertens[k] = mertens[k - 1] + i32::from(moebius[k]);
        }

        Ok(Self {
            limit,
            smallest_prime_factor: spf,
            moebius,
            weight,
            mertens,
            primes,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check(&self, x: u64) -> Result<usize> {
        if x == 0 || x > self.limit {
            return Err(Error::SieveRange {
                x,
                limit: self.limit,
            });
        }
        Ok(x as usize)
    }

    /// Smallest prime factor of `k >= 2`.
    pub fn smallest_prime_factor(&self, k: u64) -> Result<u64> {
        let k = self.check(k)?;
        if k < 2 {
            return Err(Error::Precondition("1 has no prime factor".into()));
        }
        Ok(self.smallest_prime_factor[k].into())
    }

    pub fn moebius(&self, k: u64) -> Result<i8> {
        Ok(self.moebius[self.check(k)?])
    }

    /// Number of prime factors of `k` if it is squarefree.
    pub fn weight(&self, k: u64) -> Result<Option<u32>> {
        let w = self.weight[self.check(k)?];
        Ok((w != u8::MAX).then_some(u32::from(w)))
    }

    /// Prime factors of `k` in increasing order, with multiplicity.
    pub fn factor(&self, k: u64) -> Result<Vec<u64>> {
        let mut k = self.check(k)?;
        let mut out = Vec::new();
        while k > 1 {
            let p = self.smallest_prime_factor[k] as usize;
            out.push(p as u64);
            k /= p;
        }
        Ok(out)
    }

    /// Primes up to the limit.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// `M(x) = sum_{k <= x} μ(k)`.
    pub fn mertens(&self, x: u64) -> Result<i64> {
        Ok(self.mertens[self.check(x)?].into())
    }

    /// `π_d(x)`: squarefree `k <= x` with exactly `d` prime factors.
    pub fn weight_count(&self, d: u32, x: u64) -> Result<u64> {
        let x = self.check(x)?;
        let d = u8::try_from(d).unwrap_or(u8::MAX - 1);
        Ok(self.weight[1..=x].iter().filter(|&&w| w == d).count() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_moebius(mut k: u64) -> i8 {
        let mut mu = 1i8;
        let mut p = 2;
        while p * p <= k {
            if k % p == 0 {
                k /= p;
                if k % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if k > 1 {
            mu = -mu;
        }
        mu
    }

    #[test]
    fn moebius_examples() {
        let s = build_sieve(40).unwrap();
        assert_eq!(s.moebius(6).unwrap(), 1);
        assert_eq!(s.moebius(4).unwrap(), 0);
        assert_eq!(s.moebius(1).unwrap(), 1);
        assert_eq!(s.moebius(30).unwrap(), -1);
        assert_eq!(s.moebius(37).unwrap(), -1);
        assert_eq!(s.factor(36).unwrap(), vec![2, 2, 3, 3]);
        assert_eq!(s.smallest_prime_factor(35).unwrap(), 5);
    }

    #[test]
    fn moebius_matches_trial_division() {
        let s = build_sieve(5000).unwrap();
        for k in 1..=5000 {
            assert_eq!(s.moebius(k).unwrap(), trial_moebius(k), "μ({k})");
        }
    }

    #[test]
    fn mertens_examples() {
        let s = build_sieve(100).unwrap();
        assert_eq!(s.mertens(1).unwrap(), 1);
        assert_eq!(s.mertens(6).unwrap(), -1);
        assert_eq!(s.mertens(94).unwrap(), 1);
        assert!(matches!(
            s.mertens(101),
            Err(Error::SieveRange { x: 101, limit: 100 })
        ));
        assert!(s.mertens(0).is_err());
    }

    #[test]
    fn weight_counts() {
        let s = build_sieve(30).unwrap();
        assert_eq!(s.weight_count(1, 30).unwrap(), 10);
        assert_eq!(s.weight_count(2, 30).unwrap(), 7);
        assert_eq!(s.weight_count(3, 30).unwrap(), 1);
        assert_eq!(s.weight_count(0, 30).unwrap(), 1);
        assert_eq!(s.weight(12).unwrap(), None);
        assert_eq!(s.weight(30).unwrap(), Some(3));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            SieveTable::with_budget(1000, 999),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(build_sieve(0).is_err());
        assert_eq!(build_sieve(1).unwrap().mertens(1).unwrap(), 1);
    }
}

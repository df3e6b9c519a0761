use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(m: usize) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binomial(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

/// Stirling number of the second kind `S(j, k)`: the number of partitions of a
/// `j`-set into `k` nonempty blocks. `S(0, 0) = 1`, zero out of range.
pub fn stirling2(j: usize, k: usize) -> BigInt {
    if k > j {
        return BigInt::zero();
    }
    // row-by-row over j, keeping columns 0..=k
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for n in 1..=j {
        for c in (1..=k.min(n)).rev() {
            row[c] = &row[c] * c + &row[c - 1];
        }
        row[0] = BigInt::zero();
    }
    row.swap_remove(k)
}

/// Memoized Stirling, binomial and factorial tables up to a fixed size.
///
/// Built once and then read-only, so it can be shared between threads.
#[derive(Debug, Clone)]
pub struct CombinatorialTables {
    max: usize,
    stirling2: Vec<Vec<BigInt>>,
    binomial: Vec<Vec<BigInt>>,
    factorial: Vec<BigInt>,
}

impl CombinatorialTables {
    /// Tables covering every argument up to `max` inclusive.
    pub fn new(max: usize) -> Self {
        let mut factorial = Vec::with_capacity(max + 1);
        factorial.push(BigInt::one());
        for m in 1..=max {
            let next = &factorial[m - 1] * m;
            factorial.push(next);
        }

        let mut binomial: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        for a in 0..=max {
            let mut row = vec![BigInt::zero(); a + 1];
            row[0] = BigInt::one();
            row[a] = BigInt::one();
            for b in 1..a {
                row[b] = &binomial[a - 1][b - 1] + &binomial[a - 1][b];
            }
            binomial.push(row);
        }

        let mut stirling2: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        stirling2.push(vec![BigInt::one()]);
        for j in 1..=max {
            let mut row = vec![BigInt::zero(); j + 1];
            for k in 1..=j {
                let prev = &stirling2[j - 1];
                let stay = prev.get(k).map(|s| s * k).unwrap_or_default();
                row[k] = stay + &prev[k - 1];
            }
            stirling2.push(row);
        }

        Self {
            max,
            stirling2,
            binomial,
            factorial,
        }
    }

    pub fn max(&self) -> usize {
        self.max
    }

    /// `S(j, k)`; falls back to direct computation beyond the table.
    pub fn stirling2(&self, j: usize, k: usize) -> BigInt {
        match self.stirling2.get(j) {
            Some(row) => row.get(k).cloned().unwrap_or_default(),
            None => stirling2(j, k),
        }
    }

    pub fn binomial(&self, a: usize, b: usize) -> BigInt {
        match self.binomial.get(a) {
            Some(row) => row.get(b).cloned().unwrap_or_default(),
            None => binomial(a, b),
        }
    }

    pub fn factorial(&self, m: usize) -> BigInt {
        self.factorial
            .get(m)
            .cloned()
            .unwrap_or_else(|| factorial(m))
    }
}

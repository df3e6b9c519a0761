use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::combinatorics::{binomial, factorial, stirling2};
use crate::{Error, Result};

fn check_indices(i: isize, d: isize) -> Result<()> {
    if i < -1 || d < -1 {
        return Err(Error::InvalidIndex(format!(
            "f_{{{i},{d}}}: indices start at -1"
        )));
    }
    if i > d {
        return Err(Error::InvalidIndex(format!(
            "f_{{{i},{d}}}: requires i <= d"
        )));
    }
    Ok(())
}

/// `f_{i,d}`: the number of `i`-simplices of the subdivided `d`-simplex whose
/// chain ends at the top face, `(i+1)! S(d+1, i+1)`.
pub fn subdivision_count(i: isize, d: isize) -> Result<BigInt> {
    check_indices(i, d)?;
    if i == -1 {
        return Ok(if d == -1 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    let (i, d) = (i as usize, d as usize);
    Ok(factorial(i + 1) * stirling2(d + 1, i + 1))
}

/// `f_{i,d}` through `f_{i,d} = sum_{j=i}^{d} C(d+1, j) f_{i-1,j-1}`.
pub fn subdivision_count_recurrence(i: isize, d: isize) -> Result<BigInt> {
    check_indices(i, d)?;
    let table = SubdivisionCountTable::new(d.max(0) as usize);
    Ok(table.get(i, d).clone())
}

/// All `f_{i,d}` for `-1 <= i, d <= d_max`, filled by the binomial recurrence.
/// Entries with `i > d` are zero.
#[derive(Debug, Clone)]
pub struct SubdivisionCountTable {
    d_max: usize,
    // entries[i + 1][d + 1]
    entries: Vec<Vec<BigInt>>,
}

impl SubdivisionCountTable {
    pub fn new(d_max: usize) -> Self {
        let size = d_max + 2;
        let mut entries = vec![vec![BigInt::zero(); size]; size];
        entries[0][0] = BigInt::one();
        for i in 0..=d_max {
            for d in i..=d_max {
                let mut acc = BigInt::zero();
                for j in i..=d {
                    // f_{i-1, j-1} lives at entries[i][j]
                    let prev = &entries[i][j];
                    if !prev.is_zero() {
                        acc += binomial(d + 1, j) * prev;
                    }
                }
                entries[i + 1][d + 1] = acc;
            }
        }
        Self { d_max, entries }
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    /// `f_{i,d}`. Panics if an index lies outside `-1..=d_max`.
    pub fn get(&self, i: isize, d: isize) -> &BigInt {
        &self.entries[(i + 1) as usize][(d + 1) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_formula_examples() {
        assert_eq!(subdivision_count(2, 3).unwrap(), BigInt::from(36));
        assert_eq!(subdivision_count(3, 7).unwrap(), BigInt::from(40824));
        assert_eq!(subdivision_count(-1, -1).unwrap(), BigInt::from(1));
        assert_eq!(subdivision_count(-1, 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(subdivision_count_recurrence(1, 2).unwrap(), BigInt::from(6));
        assert_eq!(subdivision_count_recurrence(0, 5).unwrap(), BigInt::from(1));
        assert_eq!(subdivision_count_recurrence(1, 1).unwrap(), BigInt::from(2));
        assert_eq!(
            subdivision_count_recurrence(-1, -1).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(matches!(
            subdivision_count(3, 2),
            Err(Error::InvalidIndex(_))
        ));
        assert!(subdivision_count_recurrence(5, 0).is_err());
        assert!(subdivision_count(-2, 1).is_err());
    }

    #[test]
    fn formula_matches_recurrence_up_to_12() {
        let table = SubdivisionCountTable::new(12);
        for d in -1..=12isize {
            for i in -1..=d {
                assert_eq!(
                    &subdivision_count(i, d).unwrap(),
                    table.get(i, d),
                    "f_{{{i},{d}}}"
                );
            }
        }
    }

    #[test]
    fn boundary_rows() {
        let table = SubdivisionCountTable::new(9);
        for d in 0..=9isize {
            assert!(table.get(-1, d).is_zero());
            assert!(table.get(0, d).is_one());
            assert_eq!(table.get(d, d), &factorial(d as usize + 1));
        }
    }
}

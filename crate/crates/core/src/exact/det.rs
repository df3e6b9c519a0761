use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigRational) -> Self {
        if x.is_negative() {
            Sign::Negative
        } else if x.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    /// `(-1)^n`.
    pub fn alternating(n: usize) -> Self {
        if n % 2 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

fn check_square(m: &[Vec<BigRational>]) -> Result<usize> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition(
            "matrix must be square and nonempty".into(),
        ));
    }
    Ok(n)
}

/// Exact determinant. Rows are scaled to integers by their denominators'
/// lcm, then reduced with Bareiss fraction-free elimination.
pub fn determinant(m: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = check_square(m)?;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigRational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = BigRational::new(a[n - 1][n - 1].clone(), scale);
    Ok(if negate { -det } else { det })
}

pub fn det_sign(m: &[Vec<BigRational>]) -> Result<Sign> {
    determinant(m).map(|d| Sign::of(&d))
}

fn check_column_dominant(m: &[Vec<BigRational>]) -> Result<usize> {
    let n = check_square(m)?;
    for j in 0..n {
        if !m[j][j].is_negative() {
            return Err(Error::Precondition(format!(
                "diagonal entry ({j},{j}) is not negative"
            )));
        }
        let mut off = BigRational::zero();
        for (i, row) in m.iter().enumerate() {
            if i == j {
                continue;
            }
            if !row[j].is_positive() {
                return Err(Error::Precondition(format!(
                    "off-diagonal entry ({i},{j}) is not positive"
                )));
            }
            off += &row[j];
        }
        if off >= -m[j][j].clone() {
            return Err(Error::Precondition(format!(
                "column {j}: off-diagonal sum is not below the diagonal magnitude"
            )));
        }
    }
    Ok(n)
}

/// Sign of `det M` for a matrix with negative diagonal, positive
/// off-diagonal entries and every column's off-diagonal sum strictly below
/// the magnitude of its diagonal entry. Such a determinant has sign `(-1)^n`.
pub fn det_sign_check(m: &[Vec<BigRational>]) -> Result<Sign> {
    check_column_dominant(m)?;
    det_sign(m)
}

/// As [`det_sign_check`], but the determinant is taken after replacing
/// column `column` of `m` by `-b` for a positive vector `b`.
pub fn det_sign_check_replaced(
    m: &[Vec<BigRational>],
    column: usize,
    b: &[BigRational],
) -> Result<Sign> {
    let n = check_column_dominant(m)?;
    if column >= n || b.len() != n {
        return Err(Error::Precondition(
            "replacement column out of range".into(),
        ));
    }
    if b.iter().any(|x| !x.is_positive()) {
        return Err(Error::Precondition(
            "replacement vector must be positive".into(),
        ));
    }
    let mut replaced = m.to_vec();
    for (row, x) in replaced.iter_mut().zip(b) {
        row[column] = -x.clone();
    }
    det_sign(&replaced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Leibniz expansion over all permutations; independent of elimination.
    fn leibniz(m: &[Vec<BigRational>]) -> BigRational {
        fn go(m: &[Vec<BigRational>], row: usize, used: &mut Vec<bool>, sign: i32) -> BigRational {
            let n = m.len();
            if row == n {
                return BigRational::from_integer(sign.into());
            }
            let mut total = BigRational::zero();
            for col in 0..n {
                if used[col] {
                    continue;
                }
                // parity of columns already used to the right of `col`
                let flips = (col + 1..n).filter(|&c| used[c]).count();
                let s = if flips % 2 == 0 { sign } else { -sign };
                used[col] = true;
                total += &m[row][col] * go(m, row + 1, used, s);
                used[col] = false;
            }
            total
        }
        go(m, 0, &mut vec![false; m.len()], 1)
    }

    fn random_dominant(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<BigRational>> {
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for j in 0..n {
            let mut off = BigRational::zero();
            for i in 0..n {
                if i != j {
                    let v = ratio(rng.gen_range(1..60), rng.gen_range(1..12));
                    off += &v;
                    m[i][j] = v;
                }
            }
            let slack = ratio(rng.gen_range(1..40), rng.gen_range(1..9));
            m[j][j] = -(off + slack);
        }
        m
    }

    #[test]
    fn small_examples() {
        assert_eq!(det_sign_check(&[vec![int(-5)]]).unwrap(), Sign::Negative);
        let m = vec![vec![int(-3), int(1)], vec![int(1), int(-3)]];
        assert_eq!(determinant(&m).unwrap(), int(8));
        assert_eq!(det_sign_check(&m).unwrap(), Sign::Positive);
    }

    #[test]
    fn preconditions_enforced() {
        let bad = vec![vec![int(-1), int(1)], vec![int(1), int(-3)]];
        assert!(matches!(det_sign_check(&bad), Err(Error::Precondition(_))));
        let zero_off = vec![vec![int(-3), int(0)], vec![int(1), int(-3)]];
        assert!(det_sign_check(&zero_off).is_err());
        assert!(det_sign_check(&[vec![int(2)]]).is_err());
        assert!(det_sign_check(&[]).is_err());
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..10 {
                let m: Vec<Vec<BigRational>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| ratio(rng.gen_range(-9..10), rng.gen_range(1..5)))
                            .collect()
                    })
                    .collect();
                assert_eq!(determinant(&m).unwrap(), leibniz(&m));
            }
        }
        // zero pivot forces a row swap
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(&m).unwrap(), int(-1));
    }

    #[test]
    fn random_six_by_six_instance() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let m = random_dominant(&mut rng, 6);
        let exact = leibniz(&m);
        assert!(exact.is_positive());
        assert_eq!(det_sign_check(&m).unwrap(), Sign::Positive);
    }

    #[test]
    fn lemma_holds_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for trial in 0..100 {
            let n = 1 + trial % 8;
            let m = random_dominant(&mut rng, n);
            assert_eq!(det_sign_check(&m).unwrap(), Sign::alternating(n));
            let b: Vec<BigRational> = (0..n)
                .map(|_| ratio(rng.gen_range(1..30), rng.gen_range(1..7)))
                .collect();
            let col = rng.gen_range(0..n);
            assert_eq!(
                det_sign_check_replaced(&m, col, &b).unwrap(),
                Sign::alternating(n)
            );
        }
    }
}

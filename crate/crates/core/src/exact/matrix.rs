use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::combinatorics::binomial;
use super::subdivision::SubdivisionCountTable;
use crate::{Error, Result};

/// Default cap on `d` for enumerating all `(d+2)!` permutations.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 5;

/// A `(d+2) x (d+2)` matrix with rows and columns indexed `-1..=d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexMatrix<T> {
    d: usize,
    // row-major, entry (i, j) at (i + 1) * (d + 2) + (j + 1)
    data: Vec<T>,
}

/// `F_d = (f_{i,j})`: maps the f-vector of a `d`-complex to that of its
/// barycentric subdivision.
pub type TransferMatrix = SimplexMatrix<BigInt>;
/// `S_d`, which maps coefficients of `f(z)` to those of `f(z - 1)`, or its inverse.
pub type ShiftMatrix = SimplexMatrix<BigInt>;
/// `H_d = (A(d+2, i+1, j+2))`, built from descent statistics of permutations.
pub type DescentMatrix = SimplexMatrix<BigInt>;

impl<T: Clone> SimplexMatrix<T> {
    pub fn from_fn(d: usize, mut entry: impl FnMut(isize, isize) -> T) -> Self {
        let size = d + 2;
        let mut data = Vec::with_capacity(size * size);
        for i in -1..=d as isize {
            for j in -1..=d as isize {
                data.push(entry(i, j));
            }
        }
        Self { d, data }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Side length `d + 2`.
    pub fn size(&self) -> usize {
        self.d + 2
    }

    fn offset(&self, i: isize, j: isize) -> usize {
        let size = self.size() as isize;
        assert!(
            (-1..size - 1).contains(&i) && (-1..size - 1).contains(&j),
            "index ({i}, {j}) outside -1..={}",
            self.d
        );
        ((i + 1) * size + (j + 1)) as usize
    }

    pub fn get(&self, i: isize, j: isize) -> &T {
        &self.data[self.offset(i, j)]
    }

    pub fn set(&mut self, i: isize, j: isize, value: T) {
        let k = self.offset(i, j);
        self.data[k] = value;
    }

    /// Rows in storage order (row `-1` first).
    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.size()).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> SimplexMatrix<U> {
        SimplexMatrix {
            d: self.d,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> SimplexMatrix<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn identity(d: usize) -> Self {
        Self::from_fn(d, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul_matrix(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "dimension mismatch");
        let d = self.d as isize;
        Self::from_fn(self.d, |i, j| {
            (-1..=d).fold(T::zero(), |acc, k| &acc + &(self.get(i, k) * rhs.get(k, j)))
        })
    }

    /// `self * v` for a column `v` indexed `-1..=d`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.size(), "vector length mismatch");
        self.data
            .chunks(self.size())
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.d);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_matrix(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_matrix(&base);
            }
        }
        result
    }
}

impl<T: fmt::Display> fmt::Display for SimplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.d + 2;
        for row in self.data.chunks(size) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `F_d = (f_{i,j})_{-1 <= i,j <= d}`; upper triangular with diagonal `0!, 1!, ..., (d+1)!`.
pub fn transfer_matrix(d: usize) -> TransferMatrix {
    let table = SubdivisionCountTable::new(d);
    transfer_matrix_with(&table, d)
}

pub(crate) fn transfer_matrix_with(table: &SubdivisionCountTable, d: usize) -> TransferMatrix {
    SimplexMatrix::from_fn(d, |i, j| table.get(i, j).clone())
}

fn sign(exponent: isize) -> i32 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `S_d = ((-1)^{d+1+i+j} C(d-j, i+1))`.
pub fn shift_matrix(d: usize) -> ShiftMatrix {
    let di = d as isize;
    SimplexMatrix::from_fn(d, |i, j| {
        binomial((di - j) as usize, (i + 1) as usize) * sign(di + 1 + i + j)
    })
}

/// `S_d^{-1} = (C(j+1, d-i))`.
pub fn shift_matrix_inverse(d: usize) -> ShiftMatrix {
    let di = d as isize;
    SimplexMatrix::from_fn(d, |i, j| binomial((j + 1) as usize, (di - i) as usize))
}

/// `H_d` by the recurrence
/// `h^{(d)}_{i,j} = sum_{l=-1}^{j-1} h^{(d-1)}_{i-1,l} + sum_{l=j}^{d-1} h^{(d-1)}_{i,l}`
/// starting from `H_0 = I`.
pub fn descent_matrix(d: usize) -> DescentMatrix {
    let mut current = DescentMatrix::identity(0);
    for dim in 1..=d {
        let prev = &current;
        let last = dim as isize - 1;
        // entries of H_{dim-1} outside -1..=dim-1 are zero
        let at = |i: isize, l: isize| -> BigInt {
            if (-1..=last).contains(&i) {
                prev.get(i, l).clone()
            } else {
                BigInt::zero()
            }
        };
        let next = SimplexMatrix::from_fn(dim, |i, j| {
            let lower: BigInt = (-1..j).map(|l| at(i - 1, l)).sum();
            let upper: BigInt = (j..=last).map(|l| at(i, l)).sum();
            lower + upper
        });
        current = next;
    }
    current
}

/// `H_d` by enumerating all permutations of `[d+2]`: entry `(i, j)` counts
/// those with `i + 1` descents and first letter `j + 2`.
pub fn descent_matrix_bruteforce(d: usize, bound: usize) -> Result<DescentMatrix> {
    if d > bound {
        return Err(Error::BruteForceBound { d, bound });
    }
    let m = d + 2;
    let mut counts = vec![vec![0u64; m]; m];
    let mut perm: Vec<usize> = (1..=m).collect();
    loop {
        let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
        // descents in 0..=d+1 and first letter in 1..=d+2 cover every cell exactly
        counts[descents][perm[0] - 1] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(SimplexMatrix::from_fn(d, |i, j| {
        BigInt::from(counts[(i + 1) as usize][(j + 1) as usize])
    }))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(k) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let l = p
        .iter()
        .rposition(|&x| x > p[k])
        .expect("pivot has a successor");
    p.swap(k, l);
    p[k + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::combinatorics::factorial;

    fn from_rows(rows: &[&[i64]]) -> DescentMatrix {
        let d = rows.len() - 2;
        SimplexMatrix::from_fn(d, |i, j| {
            BigInt::from(rows[(i + 1) as usize][(j + 1) as usize])
        })
    }

    #[test]
    fn transfer_matrix_shape() {
        let f2 = transfer_matrix(2);
        assert_eq!(
            f2,
            from_rows(&[&[1, 0, 0, 0], &[0, 1, 1, 1], &[0, 0, 2, 6], &[0, 0, 0, 6]])
        );
        for d in 0..=8usize {
            let f = transfer_matrix(d);
            for i in -1..=d as isize {
                assert_eq!(f.get(i, i), &factorial((i + 1) as usize));
                for j in -1..i {
                    assert!(f.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn shift_inverse_is_inverse() {
        for d in 0..=10 {
            let s = shift_matrix(d);
            let t = shift_matrix_inverse(d);
            assert_eq!(s.mul_matrix(&t), DescentMatrix::identity(d), "d = {d}");
            assert_eq!(t.mul_matrix(&s), DescentMatrix::identity(d), "d = {d}");
        }
    }

    #[test]
    fn shift_matrix_maps_f_to_h_reversed() {
        let s = shift_matrix(1);
        let image = s.mul_vec(&[1, 3, 1].map(BigInt::from));
        assert_eq!(image, [-1, 1, 1].map(BigInt::from));
    }

    #[test]
    fn descent_matrix_examples() {
        assert_eq!(
            descent_matrix(2),
            from_rows(&[&[1, 0, 0, 0], &[4, 4, 2, 1], &[1, 2, 4, 4], &[0, 0, 0, 1]])
        );
        assert_eq!(descent_matrix(3).get(1, 0), &BigInt::from(14));
        assert_eq!(descent_matrix(4).get(0, -1), &BigInt::from(26));
        assert_eq!(descent_matrix(0), DescentMatrix::identity(0));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            descent_matrix_bruteforce(1, 5).unwrap(),
            from_rows(&[&[1, 0, 0], &[1, 2, 1], &[0, 0, 1]])
        );
        assert_eq!(
            descent_matrix_bruteforce(0, 5).unwrap(),
            DescentMatrix::identity(0)
        );
        for d in 0..=5 {
            assert_eq!(
                descent_matrix_bruteforce(d, 5).unwrap(),
                descent_matrix(d),
                "d = {d}"
            );
        }
        assert!(matches!(
            descent_matrix_bruteforce(6, 5),
            Err(Error::BruteForceBound { d: 6, bound: 5 })
        ));
    }

    #[test]
    fn similarity_and_eigenvector() {
        for d in 0..=10usize {
            let f = transfer_matrix(d);
            let h = descent_matrix(d);
            let lhs = shift_matrix(d)
                .mul_matrix(&f)
                .mul_matrix(&shift_matrix_inverse(d));
            assert_eq!(lhs, h, "d = {d}");
        }
    }

    #[test]
    fn rotational_symmetry_and_two_powers() {
        for d in 1..=10usize {
            let h = descent_matrix(d);
            let di = d as isize;
            for i in -1..=di {
                for j in -1..=di {
                    assert_eq!(h.get(i, j), h.get(di - 1 - i, di - 1 - j));
                }
            }
            for j in 0..=di {
                assert_eq!(h.get(0, j), &(BigInt::one() << (d - j as usize)));
            }
        }
    }

    #[test]
    fn matrix_power() {
        let f = transfer_matrix(2);
        assert_eq!(f.pow(0), TransferMatrix::identity(2));
        assert_eq!(f.pow(3), f.mul_matrix(&f).mul_matrix(&f));
    }
}

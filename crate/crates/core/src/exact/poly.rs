use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with exact rational coefficients, stored highest degree first.
///
/// Leading zeros are stripped on construction; the zero polynomial is the
/// single coefficient `0` with degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn from_desc(coeffs: Vec<BigRational>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        let coeffs = match first {
            Some(k) => coeffs[k..].to_vec(),
            None => vec![BigRational::zero()],
        };
        Self { coeffs }
    }

    pub fn from_integers_desc<'a>(coeffs: impl IntoIterator<Item = &'a BigInt>) -> Self {
        Self::from_desc(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn from_i64_desc(coeffs: &[i64]) -> Self {
        Self::from_desc(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Coefficients from the leading one down to the constant term.
    pub fn coeffs_desc(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^power`, zero above the degree.
    pub fn coefficient(&self, power: usize) -> BigRational {
        if power > self.degree() {
            return BigRational::zero();
        }
        self.coeffs[self.degree() - power].clone()
    }

    pub fn leading(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn constant(&self) -> &BigRational {
        self.coeffs.last().expect("nonempty")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * z + c)
    }

    /// `p(z + by)`, expanded exactly by repeated synthetic division.
    pub fn translate(&self, by: &BigRational) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for pass in 0..n {
            for k in 1..n - pass {
                let add = &c[k - 1] * by;
                c[k] += add;
            }
        }
        Self::from_desc(c)
    }

    /// Coefficients rounded to integers if every one is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// `f(z - 1)`. Applied to an f-polynomial this is the h-polynomial.
pub fn poly_shift(f: &RationalPoly) -> RationalPoly {
    f.translate(&-BigRational::one())
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let deg = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = deg - k;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = power == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match power {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shift_examples() {
        let f6 = RationalPoly::from_i64_desc(&[1, 3, 1]);
        assert_eq!(poly_shift(&f6), RationalPoly::from_i64_desc(&[1, 1, -1]));
        let f30 = RationalPoly::from_i64_desc(&[1, 10, 7, 1]);
        assert_eq!(
            poly_shift(&f30),
            RationalPoly::from_i64_desc(&[1, 7, -10, 3])
        );
        let c = RationalPoly::from_i64_desc(&[5]);
        assert_eq!(poly_shift(&c), c);
    }

    #[test]
    fn normalization_and_accessors() {
        let p = RationalPoly::from_i64_desc(&[0, 0, 2, 0, -1]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coefficient(2), BigRational::from_integer(2.into()));
        assert_eq!(p.coefficient(1), BigRational::zero());
        assert_eq!(p.coefficient(7), BigRational::zero());
        assert!(!p.is_monic());
        assert!(RationalPoly::from_i64_desc(&[0, 0]).is_zero());
        assert_eq!(p.to_string(), "2z^2 - 1");
        assert_eq!(
            RationalPoly::from_i64_desc(&[1, 7, -10, 3]).to_string(),
            "z^3 + 7z^2 - 10z + 3"
        );
    }

    fn naive_eval(coeffs: &[i64], z: i64) -> BigRational {
        let mut acc = BigRational::zero();
        let n = coeffs.len();
        for (k, &c) in coeffs.iter().enumerate() {
            let mut term = BigRational::from_integer(c.into());
            for _ in 0..(n - 1 - k) {
                term *= BigRational::from_integer(z.into());
            }
            acc += term;
        }
        acc
    }

    proptest! {
        #[test]
        fn shift_agrees_with_pointwise_evaluation(
            coeffs in prop::collection::vec(-50i64..50, 1..8),
            z in -6i64..6,
        ) {
            let p = RationalPoly::from_i64_desc(&coeffs);
            let shifted = poly_shift(&p);
            let at = BigRational::from_integer(z.into());
            prop_assert_eq!(shifted.eval(&at), naive_eval(&coeffs, z - 1));
        }

        #[test]
        fn translate_round_trips(coeffs in prop::collection::vec(-50i64..50, 1..8), by in -4i64..4) {
            let p = RationalPoly::from_i64_desc(&coeffs);
            let c = BigRational::from_integer(by.into());
            prop_assert_eq!(p.translate(&c).translate(&-c), p);
        }
    }
}

//! Binary big floats at a fixed working precision, and complex numbers over them.

use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::ops::Abs;
use dashu_float::round::mode::HalfEven;
use dashu_float::{DBig, FBig};
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Float = FBig<HalfEven, 2>;

pub fn to_ibig(x: &BigInt) -> IBig {
    IBig::from_le_bytes(&x.to_signed_bytes_le())
}

pub fn from_ibig(x: &IBig) -> BigInt {
    BigInt::from_signed_bytes_le(&x.to_le_bytes())
}

pub fn zero(precision: usize) -> Float {
    Float::ZERO.with_precision(precision).value()
}

pub fn from_int(x: &BigInt, precision: usize) -> Float {
    Float::from_parts(to_ibig(x), 0)
        .with_precision(precision)
        .value()
}

pub fn from_rational(x: &BigRational, precision: usize) -> Float {
    from_int(x.numer(), precision) / from_int(x.denom(), precision)
}

pub fn from_f64(x: f64, precision: usize) -> Float {
    Float::try_from(x)
        .expect("finite")
        .with_precision(precision)
        .value()
}

/// `2^log2` for a real exponent, accurate to about 50 bits.
pub fn pow2(log2: f64, precision: usize) -> Float {
    let whole = log2.floor();
    let frac = (log2 - whole).exp2();
    let mantissa = (frac * (1u64 << 52) as f64).round() as i64;
    Float::from_parts(IBig::from(mantissa), whole as isize - 52)
        .with_precision(precision)
        .value()
}

/// Exact value as a rational.
pub fn to_rational(x: &Float) -> BigRational {
    let sig = from_ibig(x.repr().significand());
    let exp = x.repr().exponent();
    if exp >= 0 {
        BigRational::from_integer(sig << exp as usize)
    } else {
        BigRational::new(sig, BigInt::one() << (-exp) as usize)
    }
}

pub fn is_zero(x: &Float) -> bool {
    x.repr().significand() == &IBig::ZERO
}

pub fn abs(x: &Float) -> Float {
    x.clone().abs()
}

pub fn to_f64(x: &Float) -> f64 {
    x.to_f64().value()
}

/// Approximate `log2 |x|`; `-inf` for zero.
pub fn log2_abs(x: &Float) -> f64 {
    let sig = x.repr().significand();
    if sig == &IBig::ZERO {
        return f64::NEG_INFINITY;
    }
    let mag = from_ibig(sig).abs();
    let bits = mag.bits() as i64;
    let shift = (bits - 60).max(0);
    let top: BigInt = &mag >> shift as usize;
    let top = u64::try_from(top).expect("at most 60 bits") as f64;
    top.log2() + (shift + x.repr().exponent() as i64) as f64
}

/// Scientific notation with `digits` significant decimal digits, e.g. `-2.4142e0`.
pub fn format_sci(x: &Float, digits: usize) -> String {
    if is_zero(x) {
        return "0".to_string();
    }
    let dec: DBig = x.to_decimal().value().with_precision(digits).value();
    let (sig, exp) = (dec.repr().significand().clone(), dec.repr().exponent());
    let negative = sig < IBig::ZERO;
    let text = from_ibig(&sig).abs().to_string();
    let sci_exp = exp + text.len() as isize - 1;
    let (head, tail) = text.split_at(1);
    let tail = tail.trim_end_matches('0');
    let sign = if negative { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{sci_exp}")
    } else {
        format!("{sign}{head}.{tail}e{sci_exp}")
    }
}

/// Complex number with [`Float`] parts.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(zero(precision), zero(precision))
    }

    pub fn real(re: Float) -> Self {
        let p = re.precision();
        Self::new(re, zero(p))
    }

    pub fn from_polar_log2(log2_radius: f64, angle: f64, precision: usize) -> Self {
        let r = pow2(log2_radius, precision);
        Self::new(
            &r * from_f64(angle.cos(), precision),
            &r * from_f64(angle.sin(), precision),
        )
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> Float {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.re) && is_zero(&self.im)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Self::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn scale(&self, s: &Float) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        self * &rhs.recip()
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_conversions_round_trip() {
        for v in [0i64, 1, -1, 255, -256, 1 << 40, -(1 << 62)] {
            let b = BigInt::from(v);
            assert_eq!(from_ibig(&to_ibig(&b)), b);
        }
        let huge = BigInt::from(6).pow(80) * -7;
        assert_eq!(from_ibig(&to_ibig(&huge)), huge);
    }

    #[test]
    fn rational_round_trip_is_exact_for_dyadics() {
        let x = BigRational::new(BigInt::from(-13), BigInt::from(64));
        assert_eq!(to_rational(&from_rational(&x, 100)), x);
        let third = from_rational(&BigRational::new(1.into(), 3.into()), 128);
        let back = to_rational(&third);
        let err = (back - BigRational::new(1.into(), 3.into())).abs();
        assert!(err < BigRational::new(1.into(), BigInt::one() << 127usize));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_sci(&from_f64(-2.5, 64), 10), "-2.5e0");
        assert_eq!(
            format_sci(&from_int(&BigInt::from(1234567), 64), 3),
            "1.23e6"
        );
        assert_eq!(format_sci(&from_f64(0.000125, 64), 6), "1.25e-4");
        assert_eq!(format_sci(&zero(64), 6), "0");
    }

    #[test]
    fn logs_and_powers() {
        assert!((log2_abs(&from_f64(8.0, 64)) - 3.0).abs() < 1e-12);
        assert!(
            (log2_abs(&from_int(&BigInt::from(6).pow(50), 200)) - 50.0 * 6f64.log2()).abs() < 1e-9
        );
        assert!((to_f64(&pow2(-10.5, 64)) - 2f64.powf(-10.5)).abs() < 1e-15);
        assert_eq!(log2_abs(&zero(10)), f64::NEG_INFINITY);
    }

    #[test]
    fn complex_arithmetic() {
        let p = 128;
        let a = Complex::new(from_f64(1.0, p), from_f64(2.0, p));
        let b = Complex::new(from_f64(3.0, p), from_f64(-1.0, p));
        assert_eq!((&a * &b).to_f64_pair(), (5.0, 5.0));
        let q = &(&a * &b) / &b;
        let (re, im) = q.to_f64_pair();
        assert!((re - 1.0).abs() < 1e-30 && (im - 2.0).abs() < 1e-30);
    }
}

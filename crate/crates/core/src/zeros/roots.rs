//! All complex zeros of a rational polynomial by Aberth–Ehrlich iteration at
//! a chosen binary precision.

use std::f64::consts::TAU;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::bigfloat::{self, Complex, Float};
use crate::exact::RationalPoly;
use crate::{Error, Result};

/// One zero together with its quality measures.
#[derive(Debug, Clone)]
pub struct Root {
    pub value: Complex,
    /// `|p(ρ)| / sum_i |c_i| |ρ|^i`.
    pub residual: Float,
    /// Set when exact evaluation of `p` shows a sign change on `bracket`
    /// (or `p(ρ) = 0` exactly).
    pub certified_real: bool,
    pub bracket: Option<(BigRational, BigRational)>,
}

/// The zeros of a polynomial, with multiplicity.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub precision: usize,
    pub roots: Vec<Root>,
    pub iterations: usize,
}

impl RootSet {
    pub fn values(&self) -> impl Iterator<Item = &Complex> {
        self.roots.iter().map(|r| &r.value)
    }
}

/// All roots of `p` with deterministic Newton-polygon starting points.
pub fn find_roots(p: &RationalPoly, precision: usize) -> Result<RootSet> {
    find_roots_inner(p, precision, None)
}

/// All roots of `p`, starting the iteration from `seeds`. Only the first
/// `deg` seeds are used, where `deg` excludes exact zero roots. Falls back to Newton-polygon starting points
/// if the seeded iteration stalls.
pub fn find_roots_seeded(p: &RationalPoly, precision: usize, seeds: &[Complex]) -> Result<RootSet> {
    match find_roots_inner(p, precision, Some(seeds)) {
        Err(Error::NonConvergence { .. }) => find_roots_inner(p, precision, None),
        other => other,
    }
}

fn find_roots_inner(
    p: &RationalPoly,
    precision: usize,
    seeds: Option<&[Complex]>,
) -> Result<RootSet> {
    if p.degree() == 0 {
        return Err(Error::Precondition(
            "root finding needs degree at least 1".into(),
        ));
    }
    if precision < 16 {
        return Err(Error::Precondition(
            "precision must be at least 16 bits".into(),
        ));
    }
    let coeffs = p.coeffs_desc();
    // exact zero roots come from trailing zero coefficients
    let zero_roots = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let reduced = &coeffs[..coeffs.len() - zero_roots];
    let mut roots: Vec<Root> = (0..zero_roots)
        .map(|_| Root {
            value: Complex::zero(precision),
            residual: bigfloat::zero(precision),
            certified_real: true,
            bracket: None,
        })
        .collect();

    let degree = reduced.len() - 1;
    let mut iterations = 0;
    if degree > 0 {
        let floats: Vec<Complex> = reduced
            .iter()
            .map(|c| Complex::real(bigfloat::from_rational(c, precision)))
            .collect();
        let start = match seeds {
            Some(s) if s.len() >= degree => s[..degree].to_vec(),
            Some(s) => {
                return Err(Error::Precondition(format!(
                    "expected {degree} seeds, got {}",
                    s.len()
                )));
            }
            None => polygon_seeds(&floats, precision),
        };
        let (found, its) = aberth(&floats, start, precision);
        iterations = its;
        let exact = RationalPoly::from_desc(reduced.to_vec());
        for z in found {
            let residual = backward_residual(&floats, &z);
            let (certified_real, bracket) = certify_real(&exact, &z, precision);
            roots.push(Root {
                value: z,
                residual,
                certified_real,
                bracket,
            });
        }
        let bound = bigfloat::pow2(-(precision as f64) / 2.0, precision);
        if roots.iter().any(|r| r.residual > bound) {
            return Err(Error::NonConvergence {
                iterations,
                precision,
            });
        }
    }
    Ok(RootSet {
        precision,
        roots,
        iterations,
    })
}

/// `p(z)` and `p'(z)` by Horner's rule; coefficients highest degree first.
fn eval_with_derivative(coeffs: &[Complex], z: &Complex) -> (Complex, Complex) {
    let p = z.re.precision();
    let mut value = Complex::zero(p);
    let mut deriv = Complex::zero(p);
    for c in coeffs {
        deriv = &(&deriv * z) + &value;
        value = &(&value * z) + c;
    }
    (value, deriv)
}

fn aberth(coeffs: &[Complex], mut z: Vec<Complex>, precision: usize) -> (Vec<Complex>, usize) {
    let n = z.len();
    if n == 1 {
        // linear: exact up to one rounding
        return (vec![&(-&coeffs[1]) / &coeffs[0]], 0);
    }
    let max_iterations = 200 + 4 * precision;
    // stop once every correction is below 2^(8 - precision) relative
    let tol = bigfloat::pow2(2.0 * (8.0 - precision as f64), precision);
    let mut converged = vec![false; n];
    for iteration in 1..=max_iterations {
        for k in 0..n {
            if converged[k] {
                continue;
            }
            let (value, deriv) = eval_with_derivative(coeffs, &z[k]);
            if value.is_zero() {
                converged[k] = true;
                continue;
            }
            let newton = &value / &deriv;
            let mut repulsion = Complex::zero(precision);
            for (j, other) in z.iter().enumerate() {
                if j != k {
                    repulsion = &repulsion + &(&z[k] - other).recip();
                }
            }
            let one = Complex::real(bigfloat::from_f64(1.0, precision));
            let step = &newton / &(&one - &(&newton * &repulsion));
            z[k] = &z[k] - &step;
            if step.norm_sqr() <= &tol * &z[k].norm_sqr() {
                converged[k] = true;
            }
        }
        if converged.iter().all(|&c| c) {
            return (z, iteration);
        }
    }
    // the residual check decides whether the last iterate is good enough
    (z, max_iterations)
}

fn backward_residual(coeffs: &[Complex], z: &Complex) -> Float {
    let p = z.re.precision();
    let (value, _) = eval_with_derivative(coeffs, z);
    let modulus = z.abs();
    let mut scale = bigfloat::zero(p);
    for c in coeffs {
        scale = &scale * &modulus + c.abs();
    }
    if bigfloat::is_zero(&scale) {
        return bigfloat::zero(p);
    }
    value.abs() / scale
}

/// Brackets an almost-real root by a rational interval and checks for a sign
/// change of the exact polynomial.
fn certify_real(
    p: &RationalPoly,
    z: &Complex,
    precision: usize,
) -> (bool, Option<(BigRational, BigRational)>) {
    let modulus = bigfloat::log2_abs(&z.abs());
    let im = bigfloat::log2_abs(&z.im);
    if im > modulus - precision as f64 / 2.0 {
        return (false, None);
    }
    let x = bigfloat::to_rational(&z.re);
    if p.eval(&x).is_zero() {
        return (true, Some((x.clone(), x)));
    }
    let width_log2 = if modulus.is_finite() { modulus } else { 0.0 } - precision as f64 / 4.0;
    let delta = bigfloat::to_rational(&bigfloat::pow2(width_log2, precision));
    let lo = &x - &delta;
    let hi = &x + &delta;
    let (a, b) = (p.eval(&lo), p.eval(&hi));
    let change = (a.is_negative() && b.is_positive()) || (a.is_positive() && b.is_negative());
    (change, Some((lo, hi)))
}

/// Starting points on circles whose radii come from the upper convex hull
/// of `(i, log|a_i|)` (Bini's initialization).
fn polygon_seeds(coeffs: &[Complex], precision: usize) -> Vec<Complex> {
    let n = coeffs.len() - 1;
    // a_i is the coefficient of z^i
    let logs: Vec<f64> = (0..=n)
        .map(|i| bigfloat::log2_abs(&coeffs[n - i].abs()))
        .collect();
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..=n {
        if !logs[i].is_finite() {
            continue;
        }
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b - a) as f64 * (logs[i] - logs[a]) - (i - a) as f64 * (logs[b] - logs[a]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut seeds = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let count = b - a;
        let log_radius = (logs[a] - logs[b]) / count as f64;
        for m in 0..count {
            let angle = TAU * m as f64 / count as f64 + TAU * a as f64 / n as f64 + 0.7;
            seeds.push(Complex::from_polar_log2(log_radius, angle, precision));
        }
    }
    seeds
}

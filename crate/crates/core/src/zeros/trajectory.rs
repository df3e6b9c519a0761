//! Zeros of the h-polynomials of `Δ^{(k)}` as `k` grows, and the Vieta
//! identities they satisfy.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::bigfloat::{self, Complex, Float};
use super::growth::iterate;
use super::roots::{find_roots_seeded, RootSet};
use crate::complex::{h_poly, FVector, SieveTable};
use crate::exact::{eigen_rationals, factorial, transfer_matrix, RationalPoly};
use crate::{Error, Result};

/// `max(requested, 64 + ceil(k log2 (d+1)!))`.
pub fn working_precision(d: usize, k: u32, requested: usize) -> usize {
    let log2 = factorial(d + 1).to_f64().expect("small factorial").log2();
    let needed = 64 + (k as f64 * log2).ceil() as usize;
    needed.max(requested)
}

/// Roots of `h^{Δ^{(k)}}` for one `k`, classified by modulus.
#[derive(Debug, Clone)]
pub struct TrajectoryEntry {
    pub k: u32,
    pub precision: usize,
    pub f_vector: FVector,
    pub h_poly: RationalPoly,
    pub roots: RootSet,
    /// Index into `roots.roots` of the maximum-modulus root.
    pub inf_index: usize,
    /// Index of the minimum-modulus root.
    pub zero_index: usize,
    pub interior: Vec<Complex>,
    pub max_residual: Float,
    /// `ρ_∞ / (-H_{1,d} f_d (d+1)!^k)`.
    pub ratio_inf: Complex,
    /// `|ρ_0| (d+1)!^k`.
    pub scaled_rho0: Float,
    pub interior_product: Complex,
    /// Two roots share the largest or the smallest modulus to within
    /// `2^{-precision/2}` relative.
    pub ambiguous: bool,
}

impl TrajectoryEntry {
    pub fn rho_inf(&self) -> &Complex {
        &self.roots.roots[self.inf_index].value
    }

    pub fn rho_0(&self) -> &Complex {
        &self.roots.roots[self.zero_index].value
    }

    pub fn rho_inf_certified_real(&self) -> bool {
        self.roots.roots[self.inf_index].certified_real
    }

    pub fn dim(&self) -> usize {
        self.f_vector.dim() as usize
    }
}

#[derive(Debug, Clone)]
pub struct ZeroTrajectory {
    pub base: FVector,
    /// `H_{1,d}`.
    pub h1: BigRational,
    pub entries: Vec<TrajectoryEntry>,
}

/// Trajectory of `Δ_n` for `k = 0..=k_max`.
pub fn trajectory(
    sieve: &SieveTable,
    n: u64,
    k_max: u32,
    precision: usize,
) -> Result<ZeroTrajectory> {
    let summary = sieve.summary(n)?;
    if summary.dim < 1 {
        return Err(Error::DimensionTooSmall {
            n,
            dim: summary.dim,
        });
    }
    trajectory_of(&summary.f_vector, k_max, precision)
}

/// Trajectory of any complex of dimension at least 1, given its f-vector.
pub fn trajectory_of(base: &FVector, k_max: u32, precision: usize) -> Result<ZeroTrajectory> {
    if base.dim() < 1 {
        return Err(Error::Precondition(format!(
            "trajectory needs dimension at least 1, got {}",
            base.dim()
        )));
    }
    if k_max > super::DEFAULT_MAX_SUBDIVISIONS {
        return Err(Error::ResourceLimit {
            what: "subdivisions",
            requested: k_max.into(),
            limit: super::DEFAULT_MAX_SUBDIVISIONS.into(),
        });
    }
    let d = base.dim() as usize;
    let h1 = eigen_rationals(d).get(0).clone();
    let vectors = iterate(&transfer_matrix(d), base, k_max);
    let entries = vectors
        .into_iter()
        .enumerate()
        .map(|(k, fv)| entry(fv, base.top(), &h1, k as u32, precision))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroTrajectory {
        base: base.clone(),
        h1,
        entries,
    })
}

fn entry(
    fv: FVector,
    base_top: &BigInt,
    h1: &BigRational,
    k: u32,
    requested: usize,
) -> Result<TrajectoryEntry> {
    let d = fv.dim() as usize;
    let precision = working_precision(d, k, requested);
    let h = h_poly(&fv);
    let growth = factorial(d + 1).pow(k);
    // asymptote of the dominant root
    let asymptote = -(h1 * BigRational::from_integer(base_top * &growth));
    let asymptote_f = bigfloat::from_rational(&asymptote, precision);
    let mut seeds = vec![Complex::real(asymptote_f.clone())];
    for m in 0..d {
        let angle = TAU * (m as f64 + 0.5) / d as f64 + 0.4;
        seeds.push(Complex::from_polar_log2(0.0, angle, precision));
    }
    let roots = find_roots_seeded(&h, precision, &seeds)?;

    let moduli: Vec<Float> = roots.values().map(Complex::norm_sqr).collect();
    let mut order: Vec<usize> = (0..moduli.len()).collect();
    order.sort_by(|&a, &b| moduli[a].partial_cmp(&moduli[b]).expect("finite moduli"));
    let zero_index = order[0];
    let inf_index = *order.last().expect("degree at least 2");
    // squared moduli, so the relative tolerance is doubled
    let tie = bigfloat::pow2(1.0 - precision as f64 / 2.0, precision);
    let close = |a: usize, b: usize| {
        let diff = bigfloat::abs(&(&moduli[a] - &moduli[b]));
        diff <= &tie * &moduli[a]
    };
    let n = order.len();
    let ambiguous = close(order[n - 1], order[n - 2]) || close(order[1], order[0]);

    let interior: Vec<Complex> = order[1..n - 1]
        .iter()
        .map(|&i| roots.roots[i].value.clone())
        .collect();
    let mut interior_product = Complex::real(bigfloat::from_f64(1.0, precision));
    for z in &interior {
        interior_product = &interior_product * z;
    }
    let max_residual = roots
        .roots
        .iter()
        .map(|r| r.residual.clone())
        .fold(bigfloat::zero(precision), |a, b| if b > a { b } else { a });
    let ratio_inf = roots.roots[inf_index]
        .value
        .scale(&(bigfloat::from_f64(1.0, precision) / asymptote_f));
    let scaled_rho0 = roots.roots[zero_index].value.abs() * bigfloat::from_int(&growth, precision);

    Ok(TrajectoryEntry {
        k,
        precision,
        f_vector: fv,
        h_poly: h,
        roots,
        inf_index,
        zero_index,
        interior,
        max_residual,
        ratio_inf,
        scaled_rho0,
        interior_product,
        ambiguous,
    })
}

/// Vieta checks: `prod ρ = -χ̃` and `sum ρ = (d+1) - f_0^{(k)}`.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub product: Complex,
    pub product_target: BigInt,
    /// `|prod - target| / max(|target|, 1)`.
    pub product_error: f64,
    pub sum: Complex,
    pub sum_target: BigInt,
    pub sum_error: f64,
}

impl IdentityReport {
    pub fn within(&self, tolerance: f64) -> bool {
        self.product_error <= tolerance && self.sum_error <= tolerance
    }
}

pub fn identity_checks(entry: &TrajectoryEntry) -> IdentityReport {
    let p = entry.precision;
    let mut product = Complex::real(bigfloat::from_f64(1.0, p));
    let mut sum = Complex::zero(p);
    for z in entry.roots.values() {
        product = &product * z;
        sum = &sum + z;
    }
    let product_target = -entry.f_vector.euler_char();
    let sum_target = BigInt::from(entry.dim() + 1) - entry.f_vector.get(0);
    let product_error = relative_error(&product, &product_target, p);
    let sum_error = relative_error(&sum, &sum_target, p);
    IdentityReport {
        product,
        product_target,
        product_error,
        sum,
        sum_target,
        sum_error,
    }
}

fn relative_error(value: &Complex, target: &BigInt, precision: usize) -> f64 {
    let t = bigfloat::from_int(target, precision);
    let diff = Complex::new(&value.re - &t, value.im.clone()).abs();
    let scale = if !target.is_zero() {
        bigfloat::abs(&t)
    } else {
        bigfloat::from_f64(1.0, precision)
    };
    bigfloat::to_f64(&(diff / scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_sieve;

    fn c(z: &Complex) -> (f64, f64) {
        z.to_f64_pair()
    }

    #[test]
    fn delta_6_first_subdivision() {
        let sieve = build_sieve(100).unwrap();
        let t = trajectory(&sieve, 6, 3, 128).unwrap();
        let e = &t.entries[1];
        assert_eq!(e.h_poly, RationalPoly::from_i64_desc(&[1, 2, -1]));
        let (inf, _) = c(e.rho_inf());
        let (zero, _) = c(e.rho_0());
        assert!((inf - (-1.0 - 2f64.sqrt())).abs() < 1e-14);
        assert!((zero - (2f64.sqrt() - 1.0)).abs() < 1e-14);
        assert!(e.interior.is_empty());
        assert!(e.rho_inf_certified_real());
        assert!(!e.ambiguous);
        for e in &t.entries {
            let r = identity_checks(e);
            assert_eq!(r.product_target, BigInt::from(-1));
            assert!(r.within(1e-9), "{r:?}");
        }
        let r = identity_checks(e);
        assert_eq!(r.sum_target, BigInt::from(-2));
    }

    #[test]
    fn delta_30_sum_identity() {
        let sieve = build_sieve(100).unwrap();
        let t = trajectory(&sieve, 30, 1, 128).unwrap();
        let e = &t.entries[1];
        assert_eq!(e.h_poly, RationalPoly::from_i64_desc(&[1, 15, -13, 3]));
        let r = identity_checks(e);
        assert_eq!(r.sum_target, BigInt::from(-15));
        assert!(r.within(1e-9));
    }

    #[test]
    fn delta_30_interior_root_tends_to_minus_one() {
        let sieve = build_sieve(100).unwrap();
        let t = trajectory(&sieve, 30, 12, 512).unwrap();
        let e = t.entries.last().unwrap();
        // the interior root approaches -1 like 3^-k
        let errors: Vec<f64> = t.entries[6..]
            .iter()
            .map(|e| (c(&e.interior[0]).0 + 1.0).abs())
            .collect();
        for w in errors.windows(2) {
            assert!((w[0] / w[1] - 3.0).abs() < 0.05, "{errors:?}");
        }
        assert!(errors.last().unwrap() < &1e-4);
        assert!((bigfloat::to_f64(&e.scaled_rho0) - 6.0).abs() < 1e-2);
        assert!((c(&e.ratio_inf).0 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn rejects_low_dimension() {
        let sieve = build_sieve(100).unwrap();
        assert!(matches!(
            trajectory(&sieve, 5, 2, 64),
            Err(Error::DimensionTooSmall { .. })
        ));
    }

    #[test]
    fn precision_floor() {
        assert_eq!(working_precision(1, 0, 10), 64);
        assert_eq!(working_precision(2, 12, 64), 64 + 32);
        assert_eq!(working_precision(2, 12, 512), 512);
    }

    #[test]
    fn zero_euler_characteristic_gives_exact_zero_root() {
        let sieve = build_sieve(100).unwrap();
        let t = trajectory(&sieve, 39, 2, 128).unwrap();
        for e in &t.entries {
            assert!(e.rho_0().is_zero());
            let r = identity_checks(e);
            assert_eq!(r.product_target, BigInt::zero());
            assert!(r.within(1e-9));
        }
    }
}

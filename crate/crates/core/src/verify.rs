//! Self-checks over the library's identities, grouped into suites.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{barycentric_subdivide, build_sieve, explicit_complex, f_vector, SieveTable};
use crate::exact::{
    descent_matrix, descent_matrix_bruteforce, eigen_rationals, eigen_rationals_direct, factorial,
    h_limit_coefficients, shift_matrix, shift_matrix_inverse, subdivision_count,
    subdivision_count_recurrence, transfer_matrix, SimplexMatrix, DEFAULT_BRUTE_FORCE_BOUND,
};
use crate::zeros::{
    alpha_records, bigfloat, growth_expansion, identity_checks, subdivided_f, trajectory,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Complex,
    Zeros,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Self::Core),
            "complex" => Ok(Self::Complex),
            "zeros" => Ok(Self::Zeros),
            "all" => Ok(Self::All),
            other => Err(Error::Usage(format!(
                "unknown suite `{other}` (expected all, core, complex or zeros)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Core => "core",
            Self::Complex => "complex",
            Self::Zeros => "zeros",
            Self::All => "all",
        })
    }
}

/// Outcome of one check; `witness` describes the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub witness: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn check(
    suite: &'static str,
    name: &'static str,
    outcome: std::result::Result<(), String>,
) -> Check {
    Check {
        suite,
        name,
        witness: outcome.err(),
    }
}

/// Runs a suite. The complex suite needs a sieve up to `10^5`.
pub fn run_suite(suite: Suite) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Core => core_checks(),
        Suite::Complex => complex_checks()?,
        Suite::Zeros => zeros_checks()?,
        Suite::All => {
            let mut all = core_checks();
            all.extend(complex_checks()?);
            all.extend(zeros_checks()?);
            all
        }
    })
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn for_each_d(
    ds: impl IntoIterator<Item = usize>,
    mut f: impl FnMut(usize) -> std::result::Result<(), String>,
) -> std::result::Result<(), String> {
    ds.into_iter()
        .try_for_each(|d| f(d).map_err(|w| format!("d = {d}: {w}")))
}

fn rational_matrix(m: &SimplexMatrix<BigInt>) -> SimplexMatrix<BigRational> {
    m.map(|x| BigRational::from_integer(x.clone()))
}

/// Entries `h^{(d)}_{i,j}` in the order `(0, d..-1), (1, d..-1), ...`, with the
/// last row `i = ⌊(d-1)/2⌋` stopping at `N` (`-1` for even `d`, `⌊(d-1)/2⌋` for odd).
pub fn monotone_chain(h: &SimplexMatrix<BigInt>) -> Vec<(isize, isize, BigInt)> {
    let d = h.dim() as isize;
    let last = (d - 1) / 2;
    let stop = if d % 2 == 0 { -1 } else { last };
    let mut out = Vec::new();
    for i in 0..=last {
        let end = if i == last { stop } else { -1 };
        let mut j = d;
        while j >= end {
            out.push((i, j, h.get(i, j).clone()));
            j -= 1;
        }
    }
    out
}

pub fn core_checks() -> Vec<Check> {
    let s = "core";
    vec![
        check(
            s,
            "subdivision counts: Stirling formula equals recurrence (d <= 12)",
            for_each_d(0..=12, |d| {
                for i in -1..=d as isize {
                    let a = subdivision_count(i, d as isize).map_err(|e| e.to_string())?;
                    let b =
                        subdivision_count_recurrence(i, d as isize).map_err(|e| e.to_string())?;
                    ensure(a == b, || format!("i = {i}: {a} != {b}"))?;
                }
                Ok(())
            }),
        ),
        check(
            s,
            "eigen rationals: chain sum equals recurrence (d <= 10)",
            for_each_d(1..=10, |d| {
                let e = eigen_rationals(d);
                for i in 0..d as isize {
                    let direct = eigen_rationals_direct(d, i).map_err(|e| e.to_string())?;
                    ensure(&direct == e.get(i), || {
                        format!("i = {i}: {direct} != {}", e.get(i))
                    })?;
                }
                Ok(())
            }),
        ),
        check(
            s,
            "transfer matrix eigenvector for (d+1)! (d <= 10)",
            for_each_d(0..=10, |d| {
                let f = rational_matrix(&transfer_matrix(d));
                let v = eigen_rationals(d).as_slice().to_vec();
                let scale = BigRational::from_integer(factorial(d + 1));
                let image = f.mul_vec(&v);
                ensure(
                    image.iter().zip(&v).all(|(a, b)| a == &(b * &scale)),
                    || format!("F v = {image:?}"),
                )
            }),
        ),
        check(
            s,
            "shift matrix times its inverse is the identity (d <= 10)",
            for_each_d(0..=10, |d| {
                let p = shift_matrix(d).mul_matrix(&shift_matrix_inverse(d));
                ensure(p == SimplexMatrix::identity(d), || format!("product\n{p}"))
            }),
        ),
        check(
            s,
            "shift similarity carries transfer to descent matrix (d <= 10)",
            for_each_d(0..=10, |d| {
                let p = shift_matrix(d)
                    .mul_matrix(&transfer_matrix(d))
                    .mul_matrix(&shift_matrix_inverse(d));
                ensure(p == descent_matrix(d), || format!("S F S^-1 =\n{p}"))
            }),
        ),
        check(
            s,
            "descent matrices: enumeration equals recurrence (d <= 5)",
            for_each_d(0..=5, |d| {
                let b = descent_matrix_bruteforce(d, DEFAULT_BRUTE_FORCE_BOUND)
                    .map_err(|e| e.to_string())?;
                ensure(b == descent_matrix(d), || format!("enumerated\n{b}"))
            }),
        ),
        check(
            s,
            "descent matrix rotational symmetry (d <= 10)",
            for_each_d(0..=10, |d| {
                let h = descent_matrix(d);
                let di = d as isize;
                for i in -1..=di {
                    for j in -1..=di {
                        ensure(h.get(i, j) == h.get(di - 1 - i, di - 1 - j), || {
                            format!("entry ({i},{j})")
                        })?;
                    }
                }
                Ok(())
            }),
        ),
        check(
            s,
            "descent matrix first row is 2^(d-j) (d <= 10)",
            for_each_d(1..=10, |d| {
                let h = descent_matrix(d);
                for j in 0..=d {
                    let expected = BigInt::one() << (d - j);
                    ensure(h.get(0, j as isize) == &expected, || {
                        format!("j = {j}: {}", h.get(0, j as isize))
                    })?;
                }
                Ok(())
            }),
        ),
        check(
            s,
            "descent matrix monotone chain (1 <= d <= 10)",
            for_each_d(1..=10, |d| {
                let chain = monotone_chain(&descent_matrix(d));
                for w in chain.windows(2) {
                    let ((i0, j0, a), (i1, j1, b)) = (&w[0], &w[1]);
                    ensure(a <= b, || {
                        format!("h_({i0},{j0}) = {a} > h_({i1},{j1}) = {b}")
                    })?;
                }
                Ok(())
            }),
        ),
        check(
            s,
            "limit polynomial: symmetric, positive inside, zero ends, sum 1 (1 <= d <= 12)",
            for_each_d(1..=12, |d| {
                let c = h_limit_coefficients(d);
                ensure(c[0].is_zero() && c[d + 1].is_zero(), || {
                    "nonzero end coefficient".into()
                })?;
                for i in 0..=d + 1 {
                    ensure(c[i] == c[d + 1 - i], || format!("H_{i} != H_{}", d + 1 - i))?;
                }
                for (i, x) in c.iter().enumerate().take(d + 1).skip(1) {
                    ensure(x.is_positive(), || format!("H_{i} = {x}"))?;
                }
                let sum: BigRational = c.iter().sum();
                ensure(sum.is_one(), || format!("sum = {sum}"))
            }),
        ),
        check(
            s,
            "limit coefficients are a descent-matrix eigenvector (d <= 10)",
            for_each_d(0..=10, |d| {
                let h = rational_matrix(&descent_matrix(d));
                let v = h_limit_coefficients(d);
                let scale = BigRational::from_integer(factorial(d + 1));
                let image = h.mul_vec(&v);
                ensure(
                    image.iter().zip(&v).all(|(a, b)| a == &(b * &scale)),
                    || format!("H v = {image:?}"),
                )
            }),
        ),
        check(
            s,
            "H_{1,d} bounds (1 <= d <= 12)",
            for_each_d(1..=12, |d| {
                let h1 = eigen_rationals(d).get(0).clone();
                let g = BigRational::from_integer(factorial(d + 1));
                let upper = BigRational::from_integer(BigInt::one() << (d + 1)) / &g;
                ensure(h1 <= upper, || format!("H_1 = {h1} > {upper}"))?;
                // sqrt(2)^d / ((d+1)! d) <= H_1, squared
                let lower_sq = BigRational::from_integer(BigInt::one() << d)
                    / (&g * &g * BigRational::from_integer((d * d).into()));
                ensure(lower_sq <= &h1 * &h1, || {
                    format!("H_1^2 = {} < {lower_sq}", &h1 * &h1)
                })
            }),
        ),
    ]
}

pub fn complex_checks() -> Result<Vec<Check>> {
    let s = "complex";
    let limit = 100_000;
    let sieve = build_sieve(limit)?;
    let mut checks = vec![check(
        s,
        "alternating face count equals -M(n) (n <= 10^5)",
        mertens_identity(&sieve, limit),
    )];
    checks.push(check(
        s,
        "first negative reduced Euler characteristic is at n = 94",
        {
            let first = sieve
                .summaries(1000)?
                .filter_map(|r| r.ok())
                .find(|x| x.n >= 2 && x.euler_char < 0)
                .map(|x| x.n);
            ensure(first == Some(94), || format!("found {first:?}"))
        },
    ));
    checks.push(check(
        s,
        "explicit complexes match sieve summaries (n <= 400)",
        (|| {
            for n in 1..=400 {
                let k = explicit_complex(n).map_err(|e| e.to_string())?;
                let summary = sieve.summary(n).map_err(|e| e.to_string())?;
                ensure(f_vector(&k) == summary.f_vector, || format!("n = {n}"))?;
            }
            Ok(())
        })(),
    ));
    checks.push(check(
        s,
        "explicit subdivisions of Δ_6, Δ_30 match transfer products (k <= 2)",
        (|| {
            for n in [6, 30] {
                let mut k = explicit_complex(n).map_err(|e| e.to_string())?;
                let base = f_vector(&k);
                for step in 1..=2 {
                    k = barycentric_subdivide(&k).map_err(|e| e.to_string())?;
                    let expected = subdivided_f(&base, step).map_err(|e| e.to_string())?;
                    ensure(f_vector(&k) == expected, || {
                        format!("n = {n}, k = {step}: {:?}", f_vector(&k).counts())
                    })?;
                }
            }
            Ok(())
        })(),
    ));
    Ok(checks)
}

fn mertens_identity(sieve: &SieveTable, limit: u64) -> std::result::Result<(), String> {
    let mut running = 0i64;
    for summary in sieve.summaries(limit).map_err(|e| e.to_string())? {
        let summary = summary.map_err(|e| e.to_string())?;
        running += i64::from(sieve.moebius(summary.n).map_err(|e| e.to_string())?);
        let chi = summary.f_vector.euler_char();
        ensure(chi == BigInt::from(-running), || {
            format!("n = {}: χ̃ = {chi}, M = {running}", summary.n)
        })?;
    }
    Ok(())
}

/// Tolerances for the trajectory checks.
pub mod tolerance {
    pub const DELTA_6_FACTOR: f64 = 8.0;
    pub const DELTA_30_RATIO: f64 = 1e-3;
    pub const DELTA_30_SCALED_RHO0: f64 = 1e-2;
    pub const DELTA_30_INTERIOR: f64 = 1e-6;
    pub const VIETA: f64 = 1e-9;
}

pub fn zeros_checks() -> Result<Vec<Check>> {
    let s = "zeros";
    let sieve = build_sieve(10_000)?;
    let mut checks = Vec::new();

    let t6 = trajectory(&sieve, 6, 16, 128)?;
    checks.push(check(
        s,
        "Δ_6: ratio and scaled ρ_0 within 8·2^-k (4 <= k <= 16)",
        (|| {
            for e in &t6.entries[4..] {
                let bound = tolerance::DELTA_6_FACTOR * 2f64.powi(-(e.k as i32));
                let ratio = (e.ratio_inf.to_f64_pair().0 - 1.0).abs();
                let rho0 = (bigfloat::to_f64(&e.scaled_rho0) - 1.0).abs();
                ensure(ratio <= bound && rho0 <= bound, || {
                    format!("k = {}: {ratio:e}, {rho0:e} > {bound:e}", e.k)
                })?;
            }
            Ok(())
        })(),
    ));

    let t30 = trajectory(&sieve, 30, 12, 512)?;
    let last = t30.entries.last().expect("k = 12");
    checks.push(check(s, "Δ_30, k = 12: |ratio_inf - 1| <= 1e-3", {
        let err = (last.ratio_inf.to_f64_pair().0 - 1.0).abs();
        ensure(err <= tolerance::DELTA_30_RATIO, || format!("{err:e}"))
    }));
    checks.push(check(s, "Δ_30, k = 12: ||ρ_0| 6^k - 6| <= 1e-2", {
        let err = (bigfloat::to_f64(&last.scaled_rho0) - 6.0).abs();
        ensure(err <= tolerance::DELTA_30_SCALED_RHO0, || {
            format!("{err:e}")
        })
    }));
    checks.push(check(s, "Δ_30, k = 12: interior root within 1e-6 of -1", {
        let (re, im) = last.interior[0].to_f64_pair();
        let err = (re + 1.0).hypot(im);
        ensure(err <= tolerance::DELTA_30_INTERIOR, || {
            format!("root {re}, error {err:e}")
        })
    }));
    checks.push(check(
        s,
        "Δ_30, k = 12: interior product within 1e-6 of -1",
        {
            let (re, im) = last.interior_product.to_f64_pair();
            let err = (re + 1.0).hypot(im);
            ensure(err <= tolerance::DELTA_30_INTERIOR, || {
                format!("product {re}, error {err:e}")
            })
        },
    ));
    checks.push(check(
        s,
        "ρ_∞ certified real for k >= 2",
        (|| {
            for (n, t) in [(6, &t6), (30, &t30)] {
                for e in &t.entries[2..] {
                    ensure(e.rho_inf_certified_real(), || {
                        format!("n = {n}, k = {}", e.k)
                    })?;
                }
            }
            Ok(())
        })(),
    ));
    checks.push(check(
        s,
        "Vieta identities within 1e-9 at every k",
        (|| {
            for (n, t) in [(6, &t6), (30, &t30)] {
                for e in &t.entries {
                    let r = identity_checks(e);
                    ensure(r.within(tolerance::VIETA), || {
                        format!(
                            "n = {n}, k = {}: product {:e}, sum {:e}",
                            e.k, r.product_error, r.sum_error
                        )
                    })?;
                }
            }
            Ok(())
        })(),
    ));
    checks.push(check(
        s,
        "growth expansion: leading term and closed form (k <= 20)",
        (|| {
            for n in [6, 30, 210] {
                let fv = sieve.summary(n).map_err(|e| e.to_string())?.f_vector;
                let g = growth_expansion(&fv).map_err(|e| e.to_string())?;
                let d = g.dim();
                let e = eigen_rationals(d);
                for i in 0..=d {
                    let lead = BigRational::from_integer(fv.top().clone()) * e.get(i as isize);
                    ensure(g.coefficient(0, i) == &lead, || format!("n = {n}, C_0,{i}"))?;
                }
                for k in 0..=20 {
                    let exact = subdivided_f(&fv, k).map_err(|e| e.to_string())?;
                    for i in 0..=d {
                        let v = BigRational::from_integer(exact.get(i as isize).clone());
                        ensure(g.evaluate(i, k) == v, || {
                            format!("n = {n}, k = {k}, i = {i}")
                        })?;
                    }
                }
            }
            Ok(())
        })(),
    ));
    checks.push(check(
        s,
        "α_n H_{1,d} f_d = χ̃ exactly (n <= 10^4)",
        (|| {
            for r in alpha_records(&sieve, 1, 10_000).map_err(|e| e.to_string())? {
                ensure(r.is_exact(), || format!("n = {}", r.n))?;
            }
            Ok(())
        })(),
    ));
    Ok(checks)
}

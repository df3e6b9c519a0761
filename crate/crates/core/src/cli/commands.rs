use std::f64::consts::LOG10_2;
use std::str::FromStr;

use super::OutputRecord;
use crate::complex::{dim_of, SieveTable};
use crate::exact::{descent_matrix, eigen_rationals, h_limit_coefficients, SubdivisionCountTable};
use crate::verify::{run_suite, Suite};
use crate::zeros::bigfloat::{self, Complex, Float};
use crate::zeros::{identity_checks, trajectory, AlphaContext};
use crate::{Error, Result};

/// Largest dimension [`cmd_tables`] accepts.
pub const MAX_TABLE_DIM: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `f_{i,d}`
    SubdivisionCounts,
    /// `F_{i,d}`
    EigenRationals,
    /// `H_{i,d}`
    LimitCoefficients,
    /// entries of the descent matrices `H_d`
    DescentMatrix,
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(Self::SubdivisionCounts),
            "F" => Ok(Self::EigenRationals),
            "H" => Ok(Self::LimitCoefficients),
            "Hmatrix" => Ok(Self::DescentMatrix),
            other => Err(Error::Usage(format!(
                "unknown table kind `{other}` (expected f, F, H or Hmatrix)"
            ))),
        }
    }
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::SubdivisionCounts => "f",
            Self::EigenRationals => "F",
            Self::LimitCoefficients => "H",
            Self::DescentMatrix => "Hmatrix",
        }
    }
}

/// Long-format tables ordered by `d`, then `i` (then `j`).
///
/// * `f`: all `-1 <= i, d <= max_d`, zeros included.
/// * `F`: `-1 <= i <= d` for `-1 <= d <= max_d`.
/// * `H`: `0 <= i <= d+1` for `0 <= d <= max_d`.
/// * `Hmatrix`: `h^{(d)}_{i,j}` for `0 <= d <= max_d`, `-1 <= i, j <= d`.
pub fn cmd_tables(kind: TableKind, max_d: usize) -> Result<OutputRecord> {
    if max_d > MAX_TABLE_DIM {
        return Err(Error::ResourceLimit {
            what: "table dimension",
            requested: max_d as u128,
            limit: MAX_TABLE_DIM as u128,
        });
    }
    let command = format!("tables --kind {}", kind.name());
    let m = max_d as isize;
    let out = match kind {
        TableKind::SubdivisionCounts => {
            let table = SubdivisionCountTable::new(max_d);
            let mut out = OutputRecord::new(&command, &["i", "d", "value"]);
            for d in -1..=m {
                for i in -1..=m {
                    out.push(vec![
                        i.to_string(),
                        d.to_string(),
                        table.get(i, d).to_string(),
                    ]);
                }
            }
            out
        }
        TableKind::EigenRationals => {
            let mut out = OutputRecord::new(&command, &["i", "d", "value"]);
            out.push(vec!["-1".into(), "-1".into(), "1".into()]);
            for d in 0..=max_d {
                let e = eigen_rationals(d);
                for i in -1..=d as isize {
                    out.push(vec![i.to_string(), d.to_string(), e.get(i).to_string()]);
                }
            }
            out
        }
        TableKind::LimitCoefficients => {
            let mut out = OutputRecord::new(&command, &["i", "d", "value"]);
            for d in 0..=max_d {
                for (i, c) in h_limit_coefficients(d).iter().enumerate() {
                    out.push(vec![i.to_string(), d.to_string(), c.to_string()]);
                }
            }
            out
        }
        TableKind::DescentMatrix => {
            let mut out = OutputRecord::new(&command, &["d", "i", "j", "value"]);
            for d in 0..=max_d {
                let h = descent_matrix(d);
                for i in -1..=d as isize {
                    for j in -1..=d as isize {
                        out.push(vec![
                            d.to_string(),
                            i.to_string(),
                            j.to_string(),
                            h.get(i, j).to_string(),
                        ]);
                    }
                }
            }
            out
        }
    };
    Ok(out.with_meta("max_d", max_d))
}

fn check_range(from: u64, to: u64, sieve: &SieveTable) -> Result<()> {
    if from == 0 || from > to {
        return Err(Error::Usage(format!(
            "invalid range {from}..={to} (need 1 <= from <= to)"
        )));
    }
    if to > sieve.limit() {
        return Err(Error::SieveRange {
            x: to,
            limit: sieve.limit(),
        });
    }
    Ok(())
}

/// Rows `(n, χ̃(Δ_n), M(n), d_n)` for `from <= n <= to`.
pub fn cmd_chi(sieve: &SieveTable, from: u64, to: u64) -> Result<OutputRecord> {
    check_range(from, to, sieve)?;
    let mut out = OutputRecord::new("chi", &["n", "euler_char", "mertens", "dim"])
        .with_meta("sieve_limit", sieve.limit());
    for summary in sieve.summaries(to)?.skip(from as usize - 1) {
        let s = summary?;
        out.push(vec![
            s.n.to_string(),
            s.euler_char.to_string(),
            s.mertens.to_string(),
            s.dim.to_string(),
        ]);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaSelection {
    List(Vec<u64>),
    Range { from: u64, to: u64 },
}

const SKIP: &str = "skip";

/// Rows `(n, d_n, χ̃, f_{d_n}, H_{1,d_n}, α_n, exponent)`. Values of `n` with
/// `d_n < 1` keep `n`, `d_n` and `χ̃` and mark the other cells `skip`.
pub fn cmd_alpha(sieve: &SieveTable, selection: &AlphaSelection) -> Result<OutputRecord> {
    let ns: Vec<u64> = match selection {
        AlphaSelection::List(ns) => ns.clone(),
        AlphaSelection::Range { from, to } => {
            check_range(*from, *to, sieve)?;
            (*from..=*to).collect()
        }
    };
    let max = ns.iter().copied().max().unwrap_or(1);
    if max > sieve.limit() {
        return Err(Error::SieveRange {
            x: max,
            limit: sieve.limit(),
        });
    }
    let ctx = AlphaContext::for_limit(max);
    let mut out = OutputRecord::new(
        "alpha",
        &[
            "n",
            "dim",
            "euler_char",
            "top_count",
            "h1",
            "alpha",
            "exponent",
        ],
    )
    .with_meta("sieve_limit", sieve.limit())
    .with_meta("exponent_digits", 15);
    for n in ns {
        if n == 0 {
            return Err(Error::Usage("n must be at least 1".into()));
        }
        let summary = sieve.summary(n)?;
        if summary.dim < 1 {
            out.push(vec![
                n.to_string(),
                summary.dim.to_string(),
                summary.euler_char.to_string(),
                SKIP.into(),
                SKIP.into(),
                SKIP.into(),
                SKIP.into(),
            ]);
            continue;
        }
        let r = ctx.record(&summary)?;
        let exponent = match r.exponent {
            Some(x) => format!("{x:.14e}"),
            None => "undefined".into(),
        };
        out.push(vec![
            n.to_string(),
            r.dim.to_string(),
            r.euler_char.to_string(),
            r.top.to_string(),
            r.h1.to_string(),
            r.alpha.to_string(),
            exponent,
        ]);
    }
    Ok(out)
}

/// Significant decimal digits printed for a value computed at `precision` bits.
pub fn float_digits(precision: usize) -> usize {
    ((precision as f64 * LOG10_2) as usize)
        .saturating_sub(4)
        .clamp(6, 30)
}

fn fmt_float(x: &Float, digits: usize) -> String {
    bigfloat::format_sci(x, digits)
}

/// Imaginary parts below `|z| 2^{-precision/2}` are treated as rounding noise
/// and not printed.
fn fmt_complex(z: &Complex, digits: usize) -> String {
    let re = fmt_float(&z.re, digits);
    let precision = z.re.precision().max(z.im.precision());
    let noise = bigfloat::log2_abs(&z.abs()) - precision as f64 / 2.0;
    if bigfloat::is_zero(&z.im) || bigfloat::log2_abs(&z.im) <= noise {
        return re;
    }
    let im = fmt_float(&bigfloat::abs(&z.im), digits);
    let sign = if z.im < bigfloat::zero(z.im.precision()) {
        '-'
    } else {
        '+'
    };
    format!("{re}{sign}{im}i")
}

/// One row per `k = 0..=k_max` with roots (ascending modulus, `;`-separated),
/// the classified roots, the normalized quantities and the Vieta errors.
pub fn cmd_zeros(sieve: &SieveTable, n: u64, k_max: u32, precision: usize) -> Result<OutputRecord> {
    if n > sieve.limit() {
        return Err(Error::SieveRange {
            x: n,
            limit: sieve.limit(),
        });
    }
    if dim_of(n) < 1 {
        return Err(Error::DimensionTooSmall { n, dim: dim_of(n) });
    }
    let t = trajectory(sieve, n, k_max, precision)?;
    let mut out = OutputRecord::new(
        "zeros",
        &[
            "k",
            "precision_bits",
            "digits",
            "roots",
            "rho_0",
            "rho_inf",
            "ratio_inf",
            "scaled_rho0",
            "interior_product",
            "max_residual",
            "product_error",
            "sum_error",
            "ambiguous",
            "rho_inf_real",
        ],
    )
    .with_meta("n", n)
    .with_meta("requested_precision_bits", precision)
    .with_meta("h1", &t.h1);
    for e in &t.entries {
        let digits = float_digits(e.precision);
        let mut by_modulus: Vec<&Complex> = e.roots.values().collect();
        by_modulus.sort_by(|a, b| a.norm_sqr().partial_cmp(&b.norm_sqr()).expect("finite"));
        let roots: Vec<String> = by_modulus.iter().map(|z| fmt_complex(z, digits)).collect();
        let report = identity_checks(e);
        out.push(vec![
            e.k.to_string(),
            e.precision.to_string(),
            digits.to_string(),
            roots.join(";"),
            fmt_complex(e.rho_0(), digits),
            fmt_complex(e.rho_inf(), digits),
            fmt_complex(&e.ratio_inf, digits),
            fmt_float(&e.scaled_rho0, digits),
            fmt_complex(&e.interior_product, digits),
            fmt_float(&e.max_residual, 4),
            format!("{:.4e}", report.product_error),
            format!("{:.4e}", report.sum_error),
            e.ambiguous.to_string(),
            e.rho_inf_certified_real().to_string(),
        ]);
    }
    Ok(out)
}

/// Runs a suite; the flag is `true` when every check passed.
pub fn cmd_verify(suite: Suite) -> Result<(OutputRecord, bool)> {
    let checks = run_suite(suite)?;
    let mut out = OutputRecord::new("verify", &["suite", "check", "status", "witness"])
        .with_meta("suite", suite);
    let mut all = true;
    for c in &checks {
        all &= c.passed();
        let status = if c.passed() { "pass" } else { "fail" };
        out.push(vec![
            c.suite.into(),
            c.name.into(),
            status.into(),
            c.witness.clone().unwrap_or_default(),
        ]);
    }
    Ok((out, all))
}

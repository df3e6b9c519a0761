//! Zeros of h(sd^k Δ_n) as k grows.
//!
//! `cargo run --release --example zero_trajectory -- 30 12 512`

use euler_primes::complex::build_sieve;
use euler_primes::zeros::{bigfloat, identity_checks, trajectory};

fn main() -> euler_primes::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(30);
    let k_max = args.next().unwrap_or(8) as u32;
    let precision = args.next().unwrap_or(256) as usize;

    let sieve = build_sieve(n)?;
    let t = trajectory(&sieve, n, k_max, precision)?;
    println!("Δ_{n}: base f = {:?}, H_1 = {}", t.base.counts(), t.h1);
    for e in &t.entries {
        let report = identity_checks(e);
        let interior: Vec<String> = e
            .interior
            .iter()
            .map(|z| bigfloat::format_sci(&z.re, 12))
            .collect();
        println!(
            "k = {:>2} bits = {:>4}  rho_inf = {}  rho_inf / asymptote = {}  |rho_0| scaled = {}  interior = [{}]  vieta err = {:.1e}{}",
            e.k,
            e.precision,
            bigfloat::format_sci(&e.rho_inf().re, 12),
            bigfloat::format_sci(&e.ratio_inf.re, 12),
            bigfloat::format_sci(&e.scaled_rho0, 12),
            interior.join(", "),
            report.product_error.max(report.sum_error),
            if e.ambiguous { "  (near-tie in modulus)" } else { "" },
        );
    }
    Ok(())
}

//! Exact α_n = χ̃(Δ_n) / (H_(1,d) f_d(Δ_n)) and the two growth bounds.

use euler_primes::complex::build_sieve;
use euler_primes::zeros::{alpha_records, conjecture_report};

fn main() -> euler_primes::Result<()> {
    let to = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(250);
    let sieve = build_sieve(to)?;
    for r in alpha_records(&sieve, 6, to)? {
        let exponent = r
            .exponent
            .map_or("undefined".to_string(), |x| format!("{x:.6}"));
        println!(
            "n = {:>5} d = {} alpha = {:>12} exponent = {exponent}",
            r.n,
            r.dim,
            r.alpha.to_string()
        );
    }
    let report = conjecture_report(&sieve, to)?;
    let square = report.iter().filter(|row| !row.within_square).count();
    let three_halves = report.iter().filter(|row| !row.within_three_halves).count();
    println!("outside |α| <= (d+1)!^2: {square}; outside α^2 <= (d+1)!^3: {three_halves}");
    Ok(())
}

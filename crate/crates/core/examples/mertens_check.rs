//! χ̃(Δ_n) = -M(n) from the weight counts, up to a bound.

use euler_primes::complex::build_sieve;

fn main() -> euler_primes::Result<()> {
    let to: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100_000);
    let sieve = build_sieve(to)?;
    let mut mismatches = 0;
    let (mut low, mut high) = (0i64, 0i64);
    for s in sieve.summaries(to)? {
        let s = s?;
        if s.euler_char != -s.mertens {
            mismatches += 1;
        }
        low = low.min(s.mertens);
        high = high.max(s.mertens);
    }
    println!("n <= {to}: {mismatches} mismatches, M(n) ranges over [{low}, {high}]");
    Ok(())
}

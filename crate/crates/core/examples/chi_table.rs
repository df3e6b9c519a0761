//! Reduced Euler characteristic of Δ_n next to the Mertens function.
//!
//! `cargo run --example chi_table -- 100`

use euler_primes::complex::build_sieve;

fn main() -> euler_primes::Result<()> {
    let to: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);
    let sieve = build_sieve(to)?;
    println!("{:>6} {:>4} {:>6} {:>6}", "n", "dim", "chi", "M(n)");
    let mut first_negative = None;
    for s in sieve.summaries(to)? {
        let s = s?;
        if first_negative.is_none() && s.n > 1 && s.euler_char < 0 {
            first_negative = Some(s.n);
        }
        println!(
            "{:>6} {:>4} {:>6} {:>6}",
            s.n, s.dim, s.euler_char, s.mertens
        );
    }
    match first_negative {
        Some(n) => println!("first negative reduced Euler characteristic at n = {n}"),
        None => println!("no negative value for 1 < n <= {to}"),
    }
    Ok(())
}

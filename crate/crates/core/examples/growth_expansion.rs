//! Closed form f_i(sd^k Δ_n) = sum_j C_(j,i) ((d+1-j)!)^k.

use euler_primes::complex::build_sieve;
use euler_primes::zeros::{growth_expansion, subdivided_f};

fn main() -> euler_primes::Result<()> {
    let sieve = build_sieve(210)?;
    for n in [6, 30, 210] {
        let fv = sieve.summary(n)?.f_vector;
        let g = growth_expansion(&fv)?;
        println!("Δ_{n}, f = {:?}", fv.counts());
        for i in 0..=g.dim() {
            let terms: Vec<String> = g.row(i).iter().map(ToString::to_string).collect();
            println!("  C_(.,{i}) = [{}]", terms.join(", "));
        }
        let k = 10;
        let exact = subdivided_f(&fv, k)?;
        let agree = (0..=g.dim()).all(|i| g.evaluate(i, k) == exact.get(i as isize).clone().into());
        println!("  k = {k}: expansion equals F^k f: {agree}");
    }
    Ok(())
}

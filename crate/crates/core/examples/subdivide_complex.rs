//! Builds Δ_30 explicitly, subdivides it twice and compares the face counts
//! with the transfer matrix product.

use euler_primes::complex::{barycentric_subdivide, explicit_complex, f_vector};
use euler_primes::zeros::subdivided_f;

fn main() -> euler_primes::Result<()> {
    let n = 30;
    let mut k = explicit_complex(n)?;
    let base = f_vector(&k);
    println!(
        "Δ_{n}: {} simplices, f = {:?}, chi = {}",
        k.len(),
        base.counts(),
        base.euler_char()
    );
    for step in 1..=2 {
        k = barycentric_subdivide(&k)?;
        let counted = f_vector(&k);
        let predicted = subdivided_f(&base, step)?;
        println!(
            "sd^{step}: {} simplices, f = {:?}, chi = {}, matches F^k f: {}",
            k.len(),
            counted.counts(),
            counted.euler_char(),
            counted == predicted
        );
    }
    Ok(())
}

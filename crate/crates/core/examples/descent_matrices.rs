//! Transfer, shift and descent matrices, and the similarity S F S^-1 = H.

use euler_primes::exact::{
    descent_matrix, descent_matrix_bruteforce, shift_matrix, shift_matrix_inverse, transfer_matrix,
};

fn main() -> euler_primes::Result<()> {
    for d in 0..=4 {
        let f = transfer_matrix(d);
        let h = descent_matrix(d);
        let similar = shift_matrix(d)
            .mul_matrix(&f)
            .mul_matrix(&shift_matrix_inverse(d));
        println!("d = {d}");
        println!("F =\n{f}");
        println!("H =\n{h}");
        println!("S F S^-1 == H: {}", similar == h);
        // permutation count, feasible for small d only
        println!(
            "H from permutations agrees: {}\n",
            descent_matrix_bruteforce(d, 6)? == h
        );
    }
    Ok(())
}

//! Subdivision counts f_{i,d}, eigenvector entries F_{i,d} and the limit
//! polynomial coefficients H_{i,d}.

use euler_primes::exact::{eigen_rationals, h_limit_coefficients, SubdivisionCountTable};

fn main() {
    let max_d = 7;
    let table = SubdivisionCountTable::new(max_d);
    println!("f_(i,d): rows d, columns i = -1..=d");
    for d in -1..=max_d as isize {
        let row: Vec<String> = (-1..=d).map(|i| table.get(i, d).to_string()).collect();
        println!("  d = {d:>2}: {}", row.join(" "));
    }

    println!("F_(i,d):");
    for d in 0..=max_d {
        let e = eigen_rationals(d);
        let row: Vec<String> = (-1..=d as isize).map(|i| e.get(i).to_string()).collect();
        println!("  d = {d:>2}: {}", row.join(" "));
    }

    println!("H_(i,d), i = 0..=d+1:");
    for d in 0..=max_d {
        let row: Vec<String> = h_limit_coefficients(d)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  d = {d:>2}: {}", row.join(" "));
    }
}

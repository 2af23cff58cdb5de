//! The character table of S_n by the Murnaghan–Nakayama rule, with its
//! orthogonality relations checked exactly.
//!
//!     cargo run --release --example character_table -- 6

use num_bigint::BigInt;
use num_traits::Zero;
use symgen::chars::{class_size, dimension, CharacterTable};
use symgen::exact::{factorial, to_bigint};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let table = CharacterTable::new(n);

    print!("{:>14}", "");
    for c in &table.classes {
        print!("{:>10}", c.to_string());
    }
    println!();
    for (i, l) in table.labels.iter().enumerate() {
        print!("{:>14}", l.to_string());
        for j in 0..table.classes.len() {
            print!("{:>10}", table.value(i, j));
        }
        println!("   dim {}", dimension(l));
    }

    let f = to_bigint(&factorial(n));
    let k = table.labels.len();
    let mut orthonormal = true;
    for a in 0..k {
        for b in 0..k {
            let s: BigInt = (0..k)
                .map(|c| to_bigint(&class_size(&table.classes[c])) * table.value(a, c) * table.value(b, c))
                .sum();
            orthonormal &= if a == b { s == f } else { s.is_zero() };
        }
    }
    println!("\nrow orthogonality over {k} characters: {}", if orthonormal { "exact" } else { "FAILED" });
}

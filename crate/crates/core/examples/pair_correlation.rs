//! Q(πσ^i ∈ 𝔠, πσ^j ∈ 𝔠) computed by brute force over 𝔠 and by the
//! character expansion, as exact rationals.
//!
//!     cargo run --release --example pair_correlation

use symgen::experiments::{character_side_correlation, exact_pair_correlation};

fn main() -> symgen::Result<()> {
    for nu in [1, 2, 3, 4, 5, 2520] {
        let c = exact_pair_correlation(9, nu)?;
        println!(
            "n = 9, ν = {nu:>4}: direct {:<12} character {:<12} {}",
            c.direct.to_string(),
            c.character.to_string(),
            if c.agree() { "equal" } else { "DIFFERENT" }
        );
    }
    let c = exact_pair_correlation(9, 1)?;
    println!("(|𝔠|/n!)² = {} = trivial-character term {}", &c.density * &c.density, c.trivial_term);

    for nu in 1..=4 {
        println!("n = 12, ν = {nu}: {}", character_side_correlation(12, nu)?);
    }
    Ok(())
}

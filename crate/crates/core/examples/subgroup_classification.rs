//! Sorting generated subgroups into intransitive, imprimitive, proper
//! primitive, and those containing A_n.
//!
//!     cargo run --release --example subgroup_classification

use symgen::group::{classify_tuple, GeneratorSet};
use symgen::perm::Permutation;

fn show(name: &str, n: usize, gens: &[&str]) -> symgen::Result<()> {
    let perms = gens
        .iter()
        .map(|g| Permutation::parse(g, n))
        .collect::<symgen::Result<Vec<_>>>()?;
    let order = GeneratorSet::from_perms(perms.clone())?.bsgs().order();
    let class = classify_tuple(&perms)?;
    println!("{name:<28} order {order:<12} {}", class.to_json());
    Ok(())
}

fn main() -> symgen::Result<()> {
    show("S_8", 8, &["(1 2 3 4 5 6 7 8)", "(1 2)"])?;
    show("A_7", 7, &["(1 2 3)", "(1 2 3 4 5 6 7)"])?;
    show("two orbits", 6, &["(1 2 3)", "(4 5 6)"])?;
    show("dihedral of order 12", 6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"])?;
    show("S_2 wr S_4", 8, &["(1 2)", "(1 3 5 7)(2 4 6 8)", "(1 3)(2 4)"])?;
    show("AGL(1,7)", 7, &["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"])?;
    show("PSL(2,7) on 7 points", 7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"])?;
    show("Mathieu M_11", 11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"])?;
    Ok(())
}

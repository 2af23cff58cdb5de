//! The partitions λ with a p-rim hook leaving a single row, drawn as Ferrers
//! diagrams with the hook marked, and the class-sum identity they govern.
//!
//!     cargo run --release --example lambda_classification

use symgen::chars::{lambda_np, p_class_sum, rim_hooks, CharacterEvaluator};
use symgen::counting::pi_n;
use symgen::exact::factorial;
use symgen::partition::{partitions, Partition};

fn draw(lambda: &Partition, p: usize) {
    let rest = Partition::row(lambda.size() - p);
    let hook = rim_hooks(lambda, p)
        .into_iter()
        .find(|h| h.remainder == rest)
        .expect("distinguished hook");
    for (row, &len) in lambda.parts().iter().enumerate() {
        let line: String = (0..len)
            .map(|col| if hook.cells.contains(&(row, col)) { '#' } else { 'o' })
            .collect();
        println!("    {line}");
    }
    println!("    leg length {}\n", hook.leg_length);
}

fn main() -> symgen::Result<()> {
    let (n, p) = (10, 7);
    println!("Λ({n},{p}); '#' marks the {p}-rim hook:\n");
    for entry in lambda_np(n, p)? {
        println!("  {} ({:?})", entry.partition, entry.case);
        draw(&entry.partition, p);
    }

    let n = 12;
    let mut eval = CharacterEvaluator::new();
    for p in pi_n(n).primes {
        let members = lambda_np(n, p)?;
        println!("n = {n}, p = {p}: Σ_(C ∋ p-cycle) |C| χ^λ(C), in units of n!/p = {}", factorial(n) / p);
        let unit = num_bigint::BigInt::from(factorial(n) / p);
        for l in partitions(n) {
            let s = p_class_sum(&l, p, &mut eval)?;
            if !num_traits::Zero::is_zero(&s) {
                let tag = if members.iter().any(|e| e.partition == l) { "Λ" } else { "trivial" };
                println!("  {:<22} {:>3}   {tag}", l.to_string(), s / &unit);
            }
        }
        println!("  every other λ ⊢ {n} gives 0");
    }
    Ok(())
}

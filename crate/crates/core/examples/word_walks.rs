//! Counting reduced words w with π·w(σ, τ) ∈ 𝔠, and how often short words
//! collapse to the identity.
//!
//!     cargo run --release --example word_walks

use symgen::exact::rational_to_f64;
use symgen::experiments::{enumerate_words, evaluate_word, word_experiment, ExperimentConfig, ReducedWord};
use symgen::perm::Permutation;

fn main() -> symgen::Result<()> {
    let words = enumerate_words(2)?;
    println!("{} reduced words of length <= 2: {}", words.len(), words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "));

    let sigma = Permutation::parse("(1 2 3 4 5)", 5)?;
    let tau = Permutation::parse("(1 2)", 5)?;
    let w: ReducedWord = "abA".parse()?;
    println!("{w}(σ, τ) with σ = {sigma}, τ = {tau}: {}", evaluate_word(&w, &sigma, &tau)?);

    for n_len in [2, 4, 6] {
        let report = word_experiment(&ExperimentConfig::new(12, 500, 8).with_window(n_len))?;
        let r = &report.results;
        println!(
            "\nN = {n_len}: {} words, mean X {:.2} (exact {:.2}), P(X = 0) {:.3}",
            r.words_counted,
            r.mean,
            rational_to_f64(&r.theoretical_mean),
            r.p_zero
        );
        let freq: Vec<String> = r.identity_frequency.iter().map(|f| format!("{f:.2e}")).collect();
        println!("  identity frequency by length: {}", freq.join(" "));
    }
    Ok(())
}

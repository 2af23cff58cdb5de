//! The statistic X = #{i < N : π·σ^i ∈ 𝔠} for π uniform and σ uniform on 𝔐,
//! with its histogram printed as TSV.
//!
//!     cargo run --release --example second_moment

use symgen::exact::rational_to_f64;
use symgen::experiments::{min_degree_filter_stats, second_moment_run, ExperimentConfig};

fn main() -> symgen::Result<()> {
    let config = ExperimentConfig::new(12, 1000, 2024).with_window(144);
    let report = second_moment_run(&config)?;
    let r = &report.results;
    println!("n = 12, N = 144, {} trials", config.trials);
    println!("  mean X        {:.3}  (exact {:.3})", r.mean, rational_to_f64(&r.theoretical_mean));
    println!("  Var X         {:.3}", r.variance);
    println!("  P(X = 0)      {:.4}  <= Var/mean² = {:.4}", r.p_zero, r.chebyshev_bound);
    println!("  Jordan check  {} of {} pairs with X > 0", r.jordan.checked - r.jordan.violations, r.jordan.checked);
    println!("  rejected σ    {} draws outside 𝔐", r.rejections);

    let filter = min_degree_filter_stats(12, 20_000, 1)?;
    println!(
        "  |𝔐|/n!        {:.4} sampled, {:.4} exact",
        filter.results.fraction,
        filter.oracle_comparison.theoretical.unwrap_or(f64::NAN)
    );

    println!("\nx\tcount");
    for (x, c) in &r.histogram {
        println!("{x}\t{c}");
    }
    Ok(())
}

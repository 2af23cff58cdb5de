//! Monte Carlo estimates of p(S_n) next to the exact small-n values and the
//! asymptotic series.
//!
//!     cargo run --release --example estimate_generation

use symgen::counting::{dixon_series, SeriesKind};
use symgen::exact::rational_to_f64;
use symgen::experiments::{estimate_p, exact_p_small, ExperimentConfig};

fn main() -> symgen::Result<()> {
    println!("exact p(S_n) by exhaustive enumeration of pairs:");
    for n in 2..=5 {
        let p = exact_p_small(n)?;
        println!("  n = {n}: {p} = {:.6}", rational_to_f64(&p));
    }

    println!("\n  n   trials  estimate  95% interval        series    σ-distance");
    for (n, trials) in [(5, 20_000), (10, 10_000), (20, 5_000), (50, 2_000)] {
        let report = estimate_p(&ExperimentConfig::new(n, trials, 7))?;
        let r = &report.results;
        println!(
            "{n:>3} {trials:>8}  {:.5}   [{:.5}, {:.5}]  {:.5}   {:.2}",
            r.estimate,
            r.interval.low,
            r.interval.high,
            dixon_series(n, 6, SeriesKind::Pairs)?,
            report.oracle_comparison.sigma_distance.unwrap_or(f64::NAN),
        );
    }

    let triples = estimate_p(&ExperimentConfig::new(10, 5_000, 7).with_generators(3))?;
    println!(
        "\ntriples at n = 10: {:.5} (series {:.5})",
        triples.results.estimate,
        dixon_series(10, 5, SeriesKind::Triples)?
    );
    Ok(())
}

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use super::report::{exact_decimal, exact_rational, float64, mean_and_variance, OracleComparison, Report};
use super::{run_trials, trial_rng, ExperimentConfig};
use crate::counting::{frak_c_size, frak_m_size, pi_n};
use crate::error::{Error, Result};
use crate::exact::{factorial, rational_from_uint, rational_to_f64, ExactRational};
use crate::group::{classify_tuple, ClassKind};
use crate::perm::{random_permutation, Permutation};

/// Per-trial check that `X > 0` rules out a proper primitive group.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct JordanCheck {
    /// Trials with `X > 0` whose pair was classified.
    pub checked: u64,
    pub violations: u64,
}

impl JordanCheck {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SecondMomentResults {
    /// `(x, number of trials with X = x)`, increasing `x`.
    pub histogram: Vec<(u64, u64)>,
    #[serde(serialize_with = "float64")]
    pub mean: f64,
    /// Population variance of the per-trial `X`.
    #[serde(serialize_with = "float64")]
    pub variance: f64,
    #[serde(serialize_with = "float64")]
    pub p_zero: f64,
    /// `N·|𝔠|/n!`.
    #[serde(serialize_with = "exact_rational")]
    pub theoretical_mean: ExactRational,
    /// `Var/mean²`, the Chebyshev bound on `P(X = 0)`.
    #[serde(serialize_with = "float64")]
    pub chebyshev_bound: f64,
    /// `P(X=0) ≤ Var/mean² + 3·sqrt(P(X=0)(1-P(X=0))/trials)`.
    pub chebyshev_consistent: bool,
    pub jordan: JordanCheck,
    /// Draws of `σ` rejected for falling outside `𝔐`, summed over trials.
    pub rejections: u64,
}

pub type SecondMomentReport = Report<SecondMomentResults>;

pub(crate) fn histogram_of(xs: impl IntoIterator<Item = u64>) -> Vec<(u64, u64)> {
    let mut h = BTreeMap::new();
    for x in xs {
        *h.entry(x).or_insert(0u64) += 1;
    }
    h.into_iter().collect()
}

pub(crate) fn chebyshev(p_zero: f64, variance: f64, mean: f64, trials: u64) -> (f64, bool) {
    let bound = if mean > 0.0 {
        variance / (mean * mean)
    } else {
        f64::INFINITY
    };
    let slack = 3.0 * (p_zero * (1.0 - p_zero) / trials as f64).sqrt();
    (bound, p_zero <= bound + slack)
}

/// Counts `i ∈ 0..N` with `π·σ^i ∈ 𝔠` for uniform `π ∈ S_n` and `σ`
/// uniform on `𝔐` (by rejection), walking `x ← x·σ` from `x = π`.
pub fn second_moment_run(config: &ExperimentConfig) -> Result<SecondMomentReport> {
    config.validate()?;
    let n = config.n;
    let primes = pi_n(n).primes;
    if primes.is_empty() {
        return Err(Error::EmptyPrimeWindow(n));
    }
    let start = Instant::now();
    let window = config.window;
    let outcomes = run_trials(config.trials, config.workers, |t| {
        let mut rng = trial_rng(config.seed, t);
        let pi = random_permutation(&mut rng, n);
        let mut rejected = 0u64;
        let sigma = loop {
            let s = random_permutation(&mut rng, n);
            if s.in_frak_m() {
                break s;
            }
            rejected += 1;
        };
        let mut x = pi.clone();
        let mut next = Permutation::identity(n);
        let mut count = 0u64;
        for i in 0..window {
            if x.in_frak_c(&primes) {
                count += 1;
            }
            if i + 1 < window {
                x.right_mul_into(&sigma, &mut next);
                std::mem::swap(&mut x, &mut next);
            }
        }
        // Some π·σ^i carries a p-cycle with p ≤ n-3, so a primitive
        // ⟨π, σ⟩ = ⟨π·σ^i, σ⟩ contains A_n.
        let jordan = (count > 0 && n >= 8).then(|| {
            classify_tuple(&[pi, sigma]).expect("equal degrees").kind() != ClassKind::PrimitiveProper
        });
        (count, rejected, jordan)
    });

    let mut jordan = JordanCheck::default();
    let mut rejections = 0;
    for &(_, r, j) in &outcomes {
        rejections += r;
        if let Some(ok) = j {
            jordan.checked += 1;
            jordan.violations += (!ok) as u64;
        }
    }
    let histogram = histogram_of(outcomes.iter().map(|o| o.0));
    let (mean, variance) = mean_and_variance(&histogram);
    let zeros = histogram.first().filter(|h| h.0 == 0).map_or(0, |h| h.1);
    let p_zero = zeros as f64 / config.trials as f64;
    let (chebyshev_bound, chebyshev_consistent) = chebyshev(p_zero, variance, mean, config.trials);

    let density = rational_from_uint(&frak_c_size(n)) / rational_from_uint(&factorial(n));
    let theoretical_mean = density * ExactRational::from_integer(window.into());
    let theta = rational_to_f64(&theoretical_mean);
    let sigma = (variance / config.trials as f64).sqrt();

    Ok(Report {
        experiment: "second-moment",
        config: config.clone(),
        seed: config.seed.to_string(),
        oracle_comparison: OracleComparison::against("exact-mean", theta, mean, sigma)
            .with_exact(theoretical_mean.clone()),
        results: SecondMomentResults {
            histogram,
            mean,
            variance,
            p_zero,
            theoretical_mean,
            chebyshev_bound,
            chebyshev_consistent,
            jordan,
            rejections,
        },
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterStats {
    pub hits: u64,
    #[serde(serialize_with = "float64")]
    pub fraction: f64,
    /// `|𝔐|`, when the degree is within the class-enumeration guard.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_exact_decimal")]
    pub frak_m_size: Option<BigUint>,
    /// Rejected draws per accepted draw when sampling `𝔐` by rejection,
    /// `(trials - hits)/hits`; its expectation is `n!/|𝔐| - 1`.
    #[serde(serialize_with = "super::report::opt_float64")]
    pub rejections_per_accept: Option<f64>,
    #[serde(serialize_with = "super::report::opt_float64")]
    pub expected_rejections_per_accept: Option<f64>,
}

fn opt_exact_decimal<S: serde::Serializer>(
    v: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => exact_decimal(v, s),
        None => s.serialize_none(),
    }
}

pub type FilterStatsReport = Report<FilterStats>;

/// How often a uniform permutation lands in `𝔐`, against `|𝔐|/n!`.
pub fn min_degree_filter_stats(n: usize, trials: u64, seed: u64) -> Result<FilterStatsReport> {
    let config = ExperimentConfig::new(n, trials, seed);
    config.validate()?;
    let start = Instant::now();
    let hits = run_trials(trials, 0, |t| {
        random_permutation(&mut trial_rng(seed, t), n).in_frak_m() as u64
    })
    .into_iter()
    .sum::<u64>();
    let fraction = hits as f64 / trials as f64;
    let exact = frak_m_size(n).ok();
    let (oracle, expected) = match &exact {
        Some(m) => {
            let ratio = rational_from_uint(m) / rational_from_uint(&factorial(n));
            let theta = rational_to_f64(&ratio);
            let sigma = (theta * (1.0 - theta) / trials as f64).sqrt();
            (
                OracleComparison::against("exact-class-sum", theta, fraction, sigma).with_exact(ratio),
                Some(1.0 / theta - 1.0),
            )
        }
        None => (OracleComparison::none(), None),
    };
    Ok(Report {
        experiment: "min-degree-filter",
        config,
        seed: seed.to_string(),
        results: FilterStats {
            hits,
            fraction,
            frak_m_size: exact,
            rejections_per_accept: (hits > 0).then(|| (trials - hits) as f64 / hits as f64),
            expected_rejections_per_accept: expected,
        },
        oracle_comparison: oracle,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_of_one_at_nine() {
        let config = ExperimentConfig::new(9, 2000, 5).with_window(1);
        let r = second_moment_run(&config).unwrap();
        assert!(r.results.histogram.iter().all(|&(x, _)| x <= 1));
        assert_eq!(r.results.theoretical_mean, crate::exact::rational(1, 5));
        let sigma = (0.2f64 * 0.8 / 2000.0).sqrt();
        assert!((r.results.mean - 0.2).abs() <= 3.0 * sigma);
    }

    #[test]
    fn bounded_by_window_and_deterministic() {
        let config = ExperimentConfig::new(12, 60, 9).with_window(20);
        let a = second_moment_run(&config.clone().with_workers(1)).unwrap();
        let b = second_moment_run(&config.with_workers(4)).unwrap();
        assert_eq!(a.payload(), b.payload());
        assert!(a.results.histogram.iter().all(|&(x, _)| x <= 20));
        assert!(a.results.mean >= 0.0 && a.results.mean <= 20.0);
        assert!(a.results.jordan.holds());
        assert_eq!(a.results.histogram.iter().map(|h| h.1).sum::<u64>(), 60);
    }

    #[test]
    fn walk_matches_powering() {
        // The x ← x·σ walk visits π·σ^i.
        let mut rng = trial_rng(1, 0);
        let pi = random_permutation(&mut rng, 10);
        let sigma = random_permutation(&mut rng, 10);
        let mut x = pi.clone();
        let mut next = Permutation::identity(10);
        for i in 0..30 {
            assert_eq!(x, &pi * &sigma.power(i));
            x.right_mul_into(&sigma, &mut next);
            std::mem::swap(&mut x, &mut next);
        }
    }

    #[test]
    fn empty_window_is_an_error() {
        let config = ExperimentConfig::new(8, 10, 0);
        assert!(matches!(second_moment_run(&config), Err(Error::EmptyPrimeWindow(8))));
    }

    #[test]
    fn filter_stats() {
        let r = min_degree_filter_stats(2, 50, 1).unwrap();
        assert_eq!(r.results.fraction, 1.0);
        let r = min_degree_filter_stats(9, 5000, 1).unwrap();
        assert!(r.oracle_comparison.within(3.5));
    }
}

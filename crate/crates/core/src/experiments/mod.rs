//! Seeded Monte Carlo runs and exact small-degree experiments.
//!
//! Every trial draws from its own stream, `ChaCha8(seed)` with stream number
//! equal to the trial index, and results are collected in trial order, so a
//! report depends only on its configuration and never on the worker count.

mod correlation;
mod estimate;
pub mod report;
mod second_moment;
mod words;

pub use correlation::{character_side_correlation, exact_pair_correlation, PairCorrelation};
pub use estimate::{
    estimate_p, exact_p_small, exhaustive_p, ClassCounts, EstimateReport, EstimateResults,
};
pub use report::{Interval, IntervalMethod, OracleComparison, Report};
pub use second_moment::{
    min_degree_filter_stats, second_moment_run, FilterStats, FilterStatsReport, JordanCheck,
    SecondMomentReport, SecondMomentResults,
};
pub use words::{
    enumerate_words, evaluate_word, word_experiment, words_of_length_at_most,
    words_of_length_exactly, Letter, ReducedWord, WordReport, WordResults, MAX_WORD_LEN,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Sample from `S_n` or from `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupMode {
    S,
    A,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub trials: u64,
    #[serde(serialize_with = "as_string")]
    pub seed: u64,
    /// Window length `N` for the second-moment statistic, and the maximal
    /// word length for the word experiment.
    #[serde(rename = "N")]
    pub window: usize,
    pub generators: usize,
    pub group: GroupMode,
    /// Parallelism cap; `0` means the global pool. Never part of a payload.
    #[serde(skip)]
    pub workers: usize,
}

impl ExperimentConfig {
    pub fn new(n: usize, trials: u64, seed: u64) -> Self {
        ExperimentConfig {
            n,
            trials,
            seed,
            window: 1,
            generators: 2,
            group: GroupMode::S,
            workers: 0,
        }
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.window = window;
        self
    }

    pub fn with_generators(mut self, generators: usize) -> Self {
        self.generators = generators;
        self
    }

    pub fn with_group(mut self, group: GroupMode) -> Self {
        self.group = group;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Precondition(format!("n must be at least 2, got {}", self.n)));
        }
        if self.trials == 0 {
            return Err(Error::Precondition("trials must be at least 1".into()));
        }
        if self.window == 0 {
            return Err(Error::Precondition("N must be at least 1".into()));
        }
        if !(2..=3).contains(&self.generators) {
            return Err(Error::Precondition(format!(
                "generators must be 2 or 3, got {}",
                self.generators
            )));
        }
        Ok(())
    }
}

fn as_string<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The random stream of one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Runs `f` on every trial index and returns the results in index order.
pub(crate) fn run_trials<T, F>(trials: u64, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    let run = || (0..trials).into_par_iter().map(&f).collect();
    if workers == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(run),
        Err(_) => (0..trials).map(&f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_independent_of_order() {
        let a: Vec<u64> = (0..5).map(|t| trial_rng(3, t).random()).collect();
        let b: Vec<u64> = (0..5).rev().map(|t| trial_rng(3, t).random()).collect();
        assert_eq!(a, b.into_iter().rev().collect::<Vec<_>>());
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn run_trials_keeps_order() {
        for workers in [0, 1, 3] {
            let out = run_trials(100, workers, |t| t * t);
            assert_eq!(out, (0..100).map(|t| t * t).collect::<Vec<_>>());
        }
    }

    #[test]
    fn config_checks() {
        assert!(ExperimentConfig::new(1, 10, 0).validate().is_err());
        assert!(ExperimentConfig::new(5, 0, 0).validate().is_err());
        assert!(ExperimentConfig::new(5, 1, 0).with_window(0).validate().is_err());
        assert!(ExperimentConfig::new(5, 1, 0).with_generators(4).validate().is_err());
        assert!(ExperimentConfig::new(5, 1, 0).validate().is_ok());
        let json = serde_json::to_value(ExperimentConfig::new(5, 1, u64::MAX).with_workers(4)).unwrap();
        assert_eq!(json["seed"], "18446744073709551615");
        assert!(json.get("workers").is_none());
    }
}

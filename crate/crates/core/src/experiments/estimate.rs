use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::report::{float64, opt_float64, Interval, OracleComparison, Report};
use super::{run_trials, trial_rng, ExperimentConfig, GroupMode};
use crate::counting::{dixon_series, SeriesCoefficients, SeriesKind};
use crate::error::{Error, Result};
use crate::exact::{factorial, rational_to_f64, to_bigint, ExactRational};
use crate::group::{classify_tuple, Bsgs, ClassKind, Classification};
use crate::perm::{all_permutations, random_even_permutation, random_permutation, Permutation};

/// Trials falling in each classification.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClassCounts {
    pub all_or_alternating: u64,
    pub intransitive: u64,
    pub transitive_imprimitive: u64,
    pub primitive_proper: u64,
}

impl ClassCounts {
    pub fn add(&mut self, kind: ClassKind) {
        match kind {
            ClassKind::AllOrAlternating => self.all_or_alternating += 1,
            ClassKind::Intransitive => self.intransitive += 1,
            ClassKind::TransitiveImprimitive => self.transitive_imprimitive += 1,
            ClassKind::PrimitiveProper => self.primitive_proper += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.all_or_alternating + self.intransitive + self.transitive_imprimitive + self.primitive_proper
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EstimateResults {
    /// Fraction of tuples generating a group containing `A_n`.
    #[serde(serialize_with = "float64")]
    pub estimate: f64,
    #[serde(serialize_with = "float64")]
    pub standard_error: f64,
    pub interval: Interval,
    pub counts: ClassCounts,
    /// Of the `all-or-alternating` trials, those generating all of `S_n`.
    pub symmetric: u64,
    /// Truncated asymptotic series at full available order (`S_n` mode only).
    #[serde(serialize_with = "opt_float64")]
    pub series: Option<f64>,
}

pub type EstimateReport = Report<EstimateResults>;

/// Degrees for which the report compares against the exhaustive value
/// instead of the series.
const EXACT_COMPARISON_MAX_N: usize = 5;

fn sample(config: &ExperimentConfig, trial: u64) -> Vec<Permutation> {
    let mut rng = trial_rng(config.seed, trial);
    (0..config.generators)
        .map(|_| match config.group {
            GroupMode::S => random_permutation(&mut rng, config.n),
            GroupMode::A => random_even_permutation(&mut rng, config.n),
        })
        .collect()
}

/// Monte Carlo estimate of the probability that `generators` uniform
/// elements of `S_n` (or `A_n`) generate a group containing `A_n`.
pub fn estimate_p(config: &ExperimentConfig) -> Result<EstimateReport> {
    config.validate()?;
    let start = Instant::now();
    let outcomes = run_trials(config.trials, config.workers, |t| {
        let c = classify_tuple(&sample(config, t)).expect("tuple of equal degrees");
        let symmetric = matches!(c, Classification::AllOrAlternating { symmetric: true, .. });
        (c.kind(), symmetric)
    });
    let mut counts = ClassCounts::default();
    let mut symmetric = 0;
    for (kind, sym) in outcomes {
        counts.add(kind);
        symmetric += sym as u64;
    }
    let trials = config.trials as f64;
    let estimate = counts.all_or_alternating as f64 / trials;
    let standard_error = (estimate * (1.0 - estimate) / trials).sqrt();

    let kind = SeriesKind::from_generators(config.generators)?;
    let series = match config.group {
        GroupMode::S => Some(dixon_series(config.n, SeriesCoefficients::of(kind).len(), kind)?),
        GroupMode::A => None,
    };
    let binomial_sigma = |theta: f64| (theta * (1.0 - theta) / trials).sqrt();
    let oracle = if config.group == GroupMode::S
        && kind == SeriesKind::Pairs
        && config.n <= EXACT_COMPARISON_MAX_N
    {
        let exact = exact_p_small(config.n)?;
        let theta = rational_to_f64(&exact);
        OracleComparison::against("exact-enumeration", theta, estimate, binomial_sigma(theta))
            .with_exact(exact)
    } else if let Some(theta) = series {
        let source = match kind {
            SeriesKind::Pairs => "series-pairs-order-6",
            SeriesKind::Triples => "series-triples-order-5",
        };
        OracleComparison::against(source, theta, estimate, binomial_sigma(theta))
    } else {
        OracleComparison::none()
    };

    Ok(Report {
        experiment: "estimate",
        config: config.clone(),
        seed: config.seed.to_string(),
        results: EstimateResults {
            estimate,
            standard_error,
            interval: Interval::for_proportion(counts.all_or_alternating, config.trials),
            counts,
            symmetric,
            series,
        },
        oracle_comparison: oracle,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Largest degree for [`exact_p_small`].
pub const EXACT_P_MAX_N: usize = 6;

/// `p(S_n)` over all `n!²` ordered pairs, deciding each pair by whether its
/// group has order at least `n!/2`.
pub fn exact_p_small(n: usize) -> Result<ExactRational> {
    if n > EXACT_P_MAX_N {
        return Err(Error::GuardExceeded {
            guard: "exact-p-max-n",
            value: n as u64,
            limit: EXACT_P_MAX_N as u64,
        });
    }
    let f = factorial(n);
    let half = &f / 2u32;
    let all: Vec<Permutation> = all_permutations(n).collect();
    let good: u64 = all
        .par_iter()
        .map(|a| {
            all.iter()
                .filter(|b| Bsgs::new(n, &[(*a).clone(), (*b).clone()]).order() >= half)
                .count() as u64
        })
        .sum();
    Ok(ExactRational::new(
        to_bigint(&BigUint::from(good)),
        to_bigint(&(&f * &f)),
    ))
}

/// Exhaustive version of [`estimate_p`] for `n ≤ 4`: every ordered tuple
/// is classified.
pub fn exhaustive_p(n: usize, generators: usize) -> Result<ExactRational> {
    if n > 4 || n == 0 {
        return Err(Error::GuardExceeded {
            guard: "exhaustive-max-n",
            value: n as u64,
            limit: 4,
        });
    }
    SeriesKind::from_generators(generators)?;
    let all: Vec<Permutation> = all_permutations(n).collect();
    let mut tuples: Vec<Vec<Permutation>> = vec![Vec::new()];
    for _ in 0..generators {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                all.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    let mut good = BigUint::zero();
    for t in &tuples {
        if classify_tuple(t)?.kind() == ClassKind::AllOrAlternating {
            good += 1u32;
        }
    }
    Ok(ExactRational::new(
        to_bigint(&good),
        to_bigint(&BigUint::from(tuples.len())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    /// Closure oracle: the group generated by a pair, by breadth-first
    /// multiplication.
    fn closure_size(a: &Permutation, b: &Permutation) -> usize {
        let n = a.degree();
        let mut seen = std::collections::HashSet::new();
        let id = Permutation::identity(n);
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for g in [a, b] {
                let y = g * &x;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(exact_p_small(2).unwrap(), rational(1, 1));
        assert_eq!(exact_p_small(3).unwrap(), rational(26, 36));
        // Frozen from an independent closure enumeration.
        assert_eq!(exact_p_small(4).unwrap(), rational(312, 576));
        assert_eq!(exact_p_small(5).unwrap(), rational(9120, 14400));
        assert!(exact_p_small(7).is_err());
    }

    #[test]
    fn closure_oracle_agrees_at_three_and_four() {
        for n in 3..=4 {
            let all: Vec<Permutation> = all_permutations(n).collect();
            let half = (1..=n).product::<usize>() / 2;
            let good = all
                .iter()
                .flat_map(|a| all.iter().map(move |b| (a, b)))
                .filter(|(a, b)| closure_size(a, b) >= half)
                .count();
            let total = all.len() * all.len();
            assert_eq!(exact_p_small(n).unwrap(), rational(good as i64, total as i64));
        }
    }

    #[test]
    fn exhaustive_matches_exact() {
        for n in 2..=4 {
            assert_eq!(exhaustive_p(n, 2).unwrap(), exact_p_small(n).unwrap(), "n = {n}");
        }
        assert!(exhaustive_p(5, 2).is_err());
        let triples = exhaustive_p(3, 3).unwrap();
        assert!(triples > rational(26, 36) && triples < rational(1, 1));
    }

    #[test]
    fn estimate_small_and_deterministic() {
        let config = ExperimentConfig::new(4, 4000, 11);
        let a = estimate_p(&config.clone().with_workers(1)).unwrap();
        let b = estimate_p(&config.with_workers(3)).unwrap();
        assert_eq!(a.payload(), b.payload());
        assert_eq!(a.results.counts.total(), 4000);
        assert_eq!(a.oracle_comparison.source, "exact-enumeration");
        assert!(a.oracle_comparison.within(4.0));
        assert_eq!(
            a.results.estimate,
            a.results.counts.all_or_alternating as f64 / 4000.0
        );
    }

    #[test]
    fn estimate_alternating_mode() {
        let config = ExperimentConfig::new(6, 300, 2).with_group(GroupMode::A);
        let r = estimate_p(&config).unwrap();
        assert_eq!(r.results.symmetric, 0);
        assert!(r.results.series.is_none());
    }
}

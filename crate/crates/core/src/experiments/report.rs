//! JSON envelope shared by all experiments.
//!
//! Measured and derived numbers are written as `{"kind": ..., ...}` objects:
//! `float64` for sampled statistics, `exact-decimal` for big integers and
//! `exact-rational` for fractions, so exact values never pass through a float.

use num_bigint::BigUint;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::ExperimentConfig;
use crate::exact::ExactRational;

type SerResult<S> = std::result::Result<<S as Serializer>::Ok, <S as Serializer>::Error>;

pub fn float64<S: Serializer>(v: &f64, s: S) -> SerResult<S> {
    let mut m = s.serialize_map(Some(2))?;
    m.serialize_entry("kind", "float64")?;
    if v.is_finite() {
        m.serialize_entry("value", v)?;
    } else {
        m.serialize_entry("value", &v.to_string())?;
    }
    m.end()
}

pub fn opt_float64<S: Serializer>(v: &Option<f64>, s: S) -> SerResult<S> {
    match v {
        Some(v) => float64(v, s),
        None => s.serialize_none(),
    }
}

pub fn exact_decimal<S: Serializer>(v: &BigUint, s: S) -> SerResult<S> {
    let mut m = s.serialize_map(Some(2))?;
    m.serialize_entry("kind", "exact-decimal")?;
    m.serialize_entry("value", &v.to_string())?;
    m.end()
}

pub fn exact_rational<S: Serializer>(v: &ExactRational, s: S) -> SerResult<S> {
    let mut m = s.serialize_map(Some(3))?;
    m.serialize_entry("kind", "exact-rational")?;
    m.serialize_entry("numerator", &v.numer().to_string())?;
    m.serialize_entry("denominator", &v.denom().to_string())?;
    m.end()
}

pub fn opt_exact_rational<S: Serializer>(v: &Option<ExactRational>, s: S) -> SerResult<S> {
    match v {
        Some(v) => exact_rational(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalMethod {
    Normal,
    Wilson,
}

/// 95% interval for a binomial proportion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    #[serde(serialize_with = "float64")]
    pub low: f64,
    #[serde(serialize_with = "float64")]
    pub high: f64,
    pub method: IntervalMethod,
}

const Z95: f64 = 1.959_963_984_540_054;

impl Interval {
    /// Normal approximation, or the Wilson score interval when fewer than 30
    /// successes or failures were seen.
    pub fn for_proportion(successes: u64, trials: u64) -> Self {
        let t = trials as f64;
        let p = successes as f64 / t;
        if successes.min(trials - successes) < 30 {
            let z2 = Z95 * Z95;
            let centre = (p + z2 / (2.0 * t)) / (1.0 + z2 / t);
            let half = Z95 / (1.0 + z2 / t) * (p * (1.0 - p) / t + z2 / (4.0 * t * t)).sqrt();
            Interval {
                low: (centre - half).max(0.0),
                high: (centre + half).min(1.0),
                method: IntervalMethod::Wilson,
            }
        } else {
            let half = Z95 * (p * (1.0 - p) / t).sqrt();
            Interval {
                low: p - half,
                high: p + half,
                method: IntervalMethod::Normal,
            }
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.low <= x && x <= self.high
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleComparison {
    /// Where the reference value comes from.
    pub source: String,
    #[serde(serialize_with = "opt_exact_rational")]
    pub theoretical_exact: Option<ExactRational>,
    #[serde(serialize_with = "opt_float64")]
    pub theoretical: Option<f64>,
    /// `|empirical - theoretical| / σ`; absent when there is no reference or
    /// `σ = 0`.
    #[serde(serialize_with = "opt_float64")]
    pub sigma_distance: Option<f64>,
}

impl OracleComparison {
    pub fn none() -> Self {
        OracleComparison {
            source: "none".into(),
            theoretical_exact: None,
            theoretical: None,
            sigma_distance: None,
        }
    }

    pub fn against(source: &str, theoretical: f64, empirical: f64, sigma: f64) -> Self {
        OracleComparison {
            source: source.into(),
            theoretical_exact: None,
            theoretical: Some(theoretical),
            sigma_distance: sigma_distance(empirical, theoretical, sigma),
        }
    }

    pub fn with_exact(mut self, exact: ExactRational) -> Self {
        self.theoretical_exact = Some(exact);
        self
    }

    /// Within `k` standard deviations; a zero `σ` demands exact agreement.
    pub fn within(&self, k: f64) -> bool {
        self.sigma_distance.is_some_and(|d| d <= k)
    }
}

fn sigma_distance(empirical: f64, theoretical: f64, sigma: f64) -> Option<f64> {
    let diff = (empirical - theoretical).abs();
    if sigma > 0.0 {
        Some(diff / sigma)
    } else if diff == 0.0 {
        Some(0.0)
    } else {
        None
    }
}

/// `{experiment, config, seed, results, oracle_comparison, runtime_ms}`.
#[derive(Debug, Clone, Serialize)]
pub struct Report<R> {
    pub experiment: &'static str,
    pub config: ExperimentConfig,
    pub seed: String,
    pub results: R,
    pub oracle_comparison: OracleComparison,
    pub runtime_ms: u64,
}

impl<R: Serialize> Report<R> {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// Everything except the wall-clock runtime: equal configurations give
    /// byte-identical payloads.
    pub fn payload(&self) -> String {
        let mut v = self.to_json();
        if let Value::Object(map) = &mut v {
            map.remove("runtime_ms");
        }
        v.to_string()
    }
}

/// Population mean and variance of a sample given as `(value, count)` pairs.
pub(crate) fn mean_and_variance(histogram: &[(u64, u64)]) -> (f64, f64) {
    let total: u64 = histogram.iter().map(|&(_, c)| c).sum();
    if total == 0 {
        return (0.0, 0.0);
    }
    let t = total as f64;
    let mean = histogram.iter().map(|&(x, c)| x as f64 * c as f64).sum::<f64>() / t;
    let var = histogram
        .iter()
        .map(|&(x, c)| (x as f64 - mean).powi(2) * c as f64)
        .sum::<f64>()
        / t;
    (mean, var)
}

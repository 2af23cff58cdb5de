use num_bigint::BigUint;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{dimension, lambda_np, CharacterTable, LambdaCase};
use crate::counting::pi_n;
use crate::error::{Error, Result};
use crate::exact::{binomial, Certified, ExpPowerEnclosure};
use crate::partition::Partition;

/// Exponent in the character bound `|χ(σ)| ≤ χ(1)^{1-δ(σ)}`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct DeltaExponent(pub f64);

/// `1/13` without fixed points, otherwise `log(n/f) / (32 log n)`.
pub fn delta(n: usize, fixed: usize) -> Result<DeltaExponent> {
    if fixed > n {
        return Err(Error::Precondition(format!(
            "fixed-point count {fixed} exceeds degree {n}"
        )));
    }
    if n < 2 {
        return Err(Error::Precondition("delta needs n >= 2".into()));
    }
    if fixed == 0 {
        return Ok(DeltaExponent(1.0 / 13.0));
    }
    let n = n as f64;
    Ok(DeltaExponent((n / fixed as f64).ln() / (32.0 * n.ln())))
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundViolation {
    pub lambda: Partition,
    pub class: Partition,
    pub abs_value: String,
    pub dimension: String,
    pub delta: f64,
}

/// Where `|χ^λ(C)| ≤ χ^λ(1)^{1-δ}` fails across a full table.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterBoundSurvey {
    pub n: usize,
    pub pairs_checked: usize,
    pub violations: Vec<BoundViolation>,
}

/// Largest degree for which the full table is surveyed.
pub const SURVEY_MAX_N: usize = 16;

/// Diagnostic only: the bound is an asymptotic statement, so violations at
/// small `n` are expected and recorded rather than treated as failures.
/// Comparison is done on logarithms in `f64`.
pub fn character_bound_survey(n: usize) -> Result<CharacterBoundSurvey> {
    if n > SURVEY_MAX_N {
        return Err(Error::GuardExceeded {
            guard: "survey-max-n",
            value: n as u64,
            limit: SURVEY_MAX_N as u64,
        });
    }
    let table = CharacterTable::new(n);
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for (li, lambda) in table.labels.iter().enumerate() {
        let dim = dimension(lambda);
        let ln_dim = dim.to_f64().unwrap_or(f64::INFINITY).ln();
        for (ci, class) in table.classes.iter().enumerate() {
            pairs_checked += 1;
            let value = table.value(li, ci).abs();
            let d = delta(n, class.multiplicity(1))?.0;
            if value.sign() == num_bigint::Sign::NoSign {
                continue;
            }
            let ln_value = value.to_f64().unwrap_or(f64::INFINITY).ln();
            // Tolerance only absorbs rounding in the equality case δ = 0.
            if ln_value > (1.0 - d) * ln_dim + 1e-12 {
                violations.push(BoundViolation {
                    lambda: lambda.clone(),
                    class: class.clone(),
                    abs_value: value.to_string(),
                    dimension: dim.to_string(),
                    delta: d,
                });
            }
        }
    }
    Ok(CharacterBoundSurvey {
        n,
        pairs_checked,
        violations,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DimBoundRow {
    pub n: usize,
    pub p: usize,
    pub lambda: Partition,
    pub case: LambdaCase,
    pub dimension: String,
    /// `ln χ^λ(1) ≥ n/4`, certified with a rational enclosure of `e`.
    pub exp_bound: Certified,
    /// `χ^λ(1) ≥ C(n, p) / n`, exact.
    pub binomial_bound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimLowerBoundReport {
    pub n: usize,
    pub rows: Vec<DimBoundRow>,
}

impl DimLowerBoundReport {
    pub fn all_pass(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.exp_bound.passed() && r.binomial_bound)
    }
}

/// Checks `χ^λ(1) ≥ exp(n/4)` and `χ^λ(1) ≥ C(n,p)/n` for every `λ ∈ Λ_{n,p}`,
/// `p ∈ Π_n`.
pub fn dim_lower_bound_check(n: usize) -> Result<DimLowerBoundReport> {
    let window = pi_n(n);
    if window.primes.is_empty() {
        return Err(Error::EmptyPrimeWindow(n));
    }
    let mut rows = Vec::new();
    for &p in &window.primes {
        let threshold = binomial(n, p);
        let e_n = ExpPowerEnclosure::new(n as u32);
        for entry in lambda_np(n, p)? {
            let dim = dimension(&entry.partition);
            rows.push(DimBoundRow {
                n,
                p,
                exp_bound: e_n.at_most(&dim.pow(4)),
                binomial_bound: &dim * BigUint::from(n) >= threshold,
                dimension: dim.to_string(),
                lambda: entry.partition,
                case: entry.case,
            });
        }
    }
    Ok(DimLowerBoundReport { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ln_at_least_quarter;

    #[test]
    fn delta_values() {
        assert_eq!(delta(20, 0).unwrap().0, 1.0 / 13.0);
        assert_eq!(delta(20, 20).unwrap().0, 0.0);
        let d = delta(100, 10).unwrap().0;
        assert!((d - (10f64.ln() / (32.0 * 100f64.ln()))).abs() < 1e-15);
        assert!(delta(5, 6).is_err());
    }

    #[test]
    fn dim_bound_at_twelve() {
        let report = dim_lower_bound_check(12).unwrap();
        assert_eq!(report.rows.len(), 6);
        assert!(report.all_pass());
        assert!(dim_lower_bound_check(8).is_err());
    }

    #[test]
    fn nine_five_hook_shape() {
        let lambda = Partition::new(vec![4, 1, 1, 1, 1, 1]).unwrap();
        let dim = dimension(&lambda);
        assert_eq!(dim, BigUint::from(56u32));
        // e^{2.25} = 9.487...; n = 9 gives n/4 = 2.25.
        assert_eq!(ln_at_least_quarter(&dim, 9), Certified::Pass);
        let report = dim_lower_bound_check(9).unwrap();
        assert!(report.rows.iter().any(|r| r.lambda == lambda));
    }

    #[test]
    fn survey_small() {
        let s = character_bound_survey(6).unwrap();
        assert_eq!(s.pairs_checked, 121);
        assert!(character_bound_survey(17).is_err());
    }
}

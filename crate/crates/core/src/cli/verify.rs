//! Exact verification suites. Each check becomes one JSON line.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::chars::{
    character_bound_survey, dim_lower_bound_check, frak_c_inner_product, lambda_np, p_class_sum,
    rim_hooks, CharacterEvaluator, CharacterTable, SURVEY_MAX_N,
};
use crate::chars::{class_size, dimension};
use crate::counting::{
    bounded_cycle_bound_check, count_nu_roots, frak_c_density_bound_check, frak_c_size, k_of_n,
    k_of_n_lower_bound, pi_n, primes_up_to,
};
use crate::error::{Error, Result};
use crate::exact::{factorial, rational_from_uint, to_bigint, ExactRational};
use crate::experiments::exact_pair_correlation;
use crate::partition::{partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Chars,
    Lambda,
    Counting,
    Correlation,
    All,
}

impl Suite {
    pub fn default_nmax(self) -> usize {
        match self {
            Suite::Chars => 10,
            Suite::Lambda => 40,
            Suite::Counting => 12,
            Suite::Correlation => 12,
            Suite::All => 12,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub check: &'static str,
    pub n: Option<usize>,
    pub pass: bool,
    /// Report-only checks are recorded but never fail a run.
    pub report_only: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(suite: &'static str, check: &'static str, n: Option<usize>, pass: bool) -> Self {
        Check {
            suite,
            check,
            n,
            pass,
            report_only: false,
            detail: String::new(),
        }
    }

    fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    fn report_only(mut self) -> Self {
        self.report_only = true;
        self
    }

    pub fn failed(&self) -> bool {
        !self.pass && !self.report_only
    }
}

pub const CHARS_MAX_N: usize = 14;
pub const LAMBDA_MAX_N: usize = 300;
pub const COUNTING_MAX_N: usize = 14;

fn guard(name: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::GuardExceeded {
            guard: name,
            value: value as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// Runs one suite, or every suite with each clamped to its own default.
pub fn run_suite(suite: Suite, nmax: Option<usize>) -> Result<Vec<Check>> {
    let nmax_for = |s: Suite| nmax.unwrap_or(s.default_nmax());
    match suite {
        Suite::Chars => chars_suite(nmax_for(Suite::Chars)),
        Suite::Lambda => lambda_suite(nmax_for(Suite::Lambda)),
        Suite::Counting => counting_suite(nmax_for(Suite::Counting)),
        Suite::Correlation => correlation_suite(nmax_for(Suite::Correlation)),
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Chars, Suite::Lambda, Suite::Counting, Suite::Correlation] {
                let limit = s.default_nmax();
                out.extend(run_suite(s, Some(nmax.map_or(limit, |m| m.min(limit))))?);
            }
            Ok(out)
        }
    }
}

/// Sum of squared dimensions, row and column orthogonality, and
/// `χ^λ(1^n)` against the hook formula.
pub fn chars_suite(nmax: usize) -> Result<Vec<Check>> {
    guard("chars-max-n", nmax, CHARS_MAX_N)?;
    let mut out = Vec::new();
    for n in 1..=nmax {
        let table = CharacterTable::new(n);
        let f = to_bigint(&factorial(n));
        let sizes: Vec<BigInt> = table.classes.iter().map(|c| to_bigint(&class_size(c))).collect();
        let dims: Vec<BigUint> = table.labels.iter().map(dimension).collect();

        let squares: BigUint = dims.iter().map(|d| d * d).sum();
        out.push(Check::new("chars", "sum-of-squared-dimensions", Some(n), to_bigint(&squares) == f));

        let identity_class = table.classes.len() - 1;
        let dims_match = dims
            .iter()
            .enumerate()
            .all(|(i, d)| &to_bigint(d) == table.value(i, identity_class));
        out.push(Check::new("chars", "dimension-equals-character-at-identity", Some(n), dims_match));

        let k = table.labels.len();
        let mut rows_ok = true;
        for a in 0..k {
            for b in a..k {
                let s: BigInt = (0..k)
                    .map(|c| &sizes[c] * table.value(a, c) * table.value(b, c))
                    .sum();
                rows_ok &= if a == b { s == f } else { s.is_zero() };
            }
        }
        out.push(Check::new("chars", "row-orthogonality", Some(n), rows_ok));

        let mut cols_ok = true;
        for c in 0..k {
            for d in c..k {
                let s: BigInt = (0..k).map(|l| table.value(l, c) * table.value(l, d)).sum();
                // Σ_λ χ(C)χ(D) = δ_{CD} n!/|C|, i.e. |C|·Σ = δ·n!.
                cols_ok &= if c == d { &s * &sizes[c] == f } else { s.is_zero() };
            }
        }
        out.push(Check::new("chars", "column-orthogonality", Some(n), cols_ok));
    }
    for n in 2..=nmax.min(SURVEY_MAX_N) {
        let survey = character_bound_survey(n)?;
        out.push(
            Check::new("chars", "character-bound-survey", Some(n), survey.violations.is_empty())
                .report_only()
                .detail(format!(
                    "{} of {} pairs exceed the bound",
                    survey.violations.len(),
                    survey.pairs_checked
                )),
        );
    }
    Ok(out)
}

/// `λ ≠ (n)` with some `p`-rim hook leaving the row `(n - p)`, straight from
/// the definition.
pub fn lambda_brute_force(n: usize, p: usize) -> Vec<Partition> {
    let rest = Partition::row(n - p);
    partitions(n)
        .into_iter()
        .filter(|l| *l != Partition::row(n))
        .filter(|l| rim_hooks(l, p).iter().any(|h| h.remainder == rest))
        .collect()
}

/// Closed form of `Λ_{n,p}` against the brute-force scan, the `p`-class
/// sum identity at `n ∈ {9, 12}`, and the dimension lower bounds.
pub fn lambda_suite(nmax: usize) -> Result<Vec<Check>> {
    guard("lambda-max-n", nmax, LAMBDA_MAX_N)?;
    let mut out = Vec::new();
    for n in 2..=nmax.min(40) {
        for p in pi_n(n).primes {
            let mut closed: Vec<Partition> =
                lambda_np(n, p)?.into_iter().map(|e| e.partition).collect();
            let mut brute = lambda_brute_force(n, p);
            closed.sort();
            brute.sort();
            out.push(
                Check::new("lambda", "closed-form-equals-scan", Some(n), closed == brute)
                    .detail(format!("p = {p}, {} partitions", closed.len())),
            );
        }
    }
    for n in [9usize, 12].into_iter().filter(|&n| n <= nmax) {
        let mut eval = CharacterEvaluator::new();
        for p in pi_n(n).primes {
            let lambda = lambda_np(n, p)?;
            let unit = to_bigint(&(factorial(n) / BigUint::from(p)));
            let mut ok = true;
            for l in partitions(n) {
                let expected = if l == Partition::row(n) {
                    unit.clone()
                } else if let Some(e) = lambda.iter().find(|e| e.partition == l) {
                    &unit * e.sign()
                } else {
                    BigInt::zero()
                };
                ok &= p_class_sum(&l, p, &mut eval)? == expected;
            }
            out.push(Check::new("lambda", "p-class-sum-identity", Some(n), ok).detail(format!("p = {p}")));
        }
    }
    for n in 12..=nmax {
        if pi_n(n).primes.is_empty() {
            continue;
        }
        let report = dim_lower_bound_check(n)?;
        out.push(Check::new(
            "lambda",
            "dimension-exp-quarter-n",
            Some(n),
            report.rows.iter().all(|r| r.exp_bound.passed()),
        ));
        out.push(Check::new(
            "lambda",
            "dimension-binomial-over-n",
            Some(n),
            report.rows.iter().all(|r| r.binomial_bound),
        ));
    }
    Ok(out)
}

pub fn counting_suite(nmax: usize) -> Result<Vec<Check>> {
    guard("counting-max-n", nmax, COUNTING_MAX_N)?;
    let mut out = Vec::new();
    for n in 2..=nmax {
        let window = pi_n(n);
        let in_window = window
            .primes
            .iter()
            .all(|&p| primes_up_to(n).contains(&p) && 2 * p > n && 5 * p < 3 * n);
        let complete = primes_up_to(n)
            .into_iter()
            .filter(|&p| 2 * p > n && 5 * p < 3 * n)
            .count()
            == window.primes.len();
        out.push(Check::new("counting", "prime-window", Some(n), in_window && complete));

        let class_sum: BigUint = partitions(n)
            .iter()
            .filter(|c| c.parts().iter().any(|j| window.primes.contains(j)))
            .map(class_size)
            .sum();
        out.push(
            Check::new("counting", "frakC-closed-form-equals-class-sum", Some(n), class_sum == frak_c_size(n))
                .detail(frak_c_size(n).to_string()),
        );

        let classes = partitions(n);
        let mut roots_ok = true;
        for nu in 1..=30u64 {
            let by_classes: BigUint = classes
                .iter()
                .filter(|c| c.parts().iter().all(|&j| nu % j as u64 == 0))
                .map(class_size)
                .sum();
            roots_ok &= by_classes == count_nu_roots(n, nu);
        }
        out.push(Check::new("counting", "nu-roots-equal-class-sums", Some(n), roots_ok));
    }
    out.push(Check::new("counting", "nu-roots-4-2", Some(4), count_nu_roots(4, 2) == BigUint::from(10u32)));
    out.push(Check::new("counting", "k-of-N-3-6", Some(3), k_of_n(3, 6) == BigUint::from(19u32)));
    for (n, big_n) in [(5usize, 25u64), (7, 49), (9, 81)] {
        let row = k_of_n_lower_bound(n, big_n);
        out.push(
            Check::new("counting", "k-of-N-lower-bound", Some(n), row.pass)
                .detail(format!("{} >= {}", row.exact_value_decimal, row.bound)),
        );
    }
    let m_max = 5 * nmax;
    let rows = bounded_cycle_bound_check(m_max);
    let failures = rows.iter().filter(|r| !r.pass).count();
    out.push(
        Check::new("counting", "bounded-cycle-bound", Some(m_max), failures == 0)
            .detail(format!("{} (m, r) pairs, {failures} failures", rows.len())),
    );
    let density = frak_c_density_bound_check(1000);
    let passing = density.rows.iter().filter(|r| r.pass).count();
    out.push(
        Check::new("counting", "frakC-density-bound", Some(1000), passing == density.rows.len())
            .report_only()
            .detail(match density.holds_from {
                Some(n) => format!("holds for every tested n >= {n}"),
                None => format!("holds at {passing} of {} tested n", density.rows.len()),
            }),
    );
    Ok(out)
}

/// Parseval for `1_𝔠` and the two-way pair-correlation identity.
pub fn correlation_suite(nmax: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [9usize, 12].into_iter().filter(|&n| n <= nmax) {
        let sum: ExactRational = partitions(n)
            .iter()
            .map(|l| {
                let a = frak_c_inner_product(l, n);
                &a * &a
            })
            .sum();
        let density = rational_from_uint(&frak_c_size(n)) / rational_from_uint(&factorial(n));
        out.push(Check::new("correlation", "parseval-frakC", Some(n), sum == density).detail(density.to_string()));
    }
    if nmax >= 9 {
        for nu in [1u64, 2, 3, 2520] {
            let c = exact_pair_correlation(9, nu)?;
            out.push(
                Check::new("correlation", "direct-equals-character", Some(9), c.agree())
                    .detail(format!("nu = {nu}: {}", c.direct)),
            );
            out.push(Check::new(
                "correlation",
                "trivial-term-is-density-squared",
                Some(9),
                c.trivial_term == &c.density * &c.density,
            ));
        }
    }
    Ok(out)
}

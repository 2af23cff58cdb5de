//! Exact counts behind the second-moment argument, and finite-range checks
//! of the inequalities it uses.

mod series;

pub use series::{dixon_series, SeriesCoefficients, SeriesKind};

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chars::{check_class_guard, class_size};
use crate::error::Result;
use crate::exact::factorial;
use crate::partition::partitions;
use crate::perm::cycle_type_in_frak_m;

/// `Π_n`: the primes strictly between `n/2` and `3n/5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeWindow {
    pub n: usize,
    pub primes: Vec<usize>,
}

impl PrimeWindow {
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Sieve of Eratosthenes up to and including `limit`.
pub fn primes_up_to(limit: usize) -> Vec<usize> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `n/2 < p < 3n/5`, compared as `2p > n` and `5p < 3n`.
pub fn pi_n(n: usize) -> PrimeWindow {
    let primes = primes_up_to(n)
        .into_iter()
        .filter(|&p| 2 * p > n && 5 * p < 3 * n)
        .collect();
    PrimeWindow { n, primes }
}

/// `|𝔠| = Σ_{p ∈ Π_n} n!/p`.
///
/// A permutation has at most one cycle longer than `n/2`, so the sets
/// "contains a `p`-cycle" for distinct `p ∈ Π_n` are disjoint, and each has
/// `C(n,p)·(p-1)!·(n-p)! = n!/p` elements.
pub fn frak_c_size(n: usize) -> BigUint {
    let f = factorial(n);
    pi_n(n)
        .primes
        .iter()
        .map(|&p| &f / BigUint::from(p))
        .sum()
}

/// `|𝔐|` as a sum of class sizes over cycle types whose cyclic group has
/// minimal degree above `√n/2`.
pub fn frak_m_size(n: usize) -> Result<BigUint> {
    check_class_guard(n)?;
    Ok(partitions(n)
        .iter()
        .filter(|ct| cycle_type_in_frak_m(ct))
        .map(class_size)
        .sum())
}

/// Number of permutations of `m` points whose cycles all have length in
/// `allowed`, by conditioning on the cycle through the first point:
/// `a(m) = Σ_{j allowed, j ≤ m} C(m-1, j-1)·(j-1)!·a(m-j)`.
fn count_with_cycle_lengths(m: usize, allowed: impl Fn(usize) -> bool) -> BigUint {
    let mut a: Vec<BigUint> = Vec::with_capacity(m + 1);
    a.push(BigUint::one());
    for k in 1..=m {
        let mut total = BigUint::zero();
        for j in (1..=k).filter(|&j| allowed(j)) {
            // C(k-1, j-1)·(j-1)! = (k-1)!/(k-j)!
            total += factorial(k - 1) / factorial(k - j) * &a[k - j];
        }
        a.push(total);
    }
    a.pop().unwrap()
}

/// Permutations of `m` points with every cycle of length at most `r`.
pub fn count_bounded_cycles(m: usize, r: usize) -> BigUint {
    count_with_cycle_lengths(m, |j| j <= r)
}

/// `#{σ ∈ S_n : σ^ν = 1}`: cycle lengths must divide `ν`.
pub fn count_nu_roots(n: usize, nu: u64) -> BigUint {
    assert!(nu >= 1, "nu must be positive");
    count_with_cycle_lengths(n, |j| nu % j as u64 == 0)
}

/// `k(N) = Σ_{ν=1..N} #{σ ∈ S_n : σ^ν = 1}`.
///
/// The summand depends only on which `j ≤ n` divide `ν`, so it is cached on
/// that divisor set.
pub fn k_of_n(n: usize, big_n: u64) -> BigUint {
    let mut cache: HashMap<Vec<usize>, BigUint> = HashMap::new();
    let mut total = BigUint::zero();
    for nu in 1..=big_n {
        let divisors: Vec<usize> = (1..=n).filter(|&j| nu % j as u64 == 0).collect();
        let v = cache
            .entry(divisors)
            .or_insert_with(|| count_nu_roots(n, nu));
        total += &*v;
    }
    total
}

/// `d(ν)` from the prime factorisation.
pub fn divisor_count(nu: u64) -> u64 {
    assert!(nu >= 1, "nu must be positive");
    let mut m = nu;
    let mut count = 1;
    let mut d = 2u64;
    while d * d <= m {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        count *= e + 1;
        d += 1;
    }
    if m > 1 {
        count *= 2;
    }
    count
}

/// One report row: `{n, quantity, exact-value-decimal, bound, pass}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub quantity: String,
    #[serde(rename = "exact-value-decimal")]
    pub exact_value_decimal: String,
    pub bound: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub rows: Vec<CountRow>,
    /// Smallest `n` from which the check passes for every tested `n` with a
    /// nonempty window, if any.
    pub holds_from: Option<usize>,
}

/// Report-only: `Σ_{p ∈ Π_n} 1/p ≥ 1/(2 ln n)`, each `n` judged on its own.
pub fn frak_c_density_bound_check(n_max: usize) -> DensityReport {
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let window = pi_n(n);
        if window.is_empty() {
            continue;
        }
        let density: f64 = window.primes.iter().map(|&p| 1.0 / p as f64).sum();
        let bound = 1.0 / (2.0 * (n as f64).ln());
        rows.push(CountRow {
            n,
            quantity: "frakC-density".into(),
            exact_value_decimal: format!("{density:.12}"),
            bound: format!("{bound:.12}"),
            pass: density >= bound,
        });
    }
    let holds_from = rows
        .iter()
        .rposition(|r| !r.pass)
        .map_or(rows.first().map(|r| r.n), |i| rows.get(i + 1).map(|r| r.n));
    DensityReport { rows, holds_from }
}

/// `b(m,r) ≤ (2r/m)^{m/(2r)} m!` for all `m ≤ m_max`, `1 ≤ r ≤ m/2`.
///
/// Both sides are non-negative, so raising to the power `2r` gives the
/// equivalent integer inequality `b^{2r} · m^m ≤ (2r)^m · (m!)^{2r}`, which is
/// decided exactly.
pub fn bounded_cycle_bound_check(m_max: usize) -> Vec<CountRow> {
    let mut rows = Vec::new();
    for m in 2..=m_max {
        let f = factorial(m);
        for r in 1..=m / 2 {
            let b = count_bounded_cycles(m, r);
            let e = 2 * r as u32;
            let lhs = b.pow(e) * BigUint::from(m).pow(m as u32);
            let rhs = BigUint::from(2 * r).pow(m as u32) * f.pow(e);
            rows.push(CountRow {
                n: m,
                quantity: format!("bounded-cycles(r={r})"),
                exact_value_decimal: b.to_string(),
                bound: format!("(2*{r}/{m})^({m}/(2*{r}))*{m}!"),
                pass: lhs <= rhs,
            });
        }
    }
    rows
}

/// `k(N) ≥ (n!/n)·⌊N/n⌋`, from the `n`-cycles alone.
pub fn k_of_n_lower_bound(n: usize, big_n: u64) -> CountRow {
    let value = k_of_n(n, big_n);
    let bound = factorial(n) / BigUint::from(n) * BigUint::from(big_n / n as u64);
    CountRow {
        n,
        quantity: format!("k(N={big_n})"),
        exact_value_decimal: value.to_string(),
        bound: bound.to_string(),
        pass: value >= bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, Permutation};

    #[test]
    fn prime_windows() {
        assert_eq!(pi_n(12).primes, vec![7]);
        assert!(pi_n(8).is_empty());
        assert_eq!(pi_n(84).primes, vec![43, 47]);
        assert_eq!(pi_n(9).primes, vec![5]);
        assert!(pi_n(1).is_empty());
    }

    #[test]
    fn frak_c_sizes() {
        assert_eq!(frak_c_size(12), BigUint::from(68_428_800u64));
        assert_eq!(frak_c_size(8), BigUint::zero());
        let by_classes: BigUint = partitions(12)
            .iter()
            .filter(|c| c.parts().contains(&7))
            .map(class_size)
            .sum();
        assert_eq!(by_classes, frak_c_size(12));
    }

    #[test]
    fn frak_m_sizes() {
        assert_eq!(frak_m_size(2).unwrap(), BigUint::from(2u32));
        let nine_cycle = crate::partition::Partition::row(9);
        assert_eq!(class_size(&nine_cycle), BigUint::from(40_320u32));
        assert!(cycle_type_in_frak_m(&nine_cycle));
        for n in 1..=7 {
            let direct = all_permutations(n).filter(Permutation::in_frak_m).count();
            assert_eq!(frak_m_size(n).unwrap(), BigUint::from(direct), "n = {n}");
        }
        assert!(frak_m_size(80).is_err());
    }

    #[test]
    fn bounded_cycle_counts() {
        assert_eq!(count_bounded_cycles(4, 2), BigUint::from(10u32));
        assert_eq!(count_bounded_cycles(4, 4), BigUint::from(24u32));
        assert_eq!(count_bounded_cycles(5, 1), BigUint::one());
        for m in 0..=12 {
            assert_eq!(count_bounded_cycles(m, m.max(1)), factorial(m));
            for r in 1..m {
                assert!(count_bounded_cycles(m, r) <= count_bounded_cycles(m, r + 1));
            }
        }
        let direct = all_permutations(6)
            .filter(|p| p.cycle_lengths().iter().all(|&l| l <= 3))
            .count();
        assert_eq!(count_bounded_cycles(6, 3), BigUint::from(direct));
    }

    #[test]
    fn bounded_cycle_bound_small() {
        let rows = bounded_cycle_bound_check(6);
        assert!(rows.iter().all(|r| r.pass));
        let m4r2 = rows.iter().find(|r| r.n == 4 && r.quantity == "bounded-cycles(r=2)");
        assert_eq!(m4r2.unwrap().exact_value_decimal, "10");
    }

    #[test]
    fn nu_roots() {
        assert_eq!(count_nu_roots(4, 2), BigUint::from(10u32));
        assert_eq!(count_nu_roots(3, 3), BigUint::from(3u32));
        for n in 0..9 {
            assert_eq!(count_nu_roots(n, 1), BigUint::one());
        }
        // lcm(1..=9) = 2520
        assert_eq!(count_nu_roots(9, 2520), factorial(9));
    }

    #[test]
    fn nu_roots_match_class_sums() {
        for n in 1..=12 {
            let classes = partitions(n);
            for nu in 1..=30u64 {
                let by_classes: BigUint = classes
                    .iter()
                    .filter(|c| c.parts().iter().all(|&j| nu % j as u64 == 0))
                    .map(class_size)
                    .sum();
                assert_eq!(count_nu_roots(n, nu), by_classes, "n {n} nu {nu}");
            }
        }
    }

    #[test]
    fn k_of_n_values() {
        assert_eq!(k_of_n(3, 6), BigUint::from(19u32));
        assert_eq!(k_of_n(3, 1), BigUint::one());
        for (n, big_n) in [(5usize, 25u64), (7, 49), (9, 81)] {
            assert!(k_of_n_lower_bound(n, big_n).pass);
        }
        for n in 1..=6 {
            for big_n in 1..20 {
                assert!(k_of_n(n, big_n) <= k_of_n(n, big_n + 1));
                assert!(k_of_n(n, big_n) <= k_of_n(n + 1, big_n));
            }
        }
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_count(12), 6);
        assert_eq!(divisor_count(1), 1);
        assert_eq!(divisor_count(97), 2);
        for nu in 1..500u64 {
            assert_eq!(divisor_count(nu), (1..=nu).filter(|d| nu % d == 0).count() as u64);
        }
    }

    #[test]
    fn density_report() {
        let report = frak_c_density_bound_check(1000);
        let twelve = report.rows.iter().find(|r| r.n == 12).unwrap();
        assert!(!twelve.pass);
        assert!(report.rows.iter().any(|r| r.n == 1000));
        assert!((twelve.exact_value_decimal.parse::<f64>().unwrap() - 1.0 / 7.0).abs() < 1e-12);
        // Σ 1/p over (n/2, 3n/5) behaves like ln(6/5)/ln n, below 1/(2 ln n):
        // an independent prime scan finds no passing n up to 3000.
        assert!(report.rows.iter().all(|r| !r.pass));
        assert_eq!(report.holds_from, None);
    }
}

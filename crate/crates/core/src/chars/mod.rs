//! Exact irreducible character theory of `S_n`.
//!
//! Characters are labelled by partitions and evaluated with the
//! Murnaghan–Nakayama rule; dimensions come from the hook formula. Every
//! identity in this module is checked in exact integer or rational
//! arithmetic.

mod bound;
mod mn;
mod rim_hook;

pub use bound::{
    character_bound_survey, delta, dim_lower_bound_check, BoundViolation, CharacterBoundSurvey,
    DeltaExponent, DimBoundRow, DimLowerBoundReport, SURVEY_MAX_N,
};
pub use mn::{mn_character, CharacterEvaluator, CharacterTable, RemovalOrder};
pub use rim_hook::{rim_hooks, skew_cells, RimHook};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::counting::{is_prime, pi_n};
use crate::error::{Error, Result};
use crate::exact::{factorial, rational, to_bigint, ExactRational};
use crate::partition::{partition_count, partitions, CycleType, Partition};

/// `n! / Π_j (j^{c_j} c_j!)`.
pub fn class_size(ct: &CycleType) -> BigUint {
    let denom = ct
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (j, c)| {
            acc * BigUint::from(j).pow(c as u32) * factorial(c)
        });
    factorial(ct.size()) / denom
}

/// Hook length of box `(i, j)` (0-based) of `lambda`.
pub fn hook_length(lambda: &Partition, conj: &Partition, i: usize, j: usize) -> usize {
    lambda.parts()[i] - j + conj.parts()[j] - i - 1
}

/// `χ^λ(1) = n! / Π hook lengths`.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= BigUint::from(hook_length(lambda, &conj, i, j));
        }
    }
    factorial(lambda.size()) / hooks
}

/// Which shape family of `Λ_{n,p}` a partition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaCase {
    /// `λ = (n-p, λ₂, 1^{p-λ₂})` with `1 ≤ λ₂ ≤ n-p`: the hook avoids row 1.
    FirstRowIntact,
    /// `λ = (λ₁, n-p+1, 1^{p-1-λ₁})` with `n-p < λ₁ ≤ p-1`: the hook enters row 1.
    FirstRowCut,
}

/// A member of `Λ_{n,p}` with its distinguished `p`-rim hook `h`,
/// `λ \ h = (n-p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaEntry {
    pub partition: Partition,
    pub case: LambdaCase,
    pub leg_length: usize,
}

impl LambdaEntry {
    /// `(-1)^{ll(h)}`.
    pub fn sign(&self) -> i32 {
        if self.leg_length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Closed form of `Λ_{n,p}`, listing the first-row-intact family by
/// increasing `λ₂` and then the first-row-cut family by increasing `λ₁`.
///
/// The characterisation only uses `p > n/2`, so any prime in `(n/2, n]` is
/// accepted, not just those of `Π_n`.
pub fn lambda_np(n: usize, p: usize) -> Result<Vec<LambdaEntry>> {
    if 2 * p <= n || p > n || !is_prime(p) {
        return Err(Error::PrimeOutOfWindow { prime: p, n });
    }
    let m = n - p;
    let mut out = Vec::new();
    for l2 in 1..=m {
        let mut parts = vec![m, l2];
        parts.extend(std::iter::repeat_n(1, p - l2));
        out.push(LambdaEntry {
            partition: Partition::new(parts).expect("valid shape"),
            case: LambdaCase::FirstRowIntact,
            leg_length: p - l2,
        });
    }
    for l1 in m + 1..p {
        let mut parts = vec![l1, m + 1];
        parts.extend(std::iter::repeat_n(1, p - 1 - l1));
        out.push(LambdaEntry {
            partition: Partition::new(parts).expect("valid shape"),
            case: LambdaCase::FirstRowCut,
            leg_length: p - l1,
        });
    }
    Ok(out)
}

/// `⟨χ^λ, 1_𝔠⟩ = (1/n!) Σ_{π ∈ 𝔠} χ^λ(π)`.
///
/// `𝔠` splits by the unique prime of `Π_n` whose cycle occurs, and each part
/// contributes `(-1)^{ll(h_p)}/p` when `λ ∈ Λ_{n,p}` (or `1/p` for `λ = (n)`).
/// For large `n`, `λ` may lie in `Λ_{n,p}` for several `p`; all are summed.
pub fn frak_c_inner_product(lambda: &Partition, n: usize) -> ExactRational {
    let mut total = ExactRational::zero();
    if lambda.size() != n {
        return total;
    }
    let trivial = *lambda == Partition::row(n);
    for p in pi_n(n).primes {
        if trivial {
            total += rational(1, p as i64);
            continue;
        }
        if let Some(entry) = lambda_np(n, p)
            .expect("p from the window")
            .into_iter()
            .find(|e| &e.partition == lambda)
        {
            total += rational(entry.sign(), p as i64);
        }
    }
    total
}

/// Largest partition count for which class-by-class sums are attempted.
pub const CLASS_ENUMERATION_GUARD: u64 = 100_000;

pub(crate) fn check_class_guard(n: usize) -> Result<()> {
    let count = partition_count(n);
    if count > CLASS_ENUMERATION_GUARD as u128 {
        return Err(Error::GuardExceeded {
            guard: "partition-count",
            value: count.min(u64::MAX as u128) as u64,
            limit: CLASS_ENUMERATION_GUARD,
        });
    }
    Ok(())
}

/// Largest degree whose full character table is built on request.
pub const CHARACTER_TABLE_MAX_N: usize = 25;

pub fn check_table_guard(n: usize) -> Result<()> {
    if n > CHARACTER_TABLE_MAX_N {
        return Err(Error::GuardExceeded {
            guard: "character-table-max-n",
            value: n as u64,
            limit: CHARACTER_TABLE_MAX_N as u64,
        });
    }
    Ok(())
}

/// `(1/n!) Σ_classes |C| χ^λ(C) [pred(C)]`, by direct enumeration of classes.
pub fn inner_product_indicator(
    lambda: &Partition,
    n: usize,
    pred: impl Fn(&CycleType) -> bool,
) -> Result<ExactRational> {
    check_class_guard(n)?;
    let mut eval = CharacterEvaluator::new();
    let mut sum = BigInt::zero();
    for ct in partitions(n).into_iter().filter(|c| pred(c)) {
        sum += to_bigint(&class_size(&ct)) * eval.character(lambda, &ct)?;
    }
    Ok(ExactRational::new(sum, to_bigint(&factorial(n))))
}

/// `Σ_{C ∋ p-cycle} |C| χ^λ(C)` by direct class enumeration.
pub fn p_class_sum(lambda: &Partition, p: usize, eval: &mut CharacterEvaluator) -> Result<BigInt> {
    let n = lambda.size();
    check_class_guard(n)?;
    let mut sum = BigInt::zero();
    for ct in partitions(n).into_iter().filter(|c| c.parts().contains(&p)) {
        sum += to_bigint(&class_size(&ct)) * eval.character(lambda, &ct)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycle_type_in_frak_c;
    use crate::counting::primes_up_to;
    use num_traits::Signed;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(&p(&[2, 1])), BigUint::from(3u32));
        for n in 1..10 {
            assert_eq!(class_size(&Partition::row(n)), factorial(n) / BigUint::from(n));
            assert_eq!(class_size(&Partition::column(n)), BigUint::one());
        }
        for n in 0..=10 {
            let total: BigUint = partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn s3_table() {
        let l = p(&[2, 1]);
        assert_eq!(mn_character(&l, &p(&[1, 1, 1])).unwrap(), int(2));
        assert_eq!(mn_character(&l, &p(&[2, 1])).unwrap(), int(0));
        assert_eq!(mn_character(&l, &p(&[3])).unwrap(), int(-1));
        assert!(matches!(
            mn_character(&l, &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8 {
            for ct in partitions(n) {
                assert_eq!(mn_character(&Partition::row(n), &ct).unwrap(), int(1));
                let sign = if ct.is_even() { 1 } else { -1 };
                assert_eq!(mn_character(&Partition::column(n), &ct).unwrap(), int(sign));
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&p(&[4, 1])), BigUint::from(4u32));
        assert_eq!(dimension(&Partition::row(7)), BigUint::one());
        let total: BigUint = partitions(6).iter().map(|l| dimension(l).pow(2)).sum();
        assert_eq!(total, BigUint::from(720u32));
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn dimensions_match_character_at_identity() {
        let mut eval = CharacterEvaluator::new();
        for n in 0..=10 {
            for l in partitions(n) {
                assert_eq!(
                    to_bigint(&dimension(&l)),
                    eval.character(&l, &Partition::column(n)).unwrap()
                );
            }
        }
    }

    #[test]
    fn removal_order_does_not_matter() {
        let mut a = CharacterEvaluator::new();
        let mut b = CharacterEvaluator::new();
        for n in 1..=10 {
            for l in partitions(n) {
                for ct in partitions(n).iter().step_by(3) {
                    assert_eq!(
                        a.character_in_order(&l, ct, RemovalOrder::LargestFirst).unwrap(),
                        b.character_in_order(&l, ct, RemovalOrder::SmallestFirst).unwrap(),
                        "{l} on {ct}"
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_10_7_matches_both_families() {
        let got: Vec<Vec<usize>> = lambda_np(10, 7)
            .unwrap()
            .into_iter()
            .map(|e| e.partition.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![3, 1, 1, 1, 1, 1, 1, 1],
                vec![3, 2, 1, 1, 1, 1, 1],
                vec![3, 3, 1, 1, 1, 1],
                vec![4, 4, 1, 1],
                vec![5, 4, 1],
                vec![6, 4],
            ]
        );
        assert!(matches!(lambda_np(10, 5), Err(Error::PrimeOutOfWindow { .. })));
        assert!(matches!(lambda_np(12, 8), Err(Error::PrimeOutOfWindow { .. })));
        assert!(matches!(lambda_np(12, 13), Err(Error::PrimeOutOfWindow { .. })));
    }

    #[test]
    fn lambda_entries_carry_their_hook() {
        for n in 2..=40 {
            for prime in primes_up_to(n).into_iter().filter(|&p| 2 * p > n) {
                for e in lambda_np(n, prime).unwrap() {
                    let hook = rim_hooks(&e.partition, prime)
                        .into_iter()
                        .find(|h| h.remainder == Partition::row(n - prime))
                        .expect("distinguished hook exists");
                    assert_eq!(hook.leg_length, e.leg_length);
                }
            }
        }
        assert_eq!(lambda_np(12, 7).unwrap().len(), 6);
    }

    #[test]
    fn frak_c_inner_products_at_twelve() {
        assert_eq!(frak_c_inner_product(&Partition::row(12), 12), rational(1, 7));
        assert_eq!(frak_c_inner_product(&Partition::column(12), 12), ExactRational::zero());
        let primes = pi_n(12).primes;
        let brute = inner_product_indicator(&Partition::column(12), 12, |c| {
            cycle_type_in_frak_c(c, &primes)
        })
        .unwrap();
        assert_eq!(brute, ExactRational::zero());
        let l = p(&[5, 5, 1, 1]);
        let v = frak_c_inner_product(&l, 12);
        assert_eq!(v.abs(), rational(1, 7));
        let brute = inner_product_indicator(&l, 12, |c| cycle_type_in_frak_c(c, &primes)).unwrap();
        assert_eq!(v, brute);
        let brute = inner_product_indicator(&p(&[11, 1]), 12, |c| cycle_type_in_frak_c(c, &primes))
            .unwrap();
        assert_eq!(brute, ExactRational::zero());
    }

    #[test]
    fn indicator_orthogonality_to_trivial() {
        for n in 1..=7 {
            for l in partitions(n) {
                let v = inner_product_indicator(&l, n, |_| true).unwrap();
                let expect = if l == Partition::row(n) {
                    ExactRational::one()
                } else {
                    ExactRational::zero()
                };
                assert_eq!(v, expect);
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            inner_product_indicator(&Partition::row(60), 60, |_| true),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn table_csv_shape() {
        let t = CharacterTable::new(5);
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 8);
        assert!(lines[0].starts_with("lambda,\"(5)\""));
        assert_eq!(lines[1], "\"(5)\",1,1,1,1,1,1,1");
        let dims: BigInt = t.values.iter().map(|row| &row[6] * &row[6]).sum();
        assert_eq!(dims, int(120));
    }
}

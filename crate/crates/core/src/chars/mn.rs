use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rim_hook::remove_hooks;
use crate::error::{Error, Result};
use crate::partition::{partitions, CycleType, Partition};

/// Order in which the Murnaghan–Nakayama recursion strips cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RemovalOrder {
    LargestFirst,
    SmallestFirst,
}

/// Murnaghan–Nakayama evaluation with a memo keyed on
/// `(remaining partition, remaining cycles)`.
///
/// One evaluator can be reused across many `(λ, class)` queries; the memo
/// only ever stores exact values, so reuse never changes results.
#[derive(Debug, Default)]
pub struct CharacterEvaluator {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` on the class of cycle type `ct`, removing the largest cycle first.
    pub fn character(&mut self, lambda: &Partition, ct: &CycleType) -> Result<BigInt> {
        self.character_in_order(lambda, ct, RemovalOrder::LargestFirst)
    }

    pub fn character_in_order(
        &mut self,
        lambda: &Partition,
        ct: &CycleType,
        order: RemovalOrder,
    ) -> Result<BigInt> {
        if lambda.size() != ct.size() {
            return Err(Error::SizeMismatch {
                partition: lambda.size(),
                cycle_type: ct.size(),
            });
        }
        let mut cycles = ct.parts().to_vec();
        if order == RemovalOrder::SmallestFirst {
            cycles.reverse();
        }
        Ok(self.eval(lambda.parts(), &cycles))
    }

    fn eval(&mut self, parts: &[usize], cycles: &[usize]) -> BigInt {
        let Some((&q, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        if rest.is_empty() {
            // One cycle left: only a hook shape (a, 1^b) contributes, with sign (-1)^b.
            return if parts.len() <= 1 || parts[1..].iter().all(|&p| p == 1) {
                if (parts.len() - 1) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            } else {
                BigInt::zero()
            };
        }
        let key = (parts.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (rem, leg) in remove_hooks(parts, q) {
            let v = self.eval(&rem, rest);
            if leg % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^λ(ct)` with a fresh evaluator.
pub fn mn_character(lambda: &Partition, ct: &CycleType) -> Result<BigInt> {
    CharacterEvaluator::new().character(lambda, ct)
}

/// Full character table of `S_n`; rows and columns both follow
/// [`partitions`] order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    pub classes: Vec<CycleType>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        Self::with_evaluator(n, &mut CharacterEvaluator::new())
    }

    pub fn with_evaluator(n: usize, eval: &mut CharacterEvaluator) -> Self {
        let labels = partitions(n);
        let classes = labels.clone();
        let values = labels
            .iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| eval.character(l, c).expect("same size"))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            labels,
            classes,
            values,
        }
    }

    pub fn value(&self, lambda: usize, class: usize) -> &BigInt {
        &self.values[lambda][class]
    }

    /// CSV with one row per `λ` and one column per cycle type; labels are
    /// quoted `(a,b,...)` tuples and values exact decimal integers.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda");
        for c in &self.classes {
            out.push_str(&format!(",\"{c}\""));
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.values) {
            out.push_str(&format!("\"{label}\""));
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

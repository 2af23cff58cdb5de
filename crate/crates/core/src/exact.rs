//! Shared exact arithmetic: a process-wide factorial table, binomials, and
//! rational enclosures of `e` used to certify transcendental comparisons.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type ExactRational = BigRational;

fn factorial_table() -> &'static RwLock<Vec<BigUint>> {
    static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// `n!`, served from an append-only cache shared by every thread.
pub fn factorial(n: usize) -> BigUint {
    {
        let table = factorial_table().read().expect("factorial cache poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().expect("factorial cache poisoned");
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigUint::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

pub fn rational_from_uint(v: &BigUint) -> ExactRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

pub fn to_bigint(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

/// Lossy conversion for reporting only.
pub fn rational_to_f64(r: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Terms of the exponential series used by [`e_enclosure`].
const E_TERMS: usize = 40;

/// Rational bounds `lo < e < hi`.
///
/// `lo` is the partial sum `sum_{k<=K} 1/k!`; the tail is at most
/// `1/(K! * K)`, which gives `hi`.
pub fn e_enclosure() -> (ExactRational, ExactRational) {
    static BOUNDS: OnceLock<(ExactRational, ExactRational)> = OnceLock::new();
    BOUNDS
        .get_or_init(|| {
            let mut lo = ExactRational::zero();
            for k in 0..=E_TERMS {
                lo += ExactRational::new(BigInt::one(), to_bigint(&factorial(k)));
            }
            let tail = ExactRational::new(
                BigInt::one(),
                to_bigint(&factorial(E_TERMS)) * BigInt::from(E_TERMS),
            );
            let hi = &lo + tail;
            (lo, hi)
        })
        .clone()
}

/// Outcome of a comparison that is decided with exact rational enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certified {
    /// The inequality holds for every value inside the enclosure.
    Pass,
    /// The inequality fails for every value inside the enclosure.
    Fail,
    /// The enclosure straddles the threshold.
    Undecided,
}

impl Certified {
    pub fn passed(self) -> bool {
        self == Certified::Pass
    }
}

/// `e^n` enclosed as `lo_num/lo_den < e^n < hi_num/hi_den`, for repeated
/// comparisons at one `n`.
#[derive(Debug, Clone)]
pub struct ExpPowerEnclosure {
    lo: (BigInt, BigInt),
    hi: (BigInt, BigInt),
}

impl ExpPowerEnclosure {
    pub fn new(n: u32) -> Self {
        let (lo, hi) = e_enclosure();
        ExpPowerEnclosure {
            lo: (lo.numer().pow(n), lo.denom().pow(n)),
            hi: (hi.numer().pow(n), hi.denom().pow(n)),
        }
    }

    /// Decides `x >= e^n` for a non-negative integer `x`.
    pub fn at_most(&self, x: &BigUint) -> Certified {
        let x = to_bigint(x);
        if &x * &self.hi.1 >= self.hi.0 {
            Certified::Pass
        } else if &x * &self.lo.1 < self.lo.0 {
            Certified::Fail
        } else {
            Certified::Undecided
        }
    }
}

/// Decides `ln(value) >= n / 4`, i.e. `value^4 >= e^n`, without floating point.
pub fn ln_at_least_quarter(value: &BigUint, n: u32) -> Certified {
    ExpPowerEnclosure::new(n).at_most(&value.pow(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(12), BigUint::from(479_001_600u64));
    }

    #[test]
    fn factorial_cache_is_consistent_across_threads() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || factorial(30 + i)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let v = h.join().unwrap();
            let mut expect = BigUint::one();
            for k in 1..=(30 + i) {
                expect *= BigUint::from(k);
            }
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 7), BigUint::from(792u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn e_enclosure_brackets_e() {
        let (lo, hi) = e_enclosure();
        assert!(lo < hi);
        let e = std::f64::consts::E;
        assert!(rational_to_f64(&lo) <= e && e <= rational_to_f64(&hi));
        let width = rational_to_f64(&(hi - lo));
        assert!(width < 1e-40);
    }

    #[test]
    fn quarter_log_certificates() {
        // e^3 = 20.0855...
        assert_eq!(ln_at_least_quarter(&BigUint::from(21u32), 12), Certified::Pass);
        assert_eq!(ln_at_least_quarter(&BigUint::from(20u32), 12), Certified::Fail);
    }
}

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::report::exact_rational;
use crate::chars::{check_class_guard, class_size, dimension, frak_c_inner_product, CharacterEvaluator};
use crate::counting::pi_n;
use crate::error::{Error, Result};
use crate::exact::{factorial, rational_from_uint, to_bigint, ExactRational};
use crate::partition::{partitions, CycleType, Partition};
use crate::perm::{all_permutations, cycle_type_in_frak_m, Permutation};

/// `Q(πσ^i ∈ 𝔠, πσ^j ∈ 𝔠)` with `ν = j - i`, for `π` uniform on `S_n` and `σ`
/// uniform on `𝔐`, computed two independent ways.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCorrelation {
    pub n: usize,
    pub nu: u64,
    /// Counting pairs `(x, x·σ^ν)` inside `𝔠` element by element.
    #[serde(serialize_with = "exact_rational")]
    pub direct: ExactRational,
    /// `(n!/|𝔐|) Σ_χ ⟨χ, 1_𝔠⟩² ⟨χ, r_ν⟩ / χ(1)`.
    #[serde(serialize_with = "exact_rational")]
    pub character: ExactRational,
    /// The `χ = 1` summand alone.
    #[serde(serialize_with = "exact_rational")]
    pub trivial_term: ExactRational,
    /// `|𝔠|/n!`.
    #[serde(serialize_with = "exact_rational")]
    pub density: ExactRational,
}

impl PairCorrelation {
    pub fn agree(&self) -> bool {
        self.direct == self.character
    }
}

/// Largest degree for the element-by-element side.
pub const DIRECT_MAX_N: usize = 10;

fn frak_m_classes(n: usize) -> Vec<(CycleType, BigUint)> {
    partitions(n)
        .into_iter()
        .filter(cycle_type_in_frak_m)
        .map(|t| {
            let size = class_size(&t);
            (t, size)
        })
        .collect()
}

/// Both sides of the pair-correlation identity; `n ≤ 10`.
pub fn exact_pair_correlation(n: usize, nu: u64) -> Result<PairCorrelation> {
    if n > DIRECT_MAX_N {
        return Err(Error::GuardExceeded {
            guard: "correlation-direct-max-n",
            value: n as u64,
            limit: DIRECT_MAX_N as u64,
        });
    }
    let (character, trivial_term, density) = character_parts(n, nu)?;
    Ok(PairCorrelation {
        n,
        nu,
        direct: direct_side(n, nu)?,
        character,
        trivial_term,
        density,
    })
}

/// The character side alone, which only enumerates classes and so reaches
/// further than the direct side.
pub fn character_side_correlation(n: usize, nu: u64) -> Result<ExactRational> {
    Ok(character_parts(n, nu)?.0)
}

fn check_nu(nu: u64) -> Result<()> {
    if nu == 0 {
        return Err(Error::Precondition("nu must be positive".into()));
    }
    Ok(())
}

/// `(1/(n!|𝔐|)) Σ_{t ∈ 𝔐} |t| · g(σ_t^ν)` with
/// `g(τ) = #{x ∈ 𝔠 : x·τ ∈ 𝔠}`, evaluated once per class of `τ`.
fn direct_side(n: usize, nu: u64) -> Result<ExactRational> {
    check_nu(nu)?;
    let primes = pi_n(n).primes;
    let frak_c: Vec<Permutation> = all_permutations(n).filter(|x| x.in_frak_c(&primes)).collect();
    let mut g_cache: HashMap<CycleType, BigUint> = HashMap::new();
    let mut numerator = BigUint::zero();
    let mut m_size = BigUint::zero();
    for (t, size) in frak_m_classes(n) {
        let tau = Permutation::with_cycle_type(&t).power(nu as i64);
        let g = g_cache.entry(tau.cycle_type()).or_insert_with(|| {
            BigUint::from(
                frak_c
                    .iter()
                    .filter(|x| x.compose_unchecked(&tau).in_frak_c(&primes))
                    .count(),
            )
        });
        numerator += &size * &*g;
        m_size += size;
    }
    Ok(ExactRational::new(
        to_bigint(&numerator),
        to_bigint(&(factorial(n) * m_size)),
    ))
}

/// `(value, trivial-character term, |𝔠|/n!)`.
fn character_parts(n: usize, nu: u64) -> Result<(ExactRational, ExactRational, ExactRational)> {
    check_nu(nu)?;
    check_class_guard(n)?;
    let f = rational_from_uint(&factorial(n));
    let classes = frak_m_classes(n);
    let m_size: BigUint = classes.iter().map(|(_, s)| s).sum();
    let m_size = rational_from_uint(&m_size);
    let powered: Vec<(CycleType, ExactRational)> = classes
        .iter()
        .map(|(t, s)| (t.power(nu), rational_from_uint(s)))
        .collect();
    let mut eval = CharacterEvaluator::new();
    let mut total = ExactRational::zero();
    let mut trivial_term = ExactRational::zero();
    for lambda in partitions(n) {
        let a = frak_c_inner_product(&lambda, n);
        if a.is_zero() {
            continue;
        }
        let mut r = ExactRational::zero();
        for (ct, size) in &powered {
            r += size * ExactRational::from_integer(eval.character(&lambda, ct)?);
        }
        r /= &f;
        let term = &a * &a * r / rational_from_uint(&dimension(&lambda));
        if lambda == Partition::row(n) {
            trivial_term = &term * &f / &m_size;
        }
        total += term;
    }
    let density = frak_c_inner_product(&Partition::row(n), n);
    Ok((total * f / m_size, trivial_term, density))
}

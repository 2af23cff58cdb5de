use num_bigint::BigUint;
use serde_json::{json, Value};

use super::GeneratorSet;
use crate::counting::is_prime;
use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::perm::Permutation;

/// Which of the four outcomes occurred, without witness data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    AllOrAlternating,
    Intransitive,
    TransitiveImprimitive,
    PrimitiveProper,
}

impl ClassKind {
    pub const ALL: [ClassKind; 4] = [
        ClassKind::AllOrAlternating,
        ClassKind::Intransitive,
        ClassKind::TransitiveImprimitive,
        ClassKind::PrimitiveProper,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ClassKind::AllOrAlternating => "all-or-alternating",
            ClassKind::Intransitive => "intransitive",
            ClassKind::TransitiveImprimitive => "transitive-imprimitive",
            ClassKind::PrimitiveProper => "primitive-proper",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Why a group was recognised as `A_n` or `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A primitive group containing a `prime`-cycle with `prime ≤ n - 3`.
    JordanCycle { prime: usize },
    /// The order computed by Schreier–Sims is at least `n!/2`.
    Order(BigUint),
    /// Degree at most 2, where `A_n` is trivial.
    TrivialAlternating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    AllOrAlternating {
        /// Some generator is odd, so the group is `S_n` rather than `A_n`.
        symmetric: bool,
        certificate: Certificate,
    },
    Intransitive {
        orbits: Vec<Vec<usize>>,
    },
    TransitiveImprimitive {
        block: Vec<usize>,
    },
    PrimitiveProper {
        order: BigUint,
    },
}

impl Classification {
    pub fn kind(&self) -> ClassKind {
        match self {
            Classification::AllOrAlternating { .. } => ClassKind::AllOrAlternating,
            Classification::Intransitive { .. } => ClassKind::Intransitive,
            Classification::TransitiveImprimitive { .. } => ClassKind::TransitiveImprimitive,
            Classification::PrimitiveProper { .. } => ClassKind::PrimitiveProper,
        }
    }

    pub fn tag(&self) -> &'static str {
        self.kind().tag()
    }

    /// Tag plus witness; points are 1-based and orders are decimal strings.
    pub fn to_json(&self) -> Value {
        let one_based = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
        match self {
            Classification::AllOrAlternating {
                symmetric,
                certificate,
            } => {
                let cert = match certificate {
                    Certificate::JordanCycle { prime } => json!({"jordan_prime": prime}),
                    Certificate::Order(o) => json!({"order": o.to_string()}),
                    Certificate::TrivialAlternating => json!("trivial-alternating"),
                };
                json!({
                    "tag": self.tag(),
                    "group": if *symmetric { "S" } else { "A" },
                    "certificate": cert,
                })
            }
            Classification::Intransitive { orbits } => json!({
                "tag": self.tag(),
                "orbit_sizes": orbits.iter().map(Vec::len).collect::<Vec<_>>(),
            }),
            Classification::TransitiveImprimitive { block } => json!({
                "tag": self.tag(),
                "block": one_based(block),
            }),
            Classification::PrimitiveProper { order } => json!({
                "tag": self.tag(),
                "order": order.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Try to certify `A_n ≤ G` through a Jordan cycle before computing the order.
    pub jordan: bool,
    /// Longest reduced word in the generators searched for a Jordan element.
    pub max_word_len: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            jordan: true,
            max_word_len: 6,
        }
    }
}

pub fn classify_tuple(perms: &[Permutation]) -> Result<Classification> {
    classify_tuple_with(perms, ClassifyOptions::default())
}

/// Intransitive, else imprimitive, else `A_n ≤ G` or a proper primitive group.
pub fn classify_tuple_with(
    perms: &[Permutation],
    options: ClassifyOptions,
) -> Result<Classification> {
    let gens = GeneratorSet::from_perms(perms.to_vec())?;
    let n = gens.degree();
    let symmetric = perms.iter().any(|p| !p.is_even());
    if n <= 2 {
        return Ok(Classification::AllOrAlternating {
            symmetric,
            certificate: Certificate::TrivialAlternating,
        });
    }
    let orbits = gens.orbits();
    if orbits.len() > 1 {
        return Ok(Classification::Intransitive { orbits });
    }
    if let Some(block) = gens.nontrivial_block() {
        return Ok(Classification::TransitiveImprimitive { block });
    }
    if options.jordan {
        if let Some(prime) = find_jordan_prime(perms, options.max_word_len) {
            return Ok(Classification::AllOrAlternating {
                symmetric,
                certificate: Certificate::JordanCycle { prime },
            });
        }
    }
    let order = gens.bsgs().order();
    if order.clone() * 2u32 >= factorial(n) {
        Ok(Classification::AllOrAlternating {
            symmetric,
            certificate: Certificate::Order(order),
        })
    } else {
        Ok(Classification::PrimitiveProper { order })
    }
}

/// A prime `p ≤ n - 3` such that some power of `w` is a `p`-cycle: `w` has
/// exactly one cycle of length `p` and no other cycle length divisible by `p`.
fn jordan_prime_of(w: &Permutation) -> Option<usize> {
    let n = w.degree();
    let lengths = w.cycle_lengths();
    lengths.iter().copied().find(|&p| {
        p + 3 <= n
            && is_prime(p)
            && lengths.iter().filter(|&&l| l == p).count() == 1
            && lengths.iter().all(|&l| l == p || l % p != 0)
    })
}

/// Searches reduced words of length `1..=max_len` in the generators and
/// their inverses, shortest first.
fn find_jordan_prime(perms: &[Permutation], max_len: usize) -> Option<usize> {
    let mut letters: Vec<(usize, Permutation)> = Vec::new();
    for (i, p) in perms.iter().enumerate() {
        letters.push((2 * i, p.clone()));
        letters.push((2 * i + 1, p.inverse()));
    }
    let inverse_of = |l: usize| l ^ 1;
    // (last letter, value)
    let mut layer: Vec<(usize, Permutation)> = letters.clone();
    for len in 1..=max_len {
        if let Some(p) = layer.iter().find_map(|(_, w)| jordan_prime_of(w)) {
            return Some(p);
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * (letters.len().saturating_sub(1)));
        for (last, w) in &layer {
            for (l, g) in &letters {
                if *l != inverse_of(*last) {
                    next.push((*l, w.compose_unchecked(g)));
                }
            }
        }
        layer = next;
    }
    None
}

/// The `prime`-cycle inside `p`, isolated by raising `p` to the lcm of its
/// other cycle lengths (all shorter than `prime`, hence coprime to it).
pub fn extract_p_cycle(p: &Permutation, prime: usize) -> Result<Permutation> {
    let n = p.degree();
    if 2 * prime <= n {
        return Err(Error::Precondition(format!(
            "extract_p_cycle needs prime > n/2 (prime {prime}, n {n})"
        )));
    }
    let lengths = p.cycle_lengths();
    if !lengths.contains(&prime) {
        return Err(Error::NoSuchCycle(prime));
    }
    let e = lengths
        .iter()
        .filter(|&&l| l != prime)
        .fold(1u64, |acc, &l| num_integer::lcm(acc, l as u64));
    Ok(p.power((e % prime as u64) as i64))
}

//! Permutations of `{1..n}` and their cycle structure.
//!
//! Points are 0-based in the API and 1-based in every text format. Products
//! follow a single convention throughout the crate:
//!
//! ```text
//! (p · q)(i) = p(q(i))
//! ```
//!
//! so `q` acts first, and an expression like `πσ^i` is
//! `pi.compose(&sigma.power(i))`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::{CycleType, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint { point: x + 1 });
            }
        }
        Ok(Permutation { images })
    }

    /// One-line notation with 1-based points: `[2, 3, 1]` maps 1→2, 2→3, 3→1.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        let images = one_based
            .iter()
            .map(|&x| {
                if x == 0 || x > n {
                    Err(Error::PointOutOfRange { point: x, degree: n })
                } else {
                    Ok(x - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    /// Product of disjoint cycles given with 1-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &x in cycle.iter() {
                if x == 0 || x > n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::RepeatedPoint { point: x });
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The element with cycles on consecutive points: `(1..λ₁)(λ₁+1..)...`.
    pub fn with_cycle_type(ct: &CycleType) -> Self {
        let mut images = Vec::with_capacity(ct.size());
        let mut start = 0;
        for &len in ct.parts() {
            images.extend((1..len).map(|k| start + k));
            images.push(start);
            start += len;
        }
        Permutation { images }
    }

    /// Parses cycle notation `"(1 2 3)(4 5)"` or one-line notation `"2 3 1 5 4"`.
    /// The degree is always explicit; one-line text must list exactly `n` points.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('(') {
            parse_cycles(t, n)
        } else {
            let points = t
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Malformed(format!("`{s}` is not a point")))
                })
                .collect::<Result<Vec<_>>>()?;
            if points.len() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: points.len(),
                });
            }
            Self::from_one_line(&points)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// In-place right multiplication `self ← self · other`.
    pub(crate) fn right_mul_into(&self, other: &Permutation, out: &mut Permutation) {
        out.images.clear();
        out.images.extend(other.images.iter().map(|&x| self.images[x]));
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        Ok(g.compose(self)?.compose_unchecked(&g.inverse()))
    }

    /// `self^k` for any integer `k`, in `O(n)` time regardless of `|k|`:
    /// each cycle is stepped by `k` modulo its length.
    pub fn power(&self, k: i64) -> Permutation {
        let mut images = vec![0; self.degree()];
        for cycle in self.cycles_with_fixed() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }

    /// Every cycle including fixed points, each starting at its smallest point.
    pub fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Nontrivial cycles only.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// Cycle lengths (fixed points count as 1) without building the cycles.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        Partition::from_unsorted(self.cycle_lengths())
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i == x).count()
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    /// Membership in `𝔠`: some cycle length lies in `primes`.
    pub fn in_frak_c(&self, primes: &[usize]) -> bool {
        cycle_type_in_frak_c(&self.cycle_type(), primes)
    }

    /// Minimal degree of the cyclic group generated by `self`.
    pub fn min_degree_cyclic(&self) -> MinimalDegree {
        min_degree_of_cycle_type(&self.cycle_type())
    }

    /// Membership in `𝔐`: minimal degree of `⟨self⟩` exceeds `√n / 2`.
    pub fn in_frak_m(&self) -> bool {
        cycle_type_in_frak_m(&self.cycle_type())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses cycle notation whose degree is the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        parse_cycles(s.trim(), max)
    }
}

fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Malformed(format!("expected `(` at `{rest}`")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Malformed("unclosed cycle".into()))?;
        let body = &open[..close];
        if body.contains('(') {
            return Err(Error::Malformed("nested `(`".into()));
        }
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("`{s}` is not a point")))
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
        rest = open[close + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(n, &refs)
}

/// Least number of points moved by a non-identity power, or `Infinite` for
/// the identity (the minimum over an empty set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinimalDegree {
    Points(usize),
    Infinite,
}

impl MinimalDegree {
    /// `m > √n / 2`, decided exactly as `4m² > n`.
    pub fn exceeds_half_sqrt(self, n: usize) -> bool {
        match self {
            MinimalDegree::Infinite => true,
            MinimalDegree::Points(m) => 4 * m * m > n,
        }
    }
}

impl fmt::Display for MinimalDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimalDegree::Points(m) => write!(f, "{m}"),
            MinimalDegree::Infinite => write!(f, "inf"),
        }
    }
}

fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn valuation(mut m: usize, q: usize) -> u32 {
    let mut v = 0;
    while m % q == 0 {
        m /= q;
        v += 1;
    }
    v
}

/// Minimal degree of `⟨σ⟩` from the cycle type of `σ`.
///
/// With `L` the order, the candidates are `σ^(L/q)` for primes `q | L`:
/// a cycle of length `j` is fixed pointwise by `σ^(L/q)` exactly when
/// `v_q(j) < v_q(L)`. Every nontrivial power moves at least as many points
/// as one of these candidates.
pub fn min_degree_of_cycle_type(ct: &CycleType) -> MinimalDegree {
    let n = ct.size();
    let mut qs: Vec<usize> = ct
        .parts()
        .iter()
        .flat_map(|&j| prime_factors(j))
        .collect();
    qs.sort_unstable();
    qs.dedup();
    qs.into_iter()
        .map(|q| {
            let vl = ct.parts().iter().map(|&j| valuation(j, q)).max().unwrap_or(0);
            let fixed: usize = ct
                .parts()
                .iter()
                .filter(|&&j| valuation(j, q) < vl)
                .sum();
            n - fixed
        })
        .min()
        .map_or(MinimalDegree::Infinite, MinimalDegree::Points)
}

pub fn cycle_type_in_frak_m(ct: &CycleType) -> bool {
    min_degree_of_cycle_type(ct).exceeds_half_sqrt(ct.size())
}

pub fn cycle_type_in_frak_c(ct: &CycleType, primes: &[usize]) -> bool {
    ct.parts().iter().any(|j| primes.contains(j))
}

/// Uniform element of `S_n` by Fisher–Yates, consuming exactly `n - 1`
/// bounded draws (none for `n ≤ 1`).
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i as u64) as usize;
        images.swap(i, j);
    }
    Permutation { images }
}

/// Uniform element of `A_n` by rejection from uniform `S_n` draws.
pub fn random_even_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    loop {
        let p = random_permutation(rng, n);
        if p.is_even() {
            return p;
        }
    }
}

/// Every element of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: Some((0..n).collect()),
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = cyc(3, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
        // (1 2 3)(1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        let p = cyc(3, &[&[1, 2, 3]]).compose(&t).unwrap();
        assert_eq!(p, cyc(3, &[&[1, 3]]));
        let q = cyc(5, &[&[1, 4], &[2, 5, 3]]);
        assert_eq!(q.compose(&Permutation::identity(5)).unwrap(), q);
        assert!(matches!(
            t.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn power_examples() {
        let five = cyc(5, &[&[1, 2, 3, 4, 5]]);
        assert!(five.power(5).is_identity());
        let six = cyc(6, &[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(six.power(2), cyc(6, &[&[1, 3, 5], &[2, 4, 6]]));
        assert_eq!(six.power(-1), six.inverse());
        assert_eq!(six.power(i64::MAX), six.power(i64::MAX % 6));
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(cyc(6, &[&[1, 2, 3], &[4, 5]]).cycle_type().parts(), &[3, 2, 1]);
        assert_eq!(cyc(4, &[&[1, 2], &[3, 4]]).cycle_type().parts(), &[2, 2]);
    }

    #[test]
    fn order_and_fixed_points() {
        assert_eq!(cyc(9, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9]]).order(), BigUint::from(9u32));
        assert_eq!(cyc(5, &[&[1, 2, 3], &[4, 5]]).order(), BigUint::from(6u32));
        assert_eq!(Permutation::identity(7).order(), BigUint::from(1u32));
        assert_eq!(Permutation::identity(6).fixed_points(), 6);
        assert_eq!(cyc(4, &[&[1, 2, 3, 4]]).fixed_points(), 0);
        assert_eq!(cyc(5, &[&[1, 2]]).fixed_points(), 3);
    }

    #[test]
    fn frak_c_examples() {
        let p = cyc(12, &[&[1, 2, 3, 4, 5, 6, 7], &[8, 9, 10, 11, 12]]);
        assert!(p.in_frak_c(&[7]));
        assert!(!Permutation::identity(12).in_frak_c(&[7]));
        assert!(!p.in_frak_c(&[]));
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(
            cyc(9, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9]]).min_degree_cyclic(),
            MinimalDegree::Points(9)
        );
        assert_eq!(cyc(9, &[&[1, 2]]).min_degree_cyclic(), MinimalDegree::Points(2));
        assert_eq!(
            cyc(6, &[&[1, 2, 3, 4, 5, 6]]).min_degree_cyclic(),
            MinimalDegree::Points(6)
        );
        assert_eq!(Permutation::identity(5).min_degree_cyclic(), MinimalDegree::Infinite);
        // (1 2 3 4)(5 6): the square (1 3)(2 4) moves 4.
        assert_eq!(
            cyc(6, &[&[1, 2, 3, 4], &[5, 6]]).min_degree_cyclic(),
            MinimalDegree::Points(4)
        );
    }

    #[test]
    fn frak_m_examples() {
        for n in 2..30 {
            let all: Vec<usize> = (1..=n).collect();
            assert!(cyc(n, &[&all]).in_frak_m());
        }
        assert!(!cyc(25, &[&[1, 2]]).in_frak_m());
        assert!(cyc(9, &[&[1, 2]]).in_frak_m());
        assert!(Permutation::identity(16).in_frak_m());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(Permutation::parse("(1 2)", 3).unwrap().one_line(), vec![2, 1, 3]);
        assert!(Permutation::parse("()", 2).unwrap().is_identity());
        assert_eq!(
            Permutation::parse("(1 1)", 3),
            Err(Error::RepeatedPoint { point: 1 })
        );
        assert_eq!(
            Permutation::parse("(1 4)", 3),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        );
        assert!(matches!(Permutation::parse("(1 2", 3), Err(Error::Malformed(_))));
        assert!(matches!(Permutation::parse("(1 x)", 3), Err(Error::Malformed(_))));
        assert_eq!(
            Permutation::parse("2 3 1 5 4", 5).unwrap(),
            cyc(5, &[&[1, 2, 3], &[4, 5]])
        );
        assert_eq!(
            Permutation::parse("2 2 1", 3),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(cyc(6, &[&[4, 5], &[1, 2, 3]]).to_string(), "(1 2 3)(4 5)");
        assert_eq!("(1 3)(2 4)".parse::<Permutation>().unwrap().degree(), 4);
    }

    #[test]
    fn random_permutation_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(12345);
        let mut b = ChaCha8Rng::seed_from_u64(12345);
        assert_eq!(random_permutation(&mut a, 5), random_permutation(&mut b, 5));
        let mut rng = ChaCha8Rng::seed_from_u64(12345);
        // Frozen value: guards the draw sequence across platforms and releases.
        assert_eq!(random_permutation(&mut rng, 5).one_line(), FROZEN_SEED_12345_N5);
        assert!(random_permutation(&mut rng, 1).is_identity());
        assert!(random_even_permutation(&mut rng, 2).is_identity());
    }

    #[test]
    fn representative_of_cycle_type() {
        for ct in crate::partition::partitions(7) {
            assert_eq!(Permutation::with_cycle_type(&ct).cycle_type(), ct);
        }
    }

    const FROZEN_SEED_12345_N5: [usize; 5] = [2, 4, 3, 5, 1];

    #[test]
    fn random_permutation_consumes_n_minus_one_draws() {
        use rand::RngCore;
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        random_permutation(&mut a, 7);
        for i in (1..7u64).rev() {
            b.random_range(0..=i);
        }
        assert_eq!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn cycle_type_frequencies_in_s4() {
        // Class sizes of S_4 by enumeration: (1^4) 1, (2,1,1) 6, (2,2) 3, (3,1) 8, (4) 6.
        let mut sizes = std::collections::HashMap::new();
        for p in all_permutations(4) {
            *sizes.entry(p.cycle_type()).or_insert(0u64) += 1;
        }
        assert_eq!(sizes.values().sum::<u64>(), 24);
        let trials = 100_000u64;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut counts = std::collections::HashMap::new();
        for _ in 0..trials {
            *counts.entry(random_permutation(&mut rng, 4).cycle_type()).or_insert(0u64) += 1;
        }
        for (ct, &size) in &sizes {
            let p = size as f64 / 24.0;
            let sigma = (p * (1.0 - p) / trials as f64).sqrt();
            let got = *counts.get(ct).unwrap_or(&0) as f64 / trials as f64;
            assert!((got - p).abs() <= 5.0 * sigma, "{ct}: {got} vs {p}");
        }
    }

    #[test]
    fn even_sampling_in_s3() {
        let trials = 100_000u64;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut ids = 0u64;
        for _ in 0..trials {
            let p = random_even_permutation(&mut rng, 3);
            assert!(p.is_even());
            if p.is_identity() {
                ids += 1;
            }
        }
        let p = 1.0 / 3.0;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!((ids as f64 / trials as f64 - p).abs() <= 5.0 * sigma);
    }

    #[test]
    fn all_permutations_enumerates_sn() {
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(5).count(), 120);
        let set: std::collections::HashSet<_> = all_permutations(4).collect();
        assert_eq!(set.len(), 24);
    }

    fn brute_min_degree(p: &Permutation) -> MinimalDegree {
        let n = p.degree();
        let mut x = p.clone();
        let mut best = MinimalDegree::Infinite;
        while !x.is_identity() {
            best = best.min(MinimalDegree::Points(n - x.fixed_points()));
            x = &x * p;
        }
        best
    }

    #[test]
    fn min_degree_matches_brute_force_for_all_cycle_types() {
        for n in 1..=12 {
            for ct in crate::partition::partitions(n) {
                let mut cycles = Vec::new();
                let mut next = 1;
                for &len in ct.parts() {
                    cycles.push((next..next + len).collect::<Vec<_>>());
                    next += len;
                }
                let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
                let p = Permutation::from_cycles(n, &refs).unwrap();
                assert_eq!(p.min_degree_cyclic(), brute_min_degree(&p), "{ct}");
            }
        }
    }

    fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (1..=max_n).prop_flat_map(|n| {
            let v: Vec<usize> = (0..n).collect();
            (Just(v.clone()).prop_shuffle(), Just(v).prop_shuffle()).prop_map(|(a, b)| {
                (
                    Permutation::from_images(a).unwrap(),
                    Permutation::from_images(b).unwrap(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(p in perm_strategy(30)) {
            let id = Permutation::identity(p.degree());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
        }

        #[test]
        fn conjugation_preserves_cycle_type((p, g) in perm_pair(30)) {
            prop_assert_eq!(p.conjugate_by(&g).unwrap().cycle_type(), p.cycle_type());
            prop_assert_eq!(p.conjugate_by(&g).unwrap().in_frak_m(), p.in_frak_m());
        }

        #[test]
        fn power_matches_repeated_composition(p in perm_strategy(30), k in -20i64..=20) {
            let base = if k >= 0 { p.clone() } else { p.inverse() };
            let mut acc = Permutation::identity(p.degree());
            for _ in 0..k.unsigned_abs() {
                acc = &acc * &base;
            }
            prop_assert_eq!(p.power(k), acc);
        }

        #[test]
        fn fixed_points_of_powers(p in perm_strategy(12), k in 1u64..=60) {
            let ct = p.cycle_type();
            let expect: usize = ct.multiplicities().iter()
                .filter(|(j, _)| k % *j as u64 == 0)
                .map(|(j, c)| j * c)
                .sum();
            prop_assert_eq!(p.power(k as i64).fixed_points(), expect);
            prop_assert_eq!(p.power(k as i64).cycle_type(), ct.power(k));
        }

        #[test]
        fn text_round_trip(p in perm_strategy(20)) {
            prop_assert_eq!(Permutation::parse(&p.to_string(), p.degree()).unwrap(), p.clone());
            let one_line: Vec<String> = p.one_line().iter().map(|x| x.to_string()).collect();
            prop_assert_eq!(Permutation::parse(&one_line.join(" "), p.degree()).unwrap(), p);
        }
    }
}

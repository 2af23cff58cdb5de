use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

use super::report::{exact_rational, float64, mean_and_variance, OracleComparison, Report};
use super::second_moment::{chebyshev, histogram_of};
use super::{run_trials, trial_rng, ExperimentConfig};
use crate::counting::{frak_c_size, pi_n};
use crate::error::{Error, Result};
use crate::exact::{factorial, rational_from_uint, rational_to_f64, ExactRational};
use crate::perm::{random_permutation, Permutation};

/// A generator of the free group on `a, b`, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn inverse(self) -> Letter {
        Letter::ALL[self.index() ^ 1]
    }

    fn index(self) -> usize {
        self as usize
    }

    /// `a, A, b, B`, capitals for inverses.
    pub fn symbol(self) -> char {
        ['a', 'A', 'b', 'B'][self.index()]
    }
}

/// A freely reduced word: no letter is followed by its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Fails if some letter is followed by its inverse.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if let Some(w) = letters.windows(2).find(|w| w[1] == w[0].inverse()) {
            return Err(Error::Malformed(format!(
                "`{}{}` cancels in a reduced word",
                w[0].symbol(),
                w[1].symbol()
            )));
        }
        Ok(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.letters {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "ε" || s.is_empty() {
            return Ok(Self::empty());
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'A' => Ok(Letter::AInv),
                'b' => Ok(Letter::B),
                'B' => Ok(Letter::BInv),
                other => Err(Error::Malformed(format!("`{other}` is not a letter"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Longest word length accepted by enumeration and the word experiment.
pub const MAX_WORD_LEN: usize = 12;

fn check_len(max_len: usize) -> Result<()> {
    if max_len > MAX_WORD_LEN {
        return Err(Error::GuardExceeded {
            guard: "max-word-len",
            value: max_len as u64,
            limit: MAX_WORD_LEN as u64,
        });
    }
    Ok(())
}

/// `2·3^L - 1`.
pub fn words_of_length_at_most(len: usize) -> u64 {
    2 * 3u64.pow(len as u32) - 1
}

/// `4·3^{L-1}` for `L ≥ 1`, and `1` for the empty word.
pub fn words_of_length_exactly(len: usize) -> u64 {
    if len == 0 {
        1
    } else {
        4 * 3u64.pow(len as u32 - 1)
    }
}

/// All reduced words of length at most `max_len`, shortest first and in
/// letter order `a, A, b, B` within a length.
pub fn enumerate_words(max_len: usize) -> Result<Vec<ReducedWord>> {
    check_len(max_len)?;
    let mut out = vec![ReducedWord::empty()];
    let mut layer = vec![ReducedWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * 3 + 1);
        for w in &layer {
            for l in Letter::ALL {
                if w.letters.last() != Some(&l.inverse()) {
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(ReducedWord { letters });
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// `w(σ, τ)`, multiplying letter values left to right: `aba⁻¹ ↦ σ·τ·σ⁻¹`.
pub fn evaluate_word(w: &ReducedWord, sigma: &Permutation, tau: &Permutation) -> Result<Permutation> {
    let letters = letter_values(sigma, tau)?;
    Ok(w.letters.iter().fold(Permutation::identity(sigma.degree()), |acc, l| {
        acc.compose_unchecked(&letters[l.index()])
    }))
}

fn letter_values(sigma: &Permutation, tau: &Permutation) -> Result<[Permutation; 4]> {
    if sigma.degree() != tau.degree() {
        return Err(Error::DegreeMismatch {
            expected: sigma.degree(),
            found: tau.degree(),
        });
    }
    Ok([sigma.clone(), sigma.inverse(), tau.clone(), tau.inverse()])
}

/// Depth-first walk of the word tree, one multiplication per node for each
/// of `π·w` and `w`.
struct Walker<'a> {
    letters: [Permutation; 4],
    primes: &'a [usize],
    max_len: usize,
    prefixed: Vec<Permutation>,
    bare: Vec<Permutation>,
    hits: u64,
    identities: Vec<u64>,
}

impl Walker<'_> {
    fn visit(&mut self, depth: usize, last: Option<Letter>) {
        if self.prefixed[depth].in_frak_c(self.primes) {
            self.hits += 1;
        }
        if self.bare[depth].is_identity() {
            self.identities[depth] += 1;
        }
        if depth == self.max_len {
            return;
        }
        for l in Letter::ALL {
            if last == Some(l.inverse()) {
                continue;
            }
            let g = &self.letters[l.index()];
            let (lo, hi) = self.prefixed.split_at_mut(depth + 1);
            lo[depth].right_mul_into(g, &mut hi[0]);
            let (lo, hi) = self.bare.split_at_mut(depth + 1);
            lo[depth].right_mul_into(g, &mut hi[0]);
            self.visit(depth + 1, Some(l));
        }
    }
}

/// `(#{w : |w| ≤ max_len, π·w(σ,τ) ∈ 𝔠}, #{w : w(σ,τ) = 1} by length)`.
pub(crate) fn tree_counts(
    pi: &Permutation,
    sigma: &Permutation,
    tau: &Permutation,
    primes: &[usize],
    max_len: usize,
) -> (u64, Vec<u64>) {
    let n = pi.degree();
    let mut walker = Walker {
        letters: letter_values(sigma, tau).expect("equal degrees"),
        primes,
        max_len,
        prefixed: vec![Permutation::identity(n); max_len + 1],
        bare: vec![Permutation::identity(n); max_len + 1],
        hits: 0,
        identities: vec![0; max_len + 1],
    };
    walker.prefixed[0] = pi.clone();
    walker.visit(0, None);
    (walker.hits, walker.identities)
}

fn float64_vec<S: Serializer>(v: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Tagged(#[serde(serialize_with = "float64")] f64);
    s.collect_seq(v.iter().map(|&x| Tagged(x)))
}

#[derive(Debug, Clone, Serialize)]
pub struct WordResults {
    /// Words of length at most `N`, the set actually counted.
    pub words_counted: u64,
    /// Words of length exactly `N`.
    pub words_of_length_n: u64,
    pub histogram: Vec<(u64, u64)>,
    #[serde(serialize_with = "float64")]
    pub mean: f64,
    #[serde(serialize_with = "float64")]
    pub variance: f64,
    #[serde(serialize_with = "float64")]
    pub p_zero: f64,
    /// `words_counted · |𝔠|/n!`.
    #[serde(serialize_with = "exact_rational")]
    pub theoretical_mean: ExactRational,
    #[serde(serialize_with = "float64")]
    pub chebyshev_bound: f64,
    pub chebyshev_consistent: bool,
    /// Fraction of words of each length `0..=N` evaluating to the identity.
    #[serde(serialize_with = "float64_vec")]
    pub identity_frequency: Vec<f64>,
    pub sampling: &'static str,
}

pub type WordReport = Report<WordResults>;

/// For uniform `π, σ, τ`, counts words `w` of length at most `N` with
/// `π·w(σ,τ) ∈ 𝔠`.
pub fn word_experiment(config: &ExperimentConfig) -> Result<WordReport> {
    config.validate()?;
    check_len(config.window)?;
    let n = config.n;
    let primes = pi_n(n).primes;
    if primes.is_empty() {
        return Err(Error::EmptyPrimeWindow(n));
    }
    let start = Instant::now();
    let max_len = config.window;
    let outcomes = run_trials(config.trials, config.workers, |t| {
        let mut rng = trial_rng(config.seed, t);
        let sigma = random_permutation(&mut rng, n);
        let tau = random_permutation(&mut rng, n);
        let pi = random_permutation(&mut rng, n);
        tree_counts(&pi, &sigma, &tau, &primes, max_len)
    });
    let mut identities = vec![0u64; max_len + 1];
    for (_, ids) in &outcomes {
        for (acc, v) in identities.iter_mut().zip(ids) {
            *acc += v;
        }
    }
    let trials = config.trials as f64;
    let identity_frequency = identities
        .iter()
        .enumerate()
        .map(|(len, &c)| c as f64 / (trials * words_of_length_exactly(len) as f64))
        .collect();
    let histogram = histogram_of(outcomes.iter().map(|o| o.0));
    let (mean, variance) = mean_and_variance(&histogram);
    let zeros = histogram.first().filter(|h| h.0 == 0).map_or(0, |h| h.1);
    let p_zero = zeros as f64 / trials;
    let (chebyshev_bound, chebyshev_consistent) = chebyshev(p_zero, variance, mean, config.trials);
    let words_counted = words_of_length_at_most(max_len);
    let theoretical_mean = rational_from_uint(&frak_c_size(n)) / rational_from_uint(&factorial(n))
        * ExactRational::from_integer(words_counted.into());
    let theta = rational_to_f64(&theoretical_mean);

    Ok(Report {
        experiment: "words",
        config: config.clone(),
        seed: config.seed.to_string(),
        oracle_comparison: OracleComparison::against(
            "exact-mean",
            theta,
            mean,
            (variance / trials).sqrt(),
        )
        .with_exact(theoretical_mean.clone()),
        results: WordResults {
            words_counted,
            words_of_length_n: words_of_length_exactly(max_len),
            histogram,
            mean,
            variance,
            p_zero,
            theoretical_mean,
            chebyshev_bound,
            chebyshev_consistent,
            identity_frequency,
            sampling: "sigma, tau uniform on S_n; no minimal-degree filter on <sigma, tau>",
        },
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_counts() {
        let one: Vec<String> = enumerate_words(1).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(one, ["ε", "a", "A", "b", "B"]);
        for len in 0..=6 {
            let words = enumerate_words(len).unwrap();
            assert_eq!(words.len() as u64, words_of_length_at_most(len));
            let exact = words.iter().filter(|w| w.len() == len).count() as u64;
            assert_eq!(exact, words_of_length_exactly(len));
        }
        assert_eq!(words_of_length_exactly(3), 36);
        assert!(enumerate_words(13).is_err());
    }

    #[test]
    fn parse_and_reduce() {
        assert_eq!("abA".parse::<ReducedWord>().unwrap().to_string(), "abA");
        assert!("aA".parse::<ReducedWord>().is_err());
        assert!("x".parse::<ReducedWord>().is_err());
        assert!("ε".parse::<ReducedWord>().unwrap().is_empty());
    }

    #[test]
    fn evaluation_convention() {
        let mut rng = trial_rng(4, 0);
        let s = random_permutation(&mut rng, 7);
        let t = random_permutation(&mut rng, 7);
        let w: ReducedWord = "abA".parse().unwrap();
        assert_eq!(evaluate_word(&w, &s, &t).unwrap(), &(&s * &t) * &s.inverse());
        assert!(evaluate_word(&ReducedWord::empty(), &s, &t).unwrap().is_identity());
    }

    #[test]
    fn tree_matches_naive_evaluation() {
        for n in [3usize, 7, 10] {
            let primes: Vec<usize> = (2..=n).filter(|&p| 2 * p > n && crate::counting::is_prime(p)).collect();
            for trial in 0..4 {
                let mut rng = trial_rng(21, trial);
                let s = random_permutation(&mut rng, n);
                let t = random_permutation(&mut rng, n);
                let pi = random_permutation(&mut rng, n);
                let (hits, ids) = tree_counts(&pi, &s, &t, &primes, 5);
                let mut naive_hits = 0;
                let mut naive_ids = vec![0u64; 6];
                for w in enumerate_words(5).unwrap() {
                    let v = evaluate_word(&w, &s, &t).unwrap();
                    naive_hits += (&pi * &v).in_frak_c(&primes) as u64;
                    naive_ids[w.len()] += v.is_identity() as u64;
                }
                assert_eq!((hits, ids), (naive_hits, naive_ids));
            }
        }
    }

    #[test]
    fn small_experiment() {
        let config = ExperimentConfig::new(12, 200, 3).with_window(3);
        let r = word_experiment(&config).unwrap();
        assert_eq!(r.results.identity_frequency[0], 1.0);
        assert_eq!(r.results.words_counted, 53);
        let again = word_experiment(&config.with_workers(2)).unwrap();
        assert_eq!(r.payload(), again.payload());
    }
}

use serde::Serialize;

use crate::error::{Error, Result};

/// Which expansion of the generation probability to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Pairs,
    Triples,
}

impl SeriesKind {
    pub fn from_generators(generators: usize) -> Result<Self> {
        match generators {
            2 => Ok(SeriesKind::Pairs),
            3 => Ok(SeriesKind::Triples),
            g => Err(Error::Precondition(format!(
                "generators must be 2 or 3, got {g}"
            ))),
        }
    }
}

/// Coefficients `c_1, c_2, ...` of `1 + Σ c_m n^{-m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesCoefficients;

impl SeriesCoefficients {
    pub const PAIRS: [i64; 6] = [-1, -1, -4, -23, -171, -1542];
    pub const TRIPLES: [i64; 5] = [0, -1, 0, -3, -6];

    pub fn of(kind: SeriesKind) -> &'static [i64] {
        match kind {
            SeriesKind::Pairs => &Self::PAIRS,
            SeriesKind::Triples => &Self::TRIPLES,
        }
    }
}

/// Truncation of the expansion after the `n^{-order}` term.
pub fn dixon_series(n: usize, order: usize, kind: SeriesKind) -> Result<f64> {
    let coeffs = SeriesCoefficients::of(kind);
    if order > coeffs.len() {
        return Err(Error::SeriesOrder {
            order,
            available: coeffs.len(),
        });
    }
    if n < 2 {
        return Err(Error::Precondition("series needs n >= 2".into()));
    }
    let x = 1.0 / n as f64;
    let mut power = 1.0;
    let mut total = 1.0;
    for &c in &coeffs[..order] {
        power *= x;
        total += c as f64 * power;
    }
    Ok(total)
}

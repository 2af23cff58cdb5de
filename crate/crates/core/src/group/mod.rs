//! Deciding what subgroup of `S_n` a tuple of permutations generates.

mod blocks;
mod bsgs;
mod classify;

pub use blocks::UnionFind;
pub use bsgs::Bsgs;
pub use classify::{
    classify_tuple, classify_tuple_with, extract_p_cycle, Certificate, ClassKind, Classification,
    ClassifyOptions,
};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A list of permutations of a common degree.
///
/// The degree is stored separately so the empty generating set of `S_n`
/// still has a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(GeneratorSet { degree, gens })
    }

    /// Takes the degree from the first generator.
    pub fn from_perms(gens: Vec<Permutation>) -> Result<Self> {
        let degree = gens
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::Precondition("empty generator list".into()))?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// Orbits on `{0..n}`: connected components of the union of the generator
    /// graphs, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.gens {
            for (i, &x) in g.images().iter().enumerate() {
                uf.union(i, x);
            }
        }
        uf.classes()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Smallest block of imprimitivity containing `alpha` and `beta`.
    ///
    /// Returns the whole point set exactly when no proper block contains both.
    pub fn minimal_block(&self, alpha: usize, beta: usize) -> Result<Vec<usize>> {
        if alpha == beta {
            return Err(Error::Precondition("minimal_block needs alpha != beta".into()));
        }
        if alpha >= self.degree || beta >= self.degree {
            return Err(Error::PointOutOfRange {
                point: alpha.max(beta) + 1,
                degree: self.degree,
            });
        }
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        Ok(blocks::minimal_block(self.degree, &self.gens, alpha, beta))
    }

    /// Primitivity of a transitive group: no `minimal_block(0, β)` is proper.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        Ok(self.nontrivial_block().is_none())
    }

    /// Some proper nontrivial block, if the (transitive) group is imprimitive.
    pub fn nontrivial_block(&self) -> Option<Vec<usize>> {
        (1..self.degree).find_map(|beta| {
            let b = blocks::minimal_block(self.degree, &self.gens, 0, beta);
            (b.len() < self.degree).then_some(b)
        })
    }

    /// Base and strong generating set by deterministic Schreier–Sims.
    pub fn bsgs(&self) -> Bsgs {
        Bsgs::new(self.degree, &self.gens)
    }
}

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

/// One level of the stabiliser chain `G = G_0 ≥ G_1 ≥ … ≥ G_k = 1`.
#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// `transversal[β]` maps `point` to `β`, for `β` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    let ux = self.transversal[x].as_ref().expect("orbit point has transversal");
                    self.transversal[y] = Some(s.compose_unchecked(ux));
                    self.orbit.push(y);
                }
            }
        }
    }
}

/// Base and strong generating set with explicit transversals.
///
/// Memory is `O(n²)` per level; intended for degrees up to a few hundred.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Deterministic Schreier–Sims. Schreier generators that are trivial
    /// (`s·u_β = u_{s(β)}`) are skipped before sifting.
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for g in &strong {
            if bsgs.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let moved = (0..degree).find(|&x| g.apply(x) != x).expect("non-identity");
                bsgs.levels.push(Level::new(moved, degree));
            }
        }
        for g in &strong {
            let fixed_prefix = bsgs
                .levels
                .iter()
                .take_while(|l| g.apply(l.point) == l.point)
                .count();
            for level in bsgs.levels.iter_mut().take(fixed_prefix + 1) {
                level.gens.push(g.clone());
            }
        }
        for level in &mut bsgs.levels {
            level.rebuild_orbit();
        }

        let mut i = bsgs.levels.len();
        'outer: while i > 0 {
            let li = i - 1;
            let orbit = bsgs.levels[li].orbit.clone();
            let level_gens = bsgs.levels[li].gens.clone();
            for &beta in &orbit {
                for s in &level_gens {
                    let image = s.apply(beta);
                    let level = &bsgs.levels[li];
                    let u_beta = level.transversal[beta].as_ref().unwrap();
                    let u_image = level.transversal[image].as_ref().unwrap();
                    let s_u = s.compose_unchecked(u_beta);
                    if &s_u == u_image {
                        continue;
                    }
                    let schreier = u_image.inverse().compose_unchecked(&s_u);
                    let (h, j) = bsgs.strip(schreier, li + 1);
                    if j < bsgs.levels.len() || !h.is_identity() {
                        if j == bsgs.levels.len() {
                            let moved = (0..degree).find(|&x| h.apply(x) != x).unwrap();
                            bsgs.levels.push(Level::new(moved, degree));
                        }
                        for l in li + 1..=j {
                            bsgs.levels[l].gens.push(h.clone());
                            bsgs.levels[l].rebuild_orbit();
                        }
                        i = j + 1;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
        bsgs
    }

    /// Sifts `g` through the chain from level `start`. Returns the residue and
    /// the level where sifting stopped (`levels.len()` if it went through).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.point);
            match &level.transversal[beta] {
                None => return (g, l),
                Some(u) => g = u.inverse().compose_unchecked(&g),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Union of the level generators, without repeats.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Membership by sifting.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(p.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::perm::random_permutation;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    /// Closure of the generators under right multiplication.
    fn closure(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(n);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn order_examples() {
        let s5 = Bsgs::new(5, &[cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2]])]);
        assert_eq!(s5.order(), BigUint::from(120u32));
        let d4 = Bsgs::new(4, &[cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 3]])]);
        assert_eq!(d4.order(), BigUint::from(8u32));
        assert_eq!(Bsgs::new(3, &[]).order(), BigUint::from(1u32));
        let agl = Bsgs::new(5, &[cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[2, 3, 5, 4]])]);
        assert_eq!(agl.order(), BigUint::from(20u32));
    }

    #[test]
    fn structural_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..50 {
            let n = rng.random_range(2..=9);
            let gens: Vec<_> = (0..rng.random_range(1..=3))
                .map(|_| random_permutation(&mut rng, n))
                .collect();
            let b = Bsgs::new(n, &gens);
            for (i, level) in b.levels.iter().enumerate() {
                for g in &level.gens {
                    for earlier in &b.levels[..i] {
                        assert_eq!(g.apply(earlier.point), earlier.point);
                    }
                }
            }
            for g in &gens {
                assert!(b.contains(g));
            }
            let factorial: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(&factorial % b.order(), BigUint::from(0u32));
        }
    }

    #[test]
    fn order_and_membership_match_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let n = rng.random_range(1..=6);
            let k = rng.random_range(0..=3);
            let mut gens: Vec<_> = (0..k).map(|_| random_permutation(&mut rng, n)).collect();
            // Bias towards proper subgroups: sometimes use powers of one element.
            if k >= 2 && rng.random_bool(0.3) {
                gens[1] = gens[0].power(rng.random_range(2..5));
            }
            let b = Bsgs::new(n, &gens);
            let group = closure(n, &gens);
            assert_eq!(b.order(), BigUint::from(group.len()));
            for p in crate::perm::all_permutations(n) {
                assert_eq!(b.contains(&p), group.contains(&p));
            }
        }
    }

    #[test]
    fn large_symmetric_group() {
        let n = 30;
        let all: Vec<usize> = (1..=n).collect();
        let b = Bsgs::new(n, &[cyc(n, &[&all]), cyc(n, &[&[1, 2]])]);
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        assert_eq!(b.order(), factorial);
    }
}

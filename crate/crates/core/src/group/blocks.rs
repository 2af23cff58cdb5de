use crate::perm::Permutation;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns the surviving root if they
    /// were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        Some(ra)
    }

    /// All classes, each sorted, ordered by smallest element.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}

/// Atkinson's refinement: start from `{alpha, beta}` and keep merging the
/// images of merged pairs under every generator until the partition is
/// invariant. The class of `alpha` is then the minimal block.
pub(super) fn minimal_block(
    n: usize,
    gens: &[Permutation],
    alpha: usize,
    beta: usize,
) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    let mut queue = vec![(alpha, beta)];
    uf.union(alpha, beta);
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (a, b) = (uf.find(g.apply(x)), uf.find(g.apply(y)));
            if a != b {
                uf.union(a, b);
                queue.push((a, b));
            }
        }
    }
    let root = uf.find(alpha);
    (0..n).filter(|&x| uf.find(x) == root).collect()
}

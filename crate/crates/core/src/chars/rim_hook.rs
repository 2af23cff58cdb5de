use serde::Serialize;

use crate::partition::Partition;

/// A removable border strip of a Ferrers diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimHook {
    /// Removed boxes as 0-based `(row, column)` pairs, row-major.
    pub cells: Vec<(usize, usize)>,
    /// Rows spanned minus one.
    pub leg_length: usize,
    /// The diagram left after removal.
    pub remainder: Partition,
}

impl RimHook {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(-1)^{leg_length}`.
    pub fn sign(&self) -> i32 {
        if self.leg_length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Beta-set of `parts` padded to `len` rows: `parts[i] + (len - 1 - i)`.
pub(crate) fn beta_set(parts: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|i| parts.get(i).copied().unwrap_or(0) + (len - 1 - i))
        .collect()
}

/// Removals of `r`-rim hooks as `(remainder parts, leg length)`, computed on
/// the beta-set: sliding a bead from `b` to an empty position `b - r` removes
/// an `r`-rim hook whose leg length is the number of beads strictly between.
pub(crate) fn remove_hooks(parts: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = parts.len();
    let beads = beta_set(parts, len);
    let mut out = Vec::new();
    for (i, &b) in beads.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beads.contains(&target) {
            continue;
        }
        let leg = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let rem: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (len - 1 - k))
            .filter(|&p| p > 0)
            .collect();
        out.push((rem, leg));
    }
    out
}

/// Every `r`-rim hook of `lambda`, ordered by the row where the hook starts
/// (its top-right box), top row first.
pub fn rim_hooks(lambda: &Partition, r: usize) -> Vec<RimHook> {
    if r == 0 {
        return Vec::new();
    }
    let mut hooks: Vec<RimHook> = remove_hooks(lambda.parts(), r)
        .into_iter()
        .map(|(rem, leg)| {
            let remainder = Partition::new(rem).expect("beta-set removal yields a partition");
            let cells = skew_cells(lambda, &remainder);
            RimHook {
                cells,
                leg_length: leg,
                remainder,
            }
        })
        .collect();
    hooks.sort_by_key(|h| h.cells.first().map(|c| c.0));
    hooks
}

/// Boxes of `outer / inner`, row-major.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    outer
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(row, &len)| {
            let start = inner.parts().get(row).copied().unwrap_or(0);
            (start..len).map(move |col| (row, col))
        })
        .collect()
}

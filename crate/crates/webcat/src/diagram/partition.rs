//! Noncrossing partitions with all blocks of size at least two: the SO3 web
//! basis combinatorics. Counted by the Riordan numbers.

use serde::{Deserialize, Serialize};

/// A noncrossing partition of the `k + l` boundary points (circular
/// numbering as in [`super::Matching`]) with every block of size >= 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PlanarPartition {
    pub bottom: usize,
    pub top: usize,
    /// Blocks as sorted point lists, ordered by smallest element.
    pub blocks: Vec<Vec<usize>>,
}

impl PlanarPartition {
    pub fn points(&self) -> usize {
        self.bottom + self.top
    }

    pub fn block_of(&self, p: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&p))
            .map(|b| b.as_slice())
    }

    /// Two blocks cross if some pair of one interleaves a pair of the other.
    pub fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
        for (i, b1) in blocks.iter().enumerate() {
            for b2 in &blocks[i + 1..] {
                for &x in b2 {
                    // count how b2's elements sit relative to b1's span gaps
                    let _ = x;
                }
                if blocks_cross(b1, b2) {
                    return false;
                }
            }
        }
        true
    }
}

fn blocks_cross(b1: &[usize], b2: &[usize]) -> bool {
    // b1 and b2 cross iff there are a < c < b < d with a,b in one and c,d in
    // the other.
    for w in b1.windows(2) {
        let (a, b) = (w[0], w[1]);
        let inside = b2.iter().filter(|&&x| a < x && x < b).count();
        if inside > 0 && inside < b2.len() {
            return true;
        }
    }
    false
}

/// All noncrossing partitions of `k + l` points into blocks of size >= 2,
/// deterministic order.
pub fn enumerate_planar_partitions(k: usize, l: usize) -> Vec<PlanarPartition> {
    let points: Vec<usize> = (1..=k + l).collect();
    let mut out: Vec<PlanarPartition> = nc_partitions_min2(&points)
        .into_iter()
        .map(|mut blocks| {
            for b in blocks.iter_mut() {
                b.sort();
            }
            blocks.sort();
            PlanarPartition {
                bottom: k,
                top: l,
                blocks,
            }
        })
        .collect();
    out.sort_by(|a, b| a.blocks.cmp(&b.blocks));
    out.dedup();
    out
}

fn nc_partitions_min2(points: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let n = points.len();
    if n == 0 {
        return vec![vec![]];
    }
    if n == 1 {
        return vec![]; // a singleton cannot form a block of size >= 2
    }
    let mut out = Vec::new();
    // Choose the block of points[0] as {0} plus a nonempty subset of the
    // remaining indices; the gaps between consecutive chosen indices and the
    // tail are partitioned independently (noncrossing).
    assert!(n <= 24, "partition enumeration limited to 24 points");
    for mask in 1u32..(1 << (n - 1)) {
        let mut idxs = vec![0usize];
        for i in 1..n {
            if mask & (1 << (i - 1)) != 0 {
                idxs.push(i);
            }
        }
        let mut segments: Vec<&[usize]> = Vec::new();
        for w in idxs.windows(2) {
            segments.push(&points[w[0] + 1..w[1]]);
        }
        segments.push(&points[idxs[idxs.len() - 1] + 1..]);
        let mut seg_choices: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
        let mut dead = false;
        for seg in &segments {
            let parts = nc_partitions_min2(seg);
            if parts.is_empty() {
                dead = true;
                break;
            }
            seg_choices.push(parts);
        }
        if dead {
            continue;
        }
        let block: Vec<usize> = idxs.iter().map(|&i| points[i]).collect();
        let mut combos: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for choices in &seg_choices {
            let mut next = Vec::new();
            for c in &combos {
                for ch in choices {
                    let mut merged = c.clone();
                    merged.extend(ch.iter().cloned());
                    next.push(merged);
                }
            }
            combos = next;
        }
        out.extend(combos);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riordan_counts() {
        // pp(k, 0) for k = 0..10
        let expect = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(enumerate_planar_partitions(k, 0).len(), *e, "k={}", k);
        }
    }

    #[test]
    fn counts_depend_only_on_total_points() {
        assert_eq!(enumerate_planar_partitions(3, 3).len(), 15);
        assert_eq!(enumerate_planar_partitions(2, 2).len(), 3);
    }

    #[test]
    fn blocks_are_noncrossing_and_cover() {
        for p in enumerate_planar_partitions(6, 0) {
            assert!(PlanarPartition::is_noncrossing(&p.blocks));
            assert!(p.blocks.iter().all(|b| b.len() >= 2));
            let mut all: Vec<usize> = p.blocks.iter().flatten().copied().collect();
            all.sort();
            assert_eq!(all, (1..=6).collect::<Vec<_>>());
        }
    }

    #[test]
    fn crossing_partition_is_detected() {
        // {1,3} and {2,4} cross
        assert!(!PlanarPartition::is_noncrossing(&[vec![1, 3], vec![2, 4]]));
        assert!(PlanarPartition::is_noncrossing(&[vec![1, 4], vec![2, 3]]));
    }
}

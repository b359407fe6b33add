//! Crossingless matchings of boundary points.
//!
//! Boundary numbering is circular: bottom points `1..=k` left to right, then
//! top points `k+1..=k+l` right to left. Noncrossing with respect to this
//! circular order is the usual planarity condition for cap/cup diagrams.

use serde::{Deserialize, Serialize};

/// A noncrossing perfect matching of `k + l` boundary points.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Matching {
    pub bottom: usize,
    pub top: usize,
    /// Pairs `(a, b)` with `a < b`, sorted by first element.
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn points(&self) -> usize {
        self.bottom + self.top
    }

    /// Arc containing a given point.
    pub fn partner(&self, p: usize) -> Option<usize> {
        for &(a, b) in &self.pairs {
            if a == p {
                return Some(b);
            }
            if b == p {
                return Some(a);
            }
        }
        None
    }

    pub fn is_noncrossing(pairs: &[(usize, usize)]) -> bool {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                let inside_c = a < c && c < b;
                let inside_d = a < d && d < b;
                if inside_c != inside_d {
                    return false;
                }
            }
        }
        true
    }
}

/// All noncrossing perfect matchings of `k` bottom and `l` top points, in a
/// deterministic (lexicographic) order. Empty when `k + l` is odd.
pub fn enumerate_matchings(k: usize, l: usize) -> Vec<Matching> {
    let m = k + l;
    if m % 2 != 0 {
        return vec![];
    }
    let points: Vec<usize> = (1..=m).collect();
    let mut out: Vec<Matching> = nc_matchings(&points)
        .into_iter()
        .map(|mut pairs| {
            pairs.sort();
            Matching {
                bottom: k,
                top: l,
                pairs,
            }
        })
        .collect();
    out.sort_by(|a, b| a.pairs.cmp(&b.pairs));
    out
}

fn nc_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    let first = points[0];
    let mut out = Vec::new();
    for j in (1..points.len()).step_by(2) {
        let inner = nc_matchings(&points[1..j]);
        let outer = nc_matchings(&points[j + 1..]);
        for i in &inner {
            for o in &outer {
                let mut m = vec![(first, points[j])];
                m.extend_from_slice(i);
                m.extend_from_slice(o);
                out.push(m);
            }
        }
    }
    out
}

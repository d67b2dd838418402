//! Exhaustive short-cycle census and the expectation bound it is checked
//! against.
//!
//! Cycles are unrooted and undirected: each is counted once no matter the
//! starting vertex or traversal direction. Loops are length-1 cycles and a
//! pair of parallel edges is a length-2 cycle.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::DartGraph;

pub const DEFAULT_CYCLE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle enumeration exceeded the work budget of {budget} steps")]
    BudgetExceeded { budget: u64 },
    #[error("max cycle length must be at least 1")]
    ZeroMaxLen,
}

/// Counts of distinct cycles per length up to `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCensus {
    pub max_len: usize,
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl CycleCensus {
    /// Total excluding loops; the expectation bound's sum starts at length 2.
    pub fn total_excluding_loops(&self) -> u64 {
        self.counts.iter().filter(|(&len, _)| len >= 2).map(|(_, &c)| c).sum()
    }

    /// Smallest length with a nonzero count.
    pub fn min_length(&self) -> Option<usize> {
        self.counts.iter().find(|(_, &c)| c > 0).map(|(&len, _)| len)
    }
}

/// Exact census of all cycles of length at most `max_len`.
///
/// Enumeration is DFS from each root vertex, restricted to vertices larger
/// than the root so the root is the cycle minimum, and closures are counted
/// only when the second vertex is smaller than the last, so each direction
/// is seen once.
pub fn count_short_cycles(
    g: &DartGraph,
    max_len: usize,
    budget: u64,
) -> Result<CycleCensus, CycleError> {
    if max_len == 0 {
        return Err(CycleError::ZeroMaxLen);
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();

    // Lengths 1 and 2 by direct counting.
    let mut loops = 0u64;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(g.num_edges());
    for (u, v) in g.edges() {
        if u == v {
            loops += 1;
        } else {
            pairs.push((u.min(v), u.max(v)));
        }
    }
    if loops > 0 {
        counts.insert(1, loops);
    }
    if max_len >= 2 {
        pairs.sort_unstable();
        let mut two_cycles = 0u64;
        let mut i = 0;
        while i < pairs.len() {
            let mut j = i + 1;
            while j < pairs.len() && pairs[j] == pairs[i] {
                j += 1;
            }
            let k = (j - i) as u64;
            two_cycles += k * (k - 1) / 2;
            i = j;
        }
        if two_cycles > 0 {
            counts.insert(2, two_cycles);
        }
    }

    if max_len >= 3 {
        let mut steps = 0u64;
        let mut on_path = vec![false; g.num_vertices()];
        // Path of (vertex, dart iterator index) plus the entry dart per level.
        for root in 0..g.num_vertices() {
            let mut path: Vec<usize> = vec![root];
            let mut iters: Vec<usize> = vec![0];
            on_path[root] = true;
            while !path.is_empty() {
                let depth = path.len() - 1;
                let v = path[depth];
                let darts = g.darts_at(v);
                let idx = iters[depth];
                if idx >= darts.len() {
                    on_path[v] = false;
                    path.pop();
                    iters.pop();
                    continue;
                }
                iters[depth] += 1;
                steps += 1;
                if steps > budget {
                    return Err(CycleError::BudgetExceeded { budget });
                }
                let d = darts[idx];
                let w = g.dart_vertex(g.twin(d));
                if w == root {
                    // Closure; count once per direction at length >= 3.
                    if depth + 1 >= 3 && path[1] < path[depth] {
                        *counts.entry(depth + 1).or_insert(0) += 1;
                    }
                    continue;
                }
                if w <= root || on_path[w] || depth + 2 > max_len {
                    continue;
                }
                on_path[w] = true;
                path.push(w);
                iters.push(0);
            }
        }
    }

    counts.retain(|&len, _| len <= max_len);
    let total = counts.values().sum();
    Ok(CycleCensus { max_len, counts, total })
}

/// The expectation bound on the number of cycles of length at most `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma1Bound {
    /// `d^m / 2`: the summed bound freed of `n`.
    pub simplified_cap: f64,
    /// `Σ_{t=2}^{m} C(n,t) · (t!/2t) · (d/n)^t` for the supplied `n`.
    pub finite_sum: Option<f64>,
}

/// Evaluates the short-cycle expectation bound for degree `d` and cap `m`,
/// and the finite-`n` sum when `n` is supplied.
pub fn lemma1_bound(d: usize, m: usize, n: Option<usize>) -> Lemma1Bound {
    assert!(d >= 2 && m >= 2, "bound requires d >= 2 and m >= 2");
    let simplified_cap = (d as f64).powi(m as i32) / 2.0;
    let finite_sum = n.map(|n| {
        let nf = d as f64 / n as f64;
        let mut sum = 0.0;
        for t in 2..=m {
            // C(n,t) · t! is the falling factorial n · (n−1) ⋯ (n−t+1).
            let mut falling = 1.0;
            for k in 0..t {
                falling *= (n - k) as f64;
            }
            sum += falling / (2.0 * t as f64) * nf.powi(t as i32);
        }
        sum
    });
    Lemma1Bound { simplified_cap, finite_sum }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn k4_triangles() {
        let census = count_short_cycles(&complete_graph(4), 3, u64::MAX).unwrap();
        assert_eq!(census.counts.get(&3), Some(&4));
        assert_eq!(census.total, 4);
    }

    #[test]
    fn triangle_has_no_short_cycles_below_three() {
        let g = DartGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let census = count_short_cycles(&g, 2, u64::MAX).unwrap();
        assert_eq!(census.total, 0);
    }

    #[test]
    fn petersen_pentagons() {
        let g = crate::graph::petersen_graph();
        let census = count_short_cycles(&g, 5, u64::MAX).unwrap();
        assert_eq!(census.counts.get(&5), Some(&12));
        assert_eq!(census.total, 12);
    }

    #[test]
    fn loops_and_parallels() {
        // One loop at 0, three parallel edges 0-1.
        let g = DartGraph::from_edges(2, &[(0, 0), (0, 1), (0, 1), (0, 1)]).unwrap();
        let census = count_short_cycles(&g, 5, u64::MAX).unwrap();
        assert_eq!(census.counts.get(&1), Some(&1));
        assert_eq!(census.counts.get(&2), Some(&3));
        assert_eq!(census.total, 4);
        assert_eq!(census.total_excluding_loops(), 3);
    }

    #[test]
    fn k5_cycle_spectrum() {
        // K5: C(5,3)=10 triangles, C(5,4)·3=15 quadrilaterals, 12 pentagons.
        let census = count_short_cycles(&complete_graph(5), 5, u64::MAX).unwrap();
        assert_eq!(census.counts.get(&3), Some(&10));
        assert_eq!(census.counts.get(&4), Some(&15));
        assert_eq!(census.counts.get(&5), Some(&12));
    }

    #[test]
    fn budget_is_enforced() {
        let err = count_short_cycles(&complete_graph(8), 8, 10).unwrap_err();
        assert!(matches!(err, CycleError::BudgetExceeded { .. }));
    }

    #[test]
    fn bound_values() {
        let b = lemma1_bound(3, 5, None);
        assert_eq!(b.simplified_cap, 121.5);
        assert_eq!(lemma1_bound(2, 2, None).simplified_cap, 2.0);
        let b = lemma1_bound(3, 3, Some(100));
        let sum = b.finite_sum.unwrap();
        // Direct evaluation: 4950·0.5·0.03² + 161700·1·0.03³ = 6.5934
        assert!((sum - 6.5934).abs() < 1e-10);
    }

    #[test]
    fn girth_matches_census_min_length() {
        for g in [complete_graph(4), complete_graph(5), crate::graph::petersen_graph()] {
            let census = count_short_cycles(&g, 6, u64::MAX).unwrap();
            assert_eq!(g.girth(), census.min_length());
        }
    }
}

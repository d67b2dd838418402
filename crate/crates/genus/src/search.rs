//! Minimum orientable genus: bounds, exact exhaustive search over rotation
//! systems, and the growth-law reference value.
//!
//! The exact search enumerates anchored cyclic orders at every vertex of
//! degree ≥ 3 in lexicographic odometer order, re-tracing faces
//! incrementally between successive candidates. The space is halved by
//! orientation-reversal symmetry: at one chosen max-degree vertex only
//! cyclic orders that are lexicographically no larger than their own
//! reversal are visited, since reflecting the whole map preserves genus.
//! Fixing that vertex's rotation outright would be wrong — a planar graph
//! can be forced to positive genus by pinning one vertex's cyclic order —
//! so only the reflection quotient is taken.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::anneal::{anneal_best, faces_for_genus, genus_of_faces, AnnealConfig};
use crate::graph::DartGraph;
use crate::rotation::{canonical_rotation, RotationSystem};
use crate::tracer::FaceTracer;

pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000_000;

/// Seed of the deterministic annealing pre-search inside `exact_genus`.
const PRESEARCH_SEED: u64 = 0x6E75_7347_656E_7573;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph is disconnected; genus search requires one component")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exact,
    Heuristic,
    BoundsOnly,
}

impl SearchMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchMode::Exact => "exact",
            SearchMode::Heuristic => "heuristic",
            SearchMode::BoundsOnly => "bounds-only",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GenusResult {
    pub mode: SearchMode,
    pub genus_lower: usize,
    pub genus_upper: usize,
    pub witness: Option<RotationSystem>,
    pub alpha: f64,
    pub rotations_examined: u64,
    /// Face-trace dart steps consumed; the deterministic budget unit.
    pub trace_steps: u64,
    pub elapsed: Duration,
}

/// Euler lower bound from the girth: every face of a cellular embedding has
/// length at least the girth, so `F ≤ 2E/girth` and
/// `g ≥ ⌈(E(1 − 2/girth) − V + 2)/2⌉`. Exact rational arithmetic before the
/// ceiling; 0 for forests.
pub fn euler_lower_bound(g: &DartGraph) -> usize {
    let Some(girth) = g.girth() else {
        return 0;
    };
    let e = g.num_edges() as i64;
    let v = g.num_vertices() as i64;
    let gi = girth as i64;
    let numerator = e * (gi - 2) - (v - 2) * gi;
    let denominator = 2 * gi;
    let bound = numerator.div_euclid(denominator)
        + if numerator.rem_euclid(denominator) != 0 { 1 } else { 0 };
    bound.max(0) as usize
}

/// Betti upper bound `⌊(E − V + 1)/2⌋`: the maximum genus of a cellular
/// embedding, from Euler's formula with `F ≥ 1`.
pub fn max_genus_upper_bound(g: &DartGraph) -> usize {
    let rank = g.num_edges() as i64 - g.num_vertices() as i64 + 1;
    (rank.max(0) / 2) as usize
}

/// The growth-law constant `(d − 2)/4`.
pub fn theoretical_alpha(d: usize) -> f64 {
    (d as f64 - 2.0) / 4.0
}

/// Minimum genus over all rotation systems.
///
/// Runs a deterministic annealing pre-search first; if it realizes the Euler
/// lower bound the minimum is certified without enumeration. Otherwise the
/// full reflection-reduced space is enumerated with early exit at the lower
/// bound. If `budget` trace steps run out the best embedding found so far is
/// returned as `SearchMode::Heuristic`.
pub fn exact_genus(g: &DartGraph, budget: u64) -> Result<GenusResult, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let clock = Instant::now();
    let lower = euler_lower_bound(g);
    let mut examined = 0u64;
    let mut steps = 0u64;

    // Start from the canonical rotation.
    let canonical = canonical_rotation(g);
    let mut tracer = FaceTracer::new(g, &canonical);
    examined += 1;
    let mut best_genus = tracer.genus();
    let mut witness = canonical;

    let free: Vec<usize> = pick_free_vertices(g);
    let done = |best: usize,
                witness: RotationSystem,
                mode: SearchMode,
                examined: u64,
                steps: u64| GenusResult {
        mode,
        genus_lower: if mode == SearchMode::Exact { best } else { lower },
        genus_upper: best,
        alpha: best as f64 / g.num_vertices() as f64,
        witness: Some(witness),
        rotations_examined: examined,
        trace_steps: steps,
        elapsed: clock.elapsed(),
    };

    if best_genus == lower || free.is_empty() {
        // Unique rotation class, or the lower bound is already realized.
        steps += tracer.steps();
        return Ok(done(best_genus, witness, SearchMode::Exact, examined, steps));
    }

    // Pre-search: deterministic anneals that stop as soon as one realizes
    // the lower bound, certifying the minimum without enumeration. Skipped
    // when the enumeration space is small enough to just walk; escalated
    // when it is far beyond reach (complete graphs already at n = 7).
    let space = enumeration_space(g, &free);
    let ladder: &[(usize, usize, f64, usize)] = if space <= 100_000 {
        &[]
    } else if space <= 50_000_000 {
        &[(40, 200, 0.88, 4)]
    } else {
        &[(40, 200, 0.88, 4), (60, 400, 0.92, 8), (120, 1600, 0.97, 16)]
    };
    for (rung, &(temperatures, moves_per_edge, cooling, restarts)) in ladder.iter().enumerate() {
        let presearch = AnnealConfig {
            seed: crate::rng::stream_seed(PRESEARCH_SEED, rung as u64),
            temperatures,
            moves_per_edge,
            cooling,
            restarts,
        };
        let outcome = anneal_best(g, &presearch, Some(faces_for_genus(g, lower)));
        examined += outcome.moves;
        steps += outcome.steps;
        let presearch_genus = genus_of_faces(g, outcome.best_faces);
        if presearch_genus < best_genus {
            best_genus = presearch_genus;
            witness = outcome.witness;
        }
        if best_genus == lower {
            steps += tracer.steps();
            return Ok(done(best_genus, witness, SearchMode::Exact, examined, steps));
        }
    }

    // Exhaustive enumeration. Odometer over anchored per-vertex orders; the
    // reflection-canonical vertex sits in the most significant position.
    let mut perms: Vec<Vec<usize>> = free.iter().map(|&v| g.darts_at(v)[1..].to_vec()).collect();
    loop {
        if tracer.steps() > budget {
            steps += tracer.steps();
            return Ok(done(best_genus, witness, SearchMode::Heuristic, examined, steps));
        }
        // Advance the odometer; index 0 additionally skips orders that are
        // lexicographically larger than their reversal.
        let mut idx = perms.len();
        let mut advanced = false;
        while idx > 0 {
            idx -= 1;
            let ok = if idx == 0 {
                loop {
                    if !next_permutation(&mut perms[0]) {
                        break false;
                    }
                    if is_reflection_canonical(&perms[0]) {
                        break true;
                    }
                }
            } else {
                next_permutation(&mut perms[idx])
            };
            if ok {
                advanced = true;
                break;
            }
            perms[idx].sort_unstable();
        }
        if !advanced {
            break;
        }
        // Everything at and beyond `idx` changed (deeper digits were reset).
        let changed = &free[idx..];
        let mut order = Vec::new();
        for (k, &v) in free.iter().enumerate().skip(idx) {
            order.clear();
            order.push(g.darts_at(v)[0]);
            order.extend_from_slice(&perms[k]);
            tracer.set_vertex_order(v, &order);
        }
        tracer.retrace(changed);
        examined += 1;
        let genus = tracer.genus();
        if genus < best_genus {
            best_genus = genus;
            witness = tracer.rotation();
            if best_genus == lower {
                break;
            }
        }
    }
    steps += tracer.steps();
    Ok(done(best_genus, witness, SearchMode::Exact, examined, steps))
}

/// Reflection-reduced class count, saturating.
fn enumeration_space(g: &DartGraph, free: &[usize]) -> u64 {
    let mut space = 1u64;
    for &v in free {
        for k in 2..g.degree(v) {
            space = space.saturating_mul(k as u64);
        }
    }
    space / 2 + 1
}

/// Vertices with more than one anchored cyclic order, the reflection-
/// canonical one (max degree, lowest id) first.
fn pick_free_vertices(g: &DartGraph) -> Vec<usize> {
    let mut free: Vec<usize> = (0..g.num_vertices()).filter(|&v| g.degree(v) >= 3).collect();
    if let Some(&pivot) = free.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))) {
        free.retain(|&v| v != pivot);
        free.insert(0, pivot);
    }
    free
}

/// An anchored order survives the reflection quotient iff it is
/// lexicographically no larger than its reversal.
fn is_reflection_canonical(perm: &[usize]) -> bool {
    !perm.iter().gt(perm.iter().rev())
}

/// Lexicographic next permutation; false (leaving the slice unchanged in
/// descending order) when exhausted.
fn next_permutation(arr: &mut [usize]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;
    use crate::rotation::trace_faces;

    #[test]
    fn next_permutation_cycles_through_all() {
        let mut arr = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut arr) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(arr, vec![3, 2, 1]);
    }

    #[test]
    fn euler_bound_values() {
        assert_eq!(euler_lower_bound(&complete_graph(5)), 1);
        assert_eq!(euler_lower_bound(&complete_graph(7)), 1);
        assert_eq!(euler_lower_bound(&complete_graph(8)), 2);
        let triangle = DartGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(euler_lower_bound(&triangle), 0);
        let tree = DartGraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(euler_lower_bound(&tree), 0);
    }

    #[test]
    fn betti_bound_values() {
        let theta = DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(max_genus_upper_bound(&theta), 1);
        let tree = DartGraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(max_genus_upper_bound(&tree), 0);
        assert_eq!(max_genus_upper_bound(&complete_graph(4)), 1);
    }

    #[test]
    fn growth_law_constant() {
        assert_eq!(theoretical_alpha(2), 0.0);
        assert_eq!(theoretical_alpha(3), 0.25);
        assert_eq!(theoretical_alpha(4), 0.5);
    }

    #[test]
    fn small_complete_graphs() {
        for (n, expected) in [(3, 0), (4, 0), (5, 1), (6, 1)] {
            let result = exact_genus(&complete_graph(n), DEFAULT_SEARCH_BUDGET).unwrap();
            assert_eq!(result.mode, SearchMode::Exact, "K{n}");
            assert_eq!(result.genus_upper, expected, "K{n}");
        }
    }

    #[test]
    fn petersen_graph_is_toroidal() {
        let g = crate::graph::petersen_graph();
        let result = exact_genus(&g, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(result.mode, SearchMode::Exact);
        assert_eq!(result.genus_upper, 1);
    }

    #[test]
    fn theta_graph_torus_capacity() {
        let theta = DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let result = exact_genus(&theta, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(result.genus_upper, 0);
        assert_eq!(result.mode, SearchMode::Exact);
    }

    /// Pinning one vertex's rotation is not a valid symmetry reduction: the
    /// bowtie with an interleaved rotation at its center is toroidal even
    /// though the graph is planar. The search must still report genus 0.
    #[test]
    fn bowtie_is_planar() {
        let g = DartGraph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        )
        .unwrap();
        // Interleaved order at the center vertex gives a genus-1 embedding.
        let mut orders: Vec<Vec<usize>> = (0..5).map(|v| g.darts_at(v).to_vec()).collect();
        orders[0] = vec![0, 6, 5, 11]; // triangle A, triangle B, triangle A, triangle B
        let interleaved = RotationSystem::from_vertex_orders(&g, &orders).unwrap();
        assert_eq!(trace_faces(&g, &interleaved).unwrap().genus, 1);
        // The exhaustive search is not fooled.
        let result = exact_genus(&g, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(result.mode, SearchMode::Exact);
        assert_eq!(result.genus_upper, 0);
    }

    #[test]
    fn witness_retraces_to_reported_genus() {
        for n in 4..=6 {
            let g = complete_graph(n);
            let result = exact_genus(&g, DEFAULT_SEARCH_BUDGET).unwrap();
            let emb = trace_faces(&g, result.witness.as_ref().unwrap()).unwrap();
            assert_eq!(emb.genus, result.genus_upper);
        }
    }

    #[test]
    fn budget_exhaustion_degrades_to_heuristic() {
        let g = complete_graph(6);
        let result = exact_genus(&g, 1).unwrap();
        assert!(result.genus_lower <= result.genus_upper);
        // With one step of budget the enumeration cannot finish; the mode
        // may still be exact if the pre-search certified the lower bound.
        let emb = trace_faces(&g, result.witness.as_ref().unwrap()).unwrap();
        assert_eq!(emb.genus, result.genus_upper);
    }

    #[test]
    fn disconnected_is_refused() {
        let g = DartGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        assert_eq!(exact_genus(&g, 1000).unwrap_err(), SearchError::Disconnected);
    }

    #[test]
    fn relabeling_invariance() {
        // K4 with vertices relabeled and the Petersen graph with a rotated
        // labeling must report identical genus.
        let g1 = complete_graph(4);
        let g2 = DartGraph::from_edges(
            4,
            &[(3, 2), (1, 3), (0, 3), (2, 1), (0, 2), (1, 0)],
        )
        .unwrap();
        let r1 = exact_genus(&g1, DEFAULT_SEARCH_BUDGET).unwrap();
        let r2 = exact_genus(&g2, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(r1.genus_upper, r2.genus_upper);
    }
}

//! Simulated-annealing local search over rotation systems.
//!
//! The move is an adjacent transposition in one vertex's cyclic order; the
//! objective is to maximize the face count, which by Euler's formula
//! minimizes genus. Each move is evaluated by incremental re-tracing, and
//! the whole run is deterministic for a fixed seed.

use std::time::Instant;

use crate::graph::DartGraph;
use crate::rng::{stream_seed, Xoshiro256};
use crate::rotation::{canonical_rotation, RotationSystem};
use crate::search::{euler_lower_bound, GenusResult, SearchError, SearchMode};
use crate::tracer::FaceTracer;

#[derive(Debug, Clone, Copy)]
pub struct AnnealConfig {
    pub seed: u64,
    /// Temperature steps in the geometric cooling schedule.
    pub temperatures: usize,
    /// Moves per temperature, per edge of the graph.
    pub moves_per_edge: usize,
    /// Geometric cooling ratio in (0, 1).
    pub cooling: f64,
    /// Independent restarts; the best rotation over all restarts wins.
    pub restarts: usize,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        Self { seed: 0, temperatures: 40, moves_per_edge: 200, cooling: 0.88, restarts: 1 }
    }
}

/// Outcome of the raw annealing loop, before it is wrapped in a
/// [`GenusResult`].
pub(crate) struct AnnealOutcome {
    pub best_faces: usize,
    pub witness: RotationSystem,
    pub steps: u64,
    pub moves: u64,
}

/// Runs the annealing schedule; stops early if `target_faces` is reached.
pub(crate) fn anneal_best(
    g: &DartGraph,
    cfg: &AnnealConfig,
    target_faces: Option<usize>,
) -> AnnealOutcome {
    // Darts at vertices of degree >= 3; lower degrees have a unique cyclic
    // order and offer no moves.
    let movable: Vec<usize> =
        (0..g.num_darts()).filter(|&d| g.degree(g.dart_vertex(d)) >= 3).collect();
    let start = canonical_rotation(g);
    let mut best_faces = 0usize;
    let mut witness = start.clone();
    let mut steps = 0u64;
    let mut moves = 0u64;

    for restart in 0..cfg.restarts.max(1) {
        let mut rng = Xoshiro256::new(stream_seed(cfg.seed, restart as u64));
        let mut tracer = FaceTracer::new(g, &start);
        if tracer.num_faces() > best_faces {
            best_faces = tracer.num_faces();
            witness = tracer.rotation();
        }
        if movable.is_empty() {
            steps += tracer.steps();
            break;
        }
        if target_faces.is_some_and(|t| best_faces >= t) {
            steps += tracer.steps();
            break;
        }

        // Pilot phase: estimate the scale of face-decreasing moves and set
        // the initial temperature so about half of them would be accepted.
        let mut decrease_sum = 0i64;
        let mut decreases = 0u32;
        for _ in 0..64 {
            let p = movable[rng.below(movable.len() as u64) as usize];
            let v = g.dart_vertex(p);
            let before = tracer.num_faces() as i64;
            tracer.transpose_after(p);
            tracer.retrace(&[v]);
            let delta = tracer.num_faces() as i64 - before;
            if delta < 0 {
                decrease_sum -= delta;
                decreases += 1;
            }
            tracer.transpose_after(p);
            tracer.retrace(&[v]);
            moves += 1;
        }
        let mut temperature = if decreases > 0 {
            (decrease_sum as f64 / decreases as f64) / std::f64::consts::LN_2
        } else {
            1.0
        };

        let moves_per_temp = cfg.moves_per_edge * g.num_edges();
        'schedule: for _ in 0..cfg.temperatures {
            for _ in 0..moves_per_temp {
                let p = movable[rng.below(movable.len() as u64) as usize];
                let v = g.dart_vertex(p);
                let before = tracer.num_faces() as i64;
                tracer.transpose_after(p);
                tracer.retrace(&[v]);
                moves += 1;
                let delta = tracer.num_faces() as i64 - before;
                let accept =
                    delta >= 0 || rng.unit_f64() < (delta as f64 / temperature).exp();
                if !accept {
                    tracer.transpose_after(p);
                    tracer.retrace(&[v]);
                    continue;
                }
                if tracer.num_faces() > best_faces {
                    best_faces = tracer.num_faces();
                    witness = tracer.rotation();
                    if target_faces.is_some_and(|t| best_faces >= t) {
                        break 'schedule;
                    }
                }
            }
            temperature *= cfg.cooling;
        }
        steps += tracer.steps();
        if target_faces.is_some_and(|t| best_faces >= t) {
            break;
        }
    }

    AnnealOutcome { best_faces, witness, steps, moves }
}

/// Local search for a low-genus embedding; the result's upper bound is the
/// best rotation found and the lower bound comes from the Euler bound.
pub fn heuristic_genus(g: &DartGraph, cfg: &AnnealConfig) -> Result<GenusResult, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let clock = Instant::now();
    let lower = euler_lower_bound(g);
    let target = faces_for_genus(g, lower);
    let outcome = anneal_best(g, cfg, Some(target));
    let upper = genus_of_faces(g, outcome.best_faces);
    Ok(GenusResult {
        mode: if upper == lower { SearchMode::Exact } else { SearchMode::Heuristic },
        genus_lower: lower,
        genus_upper: upper,
        alpha: upper as f64 / g.num_vertices() as f64,
        witness: Some(outcome.witness),
        rotations_examined: outcome.moves,
        trace_steps: outcome.steps,
        elapsed: clock.elapsed(),
    })
}

/// Face count an embedding must reach to realize `genus`.
pub(crate) fn faces_for_genus(g: &DartGraph, genus: usize) -> usize {
    (2 + g.num_edges() - g.num_vertices()) - 2 * genus
}

pub(crate) fn genus_of_faces(g: &DartGraph, faces: usize) -> usize {
    let deficit = 2 + g.num_edges() as i64 - g.num_vertices() as i64 - faces as i64;
    debug_assert!(deficit >= 0 && deficit % 2 == 0);
    (deficit / 2) as usize
}

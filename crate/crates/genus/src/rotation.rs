//! Rotation systems and face tracing.
//!
//! A rotation system is a permutation `σ` of darts whose orbits are exactly
//! the per-vertex dart sets; it fixes a cyclic order around every vertex and
//! thereby a cellular embedding on an orientable surface. The faces are the
//! orbits of `φ = σ ∘ twin`, and Euler's formula `V − E + F = 2 − 2g` gives
//! the genus.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cycles::CycleCensus;
use crate::graph::DartGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RotationError {
    #[error("rotation does not match the graph's per-vertex dart orbits")]
    InvalidForGraph,
    #[error("graph is disconnected; face tracing requires one component")]
    Disconnected,
    #[error("rotation file parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Successor-of-dart form of a rotation system: `next[x]` is the dart after
/// `x` in the cyclic order around `x`'s vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    next: Vec<usize>,
}

impl RotationSystem {
    pub fn from_successors(next: Vec<usize>) -> Self {
        Self { next }
    }

    /// Builds from explicit cyclic orders, one dart list per vertex.
    pub fn from_vertex_orders(g: &DartGraph, orders: &[Vec<usize>]) -> Result<Self, RotationError> {
        if orders.len() != g.num_vertices() {
            return Err(RotationError::InvalidForGraph);
        }
        let mut next = vec![usize::MAX; g.num_darts()];
        for (v, order) in orders.iter().enumerate() {
            if order.len() != g.degree(v) {
                return Err(RotationError::InvalidForGraph);
            }
            for (i, &d) in order.iter().enumerate() {
                if d >= g.num_darts() || g.dart_vertex(d) != v || next[d] != usize::MAX {
                    return Err(RotationError::InvalidForGraph);
                }
                next[d] = order[(i + 1) % order.len()];
            }
        }
        Ok(Self { next })
    }

    #[inline]
    pub fn next(&self, dart: usize) -> usize {
        self.next[dart]
    }

    pub fn successors(&self) -> &[usize] {
        &self.next
    }

    pub fn num_darts(&self) -> usize {
        self.next.len()
    }

    /// The cyclic order at `v`, starting from its smallest dart.
    pub fn order_at(&self, g: &DartGraph, v: usize) -> Vec<usize> {
        let darts = g.darts_at(v);
        if darts.is_empty() {
            return Vec::new();
        }
        let start = darts[0];
        let mut order = vec![start];
        let mut d = self.next[start];
        while d != start && order.len() <= darts.len() {
            order.push(d);
            d = self.next[d];
        }
        order
    }

    /// Orientation reversal: every vertex's cyclic order reversed. This is
    /// the inverse permutation of `σ`.
    pub fn reversed(&self) -> Self {
        let mut next = vec![0usize; self.next.len()];
        for (d, &succ) in self.next.iter().enumerate() {
            next[succ] = d;
        }
        Self { next }
    }

    /// Rotation file format: one `v: d_1 d_2 ... d_deg` line per vertex.
    pub fn to_text(&self, g: &DartGraph) -> String {
        let mut out = String::new();
        for v in 0..g.num_vertices() {
            let order = self.order_at(g, v);
            let darts: Vec<String> = order.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "{v}: {}", darts.join(" "));
        }
        out
    }

    pub fn parse_text(g: &DartGraph, text: &str) -> Result<Self, RotationError> {
        let mut orders = vec![Vec::new(); g.num_vertices()];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or(RotationError::Parse {
                line: i + 1,
                msg: "expected `v: d_1 d_2 ...`".into(),
            })?;
            let v: usize = head.trim().parse().map_err(|_| RotationError::Parse {
                line: i + 1,
                msg: "invalid vertex id".into(),
            })?;
            if v >= g.num_vertices() {
                return Err(RotationError::Parse { line: i + 1, msg: "vertex out of range".into() });
            }
            let mut darts = Vec::new();
            for tok in rest.split_whitespace() {
                darts.push(tok.parse().map_err(|_| RotationError::Parse {
                    line: i + 1,
                    msg: "invalid dart id".into(),
                })?);
            }
            orders[v] = darts;
        }
        Self::from_vertex_orders(g, &orders)
    }
}

/// Deterministic starting rotation: darts at each vertex in ascending id
/// order.
pub fn canonical_rotation(g: &DartGraph) -> RotationSystem {
    let mut next = vec![0usize; g.num_darts()];
    for v in 0..g.num_vertices() {
        let darts = g.darts_at(v);
        for (i, &d) in darts.iter().enumerate() {
            next[d] = darts[(i + 1) % darts.len()];
        }
    }
    RotationSystem::from_successors(next)
}

/// True iff `σ` restricted to each vertex's darts is a single cycle covering
/// exactly that vertex's darts.
pub fn validate_rotation(g: &DartGraph, rot: &RotationSystem) -> bool {
    if rot.num_darts() != g.num_darts() {
        return false;
    }
    let mut seen = vec![false; g.num_darts()];
    for v in 0..g.num_vertices() {
        let darts = g.darts_at(v);
        if darts.is_empty() {
            continue;
        }
        let start = darts[0];
        let mut d = start;
        let mut count = 0;
        loop {
            if d >= g.num_darts() || g.dart_vertex(d) != v || seen[d] {
                return false;
            }
            seen[d] = true;
            count += 1;
            if count > darts.len() {
                return false;
            }
            d = rot.next(d);
            if d == start {
                break;
            }
        }
        if count != darts.len() {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

/// Face census of one embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    /// Boundary lengths in darts, ascending.
    pub face_lengths: Vec<usize>,
    pub num_faces: usize,
    pub genus: usize,
    pub alpha: f64,
    pub num_vertices: usize,
    pub num_edges: usize,
}

/// Traces the orbits of `φ(x) = σ(twin(x))`. O(E); touches each dart once.
pub fn trace_faces(g: &DartGraph, rot: &RotationSystem) -> Result<Embedding, RotationError> {
    if !validate_rotation(g, rot) {
        return Err(RotationError::InvalidForGraph);
    }
    if !g.is_connected() {
        return Err(RotationError::Disconnected);
    }
    let mut visited = vec![false; g.num_darts()];
    let mut face_lengths = Vec::new();
    for start in 0..g.num_darts() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut d = start;
        loop {
            visited[d] = true;
            len += 1;
            d = rot.next(g.twin(d));
            if d == start {
                break;
            }
        }
        face_lengths.push(len);
    }
    face_lengths.sort_unstable();
    let num_faces = face_lengths.len();
    let v = g.num_vertices() as i64;
    let e = g.num_edges() as i64;
    let f = num_faces as i64;
    let euler_deficit = 2 - v + e - f;
    debug_assert!(euler_deficit >= 0 && euler_deficit % 2 == 0);
    let genus = (euler_deficit / 2) as usize;
    Ok(Embedding {
        face_lengths,
        num_faces,
        genus,
        alpha: genus as f64 / g.num_vertices() as f64,
        num_vertices: g.num_vertices(),
        num_edges: g.num_edges(),
    })
}

/// Checks `2E ≥ c(m) + m(F − c(m))` where `c(m)` counts the embedding's
/// faces of length at most `census.max_len`.
pub fn face_inequality_check(emb: &Embedding, census: &CycleCensus) -> bool {
    let m = census.max_len as i64;
    let c = emb.face_lengths.iter().filter(|&&len| len <= census.max_len).count() as i64;
    let f = emb.num_faces as i64;
    2 * emb.num_edges as i64 >= c + m * (f - c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::count_short_cycles;
    use crate::graph::complete_graph;

    fn theta() -> DartGraph {
        DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn triangle() -> DartGraph {
        DartGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn triangle_is_planar() {
        let g = triangle();
        let emb = trace_faces(&g, &canonical_rotation(&g)).unwrap();
        assert_eq!(emb.num_faces, 2);
        assert_eq!(emb.genus, 0);
        assert_eq!(emb.face_lengths, vec![3, 3]);
    }

    #[test]
    fn theta_rotations() {
        let g = theta();
        // The two rotation classes of the theta graph: one planar with
        // three faces, one a single hexagonal face on the torus.
        let planar = RotationSystem::from_vertex_orders(
            &g,
            &[vec![0, 2, 4], vec![1, 5, 3]],
        )
        .unwrap();
        let emb = trace_faces(&g, &planar).unwrap();
        assert_eq!(emb.num_faces, 3);
        assert_eq!(emb.genus, 0);
        let toroidal = RotationSystem::from_vertex_orders(
            &g,
            &[vec![0, 2, 4], vec![1, 3, 5]],
        )
        .unwrap();
        let emb = trace_faces(&g, &toroidal).unwrap();
        assert_eq!(emb.num_faces, 1);
        assert_eq!(emb.face_lengths, vec![6]);
        assert_eq!(emb.genus, 1);
    }

    #[test]
    fn face_lengths_sum_to_dart_count() {
        for g in [theta(), triangle(), complete_graph(5)] {
            let emb = trace_faces(&g, &canonical_rotation(&g)).unwrap();
            assert_eq!(emb.face_lengths.iter().sum::<usize>(), g.num_darts());
        }
    }

    #[test]
    fn identity_is_not_a_rotation() {
        let g = theta();
        let identity = RotationSystem::from_successors((0..g.num_darts()).collect());
        assert!(!validate_rotation(&g, &identity));
    }

    #[test]
    fn canonical_rotation_is_valid() {
        for g in [theta(), triangle(), complete_graph(6)] {
            assert!(validate_rotation(&g, &canonical_rotation(&g)));
        }
    }

    #[test]
    fn cross_vertex_swap_invalidates() {
        let g = triangle();
        let mut next = canonical_rotation(&g).successors().to_vec();
        // Splice dart 1 (vertex 1) into vertex 0's cycle.
        next.swap(0, 1);
        let rot = RotationSystem::from_successors(next);
        assert!(!validate_rotation(&g, &rot));
    }

    #[test]
    fn degree_two_graphs_are_planar_under_any_rotation() {
        let g = DartGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let emb = trace_faces(&g, &canonical_rotation(&g)).unwrap();
        assert_eq!(emb.num_faces, 2);
        assert_eq!(emb.genus, 0);
    }

    #[test]
    fn reversal_preserves_genus() {
        let g = complete_graph(5);
        let rot = canonical_rotation(&g);
        let emb = trace_faces(&g, &rot).unwrap();
        let emb_rev = trace_faces(&g, &rot.reversed()).unwrap();
        assert_eq!(emb.num_faces, emb_rev.num_faces);
        assert_eq!(emb.genus, emb_rev.genus);
    }

    #[test]
    fn disconnected_is_refused() {
        let g = DartGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        assert_eq!(
            trace_faces(&g, &canonical_rotation(&g)).unwrap_err(),
            RotationError::Disconnected
        );
    }

    #[test]
    fn rotation_text_round_trip() {
        let g = complete_graph(4);
        let rot = canonical_rotation(&g);
        let parsed = RotationSystem::parse_text(&g, &rot.to_text(&g)).unwrap();
        assert_eq!(rot, parsed);
    }

    #[test]
    fn face_inequality_on_triangle() {
        let g = triangle();
        let emb = trace_faces(&g, &canonical_rotation(&g)).unwrap();
        let census = count_short_cycles(&g, 3, u64::MAX).unwrap();
        // 2E = 6 >= c(3) + 3(F - c(3)) = 2 + 0
        assert!(face_inequality_check(&emb, &census));
    }

    #[test]
    fn face_inequality_on_torus_theta() {
        let g = theta();
        let toroidal = RotationSystem::from_vertex_orders(
            &g,
            &[vec![0, 2, 4], vec![1, 3, 5]],
        )
        .unwrap();
        let emb = trace_faces(&g, &toroidal).unwrap();
        let census = count_short_cycles(&g, 5, u64::MAX).unwrap();
        // 6 >= 0 + 5·1
        assert!(face_inequality_check(&emb, &census));
    }
}

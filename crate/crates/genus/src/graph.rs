//! Dart-based multigraph representation.
//!
//! Every edge is a pair of darts (half-edges). Edge `i` of the construction
//! order owns darts `2i` and `2i + 1`, so the twin involution is `x ^ 1` and
//! never needs a lookup. Loops and parallel edges are permitted; a loop
//! contributes 2 to its vertex's degree.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge list is empty")]
    EmptyEdgeList,
    #[error("edge {index} endpoint {vertex} out of range (n = {n})")]
    EndpointOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("graph text parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Connected or not, a multigraph stored as darts.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DartGraph {
    num_vertices: usize,
    /// Owning vertex of each dart, indexed by dart id.
    dart_vertex: Vec<usize>,
    /// Darts incident to each vertex in ascending dart-id order (CSR layout).
    vertex_offsets: Vec<usize>,
    vertex_darts: Vec<usize>,
}

impl DartGraph {
    /// Builds the graph from an edge list. Edge `i` produces darts `2i`
    /// (at the first endpoint) and `2i + 1` (at the second).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        let mut dart_vertex = Vec::with_capacity(2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::EndpointOutOfRange { index: i, vertex, n });
                }
            }
            dart_vertex.push(u);
            dart_vertex.push(v);
        }
        let mut degree = vec![0usize; n];
        for &v in &dart_vertex {
            degree[v] += 1;
        }
        let mut vertex_offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        vertex_offsets.push(0);
        for &deg in &degree {
            acc += deg;
            vertex_offsets.push(acc);
        }
        let mut cursor = vertex_offsets.clone();
        let mut vertex_darts = vec![0usize; dart_vertex.len()];
        for (d, &v) in dart_vertex.iter().enumerate() {
            vertex_darts[cursor[v]] = d;
            cursor[v] += 1;
        }
        Ok(Self { num_vertices: n, dart_vertex, vertex_offsets, vertex_darts })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.dart_vertex.len() / 2
    }

    pub fn num_darts(&self) -> usize {
        self.dart_vertex.len()
    }

    /// The paired dart of the same edge.
    #[inline]
    pub fn twin(&self, dart: usize) -> usize {
        dart ^ 1
    }

    #[inline]
    pub fn dart_vertex(&self, dart: usize) -> usize {
        self.dart_vertex[dart]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_offsets[v + 1] - self.vertex_offsets[v]
    }

    /// Darts at `v` in ascending dart-id order.
    pub fn darts_at(&self, v: usize) -> &[usize] {
        &self.vertex_darts[self.vertex_offsets[v]..self.vertex_offsets[v + 1]]
    }

    /// Edge endpoints in construction order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_edges()).map(|i| (self.dart_vertex[2 * i], self.dart_vertex[2 * i + 1]))
    }

    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.num_vertices];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &d in self.darts_at(v) {
                let w = self.dart_vertex[self.twin(d)];
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.num_vertices
    }

    /// Length of the shortest cycle: loops are length 1, parallel edge pairs
    /// length 2. `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut has_parallel = false;
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(self.num_edges());
        for (u, v) in self.edges() {
            if u == v {
                return Some(1);
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                has_parallel = true;
                break;
            }
        }
        if has_parallel {
            return Some(2);
        }
        // Simple graph from here on: BFS from each root, recording the dart
        // used to reach each vertex so parallel-free cross edges close cycles.
        let n = self.num_vertices;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut via_edge = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            let mut queue = VecDeque::new();
            dist[root] = 0;
            via_edge[root] = usize::MAX;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                if let Some(b) = best {
                    // No shorter cycle can close beyond this depth.
                    if 2 * dist[v] + 1 >= b {
                        continue;
                    }
                }
                for &d in self.darts_at(v) {
                    if d / 2 == via_edge[v] {
                        continue;
                    }
                    let w = self.dart_vertex[self.twin(d)];
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via_edge[w] = d / 2;
                        queue.push_back(w);
                    } else {
                        let len = dist[v] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Serializes to the shared graph text format: `n m` then one `u v` line
    /// per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.num_vertices, self.num_edges());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the graph text format.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (line_no, header) = lines
            .next()
            .ok_or(GraphError::Parse { line: 1, msg: "empty input".into() })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize, GraphError> {
            tok.ok_or(GraphError::Parse { line, msg: "expected two numbers".into() })?
                .parse()
                .map_err(|_| GraphError::Parse { line, msg: "invalid number".into() })
        };
        let n = parse_num(it.next(), line_no + 1)?;
        let m = parse_num(it.next(), line_no + 1)?;
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), line_no + 1)?;
            let v = parse_num(it.next(), line_no + 1)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(n, &edges)
    }

    /// Per-vertex degrees. Loops count twice.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.num_vertices).map(|v| self.degree(v)).collect()
    }

    /// True when the graph has no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(self.num_edges());
        for (u, v) in self.edges() {
            if u == v {
                return false;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen_graph() -> DartGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    DartGraph::from_edges(10, &edges).expect("Petersen graph is well formed")
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> DartGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    DartGraph::from_edges(n, &edges).expect("complete graph is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> DartGraph {
        DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn triangle() -> DartGraph {
        DartGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn theta_construction() {
        let g = theta();
        assert_eq!(g.num_darts(), 6);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn triangle_degrees() {
        let g = triangle();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn single_loop() {
        let g = DartGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(g.num_darts(), 2);
        assert_eq!(g.degree(0), 2);
        assert!(g.is_connected());
        assert_eq!(g.girth(), Some(1));
    }

    #[test]
    fn twin_involution() {
        let g = theta();
        for d in 0..g.num_darts() {
            assert_eq!(g.twin(g.twin(d)), d);
            assert_ne!(g.twin(d), d);
        }
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in [theta(), triangle(), complete_graph(5)] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.num_edges());
        }
    }

    #[test]
    fn endpoint_out_of_range() {
        let err = DartGraph::from_edges(2, &[(0, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::EndpointOutOfRange { vertex: 2, .. }));
    }

    #[test]
    fn empty_edge_list_rejected() {
        assert_eq!(DartGraph::from_edges(3, &[]).unwrap_err(), GraphError::EmptyEdgeList);
    }

    #[test]
    fn connectivity() {
        assert!(triangle().is_connected());
        let two_triangles = DartGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        assert!(!two_triangles.is_connected());
    }

    #[test]
    fn girth_cases() {
        assert_eq!(theta().girth(), Some(2));
        assert_eq!(complete_graph(4).girth(), Some(3));
        let path = DartGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), None);
        assert_eq!(petersen_graph().girth(), Some(5));
    }

    #[test]
    fn text_round_trip() {
        let g = theta();
        let parsed = DartGraph::parse_text(&g.to_text()).unwrap();
        assert_eq!(g, parsed);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(DartGraph::parse_text("").is_err());
        assert!(DartGraph::parse_text("2 1\n0 x\n").is_err());
        assert!(DartGraph::parse_text("2 2\n0 1\n").is_err());
    }

}

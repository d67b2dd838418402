//! Incremental face tracing.
//!
//! The exact search and the annealer both walk long sequences of rotation
//! systems that differ at a single vertex. Re-tracing all faces from scratch
//! costs O(E) per candidate; this tracer re-traces only the orbits that can
//! have changed. Changing `σ` at vertex `v` changes `φ(x) = σ(twin(x))`
//! exactly for the darts pointing into `v`, and every face orbit that differs
//! from before contains one of those darts. Re-walking the new orbits seeded
//! from the incoming darts therefore covers every destroyed face, and the
//! face count is maintained by the delta new − destroyed.

use crate::graph::DartGraph;
use crate::rotation::RotationSystem;

#[derive(Debug, Clone)]
pub struct FaceTracer<'g> {
    graph: &'g DartGraph,
    /// σ as a successor array.
    next: Vec<usize>,
    /// Face stamp per dart. Stamps at or above `stamp_floor` were assigned in
    /// the current mutation.
    face_id: Vec<u64>,
    next_face_id: u64,
    num_faces: usize,
    /// Dart steps walked so far; the budget unit of the search.
    steps: u64,
    scratch_old: Vec<u64>,
}

impl<'g> FaceTracer<'g> {
    /// Full trace of `rot`.
    pub fn new(graph: &'g DartGraph, rot: &RotationSystem) -> Self {
        let mut tracer = Self {
            graph,
            next: rot.successors().to_vec(),
            face_id: vec![u64::MAX; graph.num_darts()],
            next_face_id: 0,
            num_faces: 0,
            steps: 0,
            scratch_old: Vec::new(),
        };
        tracer.full_retrace();
        tracer
    }

    fn full_retrace(&mut self) {
        self.face_id.iter_mut().for_each(|f| *f = u64::MAX);
        self.num_faces = 0;
        for start in 0..self.graph.num_darts() {
            if self.face_id[start] != u64::MAX {
                continue;
            }
            let fid = self.next_face_id;
            self.next_face_id += 1;
            let mut d = start;
            loop {
                self.face_id[d] = fid;
                self.steps += 1;
                d = self.next[self.graph.twin(d)];
                if d == start {
                    break;
                }
            }
            self.num_faces += 1;
        }
    }

    pub fn num_faces(&self) -> usize {
        self.num_faces
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn sigma(&self) -> &[usize] {
        &self.next
    }

    pub fn rotation(&self) -> RotationSystem {
        RotationSystem::from_successors(self.next.clone())
    }

    /// Genus of the current embedding (graph must be connected).
    pub fn genus(&self) -> usize {
        let deficit =
            2 - self.graph.num_vertices() as i64 + self.graph.num_edges() as i64
                - self.num_faces as i64;
        debug_assert!(deficit >= 0 && deficit % 2 == 0);
        (deficit / 2) as usize
    }

    /// Installs `order` as the cyclic order at `v` without re-tracing.
    /// Callers must follow up with [`FaceTracer::retrace`] over every vertex
    /// changed since the last retrace.
    pub fn set_vertex_order(&mut self, v: usize, order: &[usize]) {
        debug_assert_eq!(order.len(), self.graph.degree(v));
        for (i, &d) in order.iter().enumerate() {
            self.next[d] = order[(i + 1) % order.len()];
        }
    }

    /// Transposes the two darts following `p` in its vertex's cyclic order:
    /// `... p a b ...` becomes `... p b a ...`. Self-inverse; a no-op at
    /// degree ≤ 2. Follow up with [`FaceTracer::retrace`].
    pub fn transpose_after(&mut self, p: usize) {
        let a = self.next[p];
        let b = self.next[a];
        if a == p || b == p {
            return;
        }
        let q = self.next[b];
        self.next[p] = b;
        self.next[b] = a;
        self.next[a] = q;
    }

    /// Incrementally updates faces after σ changed at `vertices`.
    pub fn retrace(&mut self, vertices: &[usize]) {
        let stamp_floor = self.next_face_id;
        self.scratch_old.clear();
        let mut new_faces = 0usize;
        for &v in vertices {
            for &d in self.graph.darts_at(v) {
                let seed = self.graph.twin(d);
                if self.face_id[seed] >= stamp_floor && self.face_id[seed] != u64::MAX {
                    continue; // already on a freshly traced orbit
                }
                let fid = self.next_face_id;
                self.next_face_id += 1;
                let mut x = seed;
                loop {
                    let old = self.face_id[x];
                    if old < stamp_floor {
                        self.scratch_old.push(old);
                    }
                    self.face_id[x] = fid;
                    self.steps += 1;
                    x = self.next[self.graph.twin(x)];
                    if x == seed {
                        break;
                    }
                }
                new_faces += 1;
            }
        }
        self.scratch_old.sort_unstable();
        self.scratch_old.dedup();
        let destroyed = self.scratch_old.len();
        self.num_faces = self.num_faces + new_faces - destroyed;
    }
}

//! Face tracing on the theta multigraph (two vertices, three parallel
//! edges): the embedding with three faces on the sphere vs. the single
//! hexagonal face on the torus.
//!
//! Run with: `cargo run --example trace_theta`

use genus::graph::DartGraph;
use genus::rotation::{trace_faces, RotationSystem};

fn main() {
    let g = DartGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
    println!("theta graph: V = {}, E = {}", g.num_vertices(), g.num_edges());

    for (name, orders) in [
        ("planar   ", vec![vec![0, 2, 4], vec![1, 5, 3]]),
        ("toroidal ", vec![vec![0, 2, 4], vec![1, 3, 5]]),
    ] {
        let rot = RotationSystem::from_vertex_orders(&g, &orders).unwrap();
        let emb = trace_faces(&g, &rot).unwrap();
        println!(
            "{name} rotation: F = {}, face lengths {:?}, genus = {}",
            emb.num_faces, emb.face_lengths, emb.genus
        );
    }
}

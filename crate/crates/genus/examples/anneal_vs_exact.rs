//! Annealing vs. exhaustive search on random cubic graphs: the heuristic's
//! upper bound is always sound and usually tight at this scale.
//!
//! Run with: `cargo run --release --example anneal_vs_exact`

use genus::anneal::{heuristic_genus, AnnealConfig};
use genus::sample::{sample_batch, SampleConfig};
use genus::search::{exact_genus, DEFAULT_SEARCH_BUDGET};

fn main() {
    let cfg = SampleConfig::new(3, 16, 7);
    let graphs = sample_batch(&cfg, 50).unwrap();
    let mut tight = 0;
    for (i, g) in graphs.iter().enumerate() {
        let exact = exact_genus(g, DEFAULT_SEARCH_BUDGET).unwrap();
        let anneal_cfg = AnnealConfig { seed: i as u64, ..AnnealConfig::default() };
        let heur = heuristic_genus(g, &anneal_cfg).unwrap();
        assert!(heur.genus_upper >= exact.genus_upper, "heuristic must stay an upper bound");
        if heur.genus_upper == exact.genus_upper {
            tight += 1;
        }
    }
    println!(
        "annealing matched the exact genus on {tight}/{} random cubic graphs (n = 16)",
        graphs.len()
    );
}

//! Genus of small complete graphs against the closed-form
//! `⌈(n − 3)(n − 4)/12⌉`.
//!
//! Run with: `cargo run --release --example complete_graphs`

use std::time::Instant;

use genus::graph::complete_graph;
use genus::search::{exact_genus, DEFAULT_SEARCH_BUDGET};

fn ringel_formula(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    (n - 3) * (n - 4) / 12 + usize::from(!((n - 3) * (n - 4)).is_multiple_of(12))
}

fn main() {
    println!("{:>3} {:>8} {:>8} {:>7} {:>12} {:>10}", "n", "genus", "formula", "mode", "examined", "ms");
    for n in 3..=8 {
        let g = complete_graph(n);
        let clock = Instant::now();
        let result = exact_genus(&g, DEFAULT_SEARCH_BUDGET).unwrap();
        println!(
            "{:>3} {:>8} {:>8} {:>7} {:>12} {:>10}",
            n,
            result.genus_upper,
            ringel_formula(n),
            result.mode.as_str(),
            result.rotations_examined,
            clock.elapsed().as_millis()
        );
        assert_eq!(result.genus_upper, ringel_formula(n));
    }
}

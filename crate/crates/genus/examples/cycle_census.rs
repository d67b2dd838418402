//! Short-cycle census of random cubic graphs against the expectation bound
//! `Σ_{t=2}^{m} C(n,t)·(t!/2t)·(d/n)^t ≤ d^m/2`, and the observation that
//! the counts stay O(1) as n grows.
//!
//! Run with: `cargo run --release --example cycle_census`

use genus::cycles::{count_short_cycles, lemma1_bound, DEFAULT_CYCLE_BUDGET};
use genus::sample::{sample_batch, SampleConfig};

fn main() {
    let d = 3;
    let m = 5;
    let bound = lemma1_bound(d, m, None);
    println!("expectation cap d^m/2 = {}", bound.simplified_cap);
    println!("{:>6} {:>12} {:>14}", "n", "mean c(m)", "finite-n sum");
    for n in [20usize, 50, 100, 500, 1000] {
        let cfg = SampleConfig::new(d, n, 1000 + n as u64);
        let graphs = sample_batch(&cfg, 100).unwrap();
        let total: u64 = graphs
            .iter()
            .map(|g| count_short_cycles(g, m, DEFAULT_CYCLE_BUDGET).unwrap().total)
            .sum();
        let finite = lemma1_bound(d, m, Some(n)).finite_sum.unwrap();
        println!("{:>6} {:>12.3} {:>14.3}", n, total as f64 / graphs.len() as f64, finite);
    }
}

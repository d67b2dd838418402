//! Growth of the genus of random cubic graphs: a desk-scale sweep showing
//! the genus density α = g/n sitting well below the asymptotic (d − 2)/4 at
//! small n, while F/E shrinks as n grows.
//!
//! Run with: `cargo run --release --example growth_sweep`

use genus::experiment::{run_sweep, summarize, summary_to_gnuplot, SweepConfig};

fn main() {
    let cfg = SweepConfig::new(3, vec![6, 8, 10, 12, 14], 20, 2024);
    let records = run_sweep(&cfg).unwrap();
    let rows = summarize(&records).unwrap();
    println!(
        "{:>4} {:>10} {:>10} {:>12} {:>12}",
        "n", "mean α", "std α", "mean F/E", "asymptote"
    );
    for r in &rows {
        println!(
            "{:>4} {:>10.4} {:>10.4} {:>12.4} {:>12.4}",
            r.n, r.mean_alpha, r.stddev_alpha, r.mean_f_over_e, r.theoretical_alpha
        );
    }
    println!("\ngnuplot series:\n{}", summary_to_gnuplot(&rows));
}

//! Monte Carlo harness: seeded sweeps over (d, n) grids, per-record genus
//! and cycle statistics, deterministic CSV output, and summary tables.
//!
//! Records are computed in parallel across (n, sample) pairs but emitted in
//! canonical order (by n, then sample index), and every per-record quantity
//! is derived from the record's own seed, so the CSV is byte-identical for a
//! fixed configuration regardless of thread count. The `elapsed_ms` column
//! is a work-derived measure (face-trace dart steps / 1000), not wall time,
//! for the same reason.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::anneal::{heuristic_genus, AnnealConfig};
use crate::cycles::{count_short_cycles, DEFAULT_CYCLE_BUDGET};
use crate::rng::stream_seed;
use crate::rotation::trace_faces;
use crate::sample::{sample_regular, SampleConfig};
use crate::search::{exact_genus, SearchMode, DEFAULT_SEARCH_BUDGET};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExperimentError {
    #[error("no records to summarize")]
    Empty,
    #[error("invalid sweep config: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Exact search up to `exact_max` vertices, annealing beyond.
    Exact,
    /// Annealing everywhere.
    Anneal,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub d: usize,
    pub n_values: Vec<usize>,
    pub samples_per_n: usize,
    pub seed: u64,
    pub mode: SweepMode,
    /// Cycle census cap.
    pub m: usize,
    /// Largest n attempted exactly when `mode` is `Exact`.
    pub exact_max: usize,
    pub budget: u64,
    pub require_simple: bool,
    pub require_connected: bool,
}

impl SweepConfig {
    pub fn new(d: usize, n_values: Vec<usize>, samples_per_n: usize, seed: u64) -> Self {
        Self {
            d,
            n_values,
            samples_per_n,
            seed,
            mode: SweepMode::Exact,
            m: 5,
            exact_max: 16,
            budget: DEFAULT_SEARCH_BUDGET,
            require_simple: true,
            require_connected: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordStatus {
    Ok,
    SampleFailed,
    BudgetExceeded,
}

impl RecordStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RecordStatus::Ok => "ok",
            RecordStatus::SampleFailed => "sample-failed",
            RecordStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// One (d, n, sample) row of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentRecord {
    pub d: usize,
    pub n: usize,
    pub sample_index: usize,
    pub seed: u64,
    #[serde(serialize_with = "serialize_mode")]
    pub mode: SearchMode,
    pub genus_lower: usize,
    pub genus_upper: usize,
    pub alpha: f64,
    pub faces: usize,
    pub edges: usize,
    pub f_over_e: f64,
    pub cycles_le_m: u64,
    pub m: usize,
    /// Face-trace dart steps / 1000; deterministic, not wall time.
    pub elapsed_ms: u64,
    pub status: RecordStatus,
}

fn serialize_mode<S: serde::Serializer>(mode: &SearchMode, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(mode.as_str())
}

impl ExperimentRecord {
    fn failed(d: usize, n: usize, sample_index: usize, seed: u64, m: usize) -> Self {
        Self {
            d,
            n,
            sample_index,
            seed,
            mode: SearchMode::BoundsOnly,
            genus_lower: 0,
            genus_upper: 0,
            alpha: 0.0,
            faces: 0,
            edges: 0,
            f_over_e: 0.0,
            cycles_le_m: 0,
            m,
            elapsed_ms: 0,
            status: RecordStatus::SampleFailed,
        }
    }
}

/// Seed for record (n, sample) of a sweep.
pub fn record_seed(sweep_seed: u64, n: usize, sample_index: usize) -> u64 {
    stream_seed(stream_seed(sweep_seed, n as u64), sample_index as u64)
}

fn run_one(cfg: &SweepConfig, n: usize, sample_index: usize) -> ExperimentRecord {
    let seed = record_seed(cfg.seed, n, sample_index);
    let sample_cfg = SampleConfig {
        d: cfg.d,
        n,
        seed,
        require_simple: cfg.require_simple,
        require_connected: cfg.require_connected,
        max_rejects: 10_000,
    };
    let graph = match sample_regular(&sample_cfg) {
        Ok(g) => g,
        Err(_) => return ExperimentRecord::failed(cfg.d, n, sample_index, seed, cfg.m),
    };
    let use_exact = cfg.mode == SweepMode::Exact && n <= cfg.exact_max;
    let result = if use_exact {
        exact_genus(&graph, cfg.budget)
    } else {
        let anneal = AnnealConfig { seed: stream_seed(seed, 1), ..AnnealConfig::default() };
        heuristic_genus(&graph, &anneal)
    }
    .expect("sampled graph is connected");
    let embedding = trace_faces(&graph, result.witness.as_ref().expect("search emits a witness"))
        .expect("witness is valid for its graph");
    let census = count_short_cycles(&graph, cfg.m, DEFAULT_CYCLE_BUDGET)
        .expect("cycle budget covers sweep-scale graphs");
    let status = if use_exact && result.mode == SearchMode::Heuristic {
        RecordStatus::BudgetExceeded
    } else {
        RecordStatus::Ok
    };
    ExperimentRecord {
        d: cfg.d,
        n,
        sample_index,
        seed,
        mode: result.mode,
        genus_lower: result.genus_lower,
        genus_upper: result.genus_upper,
        alpha: result.genus_upper as f64 / n as f64,
        faces: embedding.num_faces,
        edges: graph.num_edges(),
        f_over_e: embedding.num_faces as f64 / graph.num_edges() as f64,
        cycles_le_m: census.total,
        m: cfg.m,
        elapsed_ms: result.trace_steps / 1000,
        status,
    }
}

/// Runs the full sweep. Deterministic for a fixed config; records are
/// ordered by n, then sample index.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<ExperimentRecord>, ExperimentError> {
    if cfg.n_values.is_empty() || cfg.samples_per_n == 0 {
        return Err(ExperimentError::InvalidConfig("empty n_values or zero samples".into()));
    }
    for &n in &cfg.n_values {
        if !(cfg.d * n).is_multiple_of(2) {
            return Err(ExperimentError::InvalidConfig(format!(
                "d*n odd for n = {n}; no {}-regular graph exists",
                cfg.d
            )));
        }
    }
    let pairs: Vec<(usize, usize)> = cfg
        .n_values
        .iter()
        .flat_map(|&n| (0..cfg.samples_per_n).map(move |s| (n, s)))
        .collect();
    Ok(pairs.par_iter().map(|&(n, s)| run_one(cfg, n, s)).collect())
}

/// The genus growth identity `α = (d − 2)/4 + 1/n − (d/4)(F/E)`.
///
/// Exact in rational arithmetic when the recorded genus comes from the
/// recorded embedding; the tolerance only covers floating representation.
pub fn check_eq_star(rec: &ExperimentRecord) -> bool {
    if rec.status == RecordStatus::SampleFailed {
        return false;
    }
    let d = rec.d as f64;
    let n = rec.n as f64;
    let rhs = (d - 2.0) / 4.0 + 1.0 / n - (d / 4.0) * rec.f_over_e;
    (rec.alpha - rhs).abs() <= 1e-12 * rec.alpha.abs().max(1.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct SummaryRow {
    pub n: usize,
    pub samples: usize,
    pub mean_alpha: f64,
    pub stddev_alpha: f64,
    pub mean_f_over_e: f64,
    pub stddev_f_over_e: f64,
    pub theoretical_alpha: f64,
}

/// Per-n means and standard deviations over the usable records.
pub fn summarize(records: &[ExperimentRecord]) -> Result<Vec<SummaryRow>, ExperimentError> {
    let usable: Vec<&ExperimentRecord> =
        records.iter().filter(|r| r.status != RecordStatus::SampleFailed).collect();
    if usable.is_empty() {
        return Err(ExperimentError::Empty);
    }
    let mut ns: Vec<usize> = usable.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        let group: Vec<&&ExperimentRecord> = usable.iter().filter(|r| r.n == n).collect();
        let count = group.len() as f64;
        let mean = |f: &dyn Fn(&ExperimentRecord) -> f64| {
            group.iter().map(|r| f(r)).sum::<f64>() / count
        };
        let mean_alpha = mean(&|r| r.alpha);
        let mean_foe = mean(&|r| r.f_over_e);
        let var = |f: &dyn Fn(&ExperimentRecord) -> f64, mu: f64| {
            group.iter().map(|r| (f(r) - mu).powi(2)).sum::<f64>() / count
        };
        rows.push(SummaryRow {
            n,
            samples: group.len(),
            mean_alpha,
            stddev_alpha: var(&|r| r.alpha, mean_alpha).sqrt(),
            mean_f_over_e: mean_foe,
            stddev_f_over_e: var(&|r| r.f_over_e, mean_foe).sqrt(),
            theoretical_alpha: crate::search::theoretical_alpha(usable[0].d),
        });
    }
    Ok(rows)
}

pub const CSV_HEADER: &str =
    "d,n,sample,seed,mode,genus_lower,genus_upper,alpha,F,E,f_over_e,cycles_le_m,m,elapsed_ms,status";

/// Renders records to the canonical CSV layout.
pub fn records_to_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.d,
            r.n,
            r.sample_index,
            r.seed,
            r.mode.as_str(),
            r.genus_lower,
            r.genus_upper,
            r.alpha,
            r.faces,
            r.edges,
            r.f_over_e,
            r.cycles_le_m,
            r.m,
            r.elapsed_ms,
            r.status.as_str(),
        );
    }
    out
}

/// Summary as CSV.
pub fn summary_to_csv(rows: &[SummaryRow]) -> String {
    let mut out =
        String::from("n,samples,mean_alpha,stddev_alpha,mean_f_over_e,stddev_f_over_e,theoretical_alpha\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.samples,
            r.mean_alpha,
            r.stddev_alpha,
            r.mean_f_over_e,
            r.stddev_f_over_e,
            r.theoretical_alpha,
        );
    }
    out
}

/// Whitespace-separated series for gnuplot: `n mean_alpha stddev_alpha
/// theoretical_alpha`.
pub fn summary_to_gnuplot(rows: &[SummaryRow]) -> String {
    let mut out = String::from("# n mean_alpha stddev_alpha theoretical_alpha\n");
    for r in rows {
        let _ = writeln!(out, "{} {} {} {}", r.n, r.mean_alpha, r.stddev_alpha, r.theoretical_alpha);
    }
    out
}

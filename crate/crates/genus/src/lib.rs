//! Orientable genus of graphs via rotation systems.
//!
//! The library is organized around a dart (half-edge) multigraph
//! representation. A rotation system assigns a cyclic order to the darts at
//! each vertex and determines a cellular embedding on an orientable surface;
//! tracing the orbits of `σ ∘ twin` yields the faces, and Euler's formula
//! gives the genus. On top of that sit an exact exhaustive search with
//! reflection symmetry pruning and incremental face tracing, Euler/Betti
//! bounds, a simulated-annealing heuristic, a seeded configuration-model
//! sampler for random d-regular multigraphs, a short-cycle census, and a
//! Monte Carlo experiment harness that writes deterministic CSV.
//!
//! See the `examples/` directory for one runnable example per capability and
//! the `genus` binary for the command-line interface.

pub mod anneal;
pub mod cycles;
pub mod experiment;
pub mod graph;
pub mod rng;
pub mod rotation;
pub mod sample;
pub mod search;
pub mod tracer;

pub use anneal::{heuristic_genus, AnnealConfig};
pub use cycles::{count_short_cycles, lemma1_bound, CycleCensus, Lemma1Bound};
pub use experiment::{check_eq_star, run_sweep, summarize, ExperimentRecord, SweepConfig};
pub use graph::DartGraph;
pub use rotation::{Embedding, RotationSystem};
pub use sample::{sample_batch, sample_regular, SampleConfig};
pub use search::{
    euler_lower_bound, exact_genus, max_genus_upper_bound, theoretical_alpha, GenusResult,
    SearchMode,
};

//! Seeded sampling of random d-regular multigraphs.
//!
//! The configuration model: each vertex owns `d` half-edge slots, a uniform
//! random perfect matching on the `d·n` slots produces the edges. The
//! matching is a Fisher–Yates shuffle of the slot array followed by pairing
//! consecutive entries, which is exactly uniform. Optional rejection to
//! simple and/or connected graphs.

use thiserror::Error;

use crate::graph::DartGraph;
use crate::rng::{stream_seed, Xoshiro256};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SampleError {
    #[error("invalid sample config: {0}")]
    InvalidConfig(String),
    #[error("no accepted sample within {attempts} attempts")]
    MaxRejectsExceeded { attempts: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    pub d: usize,
    pub n: usize,
    pub seed: u64,
    pub require_simple: bool,
    pub require_connected: bool,
    pub max_rejects: u64,
}

impl SampleConfig {
    pub fn new(d: usize, n: usize, seed: u64) -> Self {
        Self { d, n, seed, require_simple: true, require_connected: true, max_rejects: 10_000 }
    }

    pub fn validate(&self) -> Result<(), SampleError> {
        if self.d < 2 {
            return Err(SampleError::InvalidConfig(format!("d = {} but d >= 2 required", self.d)));
        }
        if !(self.d * self.n).is_multiple_of(2) {
            return Err(SampleError::InvalidConfig(format!(
                "d*n = {} is odd; no {}-regular graph on {} vertices exists",
                self.d * self.n,
                self.d,
                self.n
            )));
        }
        if self.n == 0 {
            return Err(SampleError::InvalidConfig("n = 0".into()));
        }
        if self.require_simple && self.n < (self.d + 1).max(3) {
            return Err(SampleError::InvalidConfig(format!(
                "a simple {}-regular graph needs n >= {}",
                self.d,
                (self.d + 1).max(3)
            )));
        }
        Ok(())
    }
}

fn one_matching(d: usize, n: usize, rng: &mut Xoshiro256) -> DartGraph {
    // Slot j belongs to vertex j / d.
    let mut slots: Vec<usize> = (0..d * n).collect();
    rng.shuffle(&mut slots);
    let edges: Vec<(usize, usize)> =
        slots.chunks_exact(2).map(|pair| (pair[0] / d, pair[1] / d)).collect();
    DartGraph::from_edges(n, &edges).expect("matching endpoints are in range")
}

/// Draws one d-regular multigraph. Deterministic for a fixed config.
pub fn sample_regular(cfg: &SampleConfig) -> Result<DartGraph, SampleError> {
    cfg.validate()?;
    let mut rng = Xoshiro256::new(cfg.seed);
    for _ in 0..=cfg.max_rejects {
        let g = one_matching(cfg.d, cfg.n, &mut rng);
        if cfg.require_simple && !g.is_simple() {
            continue;
        }
        if cfg.require_connected && !g.is_connected() {
            continue;
        }
        return Ok(g);
    }
    Err(SampleError::MaxRejectsExceeded { attempts: cfg.max_rejects + 1 })
}

/// Draws `k` independent samples. Sample `i` uses the derived seed
/// `mix64(cfg.seed ^ i)`, so it is identical whether batched or drawn alone.
pub fn sample_batch(cfg: &SampleConfig, k: usize) -> Result<Vec<DartGraph>, SampleError> {
    (0..k)
        .map(|i| {
            let mut sub = *cfg;
            sub.seed = stream_seed(cfg.seed, i as u64);
            sample_regular(&sub)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_two_regular_is_one_cycle() {
        let mut cfg = SampleConfig::new(2, 5, 99);
        cfg.require_simple = false;
        for seed in 0..20 {
            cfg.seed = seed;
            let g = sample_regular(&cfg).unwrap();
            assert!(g.is_connected());
            assert!(g.degrees().iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn simple_cubic_on_four_vertices_is_k4() {
        let cfg = SampleConfig::new(3, 4, 0);
        let g = sample_regular(&cfg).unwrap();
        assert!(g.is_simple());
        assert!(g.degrees().iter().all(|&d| d == 3));
        // The unique simple 3-regular graph on 4 vertices.
        for u in 0..4 {
            for v in (u + 1)..4 {
                let count = g.edges().filter(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)).count();
                assert_eq!(count, 1, "edge {u}-{v}");
            }
        }
    }

    #[test]
    fn fixed_seed_reproduces() {
        let cfg = SampleConfig::new(3, 10, 42);
        let a = sample_regular(&cfg).unwrap();
        let b = sample_regular(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn golden_sample_is_pinned_across_platforms() {
        // Frozen from the first run of this sampler; any change to the RNG,
        // the shuffle, or the pairing order breaks reproducibility.
        let g = sample_regular(&SampleConfig::new(3, 10, 42)).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        assert_eq!(
            edges,
            vec![
                (3, 9),
                (6, 2),
                (3, 1),
                (0, 8),
                (6, 7),
                (2, 5),
                (5, 1),
                (1, 9),
                (0, 9),
                (8, 6),
                (4, 2),
                (5, 0),
                (8, 7),
                (3, 4),
                (7, 4)
            ]
        );
    }

    #[test]
    fn batch_matches_individual_draws() {
        let cfg = SampleConfig::new(3, 8, 7);
        let batch = sample_batch(&cfg, 3).unwrap();
        for (i, g) in batch.iter().enumerate() {
            let mut sub = cfg;
            sub.seed = stream_seed(cfg.seed, i as u64);
            assert_eq!(*g, sample_regular(&sub).unwrap());
        }
    }

    #[test]
    fn regularity_with_loops_counting_twice() {
        let mut cfg = SampleConfig::new(3, 20, 5);
        cfg.require_simple = false;
        cfg.require_connected = false;
        for seed in 0..20 {
            cfg.seed = seed;
            let g = sample_regular(&cfg).unwrap();
            assert!(g.degrees().iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn defect_rate_matches_configuration_model() {
        // Loops tend to Poisson((d-1)/2) and parallel pairs to
        // Poisson((d-1)^2/4), so the mean defect count for d = 3 is 2.
        let mut cfg = SampleConfig::new(3, 100, 12345);
        cfg.require_simple = false;
        cfg.require_connected = false;
        let graphs = sample_batch(&cfg, 50).unwrap();
        let mut defects = 0u64;
        for g in &graphs {
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (u, v) in g.edges() {
                if u == v {
                    defects += 1;
                } else {
                    pairs.push((u.min(v), u.max(v)));
                }
            }
            pairs.sort_unstable();
            let mut i = 0;
            while i < pairs.len() {
                let mut j = i + 1;
                while j < pairs.len() && pairs[j] == pairs[i] {
                    j += 1;
                }
                let k = (j - i) as u64;
                defects += k * (k - 1) / 2;
                i = j;
            }
        }
        let mean = defects as f64 / graphs.len() as f64;
        assert!((1.4..=2.7).contains(&mean), "mean defects {mean} far from 2");
    }

    #[test]
    fn invalid_configs_are_rejected() {
        assert!(SampleConfig::new(3, 5, 0).validate().is_err()); // odd d*n
        assert!(SampleConfig::new(1, 4, 0).validate().is_err()); // d < 2
        assert!(SampleConfig::new(3, 3, 0).validate().is_err()); // simple needs n >= 4
        let mut loose = SampleConfig::new(3, 3, 0);
        loose.require_simple = false;
        assert!(loose.validate().is_err()); // still odd d*n
    }

    #[test]
    fn max_rejects_is_enforced() {
        // A simple 2-regular graph on 3 vertices is a triangle; requiring
        // simple with max_rejects 0 can fail, but an impossible ask is
        // cleaner: simple 2-regular on n=4 with 0 retries may still succeed,
        // so force failure with an unsatisfiable connectivity demand.
        let mut cfg = SampleConfig::new(2, 200, 1);
        cfg.require_simple = true;
        cfg.require_connected = true;
        cfg.max_rejects = 0;
        // A single shuffle almost surely yields a disconnected or non-simple
        // 2-regular graph on 200 vertices.
        assert!(matches!(
            sample_regular(&cfg),
            Err(SampleError::MaxRejectsExceeded { .. })
        ));
    }
}

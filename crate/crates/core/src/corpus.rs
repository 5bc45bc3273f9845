//! Seeded random graph corpora with rejection sampling against structural
//! constraints. Every graph draws from its own counter-derived stream, so a
//! corpus is a pure function of (spec, seed) no matter how it is traversed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeSpec {
    /// Uniform edge count in `lo..=hi` (clamped to the possible maximum).
    CountRange { lo: usize, hi: usize },
    /// Each pair becomes an edge independently with this probability.
    Probability(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    Connected,
    MinDegree(usize),
    TriangleFree,
    Planar,
    NotStar,
    NoIsolated,
}

impl Constraint {
    pub fn satisfied_by(&self, g: &Graph) -> bool {
        match *self {
            Constraint::Connected => g.is_connected(),
            Constraint::MinDegree(k) => g.min_degree().is_some_and(|d| d >= k),
            Constraint::TriangleFree => !g.has_triangle(),
            Constraint::Planar => g.is_planar(),
            Constraint::NotStar => !g.is_star(),
            Constraint::NoIsolated => g.is_isolate_free(),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Constraint::Connected => "connected".into(),
            Constraint::MinDegree(k) => format!("min-degree>={k}"),
            Constraint::TriangleFree => "triangle-free".into(),
            Constraint::Planar => "planar".into(),
            Constraint::NotStar => "not-star".into(),
            Constraint::NoIsolated => "no-isolated".into(),
        }
    }
}

impl std::str::FromStr for Constraint {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("min-degree=") {
            let k = rest
                .parse()
                .map_err(|_| format!("bad min-degree value `{rest}`"))?;
            return Ok(Constraint::MinDegree(k));
        }
        match s {
            "connected" => Ok(Constraint::Connected),
            "triangle-free" => Ok(Constraint::TriangleFree),
            "planar" => Ok(Constraint::Planar),
            "not-star" => Ok(Constraint::NotStar),
            "no-isolated" => Ok(Constraint::NoIsolated),
            other => Err(format!(
                "unknown constraint `{other}` (connected, min-degree=K, triangle-free, planar, not-star, no-isolated)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSpec {
    pub count: usize,
    /// Inclusive vertex-count range.
    pub n_range: (usize, usize),
    pub edges: EdgeSpec,
    pub constraints: Vec<Constraint>,
    pub seed: u64,
    /// Rejection-sampling limit per graph.
    pub max_attempts: u64,
}

pub const DEFAULT_MAX_ATTEMPTS: u64 = 100_000;

impl CorpusSpec {
    pub fn new(count: usize, n_range: (usize, usize), edges: EdgeSpec, seed: u64) -> Self {
        CorpusSpec {
            count,
            n_range,
            edges,
            constraints: Vec::new(),
            seed,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }

    pub fn with_constraints(mut self, constraints: &[Constraint]) -> Self {
        self.constraints = constraints.to_vec();
        self
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CorpusError {
    #[error("invalid corpus spec: {reason}")]
    InvalidSpec { reason: String },
    #[error(
        "graph {index}: no graph satisfied the constraints after {attempts} attempts \
         (most violated: {most_violated}, {failures} failures)"
    )]
    MaxAttempts {
        index: usize,
        attempts: u64,
        most_violated: String,
        failures: u64,
    },
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

fn validate(spec: &CorpusSpec) -> Result<(), CorpusError> {
    let err = |reason: String| Err(CorpusError::InvalidSpec { reason });
    let (lo, hi) = spec.n_range;
    if lo > hi {
        return err(format!("empty vertex range {lo}..={hi}"));
    }
    if hi > MAX_VERTICES {
        return err(format!("vertex range exceeds the maximum {MAX_VERTICES}"));
    }
    if spec.max_attempts == 0 {
        return err("max_attempts must be positive".into());
    }
    match spec.edges {
        EdgeSpec::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return err(format!("edge probability {p} outside [0, 1]"));
            }
        }
        EdgeSpec::CountRange { lo: mlo, hi: mhi } => {
            if mlo > mhi {
                return err(format!("empty edge range {mlo}..={mhi}"));
            }
            let max_possible = hi * (hi - 1) / 2;
            if mlo > max_possible {
                return err(format!(
                    "edge count {mlo} infeasible: n <= {hi} allows at most {max_possible} edges"
                ));
            }
        }
    }
    Ok(())
}

fn sample_graph(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let (lo, hi) = spec.n_range;
    let n = rng.random_range(lo..=hi);
    let max_edges = n * n.saturating_sub(1) / 2;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(max_edges);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let edges: Vec<(usize, usize)> = match spec.edges {
        EdgeSpec::Probability(p) => pairs
            .into_iter()
            .filter(|_| rng.random_bool(p))
            .collect(),
        EdgeSpec::CountRange { lo: mlo, hi: mhi } => {
            if mlo > max_edges {
                return None; // infeasible for this n; counts as a failed attempt
            }
            let m = rng.random_range(mlo..=mhi.min(max_edges));
            for i in 0..m {
                let j = rng.random_range(i..pairs.len());
                pairs.swap(i, j);
            }
            pairs.truncate(m);
            pairs
        }
    };
    Some(Graph::new(n, &edges).expect("sampled pairs are simple"))
}

/// Draws `spec.count` graphs, each satisfying every constraint.
/// Deterministic in (spec, seed).
pub fn random_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>, CorpusError> {
    validate(spec)?;
    let mut out = Vec::with_capacity(spec.count);
    for index in 0..spec.count {
        let mut rng =
            ChaCha8Rng::seed_from_u64(splitmix64(spec.seed ^ (index as u64).wrapping_mul(0xA076_1D64_78BD_642F)));
        let mut failures: Vec<(String, u64)> = spec
            .constraints
            .iter()
            .map(|c| (c.name(), 0u64))
            .collect();
        let mut infeasible = 0u64;
        let mut found = None;
        for _ in 0..spec.max_attempts {
            let Some(g) = sample_graph(spec, &mut rng) else {
                infeasible += 1;
                continue;
            };
            match spec
                .constraints
                .iter()
                .position(|c| !c.satisfied_by(&g))
            {
                None => {
                    found = Some(g);
                    break;
                }
                Some(i) => failures[i].1 += 1,
            }
        }
        match found {
            Some(g) => out.push(g),
            None => {
                failures.push(("edge-count-feasible".into(), infeasible));
                let (most_violated, worst) = failures
                    .into_iter()
                    .max_by_key(|&(_, c)| c)
                    .unwrap_or(("none".into(), 0));
                return Err(CorpusError::MaxAttempts {
                    index,
                    attempts: spec.max_attempts,
                    most_violated,
                    failures: worst,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probability_one_gives_complete_graphs() {
        let spec = CorpusSpec::new(5, (6, 6), EdgeSpec::Probability(1.0), 7)
            .with_constraints(&[Constraint::Connected]);
        let graphs = random_corpus(&spec).unwrap();
        assert_eq!(graphs.len(), 5);
        for g in graphs {
            assert_eq!(g, Graph::complete(6).unwrap());
        }
    }

    #[test]
    fn infeasible_edge_count_is_an_error() {
        let spec = CorpusSpec::new(1, (4, 4), EdgeSpec::CountRange { lo: 7, hi: 7 }, 1);
        assert_eq!(
            random_corpus(&spec),
            Err(CorpusError::InvalidSpec {
                reason: "edge count 7 infeasible: n <= 4 allows at most 6 edges".into()
            })
        );
    }

    #[test]
    fn deterministic_given_seed() {
        let spec = CorpusSpec::new(
            3,
            (5, 7),
            EdgeSpec::Probability(0.5),
            42,
        )
        .with_constraints(&[Constraint::Connected, Constraint::TriangleFree]);
        let a = random_corpus(&spec).unwrap();
        let b = random_corpus(&spec).unwrap();
        assert_eq!(a, b);
        let other_seed = CorpusSpec { seed: 43, ..spec };
        assert_ne!(random_corpus(&other_seed).unwrap(), a);
    }

    #[test]
    fn constraints_are_enforced() {
        let spec = CorpusSpec::new(
            10,
            (5, 9),
            EdgeSpec::CountRange { lo: 6, hi: 14 },
            123,
        )
        .with_constraints(&[Constraint::Connected, Constraint::MinDegree(2), Constraint::NotStar]);
        for g in random_corpus(&spec).unwrap() {
            assert!(g.is_connected());
            assert!(g.min_degree().unwrap() >= 2);
            assert!(!g.is_star());
        }
    }

    #[test]
    fn unsatisfiable_constraints_report_diagnostics() {
        // Triangle-free is impossible at probability 1 with n >= 3.
        let mut spec = CorpusSpec::new(1, (5, 5), EdgeSpec::Probability(1.0), 9)
            .with_constraints(&[Constraint::TriangleFree]);
        spec.max_attempts = 50;
        match random_corpus(&spec) {
            Err(CorpusError::MaxAttempts {
                most_violated,
                attempts: 50,
                ..
            }) => assert_eq!(most_violated, "triangle-free"),
            other => panic!("expected MaxAttempts, got {other:?}"),
        }
    }

    #[test]
    fn constraint_parsing() {
        assert_eq!("connected".parse(), Ok(Constraint::Connected));
        assert_eq!("min-degree=3".parse(), Ok(Constraint::MinDegree(3)));
        assert!("bogus".parse::<Constraint>().is_err());
    }
}

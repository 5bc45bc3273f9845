//! Bondage numbers: the fewest edge removals that strictly increase a
//! domination parameter, found by increasing-size edge-subset search.
//!
//! Each candidate subset re-solves the base parameter on the reduced graph,
//! capped at the intact value, since only "did it grow" matters. Outcomes
//! are exact, proven infinite (the whole subset lattice was exhausted), or
//! an honest `UnknownAtLeast` when a cap or budget cut the search short.

use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::{self, ParameterKind, SolveError};
use crate::subsets::Combinations;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BondageKind {
    /// b_r: grow the restrained domination number.
    Restrained,
    /// b_tr: grow the total restrained domination number; removals must not
    /// isolate a vertex.
    TotalRestrained,
    /// b_R: grow the Roman domination number.
    Roman,
}

impl BondageKind {
    pub const ALL: [BondageKind; 3] = [
        BondageKind::Restrained,
        BondageKind::TotalRestrained,
        BondageKind::Roman,
    ];

    pub fn base_parameter(self) -> ParameterKind {
        match self {
            BondageKind::Restrained => ParameterKind::Restrained,
            BondageKind::TotalRestrained => ParameterKind::TotalRestrained,
            BondageKind::Roman => ParameterKind::Roman,
        }
    }

    /// True when removals that isolate a vertex are inadmissible.
    pub fn forbids_isolation(self) -> bool {
        matches!(self, BondageKind::TotalRestrained)
    }

    pub fn name(self) -> &'static str {
        match self {
            BondageKind::Restrained => "restrained",
            BondageKind::TotalRestrained => "total-restrained",
            BondageKind::Roman => "roman",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BondageKind::Restrained => "b_r",
            BondageKind::TotalRestrained => "b_tr",
            BondageKind::Roman => "b_R",
        }
    }
}

impl std::str::FromStr for BondageKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BondageKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown bondage kind `{s}`"))
    }
}

impl std::fmt::Display for BondageKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Search limits. `None` fields take the defaults: cap `min(m, 8)`,
/// budget 10^7 admissible subsets evaluated.
#[derive(Debug, Clone, Copy, Default)]
pub struct BondageConfig {
    pub cap: Option<usize>,
    pub budget: Option<u64>,
}

pub const DEFAULT_BONDAGE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_BONDAGE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BondageOutcome {
    /// Smallest admissible edge set whose removal grows the parameter.
    Exact {
        value: usize,
        witness: Vec<(usize, usize)>,
    },
    /// Every admissible subset of every size was checked without a growth.
    Infinite,
    /// Search stopped early; no admissible subset smaller than `size` grows
    /// the parameter.
    UnknownAtLeast { size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondageResult {
    pub kind: BondageKind,
    pub base_value: usize,
    pub outcome: BondageOutcome,
    pub subsets_evaluated: u64,
}

/// Computes the bondage number of `kind` on `g` within `config`'s limits.
///
/// The budget counts admissible edge subsets evaluated (subsets skipped by
/// the isolation constraint cost nothing); the solve of the intact graph
/// gets the same allowance separately, and exceeding it is an error.
pub fn bondage(g: &Graph, kind: BondageKind, config: BondageConfig) -> Result<BondageResult, SolveError> {
    let base = invariants::solve_with_budget(g, kind.base_parameter(), config.budget)?;
    let base_value = base.value;

    let edges = g.edges();
    let m = edges.len();
    let cap = config.cap.unwrap_or_else(|| m.min(DEFAULT_BONDAGE_CAP)).min(m);
    let budget = config.budget.unwrap_or(DEFAULT_BONDAGE_BUDGET);
    let mut evaluated: u64 = 0;

    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();

    for k in 1..=cap {
        for subset in Combinations::new(m, k) {
            let chosen: Vec<(usize, usize)> = crate::graph::bits(subset)
                .map(|i| edges[i])
                .collect();
            if kind.forbids_isolation() {
                let mut removed_at = vec![0usize; g.vertex_count()];
                for &(u, v) in &chosen {
                    removed_at[u] += 1;
                    removed_at[v] += 1;
                }
                let isolates = degrees
                    .iter()
                    .zip(&removed_at)
                    .any(|(&d, &r)| d > 0 && d == r);
                if isolates {
                    continue; // inadmissible, skipped without cost
                }
            }
            if evaluated == budget {
                return Ok(BondageResult {
                    kind,
                    base_value,
                    outcome: BondageOutcome::UnknownAtLeast { size: k },
                    subsets_evaluated: evaluated,
                });
            }
            evaluated += 1;
            let reduced = g.remove_edges(&chosen).expect("subset of existing edges");
            let grew = !invariants::exists_within(&reduced, kind.base_parameter(), base_value);
            if grew {
                return Ok(BondageResult {
                    kind,
                    base_value,
                    outcome: BondageOutcome::Exact {
                        value: k,
                        witness: chosen,
                    },
                    subsets_evaluated: evaluated,
                });
            }
        }
    }

    let outcome = if cap == m {
        BondageOutcome::Infinite
    } else {
        BondageOutcome::UnknownAtLeast { size: cap + 1 }
    };
    Ok(BondageResult {
        kind,
        base_value,
        outcome,
        subsets_evaluated: evaluated,
    })
}

/// One entry of [`check_bondage_upper_bounds`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondageBound {
    pub name: &'static str,
    pub applicable: bool,
    pub reason: Option<String>,
    pub value: Option<usize>,
}

/// Evaluates the a-priori upper bounds known for `kind` on `g`:
/// minimum edge-degree for the restrained kind (needs δ ≥ 2), and
/// 3-path degree sums for the total restrained and Roman kinds.
pub fn check_bondage_upper_bounds(g: &Graph, kind: BondageKind) -> Vec<BondageBound> {
    match kind {
        BondageKind::Restrained => {
            let applicable = g.min_degree().is_some_and(|d| d >= 2);
            vec![BondageBound {
                name: "min-edge-degree",
                applicable,
                reason: (!applicable).then(|| "requires minimum degree at least 2".into()),
                value: applicable.then(|| g.min_edge_degree().expect("δ ≥ 2 implies edges")),
            }]
        }
        BondageKind::TotalRestrained => {
            // Path x-y-z with deg(x), deg(z) > 1 leaving no isolated vertex
            // behind; bound deg(x)+deg(y)+deg(z)-4. Needs order >= 5 and
            // connectivity.
            if g.vertex_count() < 5 || !g.is_connected() {
                return vec![BondageBound {
                    name: "path-degree-sum",
                    applicable: false,
                    reason: Some("requires a connected graph on at least 5 vertices".into()),
                    value: None,
                }];
            }
            let full = g.vertex_mask();
            let qualifies = |x: usize, y: usize, z: usize| {
                if g.degree(x) <= 1 || g.degree(z) <= 1 {
                    return false;
                }
                let rest = full & !(1u64 << x) & !(1u64 << y) & !(1u64 << z);
                crate::graph::bits(rest).all(|v| g.neighbor_mask(v) & rest != 0)
            };
            match g.min_path3_degree_sum(qualifies) {
                Some((_, sum)) => vec![BondageBound {
                    name: "path-degree-sum",
                    applicable: true,
                    reason: None,
                    value: Some(sum - 4),
                }],
                None => vec![BondageBound {
                    name: "path-degree-sum",
                    applicable: false,
                    reason: Some("no qualifying 3-path".into()),
                    value: None,
                }],
            }
        }
        BondageKind::Roman => match g.min_path3_degree_sum(|_, _, _| true) {
            Some((_, sum)) => vec![BondageBound {
                name: "path-degree-sum",
                applicable: true,
                reason: None,
                value: Some(sum - 3),
            }],
            None => vec![BondageBound {
                name: "path-degree-sum",
                applicable: false,
                reason: Some("graph has no 3-path".into()),
                value: None,
            }],
        },
    }
}

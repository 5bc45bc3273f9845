//! Exact computation of domination-type parameters and the restricted edge
//! connectivity, with certificates.
//!
//! All solvers enumerate candidate witnesses in increasing cardinality,
//! lexicographic within a cardinality, so the first valid witness is both a
//! minimum and the canonical one. No heuristics: a result is exact or it is
//! an explicit not-applicable / budget-exceeded marker.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, full_mask, Graph};
use crate::subsets::{mask_to_indices, Combinations};

/// The eight parameters the solver knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParameterKind {
    /// γ: ordinary domination number.
    Domination,
    /// γ_t: every vertex (members included) has a neighbour in the set.
    Total,
    /// γ_c: dominating set inducing a connected subgraph.
    Connected,
    /// γ_w: set whose incident-edge spanning subgraph is connected.
    WeaklyConnected,
    /// γ_r: dominating set whose complement induces no isolated vertex.
    Restrained,
    /// γ_tr: total dominating set whose complement induces no isolated vertex.
    TotalRestrained,
    /// γ_R: minimum weight of a Roman dominating function.
    Roman,
    /// λ′: minimum restricted edge-cut size.
    RestrictedEdgeConn,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 8] = [
        ParameterKind::Domination,
        ParameterKind::Total,
        ParameterKind::Connected,
        ParameterKind::WeaklyConnected,
        ParameterKind::Restrained,
        ParameterKind::TotalRestrained,
        ParameterKind::Roman,
        ParameterKind::RestrictedEdgeConn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::Domination => "domination",
            ParameterKind::Total => "total",
            ParameterKind::Connected => "connected",
            ParameterKind::WeaklyConnected => "weakly-connected",
            ParameterKind::Restrained => "restrained",
            ParameterKind::TotalRestrained => "total-restrained",
            ParameterKind::Roman => "roman",
            ParameterKind::RestrictedEdgeConn => "restricted-edge-connectivity",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ParameterKind::Domination => "gamma",
            ParameterKind::Total => "gamma_t",
            ParameterKind::Connected => "gamma_c",
            ParameterKind::WeaklyConnected => "gamma_w",
            ParameterKind::Restrained => "gamma_r",
            ParameterKind::TotalRestrained => "gamma_tr",
            ParameterKind::Roman => "gamma_R",
            ParameterKind::RestrictedEdgeConn => "lambda_prime",
        }
    }
}

impl std::str::FromStr for ParameterKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParameterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown parameter kind `{s}`"))
    }
}

impl std::fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Witness shapes: a vertex set, an edge set, or a {0,1,2} labelling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
    Labelling(Vec<u8>),
}

/// How much work the search did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub subsets_examined: u64,
    pub cardinality_reached: usize,
}

/// An exact parameter value together with a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterCertificate {
    pub kind: ParameterKind,
    pub value: usize,
    pub witness: Witness,
    pub stats: SearchStats,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("{kind} not applicable: {reason}")]
    NotApplicable { kind: ParameterKind, reason: String },
    #[error("{kind} search exceeded its budget after {examined} subsets (cardinality {cardinality_reached})")]
    BudgetExceeded {
        kind: ParameterKind,
        examined: u64,
        cardinality_reached: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("{kind} expects a {expected} witness")]
    Shape {
        kind: ParameterKind,
        expected: &'static str,
    },
    #[error("witness vertex {v} out of range")]
    VertexOutOfRange { v: usize },
    #[error("witness edge {u}-{v} not in the graph")]
    EdgeNotInGraph { u: usize, v: usize },
    #[error("labelling has {got} entries, graph has {want} vertices")]
    LabellingLength { got: usize, want: usize },
    #[error("label {label} at vertex {v} outside {{0,1,2}}")]
    LabelOutOfRange { v: usize, label: u8 },
}

// ---------------------------------------------------------------------------
// Validity predicates on bitmasks
// ---------------------------------------------------------------------------

pub(crate) fn is_dominating(g: &Graph, s: u64) -> bool {
    bits(g.vertex_mask() & !s).all(|v| g.neighbor_mask(v) & s != 0)
}

pub(crate) fn is_total_dominating(g: &Graph, s: u64) -> bool {
    bits(g.vertex_mask()).all(|v| g.neighbor_mask(v) & s != 0)
}

pub(crate) fn is_connected_dominating(g: &Graph, s: u64) -> bool {
    if !is_dominating(g, s) {
        return false;
    }
    if s == 0 {
        return true; // only reachable when the graph itself is empty
    }
    let start = s.trailing_zeros() as usize;
    g.reachable(start, s) == s
}

/// The spanning subgraph keeping exactly the edges with an endpoint in `s`
/// must be connected; the empty set never qualifies.
pub(crate) fn is_weakly_connected_dominating(g: &Graph, s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let full = g.vertex_mask();
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            if s & (1 << v) != 0 {
                next |= g.neighbor_mask(v);
            } else {
                next |= g.neighbor_mask(v) & s;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

pub(crate) fn is_restrained_dominating(g: &Graph, s: u64) -> bool {
    if !is_dominating(g, s) {
        return false;
    }
    let outside = g.vertex_mask() & !s;
    bits(outside).all(|v| g.neighbor_mask(v) & outside != 0)
}

pub(crate) fn is_total_restrained_dominating(g: &Graph, s: u64) -> bool {
    if !is_total_dominating(g, s) {
        return false;
    }
    let outside = g.vertex_mask() & !s;
    bits(outside).all(|v| g.neighbor_mask(v) & outside != 0)
}

fn is_roman_dominating(g: &Graph, labels: &[u8]) -> bool {
    let mut twos = 0u64;
    for (v, &l) in labels.iter().enumerate() {
        if l == 2 {
            twos |= 1 << v;
        }
    }
    labels
        .iter()
        .enumerate()
        .all(|(v, &l)| l != 0 || g.neighbor_mask(v) & twos != 0)
}

/// Sum of the labels; validity is not checked here.
pub fn roman_weight(g: &Graph, labels: &[u8]) -> Result<usize, WitnessError> {
    check_labelling(g, labels)?;
    Ok(labels.iter().map(|&l| l as usize).sum())
}

fn check_labelling(g: &Graph, labels: &[u8]) -> Result<(), WitnessError> {
    if labels.len() != g.vertex_count() {
        return Err(WitnessError::LabellingLength {
            got: labels.len(),
            want: g.vertex_count(),
        });
    }
    for (v, &l) in labels.iter().enumerate() {
        if l > 2 {
            return Err(WitnessError::LabelOutOfRange { v, label: l });
        }
    }
    Ok(())
}

fn vertex_set_mask(g: &Graph, vs: &[usize]) -> Result<u64, WitnessError> {
    let mut mask = 0u64;
    for &v in vs {
        if v >= g.vertex_count() {
            return Err(WitnessError::VertexOutOfRange { v });
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// Evaluates the definitional predicate of `kind` on `witness`.
pub fn is_valid(g: &Graph, kind: ParameterKind, witness: &Witness) -> Result<bool, WitnessError> {
    match (kind, witness) {
        (ParameterKind::Roman, Witness::Labelling(labels)) => {
            check_labelling(g, labels)?;
            Ok(is_roman_dominating(g, labels))
        }
        (ParameterKind::RestrictedEdgeConn, Witness::Edges(edges)) => {
            // Direct definition: removal disconnects and leaves no isolated vertex.
            for &(u, v) in edges {
                if !g.has_edge(u, v) {
                    return Err(WitnessError::EdgeNotInGraph { u, v });
                }
            }
            let h = g.remove_edges(edges).expect("edges checked above");
            Ok(!h.is_connected() && h.is_isolate_free())
        }
        (kind, Witness::Vertices(vs)) if set_predicate(kind).is_some() => {
            let mask = vertex_set_mask(g, vs)?;
            Ok(set_predicate(kind).unwrap()(g, mask))
        }
        (kind, _) => Err(WitnessError::Shape {
            kind,
            expected: match kind {
                ParameterKind::Roman => "labelling",
                ParameterKind::RestrictedEdgeConn => "edge-set",
                _ => "vertex-set",
            },
        }),
    }
}

fn set_predicate(kind: ParameterKind) -> Option<fn(&Graph, u64) -> bool> {
    match kind {
        ParameterKind::Domination => Some(is_dominating),
        ParameterKind::Total => Some(is_total_dominating),
        ParameterKind::Connected => Some(is_connected_dominating),
        ParameterKind::WeaklyConnected => Some(is_weakly_connected_dominating),
        ParameterKind::Restrained => Some(is_restrained_dominating),
        ParameterKind::TotalRestrained => Some(is_total_restrained_dominating),
        _ => None,
    }
}

/// Checks `kind`'s applicability predicate; `Err` carries the reason.
pub fn applicability(g: &Graph, kind: ParameterKind) -> Result<(), String> {
    match kind {
        ParameterKind::Domination | ParameterKind::Restrained | ParameterKind::Roman => Ok(()),
        ParameterKind::Total | ParameterKind::TotalRestrained => {
            if g.is_isolate_free() {
                Ok(())
            } else {
                Err("graph has an isolated vertex".into())
            }
        }
        ParameterKind::Connected => {
            if g.is_connected() {
                Ok(())
            } else {
                Err("graph is disconnected".into())
            }
        }
        ParameterKind::WeaklyConnected => {
            if g.vertex_count() == 0 {
                Err("empty graph has no non-empty vertex subsets".into())
            } else if g.is_connected() {
                Ok(())
            } else {
                Err("graph is disconnected".into())
            }
        }
        ParameterKind::RestrictedEdgeConn => {
            if g.vertex_count() < 2 {
                Err("graph is trivial".into())
            } else if !g.is_connected() {
                Err("graph is disconnected".into())
            } else {
                Ok(())
            }
        }
    }
}

struct Budget {
    remaining: Option<u64>,
    examined: u64,
}

impl Budget {
    fn new(limit: Option<u64>) -> Self {
        Budget {
            remaining: limit,
            examined: 0,
        }
    }

    /// Accounts one candidate; false when the budget is spent.
    fn spend(&mut self) -> bool {
        if let Some(r) = &mut self.remaining {
            if *r == 0 {
                return false;
            }
            *r -= 1;
        }
        self.examined += 1;
        true
    }
}

/// Solves `kind` exactly, unbudgeted.
pub fn solve(g: &Graph, kind: ParameterKind) -> Result<ParameterCertificate, SolveError> {
    solve_with_budget(g, kind, None)
}

/// Solves `kind` exactly; `budget` caps the number of candidate witnesses
/// examined. An exhausted budget is an explicit error, never a wrong value.
pub fn solve_with_budget(
    g: &Graph,
    kind: ParameterKind,
    budget: Option<u64>,
) -> Result<ParameterCertificate, SolveError> {
    applicability(g, kind).map_err(|reason| SolveError::NotApplicable { kind, reason })?;
    let mut budget = Budget::new(budget);
    match kind {
        ParameterKind::Roman => solve_roman(g, &mut budget),
        ParameterKind::RestrictedEdgeConn => solve_restricted_edge(g, &mut budget),
        _ => solve_set_kind(g, kind, &mut budget),
    }
}

fn solve_set_kind(
    g: &Graph,
    kind: ParameterKind,
    budget: &mut Budget,
) -> Result<ParameterCertificate, SolveError> {
    let n = g.vertex_count();
    let pred = set_predicate(kind).expect("set-valued kind");
    for k in 0..=n {
        for mask in Combinations::new(n, k) {
            if !budget.spend() {
                return Err(SolveError::BudgetExceeded {
                    kind,
                    examined: budget.examined,
                    cardinality_reached: k,
                });
            }
            if pred(g, mask) {
                return Ok(ParameterCertificate {
                    kind,
                    value: k,
                    witness: Witness::Vertices(mask_to_indices(mask)),
                    stats: SearchStats {
                        subsets_examined: budget.examined,
                        cardinality_reached: k,
                    },
                });
            }
        }
    }
    unreachable!("within applicability, the full vertex set is a valid witness")
}

fn closed_neighborhood(g: &Graph, s: u64) -> u64 {
    bits(s).fold(s, |acc, v| acc | g.neighbor_mask(v))
}

fn solve_roman(g: &Graph, budget: &mut Budget) -> Result<ParameterCertificate, SolveError> {
    let n = g.vertex_count();
    let mut best: Option<(usize, u64)> = None;
    let mut reached = 0;
    // γ_R = min over "label 2" sets V2 of 2|V2| + |V \ N[V2]|. Any V2 with
    // 2|V2| at or above the running minimum cannot improve it, so stopping
    // there proves optimality.
    for k in 0..=n {
        if let Some((value, _)) = best {
            if 2 * k >= value {
                break;
            }
        }
        reached = k;
        for v2 in Combinations::new(n, k) {
            if !budget.spend() {
                // An unfinished cardinality below the cutoff could still
                // improve the minimum; report exhaustion, never a guess.
                return Err(SolveError::BudgetExceeded {
                    kind: ParameterKind::Roman,
                    examined: budget.examined,
                    cardinality_reached: k,
                });
            }
            let covered = closed_neighborhood(g, v2);
            let value = 2 * k + (n - covered.count_ones() as usize);
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, v2));
            }
        }
    }
    let (value, v2) = best.expect("k = 0 always yields a candidate");
    let covered = closed_neighborhood(g, v2);
    let labels: Vec<u8> = (0..n)
        .map(|v| {
            if v2 & (1 << v) != 0 {
                2
            } else if covered & (1 << v) == 0 {
                1
            } else {
                0
            }
        })
        .collect();
    debug_assert!(is_roman_dominating(g, &labels));
    debug_assert_eq!(labels.iter().map(|&l| l as usize).sum::<usize>(), value);
    Ok(ParameterCertificate {
        kind: ParameterKind::Roman,
        value,
        witness: Witness::Labelling(labels),
        stats: SearchStats {
            subsets_examined: budget.examined,
            cardinality_reached: reached,
        },
    })
}

fn solve_restricted_edge(g: &Graph, budget: &mut Budget) -> Result<ParameterCertificate, SolveError> {
    let n = g.vertex_count();
    let kind = ParameterKind::RestrictedEdgeConn;
    let not_applicable = || SolveError::NotApplicable {
        kind,
        reason: "no restricted edge-cut exists".into(),
    };
    if n < 4 {
        return Err(not_applicable());
    }
    let full = full_mask(n);
    let mut best: Option<(usize, u64)> = None;
    // λ′ equals the minimum cut [X, X̄] over bipartitions with no isolated
    // vertex on either induced side; fixing vertex 0 in X visits each
    // bipartition once.
    for k in 2..=n - 2 {
        for sub in Combinations::new(n - 1, k - 1) {
            if !budget.spend() {
                return Err(SolveError::BudgetExceeded {
                    kind,
                    examined: budget.examined,
                    cardinality_reached: k,
                });
            }
            let x = 1 | (sub << 1);
            let xbar = full & !x;
            let sides_ok = bits(x).all(|v| g.neighbor_mask(v) & x != 0)
                && bits(xbar).all(|v| g.neighbor_mask(v) & xbar != 0);
            if !sides_ok {
                continue;
            }
            let cut: usize = bits(x)
                .map(|v| (g.neighbor_mask(v) & xbar).count_ones() as usize)
                .sum();
            if best.is_none_or(|(b, _)| cut < b) {
                best = Some((cut, x));
            }
        }
    }
    match best {
        None => Err(not_applicable()),
        Some((value, x)) => {
            let mut cut_edges: Vec<(usize, usize)> = Vec::new();
            for (u, v) in g.edges() {
                if (x & (1 << u) != 0) != (x & (1 << v) != 0) {
                    cut_edges.push((u, v));
                }
            }
            debug_assert_eq!(cut_edges.len(), value);
            Ok(ParameterCertificate {
                kind,
                value,
                witness: Witness::Edges(cut_edges),
                stats: SearchStats {
                    subsets_examined: budget.examined,
                    cardinality_reached: n - 2,
                },
            })
        }
    }
}

/// True iff `kind` admits a witness of value at most `cap` on `g`.
/// Used by the bondage search, which only needs "did the parameter grow".
pub(crate) fn exists_within(g: &Graph, kind: ParameterKind, cap: usize) -> bool {
    let n = g.vertex_count();
    match kind {
        ParameterKind::Roman => {
            let mut k = 0;
            while 2 * k <= cap && k <= n {
                for v2 in Combinations::new(n, k) {
                    let covered = closed_neighborhood(g, v2);
                    let value = 2 * k + (n - covered.count_ones() as usize);
                    if value <= cap {
                        return true;
                    }
                }
                k += 1;
            }
            false
        }
        ParameterKind::RestrictedEdgeConn => {
            unreachable!("bondage is not defined over λ′")
        }
        _ => {
            let pred = set_predicate(kind).expect("set-valued kind");
            for k in 0..=cap.min(n) {
                for mask in Combinations::new(n, k) {
                    if pred(g, mask) {
                        return true;
                    }
                }
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(g: &Graph, kind: ParameterKind) -> ParameterCertificate {
        solve(g, kind).unwrap()
    }

    #[test]
    fn is_valid_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(is_valid(&c6, ParameterKind::Total, &Witness::Vertices(vec![0, 1, 3, 4])).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert!(is_valid(&k4, ParameterKind::Roman, &Witness::Labelling(vec![2, 0, 0, 0])).unwrap());
        assert_eq!(roman_weight(&k4, &[2, 0, 0, 0]).unwrap(), 2);
        let p4 = Graph::path(4).unwrap();
        assert!(is_valid(&p4, ParameterKind::Restrained, &Witness::Vertices(vec![0, 3])).unwrap());
        // Shape mismatch is an input error, not `false`.
        assert!(matches!(
            is_valid(&p4, ParameterKind::Roman, &Witness::Vertices(vec![0])),
            Err(WitnessError::Shape { .. })
        ));
        assert!(matches!(
            is_valid(&p4, ParameterKind::Total, &Witness::Vertices(vec![9])),
            Err(WitnessError::VertexOutOfRange { v: 9 })
        ));
    }

    #[test]
    fn roman_weight_examples() {
        let g = Graph::empty(5).unwrap();
        assert_eq!(roman_weight(&g, &[1, 1, 1, 1, 1]).unwrap(), 5);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(roman_weight(&e3, &[0, 0, 0]).unwrap(), 0);
        assert!(matches!(
            roman_weight(&e3, &[0, 3, 0]),
            Err(WitnessError::LabelOutOfRange { v: 1, label: 3 })
        ));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(cert(&Graph::complete(5).unwrap(), ParameterKind::Total).value, 2);
        assert_eq!(cert(&Graph::cycle(6).unwrap(), ParameterKind::Total).value, 4);
        assert_eq!(cert(&Graph::path(4).unwrap(), ParameterKind::Connected).value, 2);
        assert_eq!(
            cert(&Graph::path(4).unwrap(), ParameterKind::Connected).witness,
            Witness::Vertices(vec![1, 2])
        );
        assert_eq!(
            cert(&Graph::cycle(5).unwrap(), ParameterKind::WeaklyConnected).value,
            2
        );
        assert_eq!(
            cert(&Graph::complete(4).unwrap(), ParameterKind::RestrictedEdgeConn).value,
            4
        );
        assert_eq!(cert(&Graph::cycle(5).unwrap(), ParameterKind::Roman).value, 4);
        assert_eq!(
            cert(&Graph::complete(4).unwrap(), ParameterKind::TotalRestrained).value,
            2
        );
    }

    #[test]
    fn applicability_errors() {
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            solve(&disconnected, ParameterKind::Connected),
            Err(SolveError::NotApplicable { .. })
        ));
        let star = Graph::star(4).unwrap();
        assert!(matches!(
            solve(&star, ParameterKind::RestrictedEdgeConn),
            Err(SolveError::NotApplicable { .. })
        ));
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(
            solve(&k3, ParameterKind::RestrictedEdgeConn),
            Err(SolveError::NotApplicable { .. })
        ));
        let isolated = Graph::new(2, &[]).unwrap();
        assert!(matches!(
            solve(&isolated, ParameterKind::Total),
            Err(SolveError::NotApplicable { .. })
        ));
    }

    #[test]
    fn budget_is_honest() {
        let g = Graph::cycle(6).unwrap();
        let err = solve_with_budget(&g, ParameterKind::Total, Some(3)).unwrap_err();
        assert!(matches!(err, SolveError::BudgetExceeded { examined: 3, .. }));
    }

    #[test]
    fn certificates_revalidate() {
        for g in [
            Graph::cycle(7).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
        ] {
            for kind in ParameterKind::ALL {
                if let Ok(c) = solve(&g, kind) {
                    assert!(is_valid(&g, kind, &c.witness).unwrap(), "{kind} on {g:?}");
                    if kind == ParameterKind::Roman {
                        if let Witness::Labelling(l) = &c.witness {
                            assert_eq!(roman_weight(&g, l).unwrap(), c.value);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_graph_conventions() {
        let single = Graph::empty(1).unwrap();
        assert_eq!(cert(&single, ParameterKind::Domination).value, 1);
        assert_eq!(cert(&single, ParameterKind::Connected).value, 1);
        assert_eq!(cert(&single, ParameterKind::WeaklyConnected).value, 1);
        assert_eq!(cert(&single, ParameterKind::Roman).value, 1);

        let empty = Graph::empty(0).unwrap();
        assert_eq!(cert(&empty, ParameterKind::Domination).value, 0);
        assert!(matches!(
            solve(&empty, ParameterKind::WeaklyConnected),
            Err(SolveError::NotApplicable { .. })
        ));
    }
}

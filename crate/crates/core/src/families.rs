//! Deterministic generators for the three extremal constructions that attain
//! equality in the Euler-characteristic bounds: a clique attached to a
//! perfect-matching layer (P1), to an independent set (P2), or to the two
//! endpoints of a path (P3). Each record carries the predicted order, size,
//! parameter value and embedding surfaces, and can be re-validated.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{self, ParameterKind, SolveError};
use crate::surface::{theorem_bound, BoundContext, SurfaceSpec, Sourced, TheoremId, VerdictStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    P1,
    P2,
    P3,
}

impl FamilyKind {
    pub fn expected_parameter_kind(self) -> ParameterKind {
        match self {
            FamilyKind::P1 => ParameterKind::Total,
            FamilyKind::P2 => ParameterKind::WeaklyConnected,
            FamilyKind::P3 => ParameterKind::Connected,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::P1 => "P1",
            FamilyKind::P2 => "P2",
            FamilyKind::P3 => "P3",
        }
    }
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "P1" => Ok(FamilyKind::P1),
            "P2" => Ok(FamilyKind::P2),
            "P3" => Ok(FamilyKind::P3),
            other => Err(format!("unknown family `{other}` (expected P1, P2 or P3)")),
        }
    }
}

/// How clique vertices pick their outer neighbour.
///
/// `Balanced` distributes them round-robin over the outer vertices (for P3,
/// alternating between the two path endpoints, starting with the first).
/// `Explicit` gives the outer index per clique vertex: `0..d` for P1/P2,
/// `{0, 1}` (first/last endpoint) for P3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttachmentPolicy {
    Balanced,
    Explicit(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: FamilyKind,
    pub d: usize,
    pub t: usize,
    pub policy: AttachmentPolicy,
    pub min_degree_boost: bool,
}

impl FamilySpec {
    pub fn balanced(family: FamilyKind, d: usize, t: usize) -> Self {
        FamilySpec {
            family,
            d,
            t,
            policy: AttachmentPolicy::Balanced,
            min_degree_boost: false,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {constraint}")]
    InvalidSpec {
        family: FamilyKind,
        constraint: String,
    },
    #[error("explicit policy must assign all {expected} clique vertices, got {got}")]
    PolicyLength { expected: usize, got: usize },
    #[error("explicit policy entry {index} = {value}, must be below {max}")]
    PolicyIndex {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("coverage violated: {what}")]
    Coverage { what: String },
    #[error("min-degree boost unattainable: {detail}")]
    BoostUnattainable { detail: String },
}

fn serialize_graph_as_edge_list<S: serde::Serializer>(
    g: &Graph,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::io::serialize_edge_list(g))
}

/// A generated family member together with its predicted invariants.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRecord {
    pub spec: FamilySpec,
    #[serde(serialize_with = "serialize_graph_as_edge_list")]
    pub graph: Graph,
    pub expected_n: usize,
    pub expected_m: usize,
    pub expected_parameter: (ParameterKind, usize),
    /// Cycle-rank surface the graph embeds on (2-cell).
    pub nonorientable_surface: SurfaceSpec,
    /// Present when the construction is 4-edge-connected (degree condition).
    pub orientable_surface: Option<SurfaceSpec>,
    /// p for P1/P2 (half the cycle rank), k for P3 (the cycle rank).
    pub p_or_k: usize,
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Builds the attachment target list (outer index per clique vertex).
fn attachment_targets(
    spec: &FamilySpec,
    clique: usize,
    outer_slots: usize,
) -> Result<Vec<usize>, FamilyError> {
    match &spec.policy {
        AttachmentPolicy::Balanced => Ok((0..clique).map(|j| j % outer_slots).collect()),
        AttachmentPolicy::Explicit(map) => {
            if map.len() != clique {
                return Err(FamilyError::PolicyLength {
                    expected: clique,
                    got: map.len(),
                });
            }
            for (index, &value) in map.iter().enumerate() {
                if value >= outer_slots {
                    return Err(FamilyError::PolicyIndex {
                        index,
                        value,
                        max: outer_slots,
                    });
                }
            }
            Ok(map.clone())
        }
    }
}

/// Generates the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<FamilyRecord, FamilyError> {
    let (d, t) = (spec.d, spec.t);
    let invalid = |constraint: &str| FamilyError::InvalidSpec {
        family: spec.family,
        constraint: constraint.into(),
    };
    match spec.family {
        FamilyKind::P1 => {
            if d < 6 {
                return Err(invalid("d >= 6"));
            }
            if d % 4 != 2 {
                return Err(invalid("d = 2 (mod 4)"));
            }
            if t < d {
                return Err(invalid("t >= d"));
            }
        }
        FamilyKind::P2 | FamilyKind::P3 => {
            if d < 4 {
                return Err(invalid("d >= 4"));
            }
            if t < d {
                return Err(invalid("t >= d"));
            }
        }
    }
    if spec.min_degree_boost && spec.family == FamilyKind::P3 {
        return Err(FamilyError::BoostUnattainable {
            detail: "P3 path interiors have degree 2".into(),
        });
    }

    let n = match spec.family {
        FamilyKind::P1 => d + 4 * t + 1,
        FamilyKind::P2 => d + 4 * t + if d % 2 == 1 { 1 } else { 2 },
        FamilyKind::P3 => d + t,
    };
    let clique = n - d;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }

    // Outer structure and the vertex each outer index denotes.
    let outer_vertex: Vec<usize> = match spec.family {
        FamilyKind::P1 | FamilyKind::P2 => (0..d).map(|i| clique + i).collect(),
        FamilyKind::P3 => vec![clique, clique + d - 1],
    };
    match spec.family {
        FamilyKind::P1 => {
            for i in 0..d / 2 {
                edges.push((clique + 2 * i, clique + 2 * i + 1));
            }
        }
        FamilyKind::P2 => {}
        FamilyKind::P3 => {
            for i in 0..d - 1 {
                edges.push((clique + i, clique + i + 1));
            }
        }
    }

    let targets = attachment_targets(spec, clique, outer_vertex.len())?;
    let mut received = vec![0usize; outer_vertex.len()];
    for (j, &slot) in targets.iter().enumerate() {
        edges.push((j, outer_vertex[slot]));
        received[slot] += 1;
    }

    // Coverage conditions of the constructions.
    match spec.family {
        FamilyKind::P1 => {
            for comp in 0..d / 2 {
                if received[2 * comp] + received[2 * comp + 1] == 0 {
                    return Err(FamilyError::Coverage {
                        what: format!("matching component {comp} has no clique neighbour"),
                    });
                }
            }
        }
        FamilyKind::P2 => {
            for (i, &r) in received.iter().enumerate() {
                if r == 0 {
                    return Err(FamilyError::Coverage {
                        what: format!("independent vertex {i} has no clique neighbour"),
                    });
                }
            }
        }
        FamilyKind::P3 => {
            for (i, &r) in received.iter().enumerate() {
                if r == 0 {
                    return Err(FamilyError::Coverage {
                        what: format!("path endpoint {i} has no clique neighbour"),
                    });
                }
            }
        }
    }

    let graph = Graph::new(n, &edges).expect("construction yields a simple graph");

    // Degree condition for the orientable embedding.
    let degree_target: Option<usize> = match spec.family {
        FamilyKind::P1 => Some(5),
        FamilyKind::P2 => Some(4),
        FamilyKind::P3 => None,
    };
    let degree_ok = degree_target
        .map(|target| graph.min_degree().is_some_and(|dmin| dmin >= target))
        .unwrap_or(false);
    if spec.min_degree_boost && !degree_ok {
        return Err(FamilyError::BoostUnattainable {
            detail: format!(
                "policy leaves minimum degree {} below {}",
                graph.min_degree().unwrap_or(0),
                degree_target.unwrap_or(0)
            ),
        });
    }

    let m = graph.edge_count();
    let expected_m = match spec.family {
        FamilyKind::P1 => binom2(n - d + 1) + d / 2,
        FamilyKind::P2 => binom2(n - d + 1),
        FamilyKind::P3 => binom2(n - d + 1) + d - 1,
    };
    debug_assert_eq!(m, expected_m);

    let cycle_rank = m - n + 1;
    let (p_or_k, nonorientable_surface) = match spec.family {
        FamilyKind::P1 | FamilyKind::P2 => {
            debug_assert_eq!(cycle_rank % 2, 0);
            let p = cycle_rank / 2;
            (p, SurfaceSpec::nonorientable(cycle_rank as u32).unwrap())
        }
        FamilyKind::P3 => (
            cycle_rank,
            SurfaceSpec::nonorientable(cycle_rank as u32).unwrap(),
        ),
    };
    let orientable_surface = (degree_ok && spec.family != FamilyKind::P3)
        .then(|| SurfaceSpec::orientable(p_or_k as u32));

    Ok(FamilyRecord {
        spec: spec.clone(),
        graph,
        expected_n: n,
        expected_m,
        expected_parameter: (spec.family.expected_parameter_kind(), d),
        nonorientable_surface,
        orientable_surface,
        p_or_k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyValidation {
    pub checks: Vec<FamilyCheck>,
}

impl FamilyValidation {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&FamilyCheck> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }
}

/// Re-checks a generated record: structure, counts, the solved parameter
/// (within `solver_budget`), and equality of the matching bound.
pub fn validate_family(record: &FamilyRecord, solver_budget: Option<u64>) -> FamilyValidation {
    fn check(checks: &mut Vec<FamilyCheck>, name: &'static str, pass: bool, detail: String) {
        checks.push(FamilyCheck {
            name,
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        });
    }
    let mut checks: Vec<FamilyCheck> = Vec::new();

    let g = &record.graph;
    let (d, n) = (record.spec.d, record.expected_n);
    let clique = n - d;

    check(
        &mut checks,
        "vertex-count",
        g.vertex_count() == n,
        format!("n = {} (expected {})", g.vertex_count(), n),
    );
    check(
        &mut checks,
        "edge-count",
        g.edge_count() == record.expected_m,
        format!("m = {} (expected {})", g.edge_count(), record.expected_m),
    );
    check(&mut checks, "connected", g.is_connected(), String::new());

    let clique_ok = (0..clique).all(|u| (u + 1..clique).all(|v| g.has_edge(u, v)));
    check(&mut checks, "clique", clique_ok, format!("K_{clique} present"));

    let attach_ok = (0..clique).all(|j| {
        g.neighbors(j).filter(|&v| v >= clique).count() == 1
    });
    check(
        &mut checks,
        "attachment-multiplicity",
        attach_ok,
        "each clique vertex has exactly one outer neighbour".into(),
    );

    let outer_ok = match record.spec.family {
        FamilyKind::P1 => (0..d / 2).all(|i| {
            let (a, b) = (clique + 2 * i, clique + 2 * i + 1);
            g.has_edge(a, b)
                && g.neighbors(a).filter(|&v| v >= clique).count() == 1
                && g.neighbors(b).filter(|&v| v >= clique).count() == 1
        }),
        FamilyKind::P2 => (clique..n).all(|u| g.neighbors(u).all(|v| v < clique)),
        FamilyKind::P3 => {
            (0..d - 1).all(|i| g.has_edge(clique + i, clique + i + 1))
                && (clique..n).all(|u| {
                    g.neighbors(u)
                        .filter(|&v| v >= clique)
                        .all(|v| v.abs_diff(u) == 1)
                })
                && (0..clique).all(|j| {
                    g.neighbors(j)
                        .filter(|&v| v >= clique)
                        .all(|v| v == clique || v == clique + d - 1)
                })
        }
    };
    check(&mut checks, "outer-structure", outer_ok, String::new());

    let coverage_ok = match record.spec.family {
        FamilyKind::P1 => (0..d / 2).all(|i| {
            let (a, b) = (clique + 2 * i, clique + 2 * i + 1);
            g.degree(a) > 1 || g.degree(b) > 1
        }),
        FamilyKind::P2 => (clique..n).all(|u| g.degree(u) >= 1),
        FamilyKind::P3 => g.degree(clique) > 1 && g.degree(clique + d - 1) > 1,
    };
    check(&mut checks, "coverage", coverage_ok, String::new());

    let cycle_rank = g.edge_count() - g.vertex_count() + 1;
    let rank_ok = match record.spec.family {
        FamilyKind::P1 | FamilyKind::P2 => {
            cycle_rank.is_multiple_of(2) && record.p_or_k == cycle_rank / 2
        }
        FamilyKind::P3 => record.p_or_k == cycle_rank,
    };
    check(
        &mut checks,
        "cycle-rank",
        rank_ok,
        format!("p_or_k = {}, m - n + 1 = {cycle_rank}", record.p_or_k),
    );

    // Closed forms for p (P1/P2) and k (P3) in terms of d and t.
    let (dd, tt) = (d as i64, record.spec.t as i64);
    let closed = match record.spec.family {
        FamilyKind::P1 => 4 * tt * tt + tt + (2 - dd) / 4,
        FamilyKind::P2 => {
            if d % 2 == 1 {
                4 * tt * tt + tt + (1 - dd) / 2
            } else {
                4 * tt * tt + 3 * tt + 1 - dd / 2
            }
        }
        FamilyKind::P3 => tt * (tt - 1) / 2,
    };
    check(
        &mut checks,
        "closed-form",
        record.p_or_k as i64 == closed,
        format!("p_or_k = {}, closed form = {closed}", record.p_or_k),
    );

    if let Some(orientable) = record.orientable_surface {
        let lambda = g.edge_connectivity().unwrap_or(0);
        check(
        &mut checks,
            "four-edge-connected",
            lambda >= 4,
            format!("edge connectivity {lambda} (orientable surface {})", orientable.name()),
        );
    }

    // Solve the claimed parameter if the budget allows, then demand the
    // matching bound holds with equality at the recorded surface.
    let (kind, claimed) = record.expected_parameter;
    let solved = match invariants::solve_with_budget(g, kind, solver_budget) {
        Ok(cert) => {
            check(
        &mut checks,
                "parameter",
                cert.value == claimed,
                format!("{} = {} (claimed {claimed})", kind.symbol(), cert.value),
            );
            Some(cert.value)
        }
        Err(SolveError::BudgetExceeded { .. }) => {
            checks.push(FamilyCheck {
                name: "parameter",
                status: CheckStatus::Skipped,
                detail: "solver budget exhausted".into(),
            });
            None
        }
        Err(e) => {
            check(&mut checks, "parameter", false, format!("solver error: {e}"));
            None
        }
    };

    let mut ctx = BoundContext::new(g.vertex_count());
    ctx.connected = Some(g.is_connected());
    ctx.chi = Some(Sourced::exact(record.nonorientable_surface.euler_characteristic()));
    let value = solved.unwrap_or(claimed);
    let theorems: &[TheoremId] = match record.spec.family {
        FamilyKind::P1 => {
            ctx.gamma_t = Some(value);
            &[TheoremId::T31i, TheoremId::T31ii]
        }
        FamilyKind::P2 => {
            ctx.gamma_w = Some(value);
            &[TheoremId::T32eq1, TheoremId::T32eq2]
        }
        FamilyKind::P3 => {
            ctx.gamma_c = Some(value);
            &[TheoremId::T33]
        }
    };
    for &t in theorems {
        let v = theorem_bound(t, &ctx);
        let pass = v.status == VerdictStatus::Evaluated && v.equality == Some(true);
        check(
        &mut checks,
            "bound-equality",
            pass,
            format!(
                "{t}: lhs = {:?}, rhs = {:?}, equality = {:?}",
                v.lhs.map(|x| x.to_string()),
                v.rhs.map(|x| x.to_string()),
                v.equality
            ),
        );
    }

    FamilyValidation { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_example() {
        let rec = generate(&FamilySpec::balanced(FamilyKind::P3, 4, 4)).unwrap();
        assert_eq!(rec.expected_n, 8);
        assert_eq!(rec.expected_m, 13);
        assert_eq!(rec.expected_parameter, (ParameterKind::Connected, 4));
        assert_eq!(rec.p_or_k, 6);
        assert_eq!(rec.nonorientable_surface, SurfaceSpec { orientable: false, genus: 6 });
        assert_eq!(rec.nonorientable_surface.euler_characteristic(), -4);
        assert!(rec.orientable_surface.is_none());

        let validation = validate_family(&rec, None);
        assert!(validation.passed(), "{:#?}", validation.failures());
    }

    #[test]
    fn p2_example() {
        let rec = generate(&FamilySpec::balanced(FamilyKind::P2, 4, 4)).unwrap();
        assert_eq!(rec.expected_n, 22);
        assert_eq!(rec.expected_m, 171);
        assert_eq!(rec.p_or_k, 75);
        assert_eq!(rec.nonorientable_surface.genus, 150);
        assert_eq!(rec.nonorientable_surface.euler_characteristic(), -148);
        // Balanced attachments give every independent vertex >= 4 neighbours.
        assert_eq!(rec.graph.min_degree(), Some(4));
        assert_eq!(rec.orientable_surface, Some(SurfaceSpec::orientable(75)));
    }

    #[test]
    fn p1_structure() {
        let rec = generate(&FamilySpec::balanced(FamilyKind::P1, 6, 6)).unwrap();
        assert_eq!(rec.expected_n, 31);
        assert_eq!(rec.expected_m, 328);
        assert_eq!(rec.p_or_k, 149);
        assert_eq!(rec.nonorientable_surface.genus, 298);
        assert_eq!(rec.nonorientable_surface.euler_characteristic(), -296);
        assert_eq!(rec.graph.min_degree(), Some(5));
        assert_eq!(rec.orientable_surface, Some(SurfaceSpec::orientable(149)));
        // Structural checks only; the solve is covered by the acceptance suite.
        let validation = validate_family(&rec, Some(10));
        assert!(
            validation.checks.iter().any(|c| c.status == CheckStatus::Skipped),
            "tiny budget should skip the parameter solve"
        );
        assert!(validation.passed(), "{:#?}", validation.failures());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate(&FamilySpec::balanced(FamilyKind::P2, 5, 6)).unwrap();
        let b = generate(&FamilySpec::balanced(FamilyKind::P2, 5, 6)).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.graph.edges(), b.graph.edges());
    }

    #[test]
    fn spec_invariants_are_enforced() {
        // P1 needs d = 2 (mod 4)
        assert!(matches!(
            generate(&FamilySpec::balanced(FamilyKind::P1, 8, 8)),
            Err(FamilyError::InvalidSpec { .. })
        ));
        assert!(matches!(
            generate(&FamilySpec::balanced(FamilyKind::P1, 5, 6)),
            Err(FamilyError::InvalidSpec { .. })
        ));
        // t >= d
        assert!(matches!(
            generate(&FamilySpec::balanced(FamilyKind::P3, 5, 4)),
            Err(FamilyError::InvalidSpec { .. })
        ));
        // d >= 4
        assert!(matches!(
            generate(&FamilySpec::balanced(FamilyKind::P2, 3, 5)),
            Err(FamilyError::InvalidSpec { .. })
        ));
    }

    #[test]
    fn explicit_policy_validation() {
        let mut spec = FamilySpec::balanced(FamilyKind::P3, 4, 4);
        spec.policy = AttachmentPolicy::Explicit(vec![0, 0, 0, 1]);
        let rec = generate(&spec).unwrap();
        assert!(validate_family(&rec, None).passed());

        // Wrong length
        spec.policy = AttachmentPolicy::Explicit(vec![0, 1]);
        assert!(matches!(
            generate(&spec),
            Err(FamilyError::PolicyLength { expected: 4, got: 2 })
        ));

        // Out-of-range slot
        spec.policy = AttachmentPolicy::Explicit(vec![0, 0, 0, 2]);
        assert!(matches!(generate(&spec), Err(FamilyError::PolicyIndex { .. })));

        // Missing endpoint coverage
        spec.policy = AttachmentPolicy::Explicit(vec![0, 0, 0, 0]);
        assert!(matches!(generate(&spec), Err(FamilyError::Coverage { .. })));
    }

    #[test]
    fn boost_rules() {
        let mut spec = FamilySpec::balanced(FamilyKind::P2, 4, 4);
        spec.min_degree_boost = true;
        let rec = generate(&spec).unwrap();
        assert!(rec.graph.min_degree().unwrap() >= 4);

        // Funnelling all clique vertices to one independent vertex starves
        // the others, so the boost must be rejected.
        spec.policy = AttachmentPolicy::Explicit(
            (0..18).map(|j| if j < 3 { j % 4 } else { 3 }).collect(),
        );
        assert!(matches!(
            generate(&spec),
            Err(FamilyError::BoostUnattainable { .. })
        ));

        let mut p3 = FamilySpec::balanced(FamilyKind::P3, 4, 4);
        p3.min_degree_boost = true;
        assert!(matches!(
            generate(&p3),
            Err(FamilyError::BoostUnattainable { .. })
        ));
    }

    #[test]
    fn vertex_labelling_convention() {
        // Clique first, outer structure after, in construction order.
        let rec = generate(&FamilySpec::balanced(FamilyKind::P1, 6, 6)).unwrap();
        let clique = rec.expected_n - 6;
        for u in 0..clique {
            for v in u + 1..clique {
                assert!(rec.graph.has_edge(u, v));
            }
        }
        for i in 0..3 {
            assert!(rec.graph.has_edge(clique + 2 * i, clique + 2 * i + 1));
        }
    }
}

//! Exact graph-invariant toolkit for small graphs: domination-type
//! parameters, bondage numbers, restricted edge connectivity, extremal
//! constructions, and exact verdicts for a catalogue of inequalities tying
//! those parameters to the Euler characteristic of an embedding surface.
//!
//! Everything is computed by complete search with certificates; all
//! comparisons use integer or rational arithmetic (square roots are compared
//! by squaring), so equality at extremal inputs is detected exactly.
//!
//! Graphs and all query results are immutable values (`Send + Sync`), so
//! they can be shared freely across worker threads; every solver is a pure
//! function of its inputs, and corpus sampling derives one counter-split
//! stream per graph, so results never depend on evaluation order.

pub mod bondage;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod io;
pub mod invariants;
mod planar;
pub mod report;
mod subsets;
pub mod surface;
pub mod verify;

pub use bondage::{bondage, BondageConfig, BondageKind, BondageOutcome, BondageResult};
pub use corpus::{random_corpus, Constraint, CorpusError, CorpusSpec, EdgeSpec};
pub use families::{generate, validate_family, FamilyKind, FamilyRecord, FamilySpec};
pub use graph::{DegreeSummary, Graph, GraphError, MAX_VERTICES};
pub use invariants::{
    solve, solve_with_budget, ParameterCertificate, ParameterKind, SolveError, Witness,
};
pub use io::{parse_graph, serialize_graph, GraphFormat, ParseError};
pub use report::Report;
pub use surface::{
    theorem_bound, BoundContext, BoundVerdict, ExactValue, SurfaceSpec, TheoremId, VerdictStatus,
};
pub use verify::{check_known, verify_all, KnownOutcome, KnownResultId, VerifyOptions};

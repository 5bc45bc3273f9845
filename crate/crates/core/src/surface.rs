//! Surface arithmetic and exact evaluators for the bound catalogue.
//!
//! Every verdict is computed in integer or rational arithmetic. Bounds of
//! the form `a <= b ± sqrt(r)` are decided by sign checks and integer
//! squared comparisons, so equality at extremal inputs is detected exactly;
//! floating point only ever appears in rendered output.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("non-orientable genus must be at least 1")]
    NonorientableGenusZero,
    #[error("not applicable: {reason}")]
    NotApplicable { reason: String },
}

/// A compact surface: sphere with `genus` handles, or with `genus` crosscaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceSpec {
    pub orientable: bool,
    pub genus: u32,
}

impl SurfaceSpec {
    pub fn orientable(genus: u32) -> Self {
        SurfaceSpec {
            orientable: true,
            genus,
        }
    }

    pub fn nonorientable(genus: u32) -> Result<Self, SurfaceError> {
        if genus == 0 {
            return Err(SurfaceError::NonorientableGenusZero);
        }
        Ok(SurfaceSpec {
            orientable: false,
            genus,
        })
    }

    /// `2 - 2h` for the orientable surface, `2 - q` for the non-orientable one.
    pub fn euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            2 - self.genus as i64
        }
    }

    pub fn name(&self) -> String {
        if self.orientable {
            format!("S_{}", self.genus)
        } else {
            format!("N_{}", self.genus)
        }
    }
}

/// Shorthand for [`SurfaceSpec::euler_characteristic`] from raw fields.
pub fn euler_characteristic(orientable: bool, genus: u32) -> Result<i64, SurfaceError> {
    let s = if orientable {
        SurfaceSpec::orientable(genus)
    } else {
        SurfaceSpec::nonorientable(genus)?
    };
    Ok(s.euler_characteristic())
}

// ---------------------------------------------------------------------------
// Light-edge degree ceilings by genus
// ---------------------------------------------------------------------------

/// Degree-sum ceiling for some edge of a connected graph with δ >= 3 of
/// orientable genus `x`.
pub fn h1(x: u32) -> i64 {
    let x = x as i64;
    if x <= 3 {
        2 * x + 13
    } else {
        4 * x + 7
    }
}

/// Triangle-free variant of [`h1`].
pub fn h2(x: u32) -> i64 {
    let x = x as i64;
    if x == 0 {
        8
    } else {
        4 * x + 5
    }
}

/// Degree-sum ceiling for non-orientable genus `x >= 1`.
pub fn k1(x: u32) -> Result<i64, SurfaceError> {
    let v = x as i64;
    match x {
        0 => Err(SurfaceError::NonorientableGenusZero),
        1..=2 => Ok(2 * v + 11),
        3..=5 => Ok(2 * v + 9),
        _ => Ok(2 * v + 7),
    }
}

/// Triangle-free variant of [`k1`], for `x >= 1`.
pub fn k2(x: u32) -> Result<i64, SurfaceError> {
    let v = x as i64;
    match x {
        0 => Err(SurfaceError::NonorientableGenusZero),
        1 => Ok(8),
        _ => Ok(2 * v + 5),
    }
}

/// Dispatches to h1/h2/k1/k2.
pub fn edge_degree_ceiling(
    genus: u32,
    orientable: bool,
    triangle_free: bool,
) -> Result<i64, SurfaceError> {
    match (orientable, triangle_free) {
        (true, false) => Ok(h1(genus)),
        (true, true) => Ok(h2(genus)),
        (false, false) => k1(genus),
        (false, true) => k2(genus),
    }
}

// ---------------------------------------------------------------------------
// Genus upper bounds from the cycle rank
// ---------------------------------------------------------------------------

/// Connected non-trees always embed (2-cell) on the non-orientable surface
/// of genus `m - n + 1`.
pub fn nonorientable_genus_upper(g: &Graph) -> Result<u32, SurfaceError> {
    if !g.is_connected() {
        return Err(SurfaceError::NotApplicable {
            reason: "graph is disconnected".into(),
        });
    }
    if g.edge_count() < g.vertex_count() {
        return Err(SurfaceError::NotApplicable {
            reason: "graph is a tree".into(),
        });
    }
    Ok((g.edge_count() - g.vertex_count() + 1) as u32)
}

/// 4-edge-connected graphs embed (2-cell) on the orientable surface of
/// genus `floor((m - n + 1) / 2)`.
pub fn orientable_genus_upper(g: &Graph) -> Result<u32, SurfaceError> {
    if g.vertex_count() < 2 || g.edge_connectivity().map_err(|_| SurfaceError::NotApplicable {
        reason: "graph has fewer than two vertices".into(),
    })? < 4
    {
        return Err(SurfaceError::NotApplicable {
            reason: "graph is not 4-edge-connected".into(),
        });
    }
    Ok((g.edge_count() - g.vertex_count()).div_ceil(2) as u32)
}

/// Ceiling on the average degree of a graph with finite girth `g >= 3`
/// embeddable on a surface of Euler characteristic `chi` (as large as
/// possible): `(2g/(g-2)) * (1 - chi/n)`, exact.
pub fn average_degree_ceiling(
    girth: usize,
    chi: i64,
    n: usize,
) -> Result<Ratio<i64>, SurfaceError> {
    if girth < 3 {
        return Err(SurfaceError::NotApplicable {
            reason: "girth must be finite and at least 3".into(),
        });
    }
    let g = girth as i64;
    Ok(Ratio::new(2 * g, g - 2) * Ratio::new(n as i64 - chi, n as i64))
}

// ---------------------------------------------------------------------------
// Exact values and comparisons
// ---------------------------------------------------------------------------

/// An exact quantity: integer, rational, or `(base ± sqrt(r)) / divisor`.
///
/// In the square-root form a negative `radicand` encodes a subtracted root:
/// the value is `(base + sign(radicand) * sqrt(|radicand|)) / divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ExactValue {
    Int(i64),
    Rational { num: i64, den: i64 },
    Sqrt {
        base: i64,
        radicand: i64,
        divisor: i64,
    },
}

impl ExactValue {
    pub fn rational(r: Ratio<i64>) -> Self {
        if r.is_integer() {
            ExactValue::Int(r.to_integer())
        } else {
            ExactValue::Rational {
                num: *r.numer(),
                den: *r.denom(),
            }
        }
    }

    pub fn approx(&self) -> f64 {
        match *self {
            ExactValue::Int(v) => v as f64,
            ExactValue::Rational { num, den } => num as f64 / den as f64,
            ExactValue::Sqrt {
                base,
                radicand,
                divisor,
            } => {
                let root = (radicand.unsigned_abs() as f64).sqrt();
                (base as f64 + root.copysign(radicand as f64)) / divisor as f64
            }
        }
    }

    /// Exact comparison of the integer `lhs` against this value.
    pub fn cmp_with_int(&self, lhs: i64) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match *self {
            ExactValue::Int(v) => lhs.cmp(&v),
            ExactValue::Rational { num, den } => {
                (lhs as i128 * den as i128).cmp(&(num as i128))
            }
            ExactValue::Sqrt {
                base,
                radicand,
                divisor,
            } => {
                // Compare l = lhs*divisor - base with sign(radicand)*sqrt(|radicand|).
                let l = lhs as i128 * divisor as i128 - base as i128;
                let r = radicand.unsigned_abs() as i128;
                if radicand >= 0 {
                    if l < 0 {
                        Less
                    } else {
                        (l * l).cmp(&r)
                    }
                } else if l > 0 {
                    Greater
                } else if l == 0 {
                    if r == 0 {
                        Equal
                    } else {
                        Greater
                    }
                } else {
                    (l * l).cmp(&r).reverse()
                }
            }
        }
    }
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ExactValue::Int(v) => write!(f, "{v}"),
            ExactValue::Rational { num, den } => write!(f, "{num}/{den}"),
            ExactValue::Sqrt {
                base,
                radicand,
                divisor,
            } => {
                let sign = if radicand >= 0 { '+' } else { '-' };
                if divisor == 1 {
                    write!(f, "{base} {sign} sqrt({})", radicand.unsigned_abs())
                } else {
                    write!(
                        f,
                        "({base} {sign} sqrt({}))/{divisor}",
                        radicand.unsigned_abs()
                    )
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The bound catalogue
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// n >= γ_t + (1 + sqrt(9 + 8(ceil(γ_t/2) - χ)))/2, for γ_t >= 5.
    T31i,
    /// γ_t <= n - sqrt(n + 2 - 2χ) (even γ_t) or n + 3 - 2χ (odd), γ_t >= 5.
    T31ii,
    /// n >= γ_w + (1 + sqrt(9 + 8γ_w - 8χ))/2, for γ_w >= 4.
    T32eq1,
    /// γ_w <= n + (1 - sqrt(8n + 9 - 8χ))/2, for γ_w >= 4.
    T32eq2,
    /// γ_c <= n - (1 + sqrt(17 - 8χ))/2, for γ_c >= 3.
    T33,
    /// max{λ′, b_r} <= min{h1(g), k1(ḡ)} - 2, for connected δ >= 3.
    T41i,
    /// Triangle-free variant with h2/k2.
    T41ii,
    /// b_tr <= ξ + Δ - 2, for connected δ >= 4.
    T42i,
    /// b_tr <= h(g) + Δ - 4 (h2 when triangle-free).
    T42ii,
    /// b_tr <= k(ḡ) + Δ - 4 (k2 when triangle-free).
    T42iii,
    /// b_tr <= 2·ad + Δ - 4.
    T42iv,
    /// b_tr <= (4g/(g-2))(1 - χ/n) + Δ - 4, g the (finite) girth.
    T42v,
    /// Planar with δ = 4 + i: b_tr <= 14 - i.
    T43,
    /// Planar with δ = 5: b_R <= 14.
    T44,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::T31i,
        TheoremId::T31ii,
        TheoremId::T32eq1,
        TheoremId::T32eq2,
        TheoremId::T33,
        TheoremId::T41i,
        TheoremId::T41ii,
        TheoremId::T42i,
        TheoremId::T42ii,
        TheoremId::T42iii,
        TheoremId::T42iv,
        TheoremId::T42v,
        TheoremId::T43,
        TheoremId::T44,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T31i => "T3.1(i)",
            TheoremId::T31ii => "T3.1(ii)",
            TheoremId::T32eq1 => "T3.2(1)",
            TheoremId::T32eq2 => "T3.2(2)",
            TheoremId::T33 => "T3.3",
            TheoremId::T41i => "T4.1(i)",
            TheoremId::T41ii => "T4.1(ii)",
            TheoremId::T42i => "T4.2(i)",
            TheoremId::T42ii => "T4.2(ii)",
            TheoremId::T42iii => "T4.2(iii)",
            TheoremId::T42iv => "T4.2(iv)",
            TheoremId::T42v => "T4.2(v)",
            TheoremId::T43 => "T4.3",
            TheoremId::T44 => "T4.4",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let id = match norm.as_str() {
            "t31i" => TheoremId::T31i,
            "t31ii" => TheoremId::T31ii,
            "t321" | "t32eq1" => TheoremId::T32eq1,
            "t322" | "t32eq2" => TheoremId::T32eq2,
            "t33" => TheoremId::T33,
            "t41i" => TheoremId::T41i,
            "t41ii" => TheoremId::T41ii,
            "t42i" => TheoremId::T42i,
            "t42ii" => TheoremId::T42ii,
            "t42iii" => TheoremId::T42iii,
            "t42iv" => TheoremId::T42iv,
            "t42v" => TheoremId::T42v,
            "t43" => TheoremId::T43,
            "t44" => TheoremId::T44,
            _ => {
                return Err(format!(
                    "unknown bound id `{s}` (expected one of {})",
                    TheoremId::ALL.map(|t| t.as_str()).join(", ")
                ))
            }
        };
        Ok(id)
    }
}

/// A value plus whether it came from a bound rather than exact knowledge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sourced<T> {
    pub value: T,
    pub relaxed: bool,
}

impl<T> Sourced<T> {
    pub fn exact(value: T) -> Self {
        Sourced {
            value,
            relaxed: false,
        }
    }

    pub fn relaxed(value: T) -> Self {
        Sourced {
            value,
            relaxed: true,
        }
    }
}

/// Everything a bound evaluator may read. Fields the caller cannot supply
/// stay `None`; an evaluator that needs one reports not-applicable naming it.
#[derive(Debug, Clone, Default)]
pub struct BoundContext {
    pub n: usize,
    pub m: Option<usize>,
    pub connected: Option<bool>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub min_edge_degree: Option<usize>,
    /// Finite girth; leave `None` for forests or when unknown.
    pub girth: Option<usize>,
    pub triangle_free: Option<bool>,
    pub planar: Option<bool>,
    pub chi: Option<Sourced<i64>>,
    pub orientable_genus: Option<Sourced<u32>>,
    pub nonorientable_genus: Option<Sourced<u32>>,
    pub gamma_t: Option<usize>,
    pub gamma_w: Option<usize>,
    pub gamma_c: Option<usize>,
    pub lambda_prime: Option<usize>,
    pub b_restrained: Option<usize>,
    pub b_total_restrained: Option<usize>,
    pub b_roman: Option<usize>,
}

impl BoundContext {
    pub fn new(n: usize) -> Self {
        BoundContext {
            n,
            ..Default::default()
        }
    }

    /// Fills in every field derivable from the graph alone.
    pub fn from_graph(g: &Graph) -> Self {
        BoundContext {
            n: g.vertex_count(),
            m: Some(g.edge_count()),
            connected: Some(g.is_connected()),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            min_edge_degree: g.min_edge_degree(),
            girth: g.girth(),
            triangle_free: Some(!g.has_triangle()),
            planar: Some(g.is_planar()),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Evaluated,
    NotApplicable,
    Indeterminate,
}

/// Outcome of one bound on one input, exact.
#[derive(Debug, Clone, Serialize)]
pub struct BoundVerdict {
    pub theorem: TheoremId,
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<ExactValue>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    /// True when χ or a genus came from a bound instead of exact knowledge.
    pub relaxed: bool,
    pub inputs: BTreeMap<String, String>,
}

impl BoundVerdict {
    pub fn not_applicable(theorem: TheoremId, reason: String) -> Self {
        BoundVerdict {
            theorem,
            status: VerdictStatus::NotApplicable,
            reason: Some(reason),
            lhs: None,
            rhs: None,
            holds: None,
            equality: None,
            relaxed: false,
            inputs: BTreeMap::new(),
        }
    }

    pub fn indeterminate(theorem: TheoremId, reason: String) -> Self {
        BoundVerdict {
            theorem,
            status: VerdictStatus::Indeterminate,
            reason: Some(reason),
            lhs: None,
            rhs: None,
            holds: None,
            equality: None,
            relaxed: false,
            inputs: BTreeMap::new(),
        }
    }
}

enum Direction {
    /// Bound holds when lhs <= rhs.
    LhsLe,
    /// Bound holds when lhs >= rhs.
    LhsGe,
}

struct Eval {
    lhs: i64,
    rhs: ExactValue,
    direction: Direction,
    relaxed: bool,
    note: Option<String>,
}

struct Reader<'a> {
    ctx: &'a BoundContext,
    inputs: BTreeMap<String, String>,
    relaxed: bool,
}

impl<'a> Reader<'a> {
    fn new(ctx: &'a BoundContext) -> Self {
        let mut inputs = BTreeMap::new();
        inputs.insert("n".into(), ctx.n.to_string());
        Reader {
            ctx,
            inputs,
            relaxed: false,
        }
    }

    fn need<T: Copy + std::fmt::Display>(
        &mut self,
        field: Option<T>,
        name: &str,
    ) -> Result<T, String> {
        match field {
            Some(v) => {
                self.inputs.insert(name.into(), v.to_string());
                Ok(v)
            }
            None => Err(format!("missing context symbol `{name}`")),
        }
    }

    fn need_sourced<T: Copy + std::fmt::Display>(
        &mut self,
        field: Option<Sourced<T>>,
        name: &str,
    ) -> Result<T, String> {
        match field {
            Some(s) => {
                self.inputs.insert(
                    name.into(),
                    if s.relaxed {
                        format!("{} (from bound)", s.value)
                    } else {
                        s.value.to_string()
                    },
                );
                self.relaxed |= s.relaxed;
                Ok(s.value)
            }
            None => Err(format!("missing context symbol `{name}`")),
        }
    }

    fn need_connected(&mut self) -> Result<(), String> {
        match self.ctx.connected {
            Some(true) => Ok(()),
            Some(false) => Err("graph is disconnected".into()),
            None => Err("missing context symbol `connected`".into()),
        }
    }

    fn need_chi(&mut self) -> Result<i64, String> {
        let chi = self.need_sourced(self.ctx.chi, "chi")?;
        if chi > 2 {
            return Err(format!("no surface has Euler characteristic {chi} > 2"));
        }
        Ok(chi)
    }
}

// Right-hand sides exposed for direct formula evaluation.

pub fn rhs_t3_1_i(gamma_t: i64, chi: i64) -> ExactValue {
    ExactValue::Sqrt {
        base: 2 * gamma_t + 1,
        radicand: 9 + 8 * (gamma_t.div_euclid(2) + gamma_t.rem_euclid(2) - chi),
        divisor: 2,
    }
}

pub fn rhs_t3_1_ii(n: i64, chi: i64, gamma_t_odd: bool) -> ExactValue {
    let offset = if gamma_t_odd { 3 } else { 2 };
    ExactValue::Sqrt {
        base: n,
        radicand: -(n + offset - 2 * chi),
        divisor: 1,
    }
}

pub fn rhs_t3_2_eq1(gamma_w: i64, chi: i64) -> ExactValue {
    ExactValue::Sqrt {
        base: 2 * gamma_w + 1,
        radicand: 9 + 8 * gamma_w - 8 * chi,
        divisor: 2,
    }
}

pub fn rhs_t3_2_eq2(n: i64, chi: i64) -> ExactValue {
    ExactValue::Sqrt {
        base: 2 * n + 1,
        radicand: -(8 * n + 9 - 8 * chi),
        divisor: 2,
    }
}

pub fn rhs_t3_3(n: i64, chi: i64) -> ExactValue {
    ExactValue::Sqrt {
        base: 2 * n - 1,
        radicand: -(17 - 8 * chi),
        divisor: 2,
    }
}

/// `2·ad + Δ - 4 = 4m/n + Δ - 4`.
pub fn rhs_t4_2_iv(n: i64, m: i64, max_degree: i64) -> Option<Ratio<i64>> {
    if n < 1 {
        return None;
    }
    Some(Ratio::new(4 * m, n) + Ratio::from_integer(max_degree - 4))
}

/// `(4g/(g-2))(1 - chi/n) + Δ - 4` for finite girth `g >= 3`.
pub fn rhs_t4_2_v(n: i64, girth: i64, chi: i64, max_degree: i64) -> Option<Ratio<i64>> {
    if girth < 3 || n < 1 {
        return None;
    }
    Some(
        Ratio::new(4 * girth, girth - 2) * Ratio::new(n - chi, n)
            + Ratio::from_integer(max_degree - 4),
    )
}

/// The relaxation of [`rhs_t4_2_v`]: `-12chi/n + Δ + 8`.
pub fn rhs_t4_2_v_relaxed(n: i64, chi: i64, max_degree: i64) -> Option<Ratio<i64>> {
    if n < 1 {
        return None;
    }
    Some(Ratio::new(-12 * chi, n) + Ratio::from_integer(max_degree + 8))
}

/// Evaluates one bound of the catalogue against the context, exactly.
pub fn theorem_bound(theorem: TheoremId, ctx: &BoundContext) -> BoundVerdict {
    let mut r = Reader::new(ctx);
    let result = evaluate(theorem, &mut r);
    match result {
        Err(reason) => {
            let mut v = BoundVerdict::not_applicable(theorem, reason);
            v.inputs = r.inputs;
            v
        }
        Ok(eval) => {
            let ord = eval.rhs.cmp_with_int(eval.lhs);
            // `ord` orients lhs against rhs.
            let holds = match eval.direction {
                Direction::LhsLe => ord != std::cmp::Ordering::Greater,
                Direction::LhsGe => ord != std::cmp::Ordering::Less,
            };
            let equality = ord == std::cmp::Ordering::Equal;
            BoundVerdict {
                theorem,
                status: VerdictStatus::Evaluated,
                reason: eval.note,
                lhs: Some(ExactValue::Int(eval.lhs)),
                rhs: Some(eval.rhs),
                holds: Some(holds),
                equality: Some(equality),
                relaxed: eval.relaxed | r.relaxed,
                inputs: r.inputs,
            }
        }
    }
}

fn evaluate(theorem: TheoremId, r: &mut Reader) -> Result<Eval, String> {
    let n = r.ctx.n as i64;
    match theorem {
        TheoremId::T31i | TheoremId::T31ii => {
            r.need_connected()?;
            let gt = r.need(r.ctx.gamma_t, "gamma_t")? as i64;
            if gt < 5 {
                return Err(format!("gamma_t = {gt} below threshold 5"));
            }
            let chi = r.need_chi()?;
            if theorem == TheoremId::T31i {
                Ok(Eval {
                    lhs: n,
                    rhs: rhs_t3_1_i(gt, chi),
                    direction: Direction::LhsGe,
                    relaxed: false,
                    note: None,
                })
            } else {
                Ok(Eval {
                    lhs: gt,
                    rhs: rhs_t3_1_ii(n, chi, gt % 2 == 1),
                    direction: Direction::LhsLe,
                    relaxed: false,
                    note: Some(if gt % 2 == 1 {
                        "odd-parity form".into()
                    } else {
                        "even-parity form".into()
                    }),
                })
            }
        }
        TheoremId::T32eq1 | TheoremId::T32eq2 => {
            r.need_connected()?;
            let gw = r.need(r.ctx.gamma_w, "gamma_w")? as i64;
            if gw < 4 {
                return Err(format!("gamma_w = {gw} below threshold 4"));
            }
            let chi = r.need_chi()?;
            if theorem == TheoremId::T32eq1 {
                Ok(Eval {
                    lhs: n,
                    rhs: rhs_t3_2_eq1(gw, chi),
                    direction: Direction::LhsGe,
                    relaxed: false,
                    note: None,
                })
            } else {
                Ok(Eval {
                    lhs: gw,
                    rhs: rhs_t3_2_eq2(n, chi),
                    direction: Direction::LhsLe,
                    relaxed: false,
                    note: None,
                })
            }
        }
        TheoremId::T33 => {
            r.need_connected()?;
            let gc = r.need(r.ctx.gamma_c, "gamma_c")? as i64;
            if gc < 3 {
                return Err(format!("gamma_c = {gc} below threshold 3"));
            }
            let chi = r.need_chi()?;
            Ok(Eval {
                lhs: gc,
                rhs: rhs_t3_3(n, chi),
                direction: Direction::LhsLe,
                relaxed: false,
                note: None,
            })
        }
        TheoremId::T41i | TheoremId::T41ii => {
            r.need_connected()?;
            if r.ctx.n < 2 {
                return Err("graph is trivial".into());
            }
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if delta < 3 {
                return Err(format!("min_degree = {delta} below threshold 3"));
            }
            let triangle_free = if theorem == TheoremId::T41ii {
                match r.need(r.ctx.triangle_free, "triangle_free")? {
                    true => true,
                    false => return Err("graph contains a 3-cycle".into()),
                }
            } else {
                false
            };
            let lp = r.need(r.ctx.lambda_prime, "lambda_prime")? as i64;
            let br = r.need(r.ctx.b_restrained, "b_r")? as i64;
            let mut terms: Vec<i64> = Vec::new();
            let mut used = Vec::new();
            if let Some(s) = r.ctx.orientable_genus {
                let g = r.need_sourced(Some(s), "orientable_genus")?;
                terms.push(if triangle_free { h2(g) } else { h1(g) });
                used.push(if triangle_free { "h2" } else { "h1" });
            }
            if let Some(s) = r.ctx.nonorientable_genus {
                let q = r.need_sourced(Some(s), "nonorientable_genus")?;
                if q == 0 {
                    return Err("non-orientable genus must be at least 1".into());
                }
                let term = if triangle_free { k2(q) } else { k1(q) }.expect("q >= 1");
                terms.push(term);
                used.push(if triangle_free { "k2" } else { "k1" });
            }
            let Some(best) = terms.into_iter().min() else {
                return Err("missing context symbol `orientable_genus` or `nonorientable_genus`".into());
            };
            Ok(Eval {
                lhs: lp.max(br),
                rhs: ExactValue::Int(best - 2),
                direction: Direction::LhsLe,
                relaxed: false,
                note: Some(format!("ceiling terms used: {}", used.join(", "))),
            })
        }
        TheoremId::T42i => {
            r.need_connected()?;
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if delta < 4 {
                return Err(format!("min_degree = {delta} below threshold 4"));
            }
            let btr = r.need(r.ctx.b_total_restrained, "b_tr")? as i64;
            let xi = r.need(r.ctx.min_edge_degree, "xi")? as i64;
            let dmax = r.need(r.ctx.max_degree, "max_degree")? as i64;
            Ok(Eval {
                lhs: btr,
                rhs: ExactValue::Int(xi + dmax - 2),
                direction: Direction::LhsLe,
                relaxed: false,
                note: None,
            })
        }
        TheoremId::T42ii | TheoremId::T42iii => {
            r.need_connected()?;
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if delta < 4 {
                return Err(format!("min_degree = {delta} below threshold 4"));
            }
            let btr = r.need(r.ctx.b_total_restrained, "b_tr")? as i64;
            let dmax = r.need(r.ctx.max_degree, "max_degree")? as i64;
            let triangle_free = r.ctx.triangle_free == Some(true);
            let (ceiling, note) = if theorem == TheoremId::T42ii {
                let g = r.need_sourced(r.ctx.orientable_genus, "orientable_genus")?;
                if triangle_free {
                    (h2(g), "h2 (triangle-free)")
                } else {
                    (h1(g), "h1")
                }
            } else {
                let q = r.need_sourced(r.ctx.nonorientable_genus, "nonorientable_genus")?;
                if q == 0 {
                    return Err("non-orientable genus must be at least 1".into());
                }
                if triangle_free {
                    (k2(q).expect("q >= 1"), "k2 (triangle-free)")
                } else {
                    (k1(q).expect("q >= 1"), "k1")
                }
            };
            Ok(Eval {
                lhs: btr,
                rhs: ExactValue::Int(ceiling + dmax - 4),
                direction: Direction::LhsLe,
                relaxed: false,
                note: Some(format!("ceiling term: {note}")),
            })
        }
        TheoremId::T42iv => {
            r.need_connected()?;
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if delta < 4 {
                return Err(format!("min_degree = {delta} below threshold 4"));
            }
            let btr = r.need(r.ctx.b_total_restrained, "b_tr")? as i64;
            let dmax = r.need(r.ctx.max_degree, "max_degree")? as i64;
            let m = r.need(r.ctx.m, "m")? as i64;
            let rhs = rhs_t4_2_iv(n, m, dmax).ok_or("order must be positive")?;
            Ok(Eval {
                lhs: btr,
                rhs: ExactValue::rational(rhs),
                direction: Direction::LhsLe,
                relaxed: false,
                note: None,
            })
        }
        TheoremId::T42v => {
            r.need_connected()?;
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if delta < 4 {
                return Err(format!("min_degree = {delta} below threshold 4"));
            }
            let btr = r.need(r.ctx.b_total_restrained, "b_tr")? as i64;
            let dmax = r.need(r.ctx.max_degree, "max_degree")? as i64;
            let girth = r.need(r.ctx.girth, "girth")? as i64;
            let chi = r.need_chi()?;
            let rhs = rhs_t4_2_v(n, girth, chi, dmax)
                .ok_or_else(|| "girth must be finite and at least 3".to_string())?;
            Ok(Eval {
                lhs: btr,
                rhs: ExactValue::rational(rhs),
                direction: Direction::LhsLe,
                relaxed: false,
                note: None,
            })
        }
        TheoremId::T43 => {
            match r.need(r.ctx.planar, "planar")? {
                true => {}
                false => return Err("graph is not planar".into()),
            }
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if !(4..=5).contains(&delta) {
                return Err(format!("min_degree = {delta} not in {{4, 5}}"));
            }
            let btr = r.need(r.ctx.b_total_restrained, "b_tr")? as i64;
            Ok(Eval {
                lhs: btr,
                rhs: ExactValue::Int(14 - (delta as i64 - 4)),
                direction: Direction::LhsLe,
                relaxed: false,
                note: None,
            })
        }
        TheoremId::T44 => {
            match r.need(r.ctx.planar, "planar")? {
                true => {}
                false => return Err("graph is not planar".into()),
            }
            let delta = r.need(r.ctx.min_degree, "min_degree")?;
            if delta != 5 {
                return Err(format!("min_degree = {delta}, requires exactly 5"));
            }
            let broman = r.need(r.ctx.b_roman, "b_R")? as i64;
            Ok(Eval {
                lhs: broman,
                rhs: ExactValue::Int(14),
                direction: Direction::LhsLe,
                relaxed: false,
                note: None,
            })
        }
    }
}

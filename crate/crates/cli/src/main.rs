//! Command-line surface: family generation, parameter certificates, bondage
//! searches, per-graph verification, corpus sweeps, and raw formula
//! evaluation. Exit codes: 0 all checks hold, 1 a violation was found,
//! 2 usage or input error.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use domsurf::bondage::{bondage, BondageConfig, BondageKind};
use domsurf::corpus::{random_corpus, Constraint, CorpusSpec, EdgeSpec};
use domsurf::families::{generate, AttachmentPolicy, FamilyKind, FamilySpec};
use domsurf::graph::Graph;
use domsurf::invariants::{solve_with_budget, ParameterKind, SolveError};
use domsurf::io::{parse_graph, serialize_graph, GraphFormat};
use domsurf::report::Report;
use domsurf::surface::{self, ExactValue, TheoremId};
use domsurf::verify::{verify_all, KnownResultId, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "domsurf",
    version,
    about = "Exact domination-type invariants, bondage numbers and surface-bound verdicts for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Input format.
    #[arg(long, default_value = "edge-list")]
    format: GraphFormat,
}

#[derive(Args)]
struct ContextArgs {
    /// Euler characteristic of a surface the graph is 2-cell embedded on.
    #[arg(long, allow_negative_numbers = true)]
    chi: Option<i64>,
    /// Exact orientable genus, when known.
    #[arg(long)]
    orientable_genus: Option<u32>,
    /// Exact non-orientable genus, when known.
    #[arg(long)]
    nonorientable_genus: Option<u32>,
    /// Derive missing genus/χ from the cycle-rank surfaces (sound, weaker).
    #[arg(long)]
    genus_from_bounds: bool,
    /// Candidate-witness budget for the exact solvers.
    #[arg(long)]
    budget: Option<u64>,
    /// Edge-subset size cap for bondage searches.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Additionally export one CSV row per (graph, check).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an extremal family member: the graph plus its prediction record.
    GenFamily {
        /// P1, P2 or P3.
        family: FamilyKind,
        /// Target parameter value.
        d: usize,
        /// Size parameter (t >= d).
        t: usize,
        /// `balanced` or `explicit=I,J,...` (one outer index per clique vertex).
        #[arg(long, default_value = "balanced")]
        policy: String,
        /// Require the boosted minimum degree (orientable embedding variant).
        #[arg(long)]
        boost: bool,
        /// Output format for the graph.
        #[arg(long, default_value = "edge-list")]
        format: GraphFormat,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the record JSON here (default: stderr).
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Compute one parameter certificate for a graph.
    Compute {
        /// Parameter: domination, total, connected, weakly-connected,
        /// restrained, total-restrained, roman, restricted-edge-connectivity.
        #[arg(long)]
        kind: ParameterKind,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compute a bondage number (restrained, total-restrained or roman).
    Bondage {
        #[arg(long)]
        kind: BondageKind,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Evaluate the bound catalogue and known results on one graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Bound ids to evaluate (default: all), e.g. T3.3 or T4.2(v).
        #[arg(long = "theorem")]
        theorems: Vec<TheoremId>,
        /// Known-result ids to check (default: all), e.g. lambda-xi.
        #[arg(long = "known")]
        known: Vec<KnownResultId>,
        /// Evaluate only the bound catalogue, skipping known results.
        #[arg(long)]
        no_known: bool,
        #[command(flatten)]
        context: ContextArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generate a seeded corpus and verify every graph in it.
    Sweep {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Independent edge probability (alternative to --m-min/--m-max).
        #[arg(long, conflicts_with_all = ["m_min", "m_max"])]
        edge_prob: Option<f64>,
        #[arg(long, requires = "m_max")]
        m_min: Option<usize>,
        #[arg(long, requires = "m_min")]
        m_max: Option<usize>,
        /// connected, min-degree=K, triangle-free, planar, not-star, no-isolated.
        #[arg(long = "constraint")]
        constraints: Vec<Constraint>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "theorem")]
        theorems: Vec<TheoremId>,
        #[arg(long = "known")]
        known: Vec<KnownResultId>,
        #[arg(long)]
        no_known: bool,
        #[command(flatten)]
        context: ContextArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a ceiling or bound right-hand side from literal inputs.
    ///
    /// Names: h1 X | h2 X | k1 X | k2 X | chi-orientable H |
    /// chi-nonorientable Q | T3.1(i) GT CHI | T3.1(ii) N CHI [--odd] |
    /// T3.2(1) GW CHI | T3.2(2) N CHI | T3.3 N CHI | T4.1(i) G GBAR |
    /// T4.1(ii) G GBAR | T4.2(i) XI DMAX | T4.2(ii) G DMAX |
    /// T4.2(iii) GBAR DMAX | T4.2(iv) N M DMAX | T4.2(v) N GIRTH CHI DMAX |
    /// T4.3 I | T4.4
    Formulas {
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<i64>,
        /// Odd-parity form of T3.1(ii).
        #[arg(long)]
        odd: bool,
        /// Triangle-free variants (h2/k2) where they exist.
        #[arg(long)]
        triangle_free: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, String> {
    let text = if input.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| format!("reading {}: {e}", input.input))?
    };
    parse_graph(&text, input.format).map_err(|e| e.to_string())
}

/// Prints to stdout, tolerating a closed pipe (e.g. `domsurf ... | head`).
fn print_stdout(content: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{content}");
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print_stdout(content);
            Ok(())
        }
    }
}

fn parse_policy(text: &str) -> Result<AttachmentPolicy, String> {
    if text == "balanced" {
        return Ok(AttachmentPolicy::Balanced);
    }
    if let Some(list) = text.strip_prefix("explicit=") {
        let slots = list
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|e| format!("policy entry `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(AttachmentPolicy::Explicit(slots));
    }
    Err(format!("policy must be `balanced` or `explicit=I,J,...`, got `{text}`"))
}

fn verify_options(
    context: &ContextArgs,
    theorems: &[TheoremId],
    known: &[KnownResultId],
    no_known: bool,
) -> VerifyOptions {
    VerifyOptions {
        chi: context.chi,
        orientable_genus: context.orientable_genus,
        nonorientable_genus: context.nonorientable_genus,
        genus_from_bounds: context.genus_from_bounds,
        solver_budget: context.budget,
        bondage_cap: context.cap,
        bondage_budget: context.budget,
        theorems: (!theorems.is_empty()).then(|| theorems.to_vec()),
        known: if no_known {
            Some(Vec::new())
        } else {
            (!known.is_empty()).then(|| known.to_vec())
        },
    }
}

fn context_inputs(context: &ContextArgs) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    if let Some(chi) = context.chi {
        map.insert("chi".into(), chi.to_string());
    }
    if let Some(g) = context.orientable_genus {
        map.insert("orientable_genus".into(), g.to_string());
    }
    if let Some(q) = context.nonorientable_genus {
        map.insert("nonorientable_genus".into(), q.to_string());
    }
    if context.genus_from_bounds {
        map.insert("genus_from_bounds".into(), "true".into());
    }
    if let Some(b) = context.budget {
        map.insert("budget".into(), b.to_string());
    }
    if let Some(c) = context.cap {
        map.insert("cap".into(), c.to_string());
    }
    map
}

fn emit_report(report: &Report, output: &OutputArgs) -> Result<ExitCode, String> {
    if let Some(csv) = &output.csv {
        std::fs::write(csv, report.to_csv())
            .map_err(|e| format!("writing {}: {e}", csv.display()))?;
    }
    write_or_print(&output.out, &report.to_json())?;
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::GenFamily {
            family,
            d,
            t,
            policy,
            boost,
            format,
            out,
            record,
        } => {
            let spec = FamilySpec {
                family,
                d,
                t,
                policy: parse_policy(&policy)?,
                min_degree_boost: boost,
            };
            let rec = generate(&spec).map_err(|e| e.to_string())?;
            let graph_text = serialize_graph(&rec.graph, format);
            let record_json =
                serde_json::to_string_pretty(&rec).expect("record serialisation cannot fail");
            match &out {
                Some(p) => std::fs::write(p, &graph_text)
                    .map_err(|e| format!("writing {}: {e}", p.display()))?,
                None => {
                    use std::io::Write;
                    let _ = write!(std::io::stdout(), "{graph_text}");
                }
            }
            match &record {
                Some(p) => std::fs::write(p, &record_json)
                    .map_err(|e| format!("writing {}: {e}", p.display()))?,
                None => eprintln!("{record_json}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compute { kind, budget, input } => {
            let g = read_graph(&input)?;
            let value = match solve_with_budget(&g, kind, budget) {
                Ok(cert) => serde_json::json!({
                    "parameter": kind.name(),
                    "symbol": kind.symbol(),
                    "status": "exact",
                    "value": cert.value,
                    "witness": cert.witness,
                    "stats": cert.stats,
                }),
                Err(SolveError::NotApplicable { reason, .. }) => serde_json::json!({
                    "parameter": kind.name(),
                    "status": "not-applicable",
                    "reason": reason,
                }),
                Err(SolveError::BudgetExceeded { examined, .. }) => serde_json::json!({
                    "parameter": kind.name(),
                    "status": "budget-exceeded",
                    "examined": examined,
                }),
            };
            print_stdout(&serde_json::to_string_pretty(&value).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bondage {
            kind,
            cap,
            budget,
            input,
        } => {
            let g = read_graph(&input)?;
            let config = BondageConfig { cap, budget };
            let ceilings = domsurf::bondage::check_bondage_upper_bounds(&g, kind);
            let value = match bondage(&g, kind, config) {
                Ok(result) => {
                    let mut v = serde_json::to_value(&result).unwrap();
                    v["upper_bounds"] = serde_json::to_value(&ceilings).unwrap();
                    v
                }
                Err(SolveError::NotApplicable { reason, .. }) => serde_json::json!({
                    "kind": kind.name(),
                    "status": "not-applicable",
                    "reason": reason,
                }),
                Err(SolveError::BudgetExceeded { examined, .. }) => serde_json::json!({
                    "kind": kind.name(),
                    "status": "budget-exceeded",
                    "examined": examined,
                }),
            };
            print_stdout(&serde_json::to_string_pretty(&value).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            theorems,
            known,
            no_known,
            context,
            output,
        } => {
            let g = read_graph(&input)?;
            let opts = verify_options(&context, &theorems, &known, no_known);
            let mut inputs = context_inputs(&context);
            inputs.insert("input".into(), input.input.clone());
            let results = vec![verify_all(&g, 0, &opts)];
            let report = Report::assemble("verify".into(), inputs, results);
            emit_report(&report, &output)
        }
        Command::Sweep {
            count,
            n_min,
            n_max,
            edge_prob,
            m_min,
            m_max,
            constraints,
            seed,
            theorems,
            known,
            no_known,
            context,
            output,
        } => {
            let edges = match (edge_prob, m_min, m_max) {
                (Some(p), None, None) => EdgeSpec::Probability(p),
                (None, Some(lo), Some(hi)) => EdgeSpec::CountRange { lo, hi },
                (None, None, None) => EdgeSpec::Probability(0.5),
                _ => return Err("give either --edge-prob or --m-min/--m-max".into()),
            };
            let spec = CorpusSpec::new(count, (n_min, n_max), edges, seed)
                .with_constraints(&constraints);
            let graphs = random_corpus(&spec).map_err(|e| e.to_string())?;
            let opts = verify_options(&context, &theorems, &known, no_known);
            let mut inputs = context_inputs(&context);
            inputs.insert("count".into(), count.to_string());
            inputs.insert("n_range".into(), format!("{n_min}..={n_max}"));
            inputs.insert("edges".into(), format!("{edges:?}"));
            inputs.insert("seed".into(), seed.to_string());
            inputs.insert(
                "constraints".into(),
                constraints
                    .iter()
                    .map(|c| c.name())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let results = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| verify_all(g, i, &opts))
                .collect();
            let report = Report::assemble("sweep".into(), inputs, results);
            emit_report(&report, &output)
        }
        Command::Formulas {
            name,
            args,
            odd,
            triangle_free,
        } => {
            let value = evaluate_formula(&name, &args, odd, triangle_free)?;
            print_stdout(&value.to_string());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn arity<const N: usize>(name: &str, args: &[i64]) -> Result<[i64; N], String> {
    <[i64; N]>::try_from(args)
        .map_err(|_| format!("`{name}` takes {N} argument(s), got {}", args.len()))
}

fn genus_arg(x: i64) -> Result<u32, String> {
    u32::try_from(x).map_err(|_| format!("genus must be non-negative, got {x}"))
}

fn evaluate_formula(
    name: &str,
    args: &[i64],
    odd: bool,
    triangle_free: bool,
) -> Result<ExactValue, String> {
    let lname = name.to_ascii_lowercase();
    match lname.as_str() {
        "h1" => {
            let [x] = arity::<1>(name, args)?;
            return Ok(ExactValue::Int(surface::h1(genus_arg(x)?)));
        }
        "h2" => {
            let [x] = arity::<1>(name, args)?;
            return Ok(ExactValue::Int(surface::h2(genus_arg(x)?)));
        }
        "k1" => {
            let [x] = arity::<1>(name, args)?;
            return Ok(ExactValue::Int(
                surface::k1(genus_arg(x)?).map_err(|e| e.to_string())?,
            ));
        }
        "k2" => {
            let [x] = arity::<1>(name, args)?;
            return Ok(ExactValue::Int(
                surface::k2(genus_arg(x)?).map_err(|e| e.to_string())?,
            ));
        }
        "chi-orientable" => {
            let [h] = arity::<1>(name, args)?;
            return Ok(ExactValue::Int(
                surface::euler_characteristic(true, genus_arg(h)?).map_err(|e| e.to_string())?,
            ));
        }
        "chi-nonorientable" => {
            let [q] = arity::<1>(name, args)?;
            return Ok(ExactValue::Int(
                surface::euler_characteristic(false, genus_arg(q)?).map_err(|e| e.to_string())?,
            ));
        }
        _ => {}
    }
    let theorem: TheoremId = name.parse()?;
    match theorem {
        TheoremId::T31i => {
            let [gamma_t, chi] = arity::<2>(name, args)?;
            Ok(surface::rhs_t3_1_i(gamma_t, chi))
        }
        TheoremId::T31ii => {
            let [n, chi] = arity::<2>(name, args)?;
            Ok(surface::rhs_t3_1_ii(n, chi, odd))
        }
        TheoremId::T32eq1 => {
            let [gamma_w, chi] = arity::<2>(name, args)?;
            Ok(surface::rhs_t3_2_eq1(gamma_w, chi))
        }
        TheoremId::T32eq2 => {
            let [n, chi] = arity::<2>(name, args)?;
            Ok(surface::rhs_t3_2_eq2(n, chi))
        }
        TheoremId::T33 => {
            let [n, chi] = arity::<2>(name, args)?;
            Ok(surface::rhs_t3_3(n, chi))
        }
        TheoremId::T41i | TheoremId::T41ii => {
            let [g, gbar] = arity::<2>(name, args)?;
            let (g, gbar) = (genus_arg(g)?, genus_arg(gbar)?);
            let tf = triangle_free || theorem == TheoremId::T41ii;
            let h = if tf { surface::h2(g) } else { surface::h1(g) };
            let k = if tf { surface::k2(gbar) } else { surface::k1(gbar) }
                .map_err(|e| e.to_string())?;
            Ok(ExactValue::Int(h.min(k) - 2))
        }
        TheoremId::T42i => {
            let [xi, dmax] = arity::<2>(name, args)?;
            Ok(ExactValue::Int(xi + dmax - 2))
        }
        TheoremId::T42ii => {
            let [g, dmax] = arity::<2>(name, args)?;
            let g = genus_arg(g)?;
            let h = if triangle_free { surface::h2(g) } else { surface::h1(g) };
            Ok(ExactValue::Int(h + dmax - 4))
        }
        TheoremId::T42iii => {
            let [gbar, dmax] = arity::<2>(name, args)?;
            let k = if triangle_free {
                surface::k2(genus_arg(gbar)?)
            } else {
                surface::k1(genus_arg(gbar)?)
            }
            .map_err(|e| e.to_string())?;
            Ok(ExactValue::Int(k + dmax - 4))
        }
        TheoremId::T42iv => {
            let [n, m, dmax] = arity::<3>(name, args)?;
            surface::rhs_t4_2_iv(n, m, dmax)
                .map(ExactValue::rational)
                .ok_or_else(|| "n must be positive".into())
        }
        TheoremId::T42v => {
            let [n, girth, chi, dmax] = arity::<4>(name, args)?;
            surface::rhs_t4_2_v(n, girth, chi, dmax)
                .map(ExactValue::rational)
                .ok_or_else(|| "requires n >= 1 and finite girth >= 3".into())
        }
        TheoremId::T43 => {
            let [i] = arity::<1>(name, args)?;
            if !(0..=1).contains(&i) {
                return Err(format!("i must be 0 or 1, got {i}"));
            }
            Ok(ExactValue::Int(14 - i))
        }
        TheoremId::T44 => {
            arity::<0>(name, args)?;
            Ok(ExactValue::Int(14))
        }
    }
}

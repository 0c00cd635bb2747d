//! `cordial`: JSON front end for the cordial graph toolkit.
//!
//! Every run prints exactly one JSON document on stdout (`"schema": 1`).
//! Timing and progress go to stderr. Exit codes: 0 success (or the property
//! holds), 1 the checked property fails, 2 usage or input error, 3 size or
//! budget limit.
//!
//! Named graphs accepted by `--named` (vertices numbered from 0):
//!
//! | tag                         | n  | edges                                   |
//! |-----------------------------|----|-----------------------------------------|
//! | `k2`                        | 2  | 01                                      |
//! | `2k2`                       | 4  | 01 23                                   |
//! | `3k2`                       | 6  | 01 23 45                                |
//! | `p3`, `2-star`              | 3  | 01 12                                   |
//! | `p4`, `3-path`              | 4  | 01 12 23                                |
//! | `k13`, `claw`               | 4  | 01 02 03                                |
//! | `2-star+k2`                 | 5  | 01 12 34                                |
//! | `k3`, `triangle`            | 3  | 01 02 12                                |
//! | `c4`                        | 4  | 01 12 23 03                             |
//! | `paw`, `triangle+pendant`   | 4  | 01 02 12 23                             |
//! | `petersen`                  | 10 | i,i+1 (mod 5); i,i+5; 5+i,5+(i+2 mod 5) |
//! | `kN`, `1 <= N <= 16`        | N  | all pairs                               |

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cordial::error::CordialError;
use cordial::labeling::{self, Domain, Property};
use cordial::preserver::{self, SearchMode};
use cordial::{enumerate_graphs, extremal, parse_graph6, Graph, LinearOperator};
use serde_json::{json, Value};

use crate::report::{graph_json, operator_json, verdict_json};

#[derive(Parser, Debug)]
#[command(name = "cordial", version, about = "Cordial labelings, edge bounds and linear preservers of small graphs")]
struct Cli {
    /// Worker threads for the exhaustive searches (default: all cores).
    #[arg(long, global = true, env = "CORDIAL_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    Sum,
    Product,
    Orient23,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Sum => Property::Sum,
            PropertyArg::Product => Property::Product,
            PropertyArg::Orient23 => Property::Orient23,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtremalMode {
    Empirical,
    Minimal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PreserverMode {
    Exhaustive,
    VertexOnly,
    Sample,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide one property for one graph and print a witness.
    Check {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long, conflicts_with = "named", required_unless_present = "named")]
        graph6: Option<String>,
        #[arg(long)]
        named: Option<String>,
        /// Label every vertex, isolated ones included.
        #[arg(long)]
        ambient: bool,
    },
    /// Closed-form edge bound, optionally with the exhaustive maximum.
    Bound {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        empirical: bool,
    },
    /// Densest members on n vertices, or sparsest non-members.
    Extremal {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long, required_if_eq("mode", "empirical"))]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "empirical")]
        mode: ExtremalMode,
        /// Largest edge count scanned in minimal mode.
        #[arg(long, default_value_t = 4)]
        edge_cap: usize,
    },
    /// One canonical representative per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: usize,
    },
    /// Search for linear operators that strongly preserve a property.
    Preservers {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: PreserverMode,
        /// Random draws (sample) or random test graphs (vertex-only, n >= 7).
        #[arg(long, default_value_t = 100_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Operators listed in the report; the total is always reported.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Write each listed operator as a table file into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Load an operator table and test strong preservation.
    OperatorCheck {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Bound { .. } => "bound",
            Command::Extremal { .. } => "extremal",
            Command::Enumerate { .. } => "enumerate",
            Command::Preservers { .. } => "preservers",
            Command::OperatorCheck { .. } => "operator-check",
        }
    }
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(kind: &'static str, message: impl Into<String>) -> Self {
        Failure { code: 2, kind, message: message.into() }
    }
}

impl From<CordialError> for Failure {
    fn from(e: CordialError) -> Self {
        let (code, kind) = match &e {
            CordialError::Graph6(_) => (2, "malformed_graph6"),
            CordialError::UnknownTag(_) => (2, "unknown_tag"),
            CordialError::Table(_) => (2, "malformed_table"),
            CordialError::BoundDomain { .. } => (2, "out_of_domain"),
            CordialError::Budget(_)
            | CordialError::EnumerationTooLarge { .. }
            | CordialError::CanonicalTooLarge { .. }
            | CordialError::TooManyEdges { .. }
            | CordialError::VertexCount(_) => (3, "budget"),
            _ => (2, "invalid_input"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

struct Success {
    code: u8,
    inputs: Value,
    result: Value,
}

fn run(command: &Command) -> Result<Success, Failure> {
    match command {
        Command::Check { property, graph6, named, ambient } => {
            let g = match (graph6, named) {
                (Some(text), _) => parse_graph6(text)?,
                (None, Some(tag)) => Graph::named(tag)?,
                (None, None) => return Err(Failure::usage("usage", "one of --graph6 or --named is required")),
            };
            let p = Property::from(*property);
            let domain = if *ambient { Domain::Ambient } else { Domain::NonIsolated };
            let v = labeling::check_in(&g, p, domain)?;
            Ok(Success {
                code: if v.decision { 0 } else { 1 },
                inputs: json!({
                    "property": p.name(),
                    "graph6": graph6,
                    "named": named,
                    "domain": if *ambient { "ambient" } else { "non-isolated" },
                    "graph": graph_json(&g),
                }),
                result: verdict_json(&g, p, &v),
            })
        }
        Command::Bound { property, n, empirical } => {
            let p = Property::from(*property);
            let r = extremal::bound_report(*n, p, *empirical)?;
            let mut result = json!({ "paper_bound": r.paper_bound });
            if let Some(alt) = r.alternate_bound {
                result["alternate_bound"] = json!(alt);
            }
            if let Some(e) = &r.empirical {
                result["empirical"] = report::empirical_json(e)?;
                result["within_bound"] = json!(r.within_bound());
                result["paper_attained"] = json!(r.paper_attained());
                if let Some(f) = r.product_finding() {
                    result["product_finding"] = json!(format!("{f:?}").to_lowercase());
                }
            }
            Ok(Success { code: 0, inputs: json!({ "property": p.name(), "n": n, "empirical": empirical }), result })
        }
        Command::Extremal { property, n, mode, edge_cap } => {
            let p = Property::from(*property);
            match mode {
                ExtremalMode::Empirical => {
                    let n = n.ok_or_else(|| Failure::usage("usage", "--n is required in empirical mode"))?;
                    let e = extremal::empirical_max_edges(n, p)?;
                    let mut result = report::empirical_json(&e)?;
                    if let Ok(r) = extremal::bound_report(n, p, false) {
                        result["paper_bound"] = json!(r.paper_bound);
                        if let Some(alt) = r.alternate_bound {
                            result["alternate_bound"] = json!(alt);
                        }
                    }
                    Ok(Success { code: 0, inputs: json!({ "property": p.name(), "n": n, "mode": "empirical" }), result })
                }
                ExtremalMode::Minimal => {
                    let found = extremal::minimal_noncordial(p, *edge_cap)?;
                    let graphs: Vec<Value> =
                        found.iter().map(|(m, g)| json!({ "edges": m, "graph": graph_json(g) })).collect();
                    Ok(Success {
                        code: 0,
                        inputs: json!({ "property": p.name(), "mode": "minimal", "edge_cap": edge_cap }),
                        result: json!({ "count": graphs.len(), "failures": graphs }),
                    })
                }
            }
        }
        Command::Enumerate { n, edges } => {
            let classes = enumerate_graphs(*n, *edges)?;
            let graphs: Vec<String> = classes.iter().map(cordial::to_graph6).collect();
            Ok(Success {
                code: 0,
                inputs: json!({ "n": n, "edges": edges }),
                result: json!({ "count": graphs.len(), "graph6": graphs }),
            })
        }
        Command::Preservers { property, n, mode, count, seed, limit, export } => {
            let p = Property::from(*property);
            let (mode_name, search) = match mode {
                PreserverMode::Exhaustive => ("exhaustive", SearchMode::ExhaustiveBijective),
                PreserverMode::VertexOnly => ("vertex-only", SearchMode::VertexOnly { samples: *count, seed: *seed }),
                PreserverMode::Sample => ("sample", SearchMode::SampledNonbijective { count: *count, seed: *seed }),
            };
            let out = preserver::search_strong_preservers(*n, p, search)?;
            let listed = &out.operators[..out.operators.len().min(*limit)];
            if let Some(dir) = export {
                std::fs::create_dir_all(dir).map_err(|e| Failure::usage("io", format!("{}: {e}", dir.display())))?;
                for (i, op) in listed.iter().enumerate() {
                    let path = dir.join(format!("{i:05}.table"));
                    std::fs::write(&path, op.to_table())
                        .map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))?;
                }
            }
            let ops: Vec<Value> = listed.iter().map(operator_json).collect();
            let vertex_induced = ops.iter().filter(|o| o["vertex_permutation"] == json!(true)).count();
            Ok(Success {
                code: 0,
                inputs: json!({
                    "property": p.name(),
                    "n": n,
                    "mode": mode_name,
                    "count": count,
                    "seed": seed,
                    "limit": limit,
                }),
                result: json!({
                    "preserver_count": out.preserver_count,
                    "listed": ops.len(),
                    "truncated": (ops.len() as u64) < out.preserver_count,
                    "listed_vertex_permutations": vertex_induced,
                    "all_listed_vertex_permutations": vertex_induced == ops.len(),
                    "candidates_examined": out.candidates_examined,
                    "pruned": out.pruned,
                    "vertex_induced_skipped": out.vertex_induced_skipped,
                    "failures_verified": out.failures_verified,
                    "operators": ops,
                }),
            })
        }
        Command::OperatorCheck { table, property } => {
            let text = std::fs::read_to_string(table)
                .map_err(|e| Failure::usage("io", format!("{}: {e}", table.display())))?;
            let op = LinearOperator::from_table(&text)?;
            let p = Property::from(*property);
            let v = preserver::strongly_preserves(&op, p)?;
            let mut result = operator_json(&op);
            result["strongly_preserves"] = json!(v.strongly_preserves);
            result["nonsingular"] = json!(preserver::is_nonsingular(&op));
            if let Ok((injective, surjective)) = preserver::image_scan(&op) {
                result["injective"] = json!(injective);
                result["surjective"] = json!(surjective);
            }
            result["counterexample"] = match &v.counterexample {
                Some(g) => json!({
                    "graph": graph_json(g),
                    "image": graph_json(&op.apply(g)?),
                    "verified": preserver::verify_counterexample(&op, p, g),
                }),
                None => Value::Null,
            };
            Ok(Success {
                code: 0,
                inputs: json!({ "property": p.name(), "table": table.display().to_string(), "n": op.n() }),
                result,
            })
        }
    }
}

fn emit(doc: &Value) {
    println!("{}", serde_json::to_string(doc).expect("json"));
}

fn error_doc(command: Option<&str>, f: &Failure) -> Value {
    json!({
        "schema": 1,
        "command": command,
        "error": { "kind": f.kind, "message": f.message, "exit_code": f.code },
    })
}

fn configure_threads(threads: Option<usize>) -> Result<(), Failure> {
    let Some(t) = threads else { return Ok(()) };
    if t == 0 {
        return Err(Failure::usage("usage", "--threads must be at least 1"));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(t)
        .build_global()
        .map_err(|e| Failure::usage("usage", e.to_string()))?;
    #[cfg(not(feature = "parallel"))]
    if t > 1 {
        eprintln!("built without the parallel feature; running on one thread");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            emit(&error_doc(None, &Failure::usage("usage", e.kind().to_string())));
            return ExitCode::from(2);
        }
    };
    let name = cli.command.name();
    if let Err(f) = configure_threads(cli.threads) {
        emit(&error_doc(Some(name), &f));
        return ExitCode::from(f.code);
    }
    let start = Instant::now();
    let outcome = run(&cli.command);
    eprintln!("{name}: {:.3?} on {} worker(s)", start.elapsed(), cordial::par::workers());
    match outcome {
        Ok(s) => {
            emit(&json!({ "schema": 1, "command": name, "inputs": s.inputs, "result": s.result }));
            ExitCode::from(s.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            emit(&error_doc(Some(name), &f));
            ExitCode::from(f.code)
        }
    }
}

//! `clusterscope`: command-line workbench for skew-symmetric cluster
//! algebras.
//!
//! Exit codes: 0 success, 1 negative or failed mathematical outcome,
//! 2 usage or parse error, 3 budget exhausted without a decision.
//! Quiver files use the `.qvr` text format; `-` (or omitting the file)
//! reads standard input, so commands pipe into each other. All vertex
//! numbers on the command line and in output are 1-based.

mod cert;
mod formats;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clusterscope_core::*;
use num_traits::One;
use serde_json::{json, Value};

use cert::{parse_certificate, shape, write_certificate};
use formats::{parse_assignment, parse_qvr, parse_surface, path_text, rational_text, write_qvr};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(name = "clusterscope", version, about = "Exact workbench for quiver mutation, covering pairs, acyclic covers and surface classification")]
struct Cli {
    /// Emit a JSON payload instead of the human-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for class scans; defaults to $CLUSTERSCOPE_THREADS
    /// or 1. Results never depend on the count.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArg {
    /// Quiver file in .qvr format; `-` or absent reads stdin.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StopArg {
    Acyclic,
    Isolated,
}

impl From<StopArg> for StopPredicate {
    fn from(s: StopArg) -> Self {
        match s {
            StopArg::Acyclic => StopPredicate::Acyclic,
            StopArg::Isolated => StopPredicate::Isolated,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Mutate a quiver along a path and print the result as .qvr.
    Mutate {
        #[command(flatten)]
        file: FileArg,
        /// Comma-separated 1-based vertices, e.g. 1,3,1.
        #[arg(long)]
        path: String,
    },
    /// Enumerate the mutation class up to budgets.
    Class {
        #[command(flatten)]
        file: FileArg,
        /// Maximum number of members to collect.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Maximum mutation depth.
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Search the mutation class for an acyclic member.
    FindAcyclic {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// List the covering pairs of a quiver.
    CoveringPairs {
        #[command(flatten)]
        file: FileArg,
    },
    /// Run the recursive acyclic-cover search and emit a certificate.
    Banff {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum, default_value = "acyclic")]
        stop: StopArg,
        /// Maximum members per class scan.
        #[arg(long, default_value_t = 10_000)]
        class_budget: usize,
        /// Maximum depth per class scan.
        #[arg(long, default_value_t = 8)]
        depth_budget: usize,
        /// Global member-visit allowance.
        #[arg(long, default_value_t = 100_000)]
        node_budget: usize,
        /// Carry Laurent clusters and attach them to leaves.
        #[arg(long)]
        seed_level: bool,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate independently of the search that made it.
    BanffVerify {
        /// Certificate file; `-` or absent reads stdin.
        cert: Option<PathBuf>,
    },
    /// Marked-surface computations.
    Surface {
        #[command(subcommand)]
        cmd: SurfaceCommand,
    },
    /// Print a named example quiver, or list all names.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Emit the entry's surface descriptor instead of the quiver.
        #[arg(long)]
        surface: bool,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the generators and relations of an acyclic seed.
    Present {
        #[command(flatten)]
        file: FileArg,
    },
    /// Rank identity between the relation Jacobian and the exchange
    /// matrix on an isolated seed.
    JacobianCheck {
        #[command(flatten)]
        file: FileArg,
        /// Frozen values as 1-based v=r pairs, e.g. 2=3,5=-1/2.
        #[arg(long, default_value = "")]
        frozen: String,
    },
    /// Build and verify the degenerate homomorphism of a pairless class.
    DegenerateHom {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Evaluate clusters numerically along a mutation path.
    Evaluate {
        #[command(flatten)]
        file: FileArg,
        /// Start values as 1-based v=r pairs covering every vertex.
        #[arg(long)]
        start: String,
        /// Comma-separated 1-based mutation path.
        #[arg(long)]
        path: String,
    },
    /// Explore all mutation paths to a depth, checking exact division.
    LaurentCheck {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// Number of arcs in any tagged triangulation.
    Rank {
        /// Surface descriptor file; `-` or absent reads stdin.
        file: Option<PathBuf>,
    },
    /// Decide local acyclicity from the shape of the surface.
    Classify {
        file: Option<PathBuf>,
    },
}

/// A finished command: exit code, human report, optional JSON payload.
struct Outcome {
    code: u8,
    report: String,
    payload: Value,
}

fn outcome(code: u8, report: impl Into<String>, payload: Value) -> Result<Outcome, Failure> {
    Ok(Outcome { code, report: report.into(), payload })
}

/// An error that aborts the command with a code and message.
struct Failure {
    code: u8,
    message: String,
}

fn usage_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("CLUSTERSCOPE_THREADS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1);
    match run(cli.command, threads) {
        Ok(out) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&out.payload).expect("valid json"));
            } else if !out.report.is_empty() {
                emit(out.report.trim_end());
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            if cli.json {
                let payload = json!({ "error": f.message });
                emit(&serde_json::to_string_pretty(&payload).expect("valid json"));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

/// Print a line to stdout, staying quiet if the reader has gone away
/// (e.g. the downstream end of a pipe closed early).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
    let _ = out.flush();
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| usage_error(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage_error(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load_quiver(file: &FileArg) -> Result<(IceQuiver, String), Failure> {
    let text = read_input(&file.file)?;
    parse_qvr(&text).map_err(|e| usage_error(format!("bad quiver: {e}")))
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<String, Failure> {
    match out {
        Some(p) => {
            std::fs::write(p, text)
                .map_err(|e| usage_error(format!("cannot write {}: {e}", p.display())))?;
            Ok(format!("wrote {}", p.display()))
        }
        None => Ok(text.trim_end().to_string()),
    }
}

fn run(command: Command, threads: usize) -> Result<Outcome, Failure> {
    match command {
        Command::Mutate { file, path } => {
            let (q, name) = load_quiver(&file)?;
            let path = formats::parse_path(&path).map_err(usage_error)?;
            let mut current = q;
            for (i, &k) in path.iter().enumerate() {
                current = current.mutate(k).map_err(|e| Failure {
                    code: EXIT_NEGATIVE,
                    message: format!("step {}: {e}", i + 1),
                })?;
            }
            let text = write_qvr(&current, &name);
            outcome(
                EXIT_OK,
                text.clone(),
                json!({
                    "command": "mutate",
                    "path": path.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    "quiver": text,
                }),
            )
        }
        Command::Class { file, budget, depth } => {
            let (q, _) = load_quiver(&file)?;
            let budgets = Budgets { class_members: budget, depth, nodes: usize::MAX };
            let class = mutation_class_threads(&q, &budgets, threads);
            let code = if class.complete { EXIT_OK } else { EXIT_INDETERMINATE };
            let report = format!(
                "members: {}\ncomplete: {}\nfrontier depth: {}",
                class.size, class.complete, class.frontier_depth
            );
            outcome(
                code,
                report,
                json!({
                    "command": "class",
                    "members": class.size,
                    "complete": class.complete,
                    "frontier_depth": class.frontier_depth,
                }),
            )
        }
        Command::FindAcyclic { file, depth } => {
            let (q, _) = load_quiver(&file)?;
            let budgets = Budgets { class_members: 10_000, depth, nodes: 100_000 };
            let out = find_acyclic_seed(&q, &budgets);
            let (code, report) = match &out.verdict {
                SearchVerdict::Found { path, .. } => {
                    (EXIT_OK, format!("acyclic member at path {}", path_text(path)))
                }
                SearchVerdict::ProvenAbsent => {
                    (EXIT_NEGATIVE, "no acyclic member in the complete class".to_string())
                }
                SearchVerdict::BudgetExhausted => {
                    (EXIT_INDETERMINATE, "budget exhausted before a decision".to_string())
                }
            };
            let path = match &out.verdict {
                SearchVerdict::Found { path, .. } => {
                    Some(path.iter().map(|k| k + 1).collect::<Vec<_>>())
                }
                _ => None,
            };
            outcome(
                code,
                report,
                json!({
                    "command": "find-acyclic",
                    "verdict": verdict_name(&out.verdict),
                    "path": path,
                    "nodes_expanded": out.stats.nodes_expanded,
                }),
            )
        }
        Command::CoveringPairs { file } => {
            let (q, _) = load_quiver(&file)?;
            let pairs = q.covering_pairs();
            let report = if pairs.is_empty() {
                "none".to_string()
            } else {
                pairs
                    .iter()
                    .map(|p| format!("{} -> {}", p.source + 1, p.target + 1))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let code = if pairs.is_empty() { EXIT_NEGATIVE } else { EXIT_OK };
            outcome(
                code,
                report,
                json!({
                    "command": "covering-pairs",
                    "pairs": pairs
                        .iter()
                        .map(|p| json!([p.source + 1, p.target + 1]))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::Banff {
            file,
            stop,
            class_budget,
            depth_budget,
            node_budget,
            seed_level,
            out,
        } => {
            let (q, _) = load_quiver(&file)?;
            let budgets =
                Budgets { class_members: class_budget, depth: depth_budget, nodes: node_budget };
            let strategy = Strategy { seed_level, threads, ..Strategy::default() };
            match run_banff(&Seed::initial(q), stop.into(), &budgets, &strategy) {
                Ok(cert) => {
                    let (branches, leaves) = shape(&cert);
                    let text = write_certificate(&cert);
                    let summary = format!("cover found: {branches} branch(es), {leaves} leaf(ves)");
                    // Keep stdout parseable: when the certificate streams
                    // there, the summary moves to stderr.
                    let report = match &out {
                        Some(_) => {
                            let note = write_or_print(&out, &text)?;
                            format!("{summary}\n{note}")
                        }
                        None => {
                            eprintln!("{summary}");
                            text.trim_end().to_string()
                        }
                    };
                    outcome(
                        EXIT_OK,
                        report,
                        json!({
                            "command": "banff",
                            "outcome": "certificate",
                            "branches": branches,
                            "leaves": leaves,
                            "certificate": text,
                        }),
                    )
                }
                Err(BanffError::Failure(f)) => {
                    let code = match f {
                        FailureReport::NoCoveringPairInCompleteClass { .. } => EXIT_NEGATIVE,
                        FailureReport::BudgetExhausted { .. } => EXIT_INDETERMINATE,
                    };
                    let payload = match &f {
                        FailureReport::NoCoveringPairInCompleteClass { witness } => json!({
                            "command": "banff",
                            "outcome": "no-covering-pair",
                            "class_size": witness.size,
                        }),
                        FailureReport::BudgetExhausted { location, members_seen, depth_reached } => {
                            json!({
                                "command": "banff",
                                "outcome": "budget-exhausted",
                                "location": location,
                                "members_seen": members_seen,
                                "depth_reached": depth_reached,
                            })
                        }
                    };
                    Ok(Outcome { code, report: format!("{f}"), payload })
                }
                Err(e) => Err(Failure { code: EXIT_USAGE, message: format!("{e}") }),
            }
        }
        Command::BanffVerify { cert } => {
            let text = read_input(&cert)?;
            let cert = parse_certificate(&text)
                .map_err(|e| usage_error(format!("bad certificate: {e}")))?;
            match verify_certificate(&cert) {
                VerifyOutcome::Accept => outcome(
                    EXIT_OK,
                    "accept",
                    json!({ "command": "banff-verify", "outcome": "accept" }),
                ),
                VerifyOutcome::Reject { reason, node } => outcome(
                    EXIT_NEGATIVE,
                    format!("reject at node {node}: {reason}"),
                    json!({
                        "command": "banff-verify",
                        "outcome": "reject",
                        "node": node,
                        "reason": format!("{reason}"),
                    }),
                ),
            }
        }
        Command::Surface { cmd } => {
            let (file, want_rank) = match cmd {
                SurfaceCommand::Rank { file } => (file, true),
                SurfaceCommand::Classify { file } => (file, false),
            };
            let text = read_input(&file)?;
            let (descriptor, _) =
                parse_surface(&text).map_err(|e| usage_error(format!("bad surface: {e}")))?;
            if want_rank {
                match surface_rank(&descriptor) {
                    Ok(rank) => outcome(
                        EXIT_OK,
                        format!("rank: {rank}"),
                        json!({ "command": "surface-rank", "rank": rank }),
                    ),
                    Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
                }
            } else {
                match classify_surface(&descriptor) {
                    Ok(c) => {
                        let mut report = format!("verdict: {}", c.verdict);
                        for (i, (v, tag)) in c.components.iter().enumerate() {
                            report.push_str(&format!("\ncomponent {}: {} ({})", i + 1, v, tag));
                        }
                        let code = match c.verdict {
                            Verdict::LocallyAcyclic => EXIT_OK,
                            Verdict::NotLocallyAcyclic => EXIT_NEGATIVE,
                            Verdict::Unknown => EXIT_INDETERMINATE,
                        };
                        outcome(
                            code,
                            report,
                            json!({
                                "command": "surface-classify",
                                "verdict": format!("{}", c.verdict),
                                "components": c.components
                                    .iter()
                                    .map(|(v, tag)| json!({
                                        "verdict": format!("{v}"),
                                        "reason": format!("{tag}"),
                                    }))
                                    .collect::<Vec<_>>(),
                            }),
                        )
                    }
                    Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
                }
            }
        }
        Command::Catalog { name, list, surface, out } => {
            if list {
                let names = catalog_names().join("\n");
                return outcome(
                    EXIT_OK,
                    names,
                    json!({ "command": "catalog", "names": catalog_names() }),
                );
            }
            let Some(name) = name else {
                return Err(usage_error("catalog needs a name or --list"));
            };
            let q = catalog_quiver(&name)
                .map_err(|_| usage_error(format!("unknown catalog name `{name}`")))?;
            let text = if surface {
                let d = catalog_surface(&name).ok_or_else(|| {
                    usage_error(format!("`{name}` has no surface model in the catalog"))
                })?;
                formats::write_surface(&d, &name)
            } else {
                write_qvr(&q, &name)
            };
            let body = write_or_print(&out, &text)?;
            outcome(
                EXIT_OK,
                body,
                json!({ "command": "catalog", "name": name, "entry": text }),
            )
        }
        Command::Present { file } => {
            let (q, _) = load_quiver(&file)?;
            match acyclic_presentation(&Seed::initial(q)) {
                Ok(p) => {
                    let text = format!("{p}");
                    outcome(
                        EXIT_OK,
                        text.clone(),
                        json!({ "command": "present", "presentation": text }),
                    )
                }
                Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
            }
        }
        Command::JacobianCheck { file, frozen } => {
            let (q, _) = load_quiver(&file)?;
            let n = q.vertex_count();
            let values =
                parse_assignment(&frozen, n, num_rational::BigRational::one(), false)
                    .map_err(usage_error)?;
            match isolated_jacobian_check(&Seed::initial(q), &values) {
                Ok(JacobianOutcome::Pass { rank }) => outcome(
                    EXIT_OK,
                    format!("pass: rank {rank}"),
                    json!({ "command": "jacobian-check", "outcome": "pass", "rank": rank }),
                ),
                Ok(JacobianOutcome::Mismatch { jacobian_rank, exchange_rank }) => outcome(
                    EXIT_NEGATIVE,
                    format!("mismatch: jacobian rank {jacobian_rank}, exchange rank {exchange_rank}"),
                    json!({
                        "command": "jacobian-check",
                        "outcome": "mismatch",
                        "jacobian_rank": jacobian_rank,
                        "exchange_rank": exchange_rank,
                    }),
                ),
                Ok(JacobianOutcome::Vacuous { vertex }) => outcome(
                    EXIT_OK,
                    format!("vacuous: vertex {} has no arrows", vertex + 1),
                    json!({
                        "command": "jacobian-check",
                        "outcome": "vacuous",
                        "vertex": vertex + 1,
                    }),
                ),
                Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
            }
        }
        Command::DegenerateHom { file, depth } => {
            let (q, _) = load_quiver(&file)?;
            match build_degenerate_hom(&q, depth) {
                Ok(HomOutcome::Hom(h)) => {
                    // The explicit variable list can run to megabytes;
                    // report how many variables land on each value.
                    let mut by_value = std::collections::BTreeMap::new();
                    for val in h.values.values() {
                        *by_value.entry(rational_text(val)).or_insert(0usize) += 1;
                    }
                    let mut lines = vec![format!(
                        "homomorphism verified: {} relation(s) to depth {}, {} variable(s)",
                        h.relations_checked, h.depth, h.values.len()
                    )];
                    for (val, count) in &by_value {
                        lines.push(format!("{count} variable(s) -> {val}"));
                    }
                    outcome(
                        EXIT_OK,
                        lines.join("\n"),
                        json!({
                            "command": "degenerate-hom",
                            "outcome": "homomorphism",
                            "relations_checked": h.relations_checked,
                            "depth": h.depth,
                            "variables": h.values.len(),
                            "value_counts": by_value,
                        }),
                    )
                }
                Ok(HomOutcome::Inapplicable { path, pair }) => outcome(
                    EXIT_NEGATIVE,
                    format!(
                        "inapplicable: covering pair {} -> {} at path {}",
                        pair.source + 1,
                        pair.target + 1,
                        path_text(&path)
                    ),
                    json!({
                        "command": "degenerate-hom",
                        "outcome": "inapplicable",
                        "pair": [pair.source + 1, pair.target + 1],
                        "path": path.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    }),
                ),
                Ok(HomOutcome::Indeterminate) => outcome(
                    EXIT_INDETERMINATE,
                    "indeterminate: budget exhausted before a decision",
                    json!({ "command": "degenerate-hom", "outcome": "indeterminate" }),
                ),
                Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
            }
        }
        Command::Evaluate { file, start, path } => {
            let (q, _) = load_quiver(&file)?;
            let n = q.vertex_count();
            let start = parse_assignment(&start, n, num_rational::BigRational::one(), true)
                .map_err(usage_error)?;
            let path = formats::parse_path(&path).map_err(usage_error)?;
            match evaluate_cluster_point(&Seed::initial(q), &start, &path) {
                Ok(steps) => {
                    let mut lines = Vec::new();
                    for (t, p) in steps.iter().enumerate() {
                        let vals: Vec<String> = p.values.iter().map(rational_text).collect();
                        lines.push(format!("step {t}: {}", vals.join(" ")));
                    }
                    outcome(
                        EXIT_OK,
                        lines.join("\n"),
                        json!({
                            "command": "evaluate",
                            "steps": steps
                                .iter()
                                .map(|p| p.values.iter().map(rational_text).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                        }),
                    )
                }
                Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
            }
        }
        Command::LaurentCheck { file, depth } => {
            let (q, _) = load_quiver(&file)?;
            match laurent_check(&Seed::initial(q), depth) {
                Ok(states) => outcome(
                    EXIT_OK,
                    format!("checked {states} state(s) to depth {depth}: all exchanges exact"),
                    json!({
                        "command": "laurent-check",
                        "states": states,
                        "depth": depth,
                        "violations": 0,
                    }),
                ),
                Err(e) => Err(Failure { code: EXIT_NEGATIVE, message: format!("{e}") }),
            }
        }
    }
}

fn verdict_name(v: &SearchVerdict) -> &'static str {
    match v {
        SearchVerdict::Found { .. } => "found",
        SearchVerdict::ProvenAbsent => "proven-absent",
        SearchVerdict::BudgetExhausted => "budget-exhausted",
    }
}

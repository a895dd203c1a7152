//! Command-line front end: solve list-coloring instances from files, audit
//! Hall's condition, compute certified bounds, verify the built-in
//! constructions and known values, scan the equality conjecture, and dump the
//! constructions in the text formats.
//!
//! Exit codes: 0 success/satisfied/colorable, 1 negative verdict (not
//! colorable, violated, mismatch), 2 parse or argument error, 3 capability
//! exceeded, 4 inconclusive (shortcut method only), 10 internal error.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hallnum::constructions::{verify_construction, ConstructionName, ConstructionSpec};
use hallnum::graph::Graph;
use hallnum::hall::{self, ShortcutCheck};
use hallnum::params::scan::conjecture_scan;
use hallnum::params::{parameter_bundle, BoundsOptions, Budget, Parameter};
use hallnum::solver;
use hallnum::textio;
use hallnum::{Error, ListAssignment};
use output::Sink;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hallnum",
    version,
    about = "Exact list-coloring toolkit for small graphs"
)]
struct Cli {
    /// Output style: human text or line-oriented key:value records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the parallel sections (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Exhaustive,
    Shortcut,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OracleFlag {
    On,
    Off,
}

#[derive(Args)]
struct BoundsFlags {
    /// Use the table of known values.
    #[arg(long, value_enum, default_value_t = OracleFlag::On)]
    oracle: OracleFlag,

    /// Enumeration budget (search nodes and candidates).
    #[arg(long, default_value_t = 200_000)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Find a proper list coloring, or report that none exists.
    Solve { graph: PathBuf, lists: PathBuf },
    /// Audit Hall's condition for a graph and a list assignment.
    Hall {
        graph: PathBuf,
        lists: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Certified bounds for the chromatic, choice, and Hall numbers.
    Bounds {
        graph: PathBuf,
        #[command(flatten)]
        flags: BoundsFlags,
        /// Also print the serialized certificates.
        #[arg(long)]
        certificates: bool,
    },
    /// Re-derive every built-in construction and known parameter value.
    Verify {
        #[command(flatten)]
        flags: BoundsFlags,
    },
    /// Compare the Hall number against the choice number on every complete
    /// multipartite graph with all parts of size at least two.
    Scan {
        #[arg(long)]
        max_vertices: usize,
        #[command(flatten)]
        flags: BoundsFlags,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a built-in construction in the text formats.
    Dump {
        /// One of: figure1, theorem3, theorem4-odd, theorem4-k3.
        construction: String,
        #[arg(long)]
        k: Option<usize>,
        /// Write the graph here (stdout when omitted).
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Write the lists here (stdout when omitted).
        #[arg(long)]
        lists_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // Ignore failure: the global pool can only be set once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build_global();
    }
    let mut sink = Sink::new(cli.format == Format::Records);
    let code = match run(&cli.command, &mut sink) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err.downcast_ref::<Error>() {
                Some(Error::Parse { .. }) | Some(Error::InvalidArgument(_)) => ExitCode::from(2),
                Some(Error::Capability { .. }) => ExitCode::from(3),
                _ => ExitCode::from(10),
            }
        }
    };
    code
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(textio::parse_graph(&src)?)
}

fn read_instance(graph: &Path, lists: &Path) -> anyhow::Result<ListAssignment> {
    let g = read_graph(graph)?;
    let src = std::fs::read_to_string(lists)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", lists.display()))?;
    Ok(textio::parse_lists(&src, &g)?)
}

fn bounds_options(flags: &BoundsFlags) -> BoundsOptions {
    BoundsOptions {
        use_oracle: flags.oracle == OracleFlag::On,
        ..BoundsOptions::default()
    }
}

fn run(command: &Command, sink: &mut Sink) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve { graph, lists } => {
            let l = read_instance(graph, lists)?;
            let outcome = solver::find_coloring(&l);
            sink.record("solve");
            sink.kv("nodes-explored", outcome.nodes_explored);
            if let Some(coloring) = &outcome.coloring {
                sink.kv("result", "colorable");
                for (v, c) in coloring.pairs() {
                    sink.line(&format!(
                        "color {}: {}",
                        l.graph().label(v),
                        l.palette().name(c)
                    ));
                }
                sink.flush();
                Ok(ExitCode::SUCCESS)
            } else {
                sink.kv("result", "not-colorable");
                sink.line("NOT COLORABLE");
                sink.flush();
                Ok(ExitCode::from(1))
            }
        }

        Command::Hall {
            graph,
            lists,
            method,
        } => {
            let l = read_instance(graph, lists)?;
            sink.record("hall");
            let report = match method {
                Method::Exhaustive => hall::check_hall_exhaustive(&l)?,
                Method::Shortcut => {
                    match hall::check_hall_shortcut(&l, solver::find_coloring_within)? {
                        ShortcutCheck::Satisfied(r) | ShortcutCheck::TopLevelViolated(r) => r,
                        ShortcutCheck::Inconclusive { blocking_vertex } => {
                            sink.kv("result", "inconclusive");
                            sink.kv("blocking-vertex", l.graph().label(blocking_vertex));
                            sink.line(&format!(
                                "INCONCLUSIVE: deleting {} leaves no proper coloring; run --method exhaustive",
                                l.graph().label(blocking_vertex)
                            ));
                            sink.flush();
                            return Ok(ExitCode::from(4));
                        }
                    }
                }
                Method::Auto => {
                    match hall::check_hall_shortcut(&l, solver::find_coloring_within)? {
                        ShortcutCheck::Satisfied(r) | ShortcutCheck::TopLevelViolated(r) => r,
                        ShortcutCheck::Inconclusive { .. } => hall::check_hall_exhaustive(&l)?,
                    }
                }
            };
            let verdict = if report.satisfied {
                "SATISFIED"
            } else {
                "VIOLATED"
            };
            sink.kv("result", verdict.to_lowercase());
            sink.kv("method", format!("{:?}", report.method));
            sink.kv("worst-margin", report.worst_margin);
            let witness: Vec<String> = report.witness.iter().map(|v| l.graph().label(v)).collect();
            sink.kv("witness", format!("{{{}}}", witness.join(",")));
            sink.line(&format!(
                "{verdict} (method {:?}, worst margin {}, witness {{{}}})",
                report.method,
                report.worst_margin,
                witness.join(",")
            ));
            sink.flush();
            Ok(if report.satisfied {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Bounds {
            graph,
            flags,
            certificates,
        } => {
            let g = read_graph(graph)?;
            let opts = bounds_options(flags);
            let mut budget = Budget::new(flags.budget);
            let bundle = parameter_bundle(&g, &opts, &mut budget)?;
            sink.record("bounds");
            for b in [&bundle.chi, &bundle.ch, &bundle.hall] {
                sink.kv(&format!("{}-lower", b.parameter), b.lower);
                sink.kv(&format!("{}-upper", b.parameter), b.upper);
                sink.line(&format!(
                    "{} = {}  [lower: {}; upper: {}]",
                    b.parameter,
                    b.render_interval(),
                    b.lower_cert.summary(),
                    b.upper_cert.summary()
                ));
            }
            if let Some(reason) = &bundle.h_equals_ch {
                sink.kv("h-equals-ch", reason);
                sink.line(&format!("h = ch proven: {reason}"));
            }
            sink.kv("budget-used", budget.used());
            if *certificates {
                for b in [&bundle.ch, &bundle.hall] {
                    for side in ["lower", "upper"] {
                        sink.line(&textio::format_certificate(b, side));
                    }
                }
            }
            sink.flush();
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { flags } => {
            let opts = bounds_options(flags);
            let rows = run_verify(&opts, flags.budget)?;
            sink.record("verify");
            let mut failed = 0usize;
            for row in &rows {
                sink.record("verify-row");
                sink.kv("check", &row.name);
                sink.kv("expected", &row.expected);
                sink.kv("got", &row.got);
                sink.kv("status", row.status.as_str());
                sink.kv("basis", &row.basis);
                sink.line(&format!(
                    "{:<44} expected {:<12} got {:<12} {}",
                    row.name,
                    row.expected,
                    row.got,
                    row.status.as_str()
                ));
                if row.status == RowStatus::Fail {
                    failed += 1;
                }
            }
            sink.line(&format!("{} checks, {} failed", rows.len(), failed));
            sink.flush();
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Scan {
            max_vertices,
            flags,
            out,
        } => {
            let opts = bounds_options(flags);
            let report = conjecture_scan(*max_vertices, &opts, flags.budget)?;
            let mut body = Sink::new(true);
            body.record("scan");
            body.kv("max-vertices", report.max_vertices);
            body.kv("oracle", if report.oracle_used { "on" } else { "off" });
            body.kv("rows", report.rows.len());
            for row in &report.rows {
                body.record("scan-row");
                body.kv("graph", row.graph_name());
                body.kv("vertices", row.vertex_count);
                body.kv("chi", row.chi.render_interval());
                body.kv("ch-lower", row.ch.lower);
                body.kv("ch-upper", row.ch.upper);
                body.kv("h-lower", row.hall.lower);
                body.kv("h-upper", row.hall.upper);
                if let Some(reason) = &row.h_equals_ch {
                    body.kv("h-equals-ch", reason);
                }
                body.kv("status", row.status);
                if let Some(transcript) = &row.reverification {
                    for line in transcript {
                        body.kv("reverify", line);
                    }
                }
            }
            let text = body.into_string();
            match out {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?;
                    println!("wrote {} rows to {}", report.rows.len(), path.display());
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Dump {
            construction,
            k,
            graph_out,
            lists_out,
        } => {
            let name: ConstructionName = construction.parse()?;
            let spec = ConstructionSpec::new(name, *k);
            let (g, l) = spec.resolve()?;
            let graph_text = textio::format_graph(&g);
            let lists_text = textio::format_lists(&l);
            match graph_out {
                Some(path) => std::fs::write(path, &graph_text)
                    .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
                None => print!("{graph_text}"),
            }
            match lists_out {
                Some(path) => std::fs::write(path, &lists_text)
                    .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
                None => print!("{lists_text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum RowStatus {
    Pass,
    Bounded,
    Fail,
}

impl RowStatus {
    fn as_str(self) -> &'static str {
        match self {
            RowStatus::Pass => "PASS",
            RowStatus::Bounded => "BOUNDED",
            RowStatus::Fail => "FAIL",
        }
    }
}

struct VerifyRow {
    name: String,
    expected: String,
    got: String,
    status: RowStatus,
    /// What justifies the derived value (records mode only).
    basis: String,
}

fn claim_row(name: &str, expected: bool, got: bool) -> VerifyRow {
    VerifyRow {
        name: name.to_string(),
        expected: expected.to_string(),
        got: got.to_string(),
        status: if expected == got {
            RowStatus::Pass
        } else {
            RowStatus::Fail
        },
        basis: "re-derived by the verifier".into(),
    }
}

/// Re-derives every construction claim and every pinned parameter value,
/// comparing against the expected numbers.
fn run_verify(opts: &BoundsOptions, budget: u64) -> anyhow::Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();

    struct Expect {
        spec: ConstructionSpec,
        sum: i64,
        colorable_deletions: &'static str, // "all" or the expected exceptions
    }
    let expectations = [
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Figure1, None),
            sum: 4,
            colorable_deletions: "all",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem3, Some(3)),
            sum: 6,
            colorable_deletions: "all",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem3, Some(4)),
            sum: 8,
            colorable_deletions: "all",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem3, Some(5)),
            sum: 10,
            colorable_deletions: "all",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem3, Some(6)),
            sum: 12,
            colorable_deletions: "all",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem4Odd, Some(3)),
            sum: 9,
            colorable_deletions: "except x3,v3",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem4Odd, Some(5)),
            sum: 17,
            colorable_deletions: "all",
        },
        Expect {
            spec: ConstructionSpec::new(ConstructionName::Theorem4K3, None),
            sum: 8,
            colorable_deletions: "all",
        },
    ];

    for exp in &expectations {
        let report = verify_construction(&exp.spec)?;
        let tag = exp.spec.to_string();
        rows.push(claim_row(
            &format!("{tag}: not colorable"),
            true,
            report.claim1_not_colorable,
        ));
        rows.push(VerifyRow {
            name: format!("{tag}: support sum"),
            expected: exp.sum.to_string(),
            got: report.claim2_sum.to_string(),
            status: if report.claim2_sum == exp.sum {
                RowStatus::Pass
            } else {
                RowStatus::Fail
            },
            basis: "independence numbers of the support subgraphs".into(),
        });
        let non_colorable: Vec<String> = report
            .claim3_vertex_deleted
            .iter()
            .filter(|&&(_, ok)| !ok)
            .map(|&(v, _)| report.construction.resolve().unwrap().0.label(v))
            .collect();
        let got = if non_colorable.is_empty() {
            "all".to_string()
        } else {
            format!("except {}", non_colorable.join(","))
        };
        rows.push(VerifyRow {
            name: format!("{tag}: deletions colorable"),
            expected: exp.colorable_deletions.to_string(),
            got: got.clone(),
            status: if got == exp.colorable_deletions {
                RowStatus::Pass
            } else {
                RowStatus::Fail
            },
            basis: "one solver run per deleted vertex".into(),
        });
        rows.push(claim_row(
            &format!("{tag}: Hall's condition"),
            true,
            report.hall_overall.satisfied,
        ));
    }

    // Parameter values the families pin down.
    let value_checks: [(&str, Vec<usize>, Parameter, usize); 5] = [
        ("h(K(2,2))", vec![2, 2], Parameter::Hall, 2),
        ("h(K(2,2,2))", vec![2, 2, 2], Parameter::Hall, 3),
        ("h(K(4,2))", vec![4, 2], Parameter::Hall, 3),
        ("h(K(4,2,2))", vec![4, 2, 2], Parameter::Hall, 3),
        ("h(K(3,2))", vec![3, 2], Parameter::Hall, 2),
    ];
    for (name, parts, param, expected) in value_checks {
        let g = Graph::complete_multipartite(&parts)?;
        let mut b = Budget::new(budget);
        let bundle = parameter_bundle(&g, opts, &mut b)?;
        let bounds = match param {
            Parameter::Hall => &bundle.hall,
            Parameter::Ch => &bundle.ch,
            Parameter::Chi => &bundle.chi,
        };
        let (got, status) = match bounds.value() {
            Some(v) => (
                v.to_string(),
                if v == expected {
                    RowStatus::Pass
                } else {
                    RowStatus::Fail
                },
            ),
            None => (
                format!("[{}, {}]", bounds.lower, bounds.upper),
                if bounds.lower <= expected && expected <= bounds.upper {
                    RowStatus::Bounded
                } else {
                    RowStatus::Fail
                },
            ),
        };
        let mut basis = format!(
            "lower: {}; upper: {}",
            bounds.lower_cert.summary(),
            bounds.upper_cert.summary()
        );
        if let Some(reason) = &bundle.h_equals_ch {
            basis.push_str(&format!("; {reason}"));
        }
        rows.push(VerifyRow {
            name: name.to_string(),
            expected: expected.to_string(),
            got,
            status,
            basis,
        });
    }

    Ok(rows)
}

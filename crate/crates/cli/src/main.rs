//! `fsmp-lab` — scriptable front end for the matching preclusion library.
//!
//! Exit codes: 0 success/pass, 1 verification fail, 2 usage error,
//! 3 budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fsmp_core::harness::{
    self, CaseMode, ProductVerdict, SuiteReport, VerificationCase,
};
use fsmp_core::{
    classify_fault_set, fractional_pm, generate, has_pm_or_apm, is_fractional_strongly_super_matched,
    max_matching, preclusion_number, randomized_preclusion_probe, Error, FaultSet, GeneratorSpec,
    Graph, PreclusionVariant, ProbeConfig, SearchConfig,
};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fsmp-lab",
    about = "Matching preclusion numbers (mp, smp, fmp, fsmp), oracles, probes, and verification suites",
    version
)]
struct Cli {
    /// Worker threads for the search pool (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Mp,
    Smp,
    Fmp,
    Fsmp,
}

impl From<VariantArg> for PreclusionVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Mp => PreclusionVariant::Mp,
            VariantArg::Smp => PreclusionVariant::Smp,
            VariantArg::Fmp => PreclusionVariant::Fmp,
            VariantArg::Fsmp => PreclusionVariant::Fsmp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Probe,
}

impl From<ModeArg> for CaseMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exhaustive => CaseMode::Exhaustive,
            ModeArg::Probe => CaseMode::Probe,
        }
    }
}

#[derive(Args)]
struct GraphArg {
    /// Generator spec: cycle:5, complete:6, path:4, torus:5,5,5,
    /// cartesian(<spec>,<spec>), or file:PATH (edge-list format).
    #[arg(long)]
    graph: String,
}

impl GraphArg {
    fn build(&self) -> Result<Graph, Error> {
        generate(&GeneratorSpec::parse(&self.graph)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the matching oracles on a graph and report what they find.
    Oracle {
        #[command(flatten)]
        graph: GraphArg,
        /// Also print the fractional perfect matching witness, if any.
        #[arg(long)]
        witness: bool,
    },
    /// Compute a preclusion number by exhaustive ascending search.
    Number {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Enumerate and classify every optimal fault set.
        #[arg(long)]
        enumerate_all: bool,
        /// Candidate-subset budget (default 10^8; env FSMP_LAB_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        /// Restrict the domain to minimum-degree neighborhoods (marks the
        /// report heuristic; completeness not guaranteed).
        #[arg(long)]
        heuristic: bool,
    },
    /// Classify one fault set as not-precluding, trivial, or nontrivial.
    Classify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Vertex faults, comma separated (e.g. 0,3,7).
        #[arg(long, default_value = "")]
        vertices: String,
        /// Edge faults, comma separated u-v pairs (e.g. 0-1,4-5).
        #[arg(long, default_value = "")]
        edges: String,
    },
    /// Decide whether the graph is fractional strongly super matched.
    Super {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Sample random fault sets of one size and count how many preclude.
    Probe {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Fsmp)]
        variant: VariantArg,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Force trial 0 to be the incident-edge set of a minimum-degree
        /// vertex (requires size = δ).
        #[arg(long)]
        directed: bool,
    },
    /// Run a verification suite and report pass/fail per case.
    Verify {
        /// `default` or a path to a suite JSON file.
        #[arg(long, default_value = "default")]
        suite: String,
        /// Also write the machine-readable report to this path.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
    },
    /// Verify fsmp(G x C_n) = delta(G) + 2 for a qualifying base graph.
    ProductTheorem {
        #[command(flatten)]
        graph: GraphArg,
        /// Cycle length n (odd, >= 5).
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Probe)]
        mode: ModeArg,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("fsmp-lab: could not configure {threads} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    #[cfg(not(feature = "parallel"))]
    if let Some(threads) = cli.threads {
        if threads != 1 {
            eprintln!("fsmp-lab: built without the parallel feature; running single-threaded");
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fsmp-lab: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn default_budget() -> u64 {
    match std::env::var("FSMP_LAB_BUDGET") {
        Ok(v) => v.parse().unwrap_or(fsmp_core::preclusion::DEFAULT_BUDGET),
        Err(_) => fsmp_core::preclusion::DEFAULT_BUDGET,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let json = cli.output == Output::Json;
    match &cli.command {
        Command::Oracle { graph, witness } => {
            let g = graph.build()?;
            let m = max_matching(&g);
            let fractional = fractional_pm(&g);
            if json {
                let mut v = serde_json::json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "max_matching": m.size,
                    "has_pm_or_apm": has_pm_or_apm(&g),
                    "has_fractional_pm": fractional.is_some(),
                });
                if *witness {
                    v["witness"] = match &fractional {
                        Some(w) => w.to_json(),
                        None => serde_json::Value::Null,
                    };
                }
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("graph: {} vertices, {} edges", g.vertex_count(), g.edge_count());
                println!("maximum matching: {} edge(s)", m.size);
                println!(
                    "perfect or almost-perfect matching: {}",
                    if has_pm_or_apm(&g) { "yes" } else { "no" }
                );
                match &fractional {
                    Some(w) => {
                        println!("fractional perfect matching: yes");
                        if *witness {
                            println!("{}", serde_json::to_string(&w.to_json()).unwrap());
                        }
                    }
                    None => println!("no fractional perfect matching"),
                }
            }
            Ok(EXIT_OK)
        }
        Command::Number {
            graph,
            variant,
            enumerate_all,
            budget,
            heuristic,
        } => {
            let g = graph.build()?;
            let cfg = SearchConfig {
                budget: budget.unwrap_or_else(default_budget),
                enumerate_all: *enumerate_all,
                parallel: true,
                heuristic_neighborhood: *heuristic,
            };
            let report = preclusion_number(&g, (*variant).into(), &cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                println!("{}({}) = {}", report.variant.label().to_lowercase(), graph.graph, report.number);
                if report.already_precluded {
                    println!("graph is already precluded with no faults");
                } else {
                    println!("witness: {}", report.witness);
                }
                if let Some(count) = report.optimal_count {
                    println!(
                        "optimal sets: {count} (all trivial: {})",
                        report.all_optimal_trivial.map_or("?".into(), |b| b.to_string())
                    );
                }
                println!(
                    "subsets examined: {} in {} ms{}",
                    report.subsets_examined,
                    report.wall_time_ms,
                    if report.heuristic { " (heuristic domain)" } else { "" }
                );
            }
            Ok(EXIT_OK)
        }
        Command::Classify {
            graph,
            variant,
            vertices,
            edges,
        } => {
            let g = graph.build()?;
            let faults = parse_fault_set(vertices, edges)?;
            let class = classify_fault_set(&g, &faults, (*variant).into())?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "fault_set": faults,
                        "class": class,
                    })
                );
            } else {
                println!(
                    "{faults}: {}",
                    match class {
                        fsmp_core::FaultClass::NotPrecluding => "not precluding",
                        fsmp_core::FaultClass::Trivial => "trivial preclusion set",
                        fsmp_core::FaultClass::Nontrivial => "nontrivial preclusion set",
                    }
                );
            }
            Ok(EXIT_OK)
        }
        Command::Super { graph, budget } => {
            let g = graph.build()?;
            let cfg = SearchConfig {
                budget: budget.unwrap_or_else(default_budget),
                parallel: true,
                ..SearchConfig::default()
            };
            let evidence = is_fractional_strongly_super_matched(&g, &cfg)?;
            if json {
                let mut v = serde_json::to_value(&evidence).unwrap();
                v["report"] = evidence.report.to_json();
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!(
                    "fractional strongly super matched: {}",
                    if evidence.holds { "yes" } else { "no" }
                );
                println!(
                    "fsmp = {}, δ = {}, optimal sets all trivial: {}",
                    evidence.report.number,
                    evidence.min_degree,
                    evidence
                        .report
                        .all_optimal_trivial
                        .map_or("?".into(), |b| b.to_string())
                );
            }
            Ok(EXIT_OK)
        }
        Command::Probe {
            graph,
            variant,
            size,
            trials,
            seed,
            directed,
        } => {
            let g = graph.build()?;
            let cfg = ProbeConfig {
                trials: *trials,
                seed: *seed,
                directed: *directed,
                parallel: true,
            };
            let report = randomized_preclusion_probe(&g, (*variant).into(), *size, &cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                println!(
                    "size {}: {} of {} sampled sets preclude",
                    report.size, report.precluding_found, report.trials
                );
                if let Some(w) = &report.first_witness {
                    println!("first witness: {w}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, json: json_path } => {
            let cases: Vec<VerificationCase> = if suite == "default" {
                harness::default_suite()
            } else {
                harness::load_suite(&std::fs::read_to_string(suite)?)?
            };
            let report = harness::verify_known_results(&cases, true);
            emit_suite_report(&report, json, json_path.as_deref())?;
            Ok(if report.pass { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        Command::ProductTheorem {
            graph,
            n,
            mode,
            budget,
            trials,
            seed,
        } => {
            let spec = GeneratorSpec::parse(&graph.graph)?;
            let report = harness::verify_product_theorem(
                &spec,
                *n,
                (*mode).into(),
                budget.unwrap_or_else(default_budget),
                *trials,
                *seed,
                true,
            )?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                println!(
                    "fsmp({} x cycle:{}) expected {}: {}",
                    report.base_spec,
                    report.cycle_len,
                    report.expected,
                    match report.verdict {
                        ProductVerdict::Pass => "pass",
                        ProductVerdict::Fail => "FAIL",
                        ProductVerdict::HypothesisUnmet => "hypothesis unmet",
                        ProductVerdict::BudgetExceeded => "budget exceeded",
                    }
                );
                println!("{}", report.detail);
            }
            Ok(match report.verdict {
                ProductVerdict::Pass | ProductVerdict::HypothesisUnmet => EXIT_OK,
                ProductVerdict::BudgetExceeded => EXIT_BUDGET,
                ProductVerdict::Fail => EXIT_VERIFY_FAIL,
            })
        }
    }
}

fn emit_suite_report(
    report: &SuiteReport,
    json_stdout: bool,
    json_path: Option<&std::path::Path>,
) -> Result<(), Error> {
    if json_stdout {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    } else {
        print!("{}", report.render_table());
    }
    if let Some(path) = json_path {
        std::fs::write(path, serde_json::to_string_pretty(&report.to_json()).unwrap())?;
    }
    Ok(())
}

fn parse_fault_set(vertices: &str, edges: &str) -> Result<FaultSet, Error> {
    let mut vs = Vec::new();
    for tok in vertices.split(',').filter(|t| !t.trim().is_empty()) {
        vs.push(
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid vertex '{tok}'")))?,
        );
    }
    let mut es = Vec::new();
    for tok in edges.split(',').filter(|t| !t.trim().is_empty()) {
        let (u, v) = tok
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("invalid edge '{tok}', expected u-v")))?;
        es.push((
            u.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid edge endpoint '{u}'")))?,
            v.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid edge endpoint '{v}'")))?,
        ));
    }
    Ok(FaultSet::new(vs, es))
}

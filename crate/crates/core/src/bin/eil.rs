use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eil::betti::{summarize, BettiEngine, InvariantSummary};
use eil::campaign::{run_campaign, CampaignConfig, Span};
use eil::formulas::InvariantReport;
use eil::repro::{repro, ReproOutcome, EXAMPLE_IDS};
use eil::{canonical_json, parse_ideal, split_report, verify_formula, ClassTag, Error, WeightedDigraph};

const EXIT_ASSERTION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "eil", version, about = "Betti tables and invariants of weighted oriented edge ideals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    format: Format,

    /// Omit timing fields so that output is byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti table, invariants and formula check for one graph or ideal.
    Compute(Source),
    /// Reproduce a built-in worked example (or `all`).
    Repro {
        #[arg(value_name = "ID")]
        id: String,
    },
    /// Seeded randomized verification campaign.
    Verify(VerifyArgs),
    /// Betti splitting of the polarized edge ideal of a cyclic graph.
    Splitting {
        #[command(flatten)]
        source: GraphSource,
        /// Cycle edge to split at, as `tail,head`.
        #[arg(long, value_parser = parse_edge)]
        edge: Option<(String, String)>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph JSON file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Monomial ideal such as "(x1*x2^3, x2*x3^2)".
    #[arg(long)]
    ideal: Option<String>,
}

#[derive(Args, Debug)]
struct GraphSource {
    /// Graph JSON file (`-` for stdin).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_class)]
    class: ClassTag,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "3..5")]
    cycle: Span,
    #[arg(long, default_value = "0..3")]
    extra: Span,
    #[arg(long, default_value = "2..4")]
    weights: Span,
}

fn parse_class(s: &str) -> Result<ClassTag, String> {
    s.parse::<ClassTag>().map_err(|_| {
        let names: Vec<&str> = ClassTag::ALL.iter().map(|t| t.as_str()).collect();
        format!("unknown class `{s}` (expected one of {})", names.join(", "))
    })
}

fn parse_edge(s: &str) -> Result<(String, String), String> {
    match s.split_once(',') {
        Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() => {
            Ok((a.trim().to_string(), b.trim().to_string()))
        }
        _ => Err(format!("`{s}` is not an edge like x1,x2")),
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_guard() { EXIT_GUARD } else { EXIT_USAGE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))
}

fn read_graph(path: &PathBuf) -> Result<WeightedDigraph, Failure> {
    let text = read_source(path)?;
    WeightedDigraph::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn no_csv(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(usage(format!("--format csv is only available for verify, not {what}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct IdealOutput {
    ideal: String,
    betti: BTreeMap<String, u64>,
    invariants: InvariantSummary,
}

#[derive(Serialize)]
struct GraphOutput<'a> {
    betti: Option<BTreeMap<String, u64>>,
    report: &'a InvariantReport,
}

fn cmd_compute(src: &Source, format: Format, engine: &BettiEngine) -> Result<String, Failure> {
    no_csv(format, "compute")?;
    if let Some(text) = &src.ideal {
        let ideal = parse_ideal(text).map_err(|e| usage(format!("ideal `{text}`: {e}")))?;
        let table = engine.betti_table(&ideal)?;
        let out = IdealOutput {
            ideal: ideal.to_string(),
            betti: table.to_json_map(),
            invariants: summarize(&table, ideal.ambient().len()),
        };
        return Ok(match format {
            Format::Json => canonical_json(&out),
            _ => {
                let inv = &out.invariants;
                format!(
                    "### Ideal\n\n`{}`\n\n```\n{}```\n\n`{}`\n\n| invariant | value |\n|---|---|\n| reg | {} |\n| pd | {} |\n| depth(S/I) | {} |\n",
                    out.ideal,
                    table.render_grid(),
                    serde_json::to_string(&out.betti).expect("map serializes"),
                    inv.reg,
                    inv.pd,
                    inv.depth_of_quotient
                )
            }
        });
    }

    let path = src.input.as_ref().expect("clap enforces one source");
    let graph = read_graph(path)?;
    if graph.edge_count() == 0 {
        return Err(usage(format!("{}: {}", path.display(), Error::EmptyEdgeSet)));
    }
    let report = verify_formula(engine, &graph)?;
    if report.betti.is_none() {
        let n = graph.edge_count();
        return Err(Error::Guard {
            what: "generator count",
            actual: n,
            limit: engine.guard().max_generators,
        }
        .into());
    }
    let out = GraphOutput {
        betti: report.betti.as_ref().map(|t| t.to_json_map()),
        report: &report,
    };
    Ok(match format {
        Format::Json => canonical_json(&out),
        _ => {
            let table = report.betti.as_ref().expect("checked above");
            let mut s = report.to_markdown();
            s.push_str(&format!(
                "\n```\n{}```\n\n`{}`\n",
                table.render_grid(),
                serde_json::to_string(&out.betti).expect("map serializes")
            ));
            s
        }
    })
}

fn cmd_repro(id: &str, format: Format, engine: &BettiEngine) -> Result<(String, bool), Failure> {
    no_csv(format, "repro")?;
    let ids: Vec<&str> = if id == "all" {
        EXAMPLE_IDS.to_vec()
    } else if EXAMPLE_IDS.contains(&id) {
        vec![id]
    } else {
        return Err(usage(format!(
            "unknown example `{id}` (expected one of {} or all)",
            EXAMPLE_IDS.join(", ")
        )));
    };
    let outcomes = ids
        .iter()
        .map(|id| repro(id, engine))
        .collect::<eil::Result<Vec<ReproOutcome>>>()?;
    let pass = outcomes.iter().all(|o| o.pass);
    let text = match format {
        Format::Json => canonical_json(&outcomes),
        _ => outcomes
            .iter()
            .map(ReproOutcome::to_markdown)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((text, pass))
}

fn cmd_verify(args: &VerifyArgs, format: Format, timing: bool, engine: &BettiEngine) -> Result<(String, bool), Failure> {
    let config = CampaignConfig {
        class: args.class,
        count: args.count,
        cycle: args.cycle,
        extra: args.extra,
        weights: args.weights,
        seed: args.seed,
        guard: engine.guard(),
    };
    config.validate().map_err(|e| usage(e.to_string()))?;
    let report = run_campaign(&config, timing)?;
    let text = match format {
        Format::Json => canonical_json(&report),
        Format::Md => report.to_markdown(),
        Format::Csv => report.to_csv(),
    };
    Ok((text, report.all_passed()))
}

fn cmd_splitting(
    src: &GraphSource,
    edge: Option<&(String, String)>,
    format: Format,
    engine: &BettiEngine,
) -> Result<(String, bool), Failure> {
    no_csv(format, "splitting")?;
    let graph = read_graph(&src.input)?;
    let report = split_report(engine, &graph, edge.map(|(t, h)| (t.as_str(), h.as_str())))?;
    let text = match format {
        Format::Json => canonical_json(&report),
        _ => report.to_markdown(),
    };
    Ok((text, report.all_checks_hold()))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let engine = BettiEngine::from_env();
    match &cli.command {
        Command::Compute(src) => cmd_compute(src, cli.format, &engine).map(|s| (s, true)),
        Command::Repro { id } => cmd_repro(id, cli.format, &engine),
        Command::Verify(args) => cmd_verify(args, cli.format, !cli.no_timing, &engine),
        Command::Splitting { source, edge } => cmd_splitting(source, edge.as_ref(), cli.format, &engine),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_ASSERTION)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

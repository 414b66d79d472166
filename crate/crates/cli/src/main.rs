mod source;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use domlab_core::canon::enumerate_graphs;
use domlab_core::criticality::{classify_edge, ConditionMode};
use domlab_core::io::to_graph6;
use domlab_core::multisubdivision::{edge_profiles, s_class, MsdError, DEFAULT_CAP};
use domlab_core::solver::{gamma, gamma_oracle};
use domlab_core::verifier::{emit_report, run_suites, scan_counterexamples, ScanId, SuiteId, SuiteOptions};
use domlab_core::{Execution, Graph, Property};

use source::Source;

#[derive(Parser)]
#[command(
    name = "domlab",
    version,
    about = "Exact domination numbers for graph properties, edge criticality and multisubdivision checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// g6:<file>, edges:<file> or bundled:<name>; a bare path is read as graph6
    #[arg(long, short)]
    input: Source,
    /// Continue past malformed graph6 lines, warning on stderr
    #[arg(long)]
    skip_bad: bool,
    /// Write JSON lines here instead of stdout
    #[arg(long, short)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symmetric,
    Literal,
}

impl From<Mode> for ConditionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Symmetric => ConditionMode::Symmetric,
            Mode::Literal => ConditionMode::Literal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// γ_P and a lexicographically first witness for each graph
    Gamma {
        #[arg(long, short)]
        property: Property,
        /// Use the brute-force oracle (at most 20 vertices)
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        io: InputArgs,
    },
    /// Per-edge S+, S- and ER- criticality with the subdivision conditions
    Classify {
        #[arg(long, short)]
        property: Property,
        #[command(flatten)]
        io: InputArgs,
    },
    /// Per-edge subdivision profiles and multisubdivision numbers
    Msd {
        #[arg(long, short)]
        property: Property,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        io: InputArgs,
    },
    /// The class S1, S2 or S3 of each graph
    Sclass {
        #[arg(long, short)]
        property: Property,
        #[command(flatten)]
        io: InputArgs,
    },
    /// Run verification suites over a corpus
    Verify {
        /// Comma-separated suite ids, or "all"
        #[arg(long, default_value = "all")]
        suites: String,
        /// Comma-separated property codes
        #[arg(long, default_value = "I,O,F,UK,D:1")]
        properties: String,
        #[arg(long, default_value = "bundled:n7c")]
        corpus: Source,
        /// Worker threads; 1 runs sequentially, 0 uses every core
        #[arg(long)]
        jobs: Option<usize>,
        /// Stop each suite at the first graph with a violation
        #[arg(long)]
        fail_fast: bool,
        /// Reading of the third subdivision condition
        #[arg(long, value_enum, default_value = "symmetric")]
        mode: Mode,
        #[arg(long)]
        skip_bad: bool,
        #[arg(long, short)]
        out: Option<String>,
    },
    /// List corpus graphs matching an exploratory predicate
    Scan {
        /// in-S1, in-S2, in-S3, s2-cut-vertex or cs-minus
        #[arg(long)]
        predicate: String,
        #[arg(long, short)]
        property: Property,
        #[arg(long, default_value = "bundled:n7c")]
        corpus: Source,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        skip_bad: bool,
        #[arg(long, short)]
        out: Option<String>,
    },
    /// Print one graph6 line per isomorphism class
    Enumerate {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
    },
}

fn sink(out: &Option<String>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).with_context(|| format!("creating {path}"))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn line(w: &mut dyn Write, value: &serde_json::Value) -> io::Result<()> {
    serde_json::to_writer(&mut *w, value)?;
    w.write_all(b"\n")
}

fn name(g: &Graph) -> String {
    g.label().map_or_else(|| to_graph6(g).unwrap_or_default(), str::to_string)
}

fn parse_list<T: std::str::FromStr>(list: &str) -> anyhow::Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| anyhow!("{e}")))
        .collect()
}

/// Successful runs report whether every suite passed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Gamma { property, oracle, io } => {
            let mut w = sink(&io.out)?;
            for g in io.input.load(io.skip_bad)? {
                let mut result = if oracle { gamma_oracle(&g, property)? } else { gamma(&g, property) };
                result.graph_label = Some(name(&g));
                line(&mut w, &serde_json::to_value(result)?)?;
            }
            w.flush()?;
        }
        Command::Classify { property, io } => {
            let mut w = sink(&io.out)?;
            for g in io.input.load(io.skip_bad)? {
                for e in g.edges() {
                    let c = classify_edge(&g, e, property)?;
                    let mut record = serde_json::to_value(c)?;
                    record["graph"] = json!(name(&g));
                    record["property"] = json!(property);
                    line(&mut w, &record)?;
                }
            }
            w.flush()?;
        }
        Command::Msd { property, cap, jobs, io } => {
            let mut w = sink(&io.out)?;
            for g in io.input.load(io.skip_bad)? {
                for pr in edge_profiles(&g, property, cap, Execution::from_jobs(jobs))? {
                    let mut record = serde_json::to_value(pr)?;
                    record["graph"] = json!(name(&g));
                    record["property"] = json!(property);
                    line(&mut w, &record)?;
                }
            }
            w.flush()?;
        }
        Command::Sclass { property, io } => {
            let mut w = sink(&io.out)?;
            let mut all_bounded = true;
            for g in io.input.load(io.skip_bad)? {
                let record = match s_class(&g, property) {
                    Ok(class) => json!({ "graph": name(&g), "property": property, "class": class }),
                    Err(MsdError::ClassBound { msd, .. }) => {
                        all_bounded = false;
                        json!({ "graph": name(&g), "property": property, "class": null, "counterexample": { "msd": msd } })
                    }
                    Err(MsdError::Edgeless) => {
                        json!({ "graph": name(&g), "property": property, "class": null, "reason": "edgeless" })
                    }
                    Err(e) => return Err(e.into()),
                };
                line(&mut w, &record)?;
            }
            w.flush()?;
            return Ok(all_bounded);
        }
        Command::Verify { suites, properties, corpus, jobs, fail_fast, mode, skip_bad, out } => {
            let suites: Vec<SuiteId> =
                if suites.trim() == "all" { SuiteId::ALL.to_vec() } else { parse_list(&suites)? };
            let properties: Vec<Property> = parse_list(&properties)?;
            let graphs = corpus.load(skip_bad)?;
            let options = SuiteOptions { exec: Execution::from_jobs(jobs), fail_fast, mode: mode.into() };
            let mut w = sink(&out)?;
            let reports = run_suites(&suites, &properties, &graphs, &options)?;
            for r in &reports {
                emit_report(r, &mut w)?;
            }
            w.flush()?;
            return Ok(reports.iter().all(|r| r.passed()));
        }
        Command::Scan { predicate, property, corpus, jobs, skip_bad, out } => {
            let scan: ScanId = predicate.parse()?;
            let graphs = corpus.load(skip_bad)?;
            let mut w = sink(&out)?;
            for hit in scan_counterexamples(scan, property, &graphs, Execution::from_jobs(jobs)) {
                line(&mut w, &serde_json::to_value(hit)?)?;
            }
            w.flush()?;
        }
        Command::Enumerate { min_n, max_n, connected } => {
            if max_n > 10 {
                anyhow::bail!("--max-n above 10 is not supported by the enumerator");
            }
            let mut w = sink(&None)?;
            for g in enumerate_graphs(max_n).into_iter().skip(min_n).flatten() {
                if !connected || g.is_connected() {
                    writeln!(w, "{}", to_graph6(&g)?)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) {
                return ExitCode::SUCCESS;
            }
            eprintln!("domlab: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end. [`run`] does all the work and returns the text
//! for stdout/stderr plus an exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 bad input, unmet precondition or failed
//! verification, 2 internal contradiction.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::degeneracy::degeneracy;
use crate::error::{Error, Result};
use crate::generate::generate_k_degenerate;
use crate::graph::Graph;
use crate::io::{format_coloring, format_edge_list, parse_coloring, parse_edge_list_as, EdgeFormat};
use crate::oracle::{exact_la, la_bounds, DEFAULT_BUDGET};
use crate::solver::{decompose_with, Mode, SolverOptions};
use crate::verify::verify_partition;

/// Auto mode falls back to the exact search up to this many edges.
pub const AUTO_ORACLE_MAX_EDGES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Minimum,
    Lac,
    Auto,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "linarb", version, about = "Linear forest partitions of k-degenerate graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Edge-list file; `-` or nothing reads stdin.
    pub input: Option<PathBuf>,
    /// Read 1-based DIMACS `e u v` lines instead of the native format.
    #[arg(long)]
    pub dimacs: bool,
    /// Generate the input instead: `N:K:DELTA_MIN`, seeded by `--seed`.
    #[arg(long, value_name = "N:K:DELTA_MIN", conflicts_with = "input")]
    pub generate: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition the edges into linear forests.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[command(flatten)]
        output: OutputArgs,
        /// Check the result with the independent verifier.
        #[arg(long)]
        verify: bool,
        /// Run the internal invariant scans (same as LINARB_DEBUG_ASSERT=1).
        #[arg(long)]
        debug_assertions: bool,
        /// Leave `wall_ms` out of JSON output so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Exact linear arboricity by exhaustive search (small graphs).
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a `u v class` coloring against a graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Coloring file, one `u v class` line per edge.
        #[arg(long)]
        coloring: PathBuf,
        /// Number of classes allowed; defaults to the largest class used.
        #[arg(long)]
        classes: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a random k-degenerate graph.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        delta_min: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lower and upper bounds on the linear arboricity.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// A fully parsed invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    /// Text used in place of stdin when the input is `-` or absent.
    pub stdin: Option<String>,
    pub debug_assertions_env: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Self {
        RunConfig {
            command: cli.command,
            stdin: None,
            debug_assertions_env: SolverOptions::from_env().debug_checks,
        }
    }
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

fn load(input: &InputArgs, stdin: &Option<String>) -> Result<Graph> {
    if let Some(spec) = &input.generate {
        let parts: Vec<&str> = spec.split(':').collect();
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Precondition(format!("bad generator spec {spec:?}")))?;
        let [n, k, d] = nums[..] else {
            return Err(Error::Precondition(format!("generator spec {spec:?} needs N:K:DELTA_MIN")));
        };
        return generate_k_degenerate(n, k, d, input.seed);
    }
    let text = match &input.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        _ => match stdin {
            Some(s) => s.clone(),
            None => std::io::read_to_string(std::io::stdin())?,
        },
    };
    let format = if input.dimacs {
        EdgeFormat::Dimacs
    } else {
        EdgeFormat::Native
    };
    parse_edge_list_as(&text, format)
}

fn sorted_classes(g: &Graph, colors: &[usize], t: usize) -> Vec<Vec<(usize, usize)>> {
    let mut classes = vec![Vec::new(); t];
    for ((u, v), &c) in g.edges().zip(colors) {
        classes[c].push((u, v));
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    classes
}

fn triples(g: &Graph, colors: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out: Vec<_> = g.edges().zip(colors).map(|((u, v), &c)| (u, v, c + 1)).collect();
    out.sort_unstable();
    out
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// Executes one command.
pub fn run(config: RunConfig) -> RunOutcome {
    match execute(&config) {
        Ok(out) => out,
        Err(e) => RunOutcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(config: &RunConfig) -> Result<RunOutcome> {
    let stdin = &config.stdin;
    match &config.command {
        Command::Decompose {
            input,
            mode,
            output,
            verify,
            debug_assertions,
            no_timing,
        } => {
            let g = load(input, stdin)?;
            let opts = SolverOptions {
                debug_checks: *debug_assertions || config.debug_assertions_env,
            };
            decompose_cmd(&g, *mode, output.format, *verify, opts, !*no_timing)
        }
        Command::Oracle { input, budget, output } => {
            let g = load(input, stdin)?;
            let r = exact_la(&g, *budget)?;
            let stdout = match output.format {
                OutputFormat::Json => to_json(&json!({
                    "la": r.la,
                    "classes": sorted_classes(&g, &r.witness, r.la),
                    "nodes_explored": r.nodes_explored,
                    "bounds": la_bounds(&g),
                })),
                OutputFormat::Text => format!("la {}\n{}", r.la, format_coloring(&triples(&g, &r.witness))),
            };
            Ok(RunOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
        Command::Verify {
            input,
            coloring,
            classes,
            output,
        } => {
            let g = load(input, stdin)?;
            let text = std::fs::read_to_string(coloring)
                .map_err(|e| Error::Io(format!("{}: {e}", coloring.display())))?;
            let col = parse_coloring(&text)?;
            let t = classes.unwrap_or_else(|| col.iter().map(|&(_, _, c)| c).max().unwrap_or(0));
            let report = verify_partition(&g, &col, t);
            let stdout = match output.format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Text => {
                    let mut s = format!(
                        "{} classes={} optimal={}\n",
                        if report.valid { "valid" } else { "invalid" },
                        report.class_count,
                        report.optimal
                    );
                    for v in &report.violations {
                        s.push_str(&format!("{}\n", serde_json::to_string(v).expect("serializable")));
                    }
                    s
                }
            };
            Ok(RunOutcome {
                code: if report.valid { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            })
        }
        Command::Generate { n, k, delta_min, seed } => {
            let g = generate_k_degenerate(*n, *k, *delta_min, *seed)?;
            Ok(RunOutcome {
                code: 0,
                stdout: format_edge_list(&g),
                stderr: String::new(),
            })
        }
        Command::Bounds { input, output } => {
            let g = load(input, stdin)?;
            let b = la_bounds(&g);
            let stdout = match output.format {
                OutputFormat::Json => to_json(&json!({
                    "delta": g.max_degree(),
                    "k": degeneracy(&g),
                    "lower": b.lower,
                    "upper": b.upper,
                    "upper_status": b.upper_status,
                })),
                OutputFormat::Text => format!(
                    "{} {} {}\n",
                    b.lower,
                    b.upper,
                    serde_json::to_value(b.upper_status).expect("serializable").as_str().unwrap_or("")
                ),
            };
            Ok(RunOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn decompose_cmd(
    g: &Graph,
    mode: ModeArg,
    format: OutputFormat,
    verify: bool,
    opts: SolverOptions,
    timing: bool,
) -> Result<RunOutcome> {
    let start = Instant::now();
    let delta = g.max_degree();
    let k = degeneracy(g);
    let chosen = match mode {
        ModeArg::Minimum => Some(Mode::Minimum),
        ModeArg::Lac => Some(Mode::Lac),
        ModeArg::Auto if delta >= Mode::Minimum.threshold(k) => Some(Mode::Minimum),
        ModeArg::Auto if delta >= Mode::Lac.threshold(k) => Some(Mode::Lac),
        ModeArg::Auto if g.num_edges() <= AUTO_ORACLE_MAX_EDGES => None,
        ModeArg::Auto => {
            return Err(Error::Precondition(format!(
                "max degree {delta} is below {} for k = {k} and the graph is too large for exact search",
                Mode::Lac.threshold(k)
            )))
        }
    };
    let (t, colors, mode_name, stats) = match chosen {
        Some(m) => {
            let d = decompose_with(g, m, opts)?;
            (d.t, d.colors, m.name(), Some(d.stats))
        }
        None => {
            let r = exact_la(g, DEFAULT_BUDGET)?;
            (r.la, r.witness, "oracle", None)
        }
    };
    let assignments = triples(g, &colors);
    let verified = if verify {
        let report = verify_partition(g, &assignments, t);
        if !report.valid {
            return Err(Error::Contradiction(format!(
                "output failed verification: {}",
                serde_json::to_string(&report.violations).expect("serializable")
            )));
        }
        Some(true)
    } else {
        None
    };
    let wall_ms = timing.then(|| start.elapsed().as_secs_f64() * 1000.0);
    let stdout = match format {
        OutputFormat::Json => to_json(&json!({
            "t": t,
            "k": k,
            "delta": delta,
            "mode": mode_name,
            "classes": sorted_classes(g, &colors, t),
            "verified": verified,
            "wall_ms": wall_ms,
            "stats": stats,
        })),
        OutputFormat::Text => format_coloring(&assignments),
    };
    Ok(RunOutcome {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}

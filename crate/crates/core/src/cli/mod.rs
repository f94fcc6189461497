//! Command-line front end. [`run_command`] holds all behavior so the binary
//! stays a one-liner and tests can drive it in-process.

mod bench;
mod report;
mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::engine::{
    enumerate_minimal_transversals, regularize_delay, BoxedStream, EngineChoice, SolutionStream,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::io::{parse_graph, parse_hypergraph, parse_vertex_list, write_graph_with_comments};
use crate::metric::{
    enumerate_minimal_geodetic_sets, enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets, GeodeticOptions, DEFAULT_GENERAL_LIMIT,
};
use crate::reductions::{
    build_ext_geodetic_instance, build_ext_resolving_instance, build_mingeodetic_instance,
    build_minresolving_instance, ext_check, ExtAnswer, ExtTarget, ReductionArtifact,
    DEFAULT_EXT_LIMIT,
};
use crate::vertex_set::VertexSet;

pub use report::{digest, run_stream, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "metric-enum", version, about = "Enumerate minimal resolving, geodetic and strong resolving sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(value_name = "FILE")]
    path: Option<String>,
    /// Same as the positional argument.
    #[arg(long = "input", value_name = "FILE", conflicts_with = "path")]
    input: Option<String>,
}

#[derive(Args, Debug)]
struct StreamArgs {
    /// Release solutions on a fixed clock of this many ticks.
    #[arg(long, value_name = "BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    regularize: Option<u64>,
    /// Append a run report.
    #[arg(long, value_enum)]
    stats: Option<StatsFormat>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StatsFormat {
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Berge,
    Dfs,
}

impl From<EngineArg> for EngineChoice {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Berge => EngineChoice::Berge,
            EngineArg::Dfs => EngineChoice::DfsHittingSet,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReduceKind {
    Resolving,
    Geodetic,
    ExtGeodetic,
    ExtResolving,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtKind {
    Transversals,
    Geodetic,
    Resolving,
    StrongResolving,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal transversals of a hypergraph (.hg).
    Transversals {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "dfs")]
        engine: EngineArg,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Minimal resolving sets of a graph.
    Resolve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "dfs")]
        engine: EngineArg,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Minimal geodetic sets of a connected graph.
    Geodetic {
        #[command(flatten)]
        input: InputArgs,
        /// Engine for the split-graph path.
        #[arg(long, value_enum, default_value = "dfs")]
        engine: EngineArg,
        /// Largest graph accepted when the split path does not apply.
        #[arg(long, default_value_t = DEFAULT_GENERAL_LIMIT)]
        general_limit: usize,
        /// Use the general search even on split graphs.
        #[arg(long)]
        force_general: bool,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Minimal strong resolving sets of a connected graph.
    StrongResolve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Build a gadget graph from a hypergraph and print it.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        kind: ReduceKind,
        /// Required source vertices (ext kinds), e.g. `1,3`.
        #[arg(long, default_value = "")]
        require: String,
        /// Forbidden source vertices (ext kinds).
        #[arg(long, default_value = "")]
        forbid: String,
        /// Normalize the hypergraph first so the gadget's assumptions hold.
        #[arg(long)]
        pad: bool,
        /// Write `<vertex> <role>` lines here.
        #[arg(long, value_name = "FILE")]
        roles: Option<String>,
        /// Write a Graphviz rendering here.
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
    },
    /// Is there a minimal solution containing the required vertices and
    /// avoiding the forbidden ones?
    Ext {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        kind: ExtKind,
        #[arg(long, default_value = "")]
        require: String,
        #[arg(long, default_value = "")]
        forbid: String,
        /// Largest number of undecided vertices searched.
        #[arg(long, default_value_t = DEFAULT_EXT_LIMIT)]
        limit: usize,
    },
    /// Cross-check every enumerator against exhaustive search on a built-in corpus.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random instances per check.
        #[arg(long, default_value_t = 20)]
        rounds: usize,
    },
    /// Enumerate over families of growing instances and report work and delay.
    Bench {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Failure inside a subcommand, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::IndexOutOfRange { .. } | Error::SelfLoop(_) => EXIT_PARSE,
            Error::DecodeFailure(_) => EXIT_MISMATCH,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `argv` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(args: &InputArgs) -> std::result::Result<Vec<u8>, Failure> {
    let path = args.path.as_deref().or(args.input.as_deref()).unwrap_or("-");
    let mut buf = Vec::new();
    if path == "-" {
        std::io::stdin().read_to_end(&mut buf)?;
    } else {
        buf = std::fs::read(path).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{path}: {e}"),
        })?;
    }
    Ok(buf)
}

fn as_text(bytes: &[u8]) -> std::result::Result<&str, Failure> {
    std::str::from_utf8(bytes).map_err(|_| Failure {
        code: EXIT_PARSE,
        message: "input is not valid UTF-8".into(),
    })
}

fn load_graph(args: &InputArgs) -> std::result::Result<(Vec<u8>, Graph), Failure> {
    let bytes = read_input(args)?;
    let g = parse_graph(as_text(&bytes)?)?;
    Ok((bytes, g))
}

fn load_hypergraph(args: &InputArgs) -> std::result::Result<(Vec<u8>, Hypergraph), Failure> {
    let bytes = read_input(args)?;
    let h = parse_hypergraph(as_text(&bytes)?)?;
    Ok((bytes, h))
}

fn emit_stream(
    stream: BoxedStream,
    engine: &str,
    input: &[u8],
    opts: &StreamArgs,
    out: &mut dyn Write,
) -> CmdResult {
    let mut stream: Box<dyn SolutionStream> = match opts.regularize {
        Some(budget) => Box::new(regularize_delay(stream, budget)),
        None => stream,
    };
    let report = run_stream(&mut *stream, engine, input, |s| {
        writeln!(out, "{}", s.to_one_based_string())
    })?;
    if opts.stats.is_some() {
        writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
    }
    Ok(EXIT_OK)
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Transversals { input, engine, stream } => {
            let (bytes, h) = load_hypergraph(&input)?;
            let algo = EngineChoice::from(engine);
            let s = enumerate_minimal_transversals(&h, algo)?;
            emit_stream(s, &algo.to_string(), &bytes, &stream, out)
        }
        Command::Resolve { input, engine, stream } => {
            let (bytes, g) = load_graph(&input)?;
            let algo = EngineChoice::from(engine);
            let s = enumerate_minimal_resolving_sets(&g, algo);
            emit_stream(s, &algo.to_string(), &bytes, &stream, out)
        }
        Command::Geodetic {
            input,
            engine,
            general_limit,
            force_general,
            stream,
        } => {
            let (bytes, g) = load_graph(&input)?;
            let opts = GeodeticOptions {
                general_limit,
                force_general,
                engine: engine.into(),
            };
            let split = !force_general && g.split_partition().is_some_and(|p| p.independent.len() >= 2);
            let label = if split { format!("split+{}", opts.engine) } else { "general".to_string() };
            let s = enumerate_minimal_geodetic_sets(&g, &opts)?;
            emit_stream(s, &label, &bytes, &stream, out)
        }
        Command::StrongResolve { input, stream } => {
            let (bytes, g) = load_graph(&input)?;
            let s = enumerate_minimal_strong_resolving_sets(&g)?;
            emit_stream(s, "mis", &bytes, &stream, out)
        }
        Command::Reduce {
            input,
            kind,
            require,
            forbid,
            pad,
            roles,
            dot,
        } => {
            let (_, h) = load_hypergraph(&input)?;
            let a = parse_vertex_list(&require)?;
            let b = parse_vertex_list(&forbid)?;
            let (artifact, comments) = reduce(&h, kind, &a, &b, pad)?;
            out.write_all(write_graph_with_comments(&artifact.graph, &comments).as_bytes())?;
            if let Some(path) = roles {
                std::fs::write(&path, artifact.roles_text())?;
            }
            if let Some(path) = dot {
                std::fs::write(&path, artifact.to_dot(&VertexSet::new()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Ext {
            input,
            kind,
            require,
            forbid,
            limit,
        } => {
            let a = parse_vertex_list(&require)?;
            let b = parse_vertex_list(&forbid)?;
            let answer = match kind {
                ExtKind::Transversals => {
                    let (_, h) = load_hypergraph(&input)?;
                    ext_check(ExtTarget::Transversals(&h), &a, &b, limit)?
                }
                _ => {
                    let (_, g) = load_graph(&input)?;
                    let target = match kind {
                        ExtKind::Geodetic => ExtTarget::Geodetic(&g),
                        ExtKind::Resolving => ExtTarget::Resolving(&g),
                        _ => ExtTarget::StrongResolving(&g),
                    };
                    ext_check(target, &a, &b, limit)?
                }
            };
            match answer {
                ExtAnswer::Yes(s) => writeln!(out, "YES {}", s.to_one_based_string())?,
                ExtAnswer::No => writeln!(out, "NO")?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { seed, rounds } => {
            let failures = verify::run(seed, rounds, out)?;
            Ok(if failures == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Bench { max_n, seed } => {
            bench::run(max_n, seed, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn reduce(
    h: &Hypergraph,
    kind: ReduceKind,
    a: &VertexSet,
    b: &VertexSet,
    pad: bool,
) -> std::result::Result<(ReductionArtifact, Vec<String>), Failure> {
    let ext_comments = |required: &VertexSet, forbidden: &VertexSet| {
        vec![
            format!("required {}", required.to_one_based_string()),
            format!("forbidden {}", forbidden.to_one_based_string()),
        ]
    };
    Ok(match kind {
        ReduceKind::Resolving => {
            let source = if pad { h.pad_for_resolving_reduction()? } else { h.clone() };
            (build_minresolving_instance(&source)?, Vec::new())
        }
        ReduceKind::Geodetic => {
            let source = if pad { h.peel_universal_vertices().residual } else { h.clone() };
            (build_mingeodetic_instance(&source)?, Vec::new())
        }
        ReduceKind::ExtGeodetic => {
            let inst = build_ext_geodetic_instance(h, a, b)?;
            let comments = ext_comments(&inst.required, &inst.forbidden);
            (inst.artifact, comments)
        }
        ReduceKind::ExtResolving => {
            let (source, a, b) = if pad {
                h.pad_for_ext_resolving_reduction(a, b)?
            } else {
                (h.clone(), a.clone(), b.clone())
            };
            let inst = build_ext_resolving_instance(&source, &a, &b)?;
            let comments = ext_comments(&inst.required, &inst.forbidden);
            (inst.artifact, comments)
        }
    })
}

//! Command-line driver. [`run`] takes explicit streams so the whole surface
//! can be exercised in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{bounds_report, format_cycle, girth, verify_zrg, Girth};
use crate::generators::{
    gen_biaffine, gen_bipartite_circulant, gen_cage_136, gen_circulant, gen_family, gen_family_with_jumps,
    gen_lower_bound_witness, gen_moore_tree, gen_projective_incidence, FamilyParams, Side,
};
use crate::graph::MixedGraph;
use crate::io::{build_catalog, catalog_csv, catalog_markdown, export_dot, read_graph, write_json, IoError};

#[derive(Debug, Parser)]
#[command(name = "mixcage", version, about = "Build and verify mixed graphs of small girth")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a graph and write it as JSON or DOT
    Generate(GenerateArgs),
    /// Check that a graph document is a [z,r;g]-mixed graph (exit 1 if not)
    Verify {
        /// Graph document, or - for standard input
        path: String,
        #[arg(long)]
        z: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
    },
    /// Report the girth of a graph document
    Girth {
        path: String,
        /// Also print a shortest cycle
        #[arg(long)]
        witness: bool,
    },
    /// Moore, AHM, mixed lower bound and (with --q) the family upper bound
    Bounds {
        #[arg(long)]
        z: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Generate and verify the girth-6 family for several primes
    Catalog {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,11,13")]
        q_list: Vec<u32>,
        #[arg(long, value_enum, default_value_t = CatalogFormat::Md)]
        format: CatalogFormat,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Pg,
    Biaffine,
    Circulant,
    Bicirculant,
    Family,
    Cage136,
    MooreTree,
    Witness,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CatalogFormat {
    Md,
    Csv,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    z: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    /// Circulant jumps
    #[arg(long, value_delimiter = ',')]
    jumps: Vec<usize>,
    /// Bipartite circulant side
    #[arg(long, default_value = "line")]
    side: Side,
    /// Slope (line side) or abscissa (point side) of the bipartite circulant
    #[arg(long, default_value_t = 0)]
    index: u32,
    /// Original-to-copy jumps, overriding the family defaults
    #[arg(long, value_delimiter = ',')]
    to_copy: Vec<u32>,
    /// Copy-to-original jumps, overriding the family defaults
    #[arg(long, value_delimiter = ',')]
    to_orig: Vec<u32>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(IoError),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e)
    }
}

fn need<T>(value: Option<T>, flag: &str, kind: Kind) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("generate {kind:?} requires --{flag}").to_lowercase()))
}

fn generate(args: &GenerateArgs) -> Result<MixedGraph, Failure> {
    let kind = args.kind;
    let jumps = |family: Option<FamilyParams>| -> Result<(Vec<u32>, Vec<u32>), Failure> {
        match (args.to_copy.is_empty(), args.to_orig.is_empty(), family) {
            (true, true, Some(p)) => Ok(p.default_jumps()),
            (false, false, _) => Ok((args.to_copy.clone(), args.to_orig.clone())),
            _ => Err(Failure::Usage("--to-copy and --to-orig must be given together".into())),
        }
    };
    let graph = match kind {
        Kind::Pg => gen_projective_incidence(need(args.q, "q", kind)?),
        Kind::Biaffine => gen_biaffine(need(args.q, "q", kind)?),
        Kind::Circulant => {
            if args.jumps.is_empty() {
                return Err(Failure::Usage("generate circulant requires --jumps".into()));
            }
            gen_circulant(need(args.q, "q", kind)? as usize, &args.jumps)
        }
        Kind::Bicirculant => {
            let q = need(args.q, "q", kind)?;
            let (to_copy, to_orig) = jumps(FamilyParams::new(q).ok())?;
            gen_bipartite_circulant(q, args.side, args.index, &to_copy, &to_orig)
        }
        Kind::Family => {
            let q = need(args.q, "q", kind)?;
            if args.to_copy.is_empty() && args.to_orig.is_empty() {
                gen_family(q)
            } else {
                let (to_copy, to_orig) = jumps(None)?;
                gen_family_with_jumps(q, &to_copy, &to_orig)
            }
        }
        Kind::Cage136 => gen_cage_136(),
        Kind::MooreTree => gen_moore_tree(need(args.r, "r", kind)?, need(args.g, "g", kind)?),
        Kind::Witness => {
            gen_lower_bound_witness(need(args.z, "z", kind)?, need(args.r, "r", kind)?, need(args.g, "g", kind)?)
        }
    };
    graph.map_err(|e| Failure::Input(e.into()))
}

fn emit(path: &str, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    if path == "-" {
        stdout.write_all(text.as_bytes()).map_err(IoError::from)?;
    } else {
        fs::write(path, text).map_err(IoError::from)?;
    }
    Ok(())
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let out = |stdout: &mut dyn Write, text: String| -> Result<(), Failure> {
        stdout.write_all(text.as_bytes()).map_err(|e| Failure::Input(e.into()))
    };
    match cli.command {
        Command::Generate(args) => {
            let graph = generate(&args)?;
            let text = match args.format {
                GraphFormat::Dot => export_dot(&graph),
                GraphFormat::Json => write_json(&graph),
            };
            emit(&args.out, &text, stdout)?;
            Ok(0)
        }
        Command::Verify { path, z, r, g } => {
            let graph = read_graph(&path, stdin)?;
            let report = verify_zrg(&graph, z, r, g);
            out(stdout, report.to_string())?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Girth { path, witness } => {
            let graph = read_graph(&path, stdin)?;
            let report = girth(&graph);
            let mut text = format!("girth {}\n", report.girth);
            if witness {
                if let (Girth::Finite(_), Some(cycle)) = (report.girth, &report.witness) {
                    text.push_str(&format!("witness {}\n", format_cycle(cycle)));
                }
            }
            out(stdout, text)?;
            Ok(0)
        }
        Command::Bounds { z, r, g, q } => {
            let report = bounds_report(z, r, g, q).map_err(IoError::from)?;
            out(stdout, report.to_string())?;
            Ok(0)
        }
        Command::Catalog { q_list, format, out: path } => {
            let rows = build_catalog(&q_list)?;
            let text = match format {
                CatalogFormat::Md => catalog_markdown(&rows),
                CatalogFormat::Csv => catalog_csv(&rows),
            };
            emit(&path, &text, stdout)?;
            Ok(if rows.iter().all(|r| r.girth_verified) { 0 } else { 1 })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let text = err.render().to_string();
            let _ = if err.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, stdin, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

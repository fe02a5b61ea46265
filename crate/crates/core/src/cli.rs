//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; the binary only forwards the process streams.
//!
//! Exit codes: 0 found / ok, 1 sound negative (no cycle, no witness within
//! budget, witness check failed), 2 usage or input error, 3 internal
//! validation defect.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::coloring::{Color, Coloring};
use crate::error::Error;
use crate::hypergraph::Vertex;
use crate::oracle::{find_monochromatic_loose_cycle, find_monochromatic_loose_path};
use crate::proof::{extract, ramsey_bound, BoundKind};
use crate::witness::{extremal_coloring, find_violation, search_witness, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEFECT: i32 = 3;

const AFTER_HELP: &str = "\
Output grammar:
  bound    `<value> <label>` or `[<lo>,<hi>] <label>`
  witness  HRC coloring text
  check    `witness-ok`, or `red cycle v..` / `blue cycle v..`
  extract  `<color> v..` (the cycle embedding); trace lines go to --trace
  oracle   `v..` (the embedding) or `none`
  hunt     the path of the written witness, or `exhausted`

A file argument of `-` reads stdin; `-o -` writes stdout.
Exit codes: 0 ok, 1 negative answer, 2 usage or input error, 3 defect.";

#[derive(Debug, Parser)]
#[command(name = "loose-ramsey", version, about = "Ramsey numbers of 4-uniform loose cycles", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Lengths {
    /// Length of the red cycle.
    #[arg(long)]
    n: usize,
    /// Length of the blue cycle.
    #[arg(long)]
    m: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Known value or interval of a Ramsey number.
    Bound {
        /// cc (cycle-cycle), pc (path-cycle) or pp (path-path).
        #[arg(long)]
        kind: BoundKind,
        #[command(flatten)]
        lengths: Lengths,
    },
    /// Writes the standard lower-bound witness coloring.
    Witness {
        #[command(flatten)]
        lengths: Lengths,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Checks that a coloring has no red C_n and no blue C_m.
    Check {
        file: String,
        #[command(flatten)]
        lengths: Lengths,
    },
    /// Finds a red C_n or blue C_m by following the inductive construction.
    Extract {
        file: String,
        #[command(flatten)]
        lengths: Lengths,
        /// Where to write the construction trace.
        #[arg(long)]
        trace: Option<String>,
    },
    /// Exact search for a monochromatic loose cycle or path.
    Oracle {
        file: String,
        #[arg(long)]
        color: Color,
        #[arg(long, conflicts_with = "path", required_unless_present = "path")]
        cycle: Option<usize>,
        #[arg(long)]
        path: Option<usize>,
    },
    /// Seeded local search for a witness coloring on a given vertex count.
    Hunt {
        #[command(flatten)]
        lengths: Lengths,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        seed: u64,
        /// Maximum number of evaluated flips.
        #[arg(long)]
        budget: usize,
        /// Output file; defaults to `hunt-<n>-<m>-<vertices>-<seed>.hrc`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Writes the search transcript to this file.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Lib(Error::Defect(_)) => EXIT_DEFECT,
            _ => EXIT_USAGE,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_coloring(&mut self, file: &str) -> Result<Coloring, CliError> {
        let io_err = |source| CliError::Io {
            path: file.to_string(),
            source,
        };
        let text = if file == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io_err)?;
            s
        } else {
            fs::read_to_string(file).map_err(io_err)?
        };
        Ok(Coloring::parse(&text)?)
    }

    fn write_to(&mut self, file: &str, text: &str) -> Result<(), CliError> {
        let io_err = |source| CliError::Io {
            path: file.to_string(),
            source,
        };
        if file == "-" {
            self.stdout.write_all(text.as_bytes()).map_err(io_err)
        } else {
            fs::write(file, text).map_err(io_err)
        }
    }

    fn line(&mut self, text: impl std::fmt::Display) -> Result<(), CliError> {
        writeln!(self.stdout, "{text}").map_err(|source| CliError::Io {
            path: "stdout".into(),
            source,
        })
    }
}

fn join(vertices: &[Vertex]) -> String {
    vertices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(command: Command, io: &mut Io) -> Result<i32, CliError> {
    match command {
        Command::Bound { kind, lengths } => {
            let bound = ramsey_bound(kind, lengths.n, lengths.m)?;
            io.line(bound)?;
            Ok(EXIT_OK)
        }
        Command::Witness { lengths, output } => {
            let c = extremal_coloring(4, lengths.n, lengths.m)?;
            io.write_to(&output, &c.serialize())?;
            Ok(EXIT_OK)
        }
        Command::Check { file, lengths } => {
            let c = io.read_coloring(&file)?;
            match find_violation(&c, lengths.n, lengths.m) {
                None => {
                    io.line("witness-ok")?;
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    io.line(v)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Extract {
            file,
            lengths,
            trace,
        } => {
            let c = io.read_coloring(&file)?;
            let out = extract(&c, lengths.n, lengths.m)?;
            if let Some(path) = trace {
                io.write_to(&path, &out.trace.to_string())?;
            }
            io.line(format!("{} {}", out.color, join(out.cycle.embedding())))?;
            Ok(EXIT_OK)
        }
        Command::Oracle {
            file,
            color,
            cycle,
            path,
        } => {
            let c = io.read_coloring(&file)?;
            let found =
                match (cycle, path) {
                    (Some(len), _) => find_monochromatic_loose_cycle(&c, color, len)
                        .map(|f| f.embedding().to_vec()),
                    (None, Some(len)) => find_monochromatic_loose_path(&c, color, len)
                        .map(|f| f.embedding().to_vec()),
                    (None, None) => unreachable!("clap requires --cycle or --path"),
                };
            match found {
                Some(emb) => {
                    io.line(join(&emb))?;
                    Ok(EXIT_OK)
                }
                None => {
                    io.line("none")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Hunt {
            lengths,
            vertices,
            seed,
            budget,
            output,
            transcript,
        } => {
            let Lengths { n, m } = lengths;
            let out = search_witness(4, n, m, vertices, seed, SearchConfig::with_budget(budget))?;
            if let Some(path) = transcript {
                let shown = path.display().to_string();
                io.write_to(&shown, &out.transcript_text())?;
            }
            match out.witness {
                Some(c) => {
                    let path = output.unwrap_or_else(|| {
                        PathBuf::from(format!("hunt-{n}-{m}-{vertices}-{seed}.hrc"))
                    });
                    let shown = path.display().to_string();
                    io.write_to(&shown, &c.serialize())?;
                    io.line(shown)?;
                    Ok(EXIT_OK)
                }
                None => {
                    io.line("exhausted")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

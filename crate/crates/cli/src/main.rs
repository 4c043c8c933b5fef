use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cograph_bei::commands::{self, CliError, GenerateKind, GraphOutput, Output, EXIT_USAGE};
use cograph_bei::Format;
use cograph_bei_core::enumeration::VERIFY_LIMIT;

#[derive(Parser)]
#[command(name = "cograph-bei", version, about = "Cograph recognition and regularity of binomial edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize a graph and report its cotree, invariants and regularity bounds.
    Analyze {
        /// Input file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        /// Human-readable text instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Check every bound on all cographs up to the given order.
    Verify {
        #[arg(long, value_parser = max_n_parser())]
        max_n: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Emit an extremal graph or the counterexample chain.
    Generate {
        #[command(subcommand)]
        kind: GenerateCmd,
        #[arg(long, value_enum, default_value = "json", global = true)]
        format: OutputFormat,
        #[arg(long, global = true)]
        pretty: bool,
    },
    /// Pairwise comparison of five regularity bounds.
    Table {
        #[arg(long, value_parser = max_n_parser())]
        max_n: usize,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Disjoint union of paths with the largest regularity on n vertices.
    Maxreg {
        #[arg(long)]
        n: usize,
    },
    /// A connected cograph of regularity r.
    Cone {
        #[arg(long)]
        r: usize,
    },
    /// k glued copies of the eight-vertex counterexample.
    Chain {
        #[arg(long)]
        k: usize,
    },
}

fn max_n_parser() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::<usize>::new().range(1..=VERIFY_LIMIT as u64)
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|source| CliError::Io { path: path.to_string(), source })?;
    Ok(s)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Analyze { input, format, pretty } => {
            let format = match format {
                InputFormat::Graph6 => Format::Graph6,
                InputFormat::Edgelist => Format::Edgelist,
            };
            commands::analyze(&read_input(&input)?, format, pretty)
        }
        Command::Verify { max_n, pretty } => commands::verify(max_n, pretty),
        Command::Table { max_n, pretty } => commands::table(max_n, pretty),
        Command::Generate { kind, format, pretty } => {
            let out = match format {
                OutputFormat::Json => GraphOutput::Json,
                OutputFormat::Graph6 => GraphOutput::Graph(Format::Graph6),
                OutputFormat::Edgelist => GraphOutput::Graph(Format::Edgelist),
            };
            let kind = match kind {
                GenerateCmd::Maxreg { n } => GenerateKind::MaxReg { n },
                GenerateCmd::Cone { r } => GenerateKind::Cone { r },
                GenerateCmd::Chain { k } => GenerateKind::Chain { k },
            };
            commands::generate(kind, out, pretty)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use semilattice_laplace::cli::{
    cmd_base_measure, cmd_bench, cmd_demo_inclusion_exclusion, cmd_invert, cmd_transform,
    BaseMeasureOptions, InvertOptions, TransformOptions, INPUT_ERROR_EXIT,
};
use semilattice_laplace::{Error, ScalarKind};

#[derive(Parser)]
#[command(name = "laplace", about = "Laplace transform on semilattices of sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forward transform f(X) of a problem file.
    Transform {
        /// Problem file, or `-` for stdin.
        input: String,
        /// Subset keys to evaluate (labels joined by commas; `{}` for the empty set).
        keys: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Close the listed family under union before use.
        #[arg(long)]
        close: bool,
        #[arg(long)]
        scalar: Option<ScalarKind>,
    },
    /// Recover weights or family measures from a transform table.
    Invert {
        /// Table file, or `-` for stdin.
        input: String,
        keys: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Print the measure of the family formed by the keys.
        #[arg(long)]
        family: bool,
        #[arg(long)]
        scalar: Option<ScalarKind>,
    },
    /// Measure of a base set via difference operators, checked against a direct sum.
    BaseMeasure {
        input: String,
        /// Excluded set F.
        #[arg(long, default_value = "")]
        exclude: String,
        /// Hit sets U1..Un (repeatable).
        #[arg(long = "hit")]
        hits: Vec<String>,
        /// Read transform values from this table instead of computing them.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        close: bool,
        #[arg(long)]
        scalar: Option<ScalarKind>,
    },
    /// Time the dense kernels.
    Bench {
        n: usize,
        #[arg(default_value_t = 3)]
        reps: usize,
    },
    /// Inclusion-exclusion for three sets.
    DemoIe {
        /// Universe labels, comma separated; defaults to the labels the sets mention.
        #[arg(long, default_value = "")]
        universe: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let result = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result
        .map(|_| text)
        .map_err(|e| Error::BadArguments(format!("cannot read {path}: {e}")))
}

fn run(cli: Cli) -> Result<i32, Error> {
    let mut out = io::stdout().lock();
    let outcome = match cli.command {
        Command::Transform {
            input,
            keys,
            all,
            close,
            scalar,
        } => {
            let opts = TransformOptions {
                queries: keys,
                all,
                close,
                scalar,
            };
            cmd_transform(&read_input(&input)?, &opts, &mut out)?
        }
        Command::Invert {
            input,
            keys,
            all,
            family,
            scalar,
        } => {
            let opts = InvertOptions {
                queries: keys,
                all,
                family,
                scalar,
            };
            cmd_invert(&read_input(&input)?, &opts, &mut out)?
        }
        Command::BaseMeasure {
            input,
            exclude,
            hits,
            table,
            close,
            scalar,
        } => {
            let table = table.map(|t| read_input(&t)).transpose()?;
            let opts = BaseMeasureOptions {
                exclude,
                hits,
                close,
                scalar,
            };
            cmd_base_measure(&read_input(&input)?, table.as_deref(), &opts, &mut out)?
        }
        Command::Bench { n, reps } => cmd_bench(n, reps, &mut out)?,
        Command::DemoIe { universe, a, b, c } => {
            let universe: Vec<String> = universe
                .split(',')
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect();
            cmd_demo_inclusion_exclusion(&universe, [&a, &b, &c], &mut out)?
        }
    };
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR_EXIT as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use tropical_cli::commands::{self, CliError, ExtremeOptions, Input, Output, RandomFamily};
use tropical_cones::dd::Method;

/// Tropical polyhedral cones: extreme rays, extremality tests and
/// minimal SCCs of directed hypergraphs.
#[derive(Parser)]
#[command(name = "tropical", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Hypergraph,
    Residuation,
}

#[derive(Subcommand)]
enum Command {
    /// Extreme rays of the cone given by an H-rep file.
    Extreme {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "hypergraph")]
        method: MethodArg,
        /// Read an affine H-rep and print extreme points and rays.
        #[arg(long)]
        affine: bool,
        /// Append the elimination trace as comment lines.
        #[arg(long)]
        stats: bool,
        /// Worker threads for the extremality tests of one step.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Is VECTOR an extreme ray of the cone?
    Check {
        file: PathBuf,
        /// e.g. "(2, 2, 0)" or "-inf 0 -inf".
        #[arg(allow_hyphen_values = true)]
        vector: String,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Minimal strongly connected components of a hypergraph file.
    Minscc {
        file: PathBuf,
        /// Cross-check against brute-force reachability.
        #[arg(long)]
        oracle: bool,
    },
    /// Time both pipelines and print CSV.
    Bench {
        /// A random family, e.g. `--random d=5 n=5 count=10 seed=1`.
        #[arg(long, num_args = 1.., value_name = "KEY=VALUE", action = clap::ArgAction::Append)]
        random: Vec<String>,
        /// H-rep files, one row each.
        files: Vec<PathBuf>,
    },
    /// Upper bound on the number of extreme rays of a cone with N
    /// inequalities in dimension D.
    Bound {
        n: usize,
        d: usize,
        /// Print U(N, D) itself.
        #[arg(long)]
        raw: bool,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Extreme { file, method, affine, stats, jobs } => {
            if jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let method = match method {
                MethodArg::Hypergraph => Method::Hypergraph,
                MethodArg::Residuation => Method::Residuation,
            };
            let text = read(&file)?;
            let path = file.display().to_string();
            commands::extreme(Input { path: &path, text: &text }, &ExtremeOptions { method, affine, stats, jobs })
        }
        Command::Check { file, vector, oracle } => {
            let text = read(&file)?;
            let path = file.display().to_string();
            commands::check(Input { path: &path, text: &text }, &vector, oracle)
        }
        Command::Minscc { file, oracle } => {
            let text = read(&file)?;
            let path = file.display().to_string();
            commands::minscc(Input { path: &path, text: &text }, oracle)
        }
        Command::Bench { random, files } => {
            let families = if random.is_empty() { Vec::new() } else { vec![RandomFamily::parse(&random)?] };
            let texts = files
                .iter()
                .map(|f| Ok((f.display().to_string(), read(f)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let inputs: Vec<Input> = texts.iter().map(|(path, text)| Input { path, text }).collect();
            commands::bench(&families, &inputs)
        }
        Command::Bound { n, d, raw } => commands::bound(n, d, raw),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("tropical: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use autspec::commands::{
    cmd_aut, cmd_decompose, cmd_extremal, cmd_span, cmd_spectrum, cmd_verify, render, CmdError,
    GraphSource, OutputFormat, RunConfig, VectorSource,
};

/// Analyze how a graph's automorphism group acts on the eigenspaces of its
/// adjacency matrix.
#[derive(Parser)]
#[command(name = "autspec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Builtin graph family with optional size, e.g. `--builtin petersen`
    /// or `--builtin path 3`
    #[arg(long, num_args = 1..=2, value_names = ["NAME", "K"], conflicts_with = "input")]
    builtin: Option<Vec<String>>,

    /// Graph file: edge-list text (header `n <count>`, then `i j` lines) or
    /// graph6 (single line, or use a .g6 extension)
    #[arg(long)]
    input: Option<PathBuf>,

    /// Seed for every randomized choice; identical seeds reproduce output
    /// byte for byte
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Rank and membership tolerance, relative to the natural scale
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,

    /// Eigenvalue clustering tolerance, relative to the matrix norm
    #[arg(long = "cluster-tol", default_value_t = 1e-7)]
    cluster_tol: f64,

    /// Cap on enumerated group elements
    #[arg(long, default_value_t = 1_000_000)]
    cap: usize,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Analyze the subgroup generated by these automorphisms instead of the
    /// full group; semicolon-separated cycle strings like
    /// "(1,4,2,5,3)(6,9,7,10,8);(3,7)(4,10)(8,9)"
    #[arg(long)]
    group: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism group: order, generators, orbit-stabilizer factorization
    Aut(CommonArgs),
    /// Adjacency eigenvalues with multiplicities and residuals
    Spectrum(CommonArgs),
    /// Canonical decomposition into irreducible and isotypic components,
    /// globally and per eigenspace, with a cross-seed self-check
    Decompose(CommonArgs),
    /// Orbit span dimension of a vector, by the component-rank formula and
    /// by the closure oracle; exits nonzero if the two disagree
    Span {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file holding the vector (numbers or [re, im] pairs)
        #[arg(long, conflicts_with_all = ["random", "eigen"])]
        vector: Option<PathBuf>,
        /// Use a seeded random vector
        #[arg(long, conflicts_with = "eigen")]
        random: bool,
        /// Use a seeded random vector of the eigenspace closest to LAMBDA
        #[arg(long, value_name = "LAMBDA")]
        eigen: Option<f64>,
    },
    /// Extremal vectors: minimal and maximal orbit span per eigenspace and
    /// for the whole space
    Extremal(CommonArgs),
    /// Check the four equivalent automorphism characterizations for one
    /// permutation in cycle notation
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Permutation in cycle notation, e.g. "(3,7)(4,10)(8,9)"
        perm: String,
    },
}

fn config_from(common: &CommonArgs) -> Result<RunConfig, CmdError> {
    let source = match (&common.builtin, &common.input) {
        (Some(parts), None) => {
            let name = parts[0].clone();
            let k = if parts.len() > 1 {
                parts[1]
                    .parse::<usize>()
                    .map_err(|_| CmdError::Config(format!("bad size parameter '{}'", parts[1])))?
            } else {
                0
            };
            GraphSource::Builtin { name, k }
        }
        (None, Some(path)) => GraphSource::File(path.clone()),
        (None, None) => {
            return Err(CmdError::Config(
                "one of --builtin NAME [K] or --input PATH is required".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    };
    Ok(RunConfig {
        source,
        seed: common.seed,
        tol: common.tol,
        cluster_tol: common.cluster_tol,
        cap: common.cap,
        format: match common.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        group: common.group.clone(),
    })
}

fn execute(cli: Cli) -> Result<u8, CmdError> {
    match cli.command {
        Command::Aut(common) => {
            let cfg = config_from(&common)?;
            print!("{}", render(&cmd_aut(&cfg)?, cfg.format));
            Ok(0)
        }
        Command::Spectrum(common) => {
            let cfg = config_from(&common)?;
            print!("{}", render(&cmd_spectrum(&cfg)?, cfg.format));
            Ok(0)
        }
        Command::Decompose(common) => {
            let cfg = config_from(&common)?;
            let report = cmd_decompose(&cfg)?;
            print!("{}", render(&report, cfg.format));
            Ok(0)
        }
        Command::Span {
            common,
            vector,
            random,
            eigen,
        } => {
            let cfg = config_from(&common)?;
            let source = match (vector, random, eigen) {
                (Some(path), false, None) => VectorSource::File(path),
                (None, _, Some(lambda)) => VectorSource::Eigen(lambda),
                (None, _, None) => VectorSource::Random,
                _ => unreachable!("clap enforces the conflicts"),
            };
            let report = cmd_span(&cfg, &source)?;
            print!("{}", render(&report, cfg.format));
            if report.agrees {
                Ok(0)
            } else {
                eprintln!("error: formula and closure oracle disagree; this is a defect signal");
                Ok(6)
            }
        }
        Command::Extremal(common) => {
            let cfg = config_from(&common)?;
            print!("{}", render(&cmd_extremal(&cfg)?, cfg.format));
            Ok(0)
        }
        Command::Verify { common, perm } => {
            let cfg = config_from(&common)?;
            let report = cmd_verify(&cfg, &perm)?;
            print!("{}", render(&report, cfg.format));
            if report.consistent {
                Ok(0)
            } else {
                eprintln!("error: the four equivalent statements disagree; internal defect");
                Ok(7)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

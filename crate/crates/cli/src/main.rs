use std::fs;
use std::io::Write;
use std::process::ExitCode;

use adnil::verify::{Options, Suite};
use adnil_cli::{CliError, CliResult, Filters, Format, Report};
use clap::{Args, Parser, Subcommand};

/// Ad-nilpotent ideals of a Borel subalgebra and their normalizers.
#[derive(Parser, Debug)]
#[command(name = "adnil", version, about)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,

    /// Worker threads for exhaustive sweeps (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,

    /// Emit tab-separated values.
    #[arg(long, global = true)]
    tsv: bool,

    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every ad-nilpotent ideal of a type.
    Enumerate {
        /// Cartan type, e.g. A4, G2, so8, sp6.
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Keep only ideals without simple roots.
        #[arg(long)]
        strictly_positive: bool,
        /// Keep only Abelian ideals.
        #[arg(long)]
        abelian: bool,
        /// Keep only minimax ideals.
        #[arg(long)]
        minimax: bool,
    },
    /// Recompute the minimax / Borel-fiber table for so8, so10, E6, F4, G2.
    Table7,
    /// Run an invariant suite.
    Verify {
        /// normalizer-oracles, affine, shi, counting, typeAC, identities or all.
        suite: String,
        /// Restrict to these types (repeatable); defaults depend on the suite.
        #[arg(long = "type", value_name = "TYPE")]
        types: Vec<String>,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest n for the identity suite.
        #[arg(long, default_value_t = 12)]
        n_max: i64,
        /// Random words per type in the affine suite.
        #[arg(long, default_value_t = 1000)]
        words: usize,
    },
    /// Count ideals normalized by the Borel subalgebra.
    Count {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
}

fn max_rank() -> CliResult<Option<usize>> {
    match std::env::var("ADNIL_MAX_RANK") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("ADNIL_MAX_RANK must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn emit(out: &OutputArgs, report: &Report) -> CliResult<()> {
    let format = if out.json {
        Format::Json
    } else if out.tsv {
        Format::Tsv
    } else {
        Format::Table
    };
    let text = report.render(format);
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {path}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let cap = max_rank()?;
    match cli.command {
        Command::Enumerate { ty, strictly_positive, abelian, minimax } => {
            let report = adnil_cli::enumerate(&ty, Filters { strictly_positive, abelian, minimax }, cap)?;
            emit(&cli.output, &report)
        }
        Command::Table7 => {
            let (report, bad) = adnil_cli::table7()?;
            emit(&cli.output, &report)?;
            if bad.is_empty() {
                Ok(())
            } else {
                Err(CliError::TableMismatch(bad.join("\n")))
            }
        }
        Command::Verify { suite, types, seed, n_max, words } => {
            let suite: Suite = suite.parse()?;
            if n_max < 2 {
                return Err(CliError::Usage("--n-max must be at least 2".into()));
            }
            let opts = Options { seed, random_words: words, n_max, ..Options::default() };
            let (report, failure) = adnil_cli::verify(suite, &types, &opts, cap)?;
            emit(&cli.output, &report)?;
            match failure {
                None => Ok(()),
                Some(detail) => Err(CliError::Verification(detail.to_string())),
            }
        }
        Command::Count { ty } => {
            let report = adnil_cli::count(&ty, cap)?;
            emit(&cli.output, &report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("adnil: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

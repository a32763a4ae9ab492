use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use germwork::export::export;
use germwork::{load, run, with_threads, CliError, Command, Format, Options};
use germwork_core::algebra::Ring;
use germwork_core::Axioms;

#[derive(Parser)]
#[command(
    name = "germwork",
    version,
    about = "Verify finite restriction semigroups and their germ categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(clap::Args)]
struct Common {
    /// A JSON document or `catalog:NAME`.
    input: String,
    /// Lift size guards.
    #[arg(long)]
    force: bool,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Sub {
    /// Axiom families, or one family with --axioms.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_axioms)]
        axioms: Option<Axioms>,
    },
    /// Order, sigma, properness and the semilattice of projections.
    Analyze(Common),
    /// The universal category and the embedding into its slices.
    Germs(Common),
    /// Slices of the universal category, or of a category.
    Booleanize(Common),
    /// Constellation round trips.
    Esn(Common),
    /// The partial action product decomposition of a proper semigroup.
    Decompose(Common),
    /// The semigroup algebra and the convolution algebra of the universal category.
    AlgebraIso {
        #[command(flatten)]
        common: Common,
        /// q, z or zp:P.
        #[arg(long, default_value = "q", value_parser = parse_ring)]
        ring: Ring,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The partial action product of an E-unitary inverse semigroup.
    Pr(Common),
    /// Write the input back out.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

fn parse_axioms(s: &str) -> Result<Axioms, String> {
    s.parse().map_err(|e: germwork_core::Error| e.to_string())
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: germwork_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("germwork: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(sub: Sub) -> Result<(String, u8), CliError> {
    let mut opts = Options::default();
    let (command, common) = match sub {
        Sub::Export { common, format } => {
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            };
            let input = load(&common.input, common.force)?;
            return Ok((export(&input, format)?, 0));
        }
        Sub::Check { common, axioms } => {
            opts.axioms = axioms;
            (Command::Check, common)
        }
        Sub::AlgebraIso { common, ring, seed } => {
            opts.ring = ring;
            opts.seed = seed;
            (Command::AlgebraIso, common)
        }
        Sub::Analyze(c) => (Command::Analyze, c),
        Sub::Germs(c) => (Command::Germs, c),
        Sub::Booleanize(c) => (Command::Booleanize, c),
        Sub::Esn(c) => (Command::Esn, c),
        Sub::Decompose(c) => (Command::Decompose, c),
        Sub::Pr(c) => (Command::Pr, c),
    };
    opts.force = common.force;
    let input = load(&common.input, common.force)?;
    let report = with_threads(common.threads, || run(command, &input, &opts))??;
    Ok((report.to_json(), if report.passed() { 0 } else { 1 }))
}

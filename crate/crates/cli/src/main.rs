use clap::{Parser, Subcommand, ValueEnum};
use fecheck::run::{run, CommandKind, ReportFormat, RunConfig};

/// Exact verification of functional-equation identities over Q(t).
#[derive(Parser)]
#[command(name = "fecheck", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the pseudo-random sample generator.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Pseudo-random sample points added to the built-in structured set.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportArg::Text)]
    report: ReportArg,

    /// Bound for the degree-search commands.
    #[arg(long = "max-degree", global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario file (`.feq`) and compare against its expectation.
    Verify { path: String },
    /// Recover the symmetric form behind a claimed degree-n trace.
    Polarize {
        expr: String,
        /// Claimed monomial degree of the expression.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
    /// Search for the generalized-monomial degree of a function.
    Degree { expr: String },
    /// Exact grid rank of an arity-2 form used as a kernel.
    Rank { expr: String },
    /// Higher-order-derivation degree probe for an additive map.
    Hod { expr: String },
    /// Run every built-in scenario.
    Suite,
}

fn main() {
    let cli = Cli::parse();
    let (command, input) = match cli.command {
        Command::Verify { path } => (CommandKind::Verify, Some(path)),
        Command::Polarize { expr, degree } => (
            CommandKind::Polarize {
                degree: degree as usize,
            },
            Some(expr),
        ),
        Command::Degree { expr } => (CommandKind::Degree, Some(expr)),
        Command::Rank { expr } => (CommandKind::Rank, Some(expr)),
        Command::Hod { expr } => (CommandKind::Hod, Some(expr)),
        Command::Suite => (CommandKind::Suite, None),
    };
    let config = RunConfig {
        command,
        input,
        seed: cli.seed,
        samples: cli.samples as usize,
        report: match cli.report {
            ReportArg::Text => ReportFormat::Text,
            ReportArg::Json => ReportFormat::Json,
        },
        max_degree: cli.max_degree as usize,
    };
    match run(&config) {
        Ok(output) => {
            print!("{}", output.rendered);
            std::process::exit(output.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

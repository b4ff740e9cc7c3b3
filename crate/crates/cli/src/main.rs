use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frstab::Error;

mod commands;
mod output;

use output::Outcome;

const MATRIX_LIMIT_VAR: &str = "FRSTAB_MAX_MATRIX_ENTRIES";

#[derive(Parser, Debug)]
#[command(name = "frstab", version, about = "Exact checks on symmetric automorphisms of free products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 20_240_601)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate labelled trees, check the order axioms and contractibility.
    Trees {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Compare H_0 over the tree poset with the sum of cross effects.
    DecPira {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Also check the structured coefficients of this family.
        #[arg(long, alias = "group", value_delimiter = ',')]
        groups: Vec<String>,
    },
    /// H_1 of the Fouxe-Rabinovitch group by presentation and by formula.
    FrH1 {
        #[arg(long, alias = "group", value_delimiter = ',', required = true)]
        groups: Vec<String>,
    },
    /// Degree bound for E -> H_1(FR(G^{*E})).
    Degree {
        #[arg(long, alias = "group", value_delimiter = ',', required = true)]
        groups: Vec<String>,
        /// Largest number of copies to evaluate.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Degree to test.
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// H_1 of the symmetric automorphism groups of G^{*n} and the maps between them.
    Stability {
        #[arg(long, alias = "group", value_delimiter = ',', required = true)]
        groups: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Check every relation family as an identity of automorphisms.
    Relations {
        #[arg(long, alias = "group", value_delimiter = ',', required = true)]
        groups: Vec<String>,
    },
    /// Check the stabilizer isomorphism for every tree.
    Stabilizers {
        #[arg(long, alias = "group", value_delimiter = ',', required = true)]
        groups: Vec<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Bound { .. } => 3,
        Error::Parse(_) | Error::Structural(_) => 2,
        _ => 1,
    }
}

fn run(cli: &Cli) -> frstab::Result<Outcome> {
    match &cli.command {
        Command::Trees { n } => commands::trees(*n),
        Command::DecPira { n, trials, groups } => commands::dec_pira(*n, *trials, cli.config.seed, groups),
        Command::FrH1 { groups } => commands::fr_h1(groups),
        Command::Degree { groups, n, degree } => commands::degree(groups, *n, *degree),
        Command::Stability { groups, max_n } => commands::stability(groups, *max_n),
        Command::Relations { groups } => commands::relations(groups),
        Command::Stabilizers { groups } => commands::stabilizers(groups),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(MATRIX_LIMIT_VAR) {
        match v.trim().parse::<usize>() {
            Ok(limit) => frstab::limits::set_matrix_entry_limit(limit),
            Err(_) => {
                eprintln!("error: {MATRIX_LIMIT_VAR} must be a nonnegative integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = outcome.render(cli.config.format, cli.config.seed);
    let written = match &cli.config.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

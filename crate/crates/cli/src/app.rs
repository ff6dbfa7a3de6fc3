//! Argument parsing and dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use packhopf::suites::Suite;

use crate::commands::{self, Algebra, Options, Outcome};
use crate::error::CliError;

/// Default degree bound for `verify`.
pub const DEFAULT_VERIFY_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "packhopf", version, about = "Exact computations in Hopf algebras of packed words")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Degree cap for computations; the degree bound for `verify` and `dims` when not given positionally.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Suite for `verify` when not given positionally.
    #[arg(long, global = true)]
    pub suite: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operation: product, coproduct, reduced-coproduct, antipode,
    /// and the extras pi (wmat), psi (ispw-dual), psi-star (nsym),
    /// nw/ne/sw/se/left/right/wedge/vee (sh-dual).
    Compute {
        algebra: String,
        operation: String,
        #[arg(allow_hyphen_values = true)]
        operands: Vec<String>,
    },
    /// Basis of the primitive elements of one degree.
    Primitives { algebra: String, degree: usize },
    /// Dimensions of the algebra and of its primitives, degree by degree.
    Dims {
        algebra: String,
        #[arg(id = "degree_bound", value_name = "MAX_DEGREE")]
        max_degree: Option<usize>,
    },
    /// Run a verification suite; exits 1 when a check fails.
    Verify {
        #[arg(id = "suite_name", value_name = "SUITE")]
        suite: Option<String>,
        #[arg(id = "degree_bound", value_name = "MAX_DEGREE")]
        max_degree: Option<usize>,
    },
}

impl Cli {
    pub fn options(&self) -> Options {
        Options {
            max_degree: self.max_degree,
            seed: self.seed,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = cli.options();
    match &cli.command {
        Command::Compute {
            algebra,
            operation,
            operands,
        } => commands::compute(algebra.parse()?, operation, operands, &opts),
        Command::Primitives { algebra, degree } => commands::primitives(algebra.parse()?, *degree, &opts),
        Command::Dims { algebra, max_degree } => {
            let algebra: Algebra = algebra.parse()?;
            let n = max_degree
                .or(cli.max_degree)
                .ok_or_else(|| CliError::Usage("dims needs a maximal degree".into()))?;
            commands::dims(algebra, n, &Options { max_degree: None, ..opts })
        }
        Command::Verify { suite, max_degree } => {
            if suite.is_some() && cli.suite.is_some() && suite != &cli.suite {
                return Err(CliError::Usage("conflicting suite names".into()));
            }
            let suite: Suite = match suite.as_ref().or(cli.suite.as_ref()) {
                Some(s) => s.parse()?,
                None => Suite::All,
            };
            let n = max_degree.or(cli.max_degree).unwrap_or(DEFAULT_VERIFY_DEGREE);
            commands::verify(suite, n, &opts)
        }
    }
}

/// Runs the parsed command and returns what to print and the exit status:
/// 0 on success, 1 when a verification check fails, 2 on errors.
pub fn run(cli: &Cli) -> (String, String, i32) {
    match execute(cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => format!("{}\n", out.json),
            };
            (body, String::new(), if out.success { 0 } else { 1 })
        }
        Err(e) => {
            let msg = match cli.format {
                Format::Text => format!("error: {e}\n"),
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({"schema": crate::json::SCHEMA, "error": e.to_string()})
                ),
            };
            (String::new(), msg, 2)
        }
    }
}

//! `cherednik`: command-line front end to `cherednik-core`.
//!
//! Exit codes: 0 on success (including reports that record failures), 1 on
//! domain errors, 2 on malformed input.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser)]
#[command(
    name = "cherednik",
    version,
    about = "Exact computations in rational Cherednik algebras and degenerate DAHAs of type GL_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Rank `n` of `GL_n`.
    #[arg(long)]
    pub n: usize,
    /// Exact rational parameter, e.g. `5/3` or `-2`.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long)]
    pub json: bool,
}

impl Common {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraKind {
    Rat,
    Locrat,
    Trig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    Iota,
    Jmath,
    JmathA,
    IotaAb,
    Sigma,
    SigmaRat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckTarget {
    Rat,
    Locrat,
    Trig,
    Pi,
    Dunkl,
    Iota,
    Jmath,
    JmathA,
    IotaAb,
    Sigma,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "rat")]
        algebra: AlgebraKind,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply `Y_i`, `U_i`, `X_i` or an element of `H_κ` to a polynomial.
    Act {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Push an element through one of the algebra maps.
    Embed {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Check defining relations in an algebra, a representation, or through a map.
    Relcheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "rat")]
        target: CheckTarget,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b: String,
        /// Degree bound for the `dunkl` target.
        #[arg(long, default_value_t = 4)]
        dmax: u32,
    },
    /// Random associativity check of the normal-form product.
    FuzzAssoc {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "rat")]
        algebra: AlgebraKind,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        max_deg: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Joint u-weights of the standard module by degree.
    Weights {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 3)]
        dmax: usize,
    },
    /// Singular vectors of the standard module by degree.
    Singular {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 3)]
        dmax: usize,
    },
    /// Graded dimensions of the simple quotient.
    SimpleDims {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 6)]
        dmax: usize,
    },
    /// Nonsymmetric Jack polynomial of a composition.
    Jack {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        mu: String,
    },
    /// Semisimple-category membership of every partition of n.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Also test u-semisimplicity of L(λ) through this degree.
        #[arg(long)]
        check_dmax: Option<usize>,
    },
    /// pi-shifted weight data of the induced module.
    Induce {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 2)]
        dmax: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
        kmin: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        kmax: i64,
    },
}

pub enum CliError {
    Parse(String),
    Domain(String),
}

impl From<cherednik_core::Error> for CliError {
    fn from(e: cherednik_core::Error) -> Self {
        if e.is_parse() {
            CliError::Parse(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<(output::Output, Format), CliError> {
    use commands as c;
    Ok(match cli.command {
        Command::Nf {
            common,
            algebra,
            expr,
        } => (c::nf(&common, algebra, &expr)?, common.format()),
        Command::Act { common, op, poly } => (c::act(&common, &op, &poly)?, common.format()),
        Command::Embed {
            common,
            map,
            a,
            b,
            expr,
        } => (c::embed(&common, map, &a, &b, &expr)?, common.format()),
        Command::Relcheck {
            common,
            target,
            a,
            b,
            dmax,
        } => (c::relcheck(&common, target, &a, &b, dmax)?, common.format()),
        Command::FuzzAssoc {
            common,
            algebra,
            count,
            max_deg,
            seed,
        } => (
            c::fuzz(&common, algebra, count, max_deg, seed)?,
            common.format(),
        ),
        Command::Weights {
            common,
            lambda,
            dmax,
        } => (c::weights(&common, &lambda, dmax)?, common.format()),
        Command::Singular {
            common,
            lambda,
            dmax,
        } => (c::singular(&common, &lambda, dmax)?, common.format()),
        Command::SimpleDims {
            common,
            lambda,
            dmax,
        } => (c::simple_dims(&common, &lambda, dmax)?, common.format()),
        Command::Jack { common, mu } => (c::jack(&common, &mu)?, common.format()),
        Command::Classify { common, check_dmax } => {
            (c::classify(&common, check_dmax)?, common.format())
        }
        Command::Induce {
            common,
            lambda,
            dmax,
            kmin,
            kmax,
        } => (
            c::induce(&common, &lambda, dmax, kmin, kmax)?,
            common.format(),
        ),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, format)) => match out.render(format) {
            Ok(s) => {
                // A closed pipe downstream is not an error of ours.
                let _ = writeln!(std::io::stdout(), "{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(CliError::Parse(e)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

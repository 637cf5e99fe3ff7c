//! Command-line front end for `gradealg`.

pub mod commands;
pub mod report;
pub mod spec;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::Outcome;
use spec::{Overrides, Problem, ProblemSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] gradealg::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_limit() => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gradealg",
    version,
    about = "Associated graded rings, Rees algebras and their local cohomology"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// Problem description (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Override the field: Q or GFp.
    #[arg(long)]
    pub field: Option<String>,
    /// Degree window lo:hi for cohomology tables.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Accept J containing linear forms.
    #[arg(long)]
    pub allow_linear: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Module {
    A,
    R,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the associated graded ring is isomorphic to A.
    CheckIso(Common),
    /// Presentations of the Rees algebra and the associated graded ring.
    Presentation(Common),
    /// Hilbert functions of A and of the associated graded ring.
    Hilbert(Common),
    /// Local cohomology tables of A or of the Rees algebra.
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "A", ignore_case = true)]
        module: Module,
    },
    /// Generalized Cohen-Macaulay test for the Rees algebra.
    Gencm(Common),
    /// Dimension, depth and a-invariant.
    Dim(Common),
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::CheckIso(c)
            | Command::Presentation(c)
            | Command::Hilbert(c)
            | Command::Gencm(c)
            | Command::Dim(c) => c,
            Command::Cohomology { common, .. } => common,
        }
    }
}

pub fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo = lo.trim().parse().map_err(|_| format!("bad lower end `{lo}`"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad upper end `{hi}`"))?;
    Ok((lo, hi))
}

/// Runs a command on an already parsed spec.
pub fn run_spec(command: &Command, spec: &ProblemSpec) -> Result<Outcome, CliError> {
    let c = command.common();
    let overrides = Overrides { field: c.field.clone(), window: c.window, allow_linear: c.allow_linear };
    let problem = Problem::new(spec, &overrides)?;
    match command {
        Command::CheckIso(_) => commands::check_iso(&problem),
        Command::Presentation(_) => commands::presentation(&problem),
        Command::Hilbert(_) => commands::hilbert(&problem),
        Command::Cohomology { module, .. } => commands::cohomology(
            &problem,
            match module {
                Module::A => "A",
                Module::R => "R",
            },
        ),
        Command::Gencm(_) => commands::gencm(&problem),
        Command::Dim(_) => commands::dim(&problem),
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    let spec = ProblemSpec::read(&command.common().input)?;
    run_spec(command, &spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(parse_window("-8:2"), Ok((-8, 2)));
        assert_eq!(parse_window(" -3 : 0 "), Ok((-3, 0)));
        assert!(parse_window("-3").is_err());
        assert!(parse_window("a:1").is_err());
    }

    #[test]
    fn limit_errors_exit_two() {
        assert_eq!(CliError::Core(gradealg::Error::BoundExceeded("n".into())).exit_code(), 2);
        assert_eq!(CliError::Input("bad".into()).exit_code(), 1);
    }
}

//! Command-line surface and the resolved run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diagcoinv_core::character::Params;
use diagcoinv_core::coinvariant::DEFAULT_CELL_BUDGET;
use diagcoinv_core::root_system::{TypeLabel, DEFAULT_GROUP_BUDGET};
use serde::Serialize;

use crate::CliError;

/// Largest top-degree basis for which `verify cherednik` runs the
/// contravariant-form sweep.
pub const DEFAULT_FORM_BUDGET: u64 = 20;

/// Largest rank for which diagonal coinvariants are computed by default.
pub const DEFAULT_DIAGONAL_RANK: u64 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "diagcoinv",
    version,
    about = "Exact checks for Weyl-group coinvariants and rational Cherednik algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root data: rank, N, h, exponents, degrees, |W|, (h+1)^n.
    Info(Target),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        target: Target,
    },
    /// Emit a series as exponent/coefficient triples.
    Series {
        #[arg(value_enum)]
        what: SeriesKind,
        #[command(flatten)]
        target: Target,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Suite {
    #[value(name = "series")]
    #[serde(rename = "series")]
    Series,
    #[value(name = "characters")]
    #[serde(rename = "characters")]
    Characters,
    #[value(name = "cherednik")]
    #[serde(rename = "cherednik")]
    Cherednik,
    #[value(name = "coinvariants")]
    #[serde(rename = "coinvariants")]
    Coinvariants,
    #[value(name = "typeB")]
    #[serde(rename = "typeB")]
    TypeB,
    #[value(name = "all")]
    #[serde(rename = "all")]
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum SeriesKind {
    #[value(name = "p")]
    #[serde(rename = "p")]
    P,
    #[value(name = "hilbL")]
    #[serde(rename = "hilbL")]
    HilbL,
    #[value(name = "eMc")]
    #[serde(rename = "eMc")]
    EMc,
    #[value(name = "DW")]
    #[serde(rename = "DW")]
    Dw,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct Target {
    /// Weyl type: A, B, C, D, E, F or G.
    #[arg(value_name = "TYPE")]
    pub type_label: String,
    pub rank: usize,
    /// Shift parameter in c = (1 + m h)/h.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    pub m: i64,
    /// Parameter values: `p/q` for every root, or `p/q,r/s` for short and long roots.
    #[arg(long)]
    pub c: Option<String>,
    /// Bidegree box for diagonal coinvariants; default n·h in each direction.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub max_bidegree: Option<Vec<u32>>,
    /// Largest Weyl group order to enumerate.
    #[arg(long, env = "DIAGCOINV_BUDGET", default_value_t = DEFAULT_GROUP_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Largest number of monomials in one bidegree cell.
    #[arg(long, env = "DIAGCOINV_CELL_BUDGET", default_value_t = DEFAULT_CELL_BUDGET as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cell_budget: u64,
    /// Largest top-degree basis for the contravariant-form sweep.
    #[arg(long, env = "DIAGCOINV_FORM_BUDGET", default_value_t = DEFAULT_FORM_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub form_budget: u64,
    /// Largest rank for diagonal-coinvariant computations.
    #[arg(long, env = "DIAGCOINV_DIAGONAL_RANK", default_value_t = DEFAULT_DIAGONAL_RANK,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub diagonal_rank: u64,
    /// Highest exponent in series expansions; default 2h.
    #[arg(long)]
    pub trunc: Option<u32>,
    #[arg(long, value_enum, env = "DIAGCOINV_FORMAT", default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandKind {
    Info,
    Verify(Suite),
    Series(SeriesKind),
}

#[derive(Clone, Debug, Serialize)]
pub struct Budgets {
    pub group_order: u64,
    pub cell: u64,
    pub form_basis: u64,
    pub diagonal_rank: u64,
}

/// Everything a command needs, validated. Echoed into the report, minus
/// the output path.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub m: i64,
    pub c: Option<String>,
    pub max_bidegree: Option<(u32, u32)>,
    pub budgets: Budgets,
    pub trunc: Option<u32>,
    pub format: Format,
    #[serde(skip)]
    pub label: TypeLabel,
    #[serde(skip)]
    pub params: Option<Params>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, t) = match cli.command {
            Command::Info(t) => (CommandKind::Info, t),
            Command::Verify { suite, target } => (CommandKind::Verify(suite), target),
            Command::Series { what, target } => (CommandKind::Series(what), target),
        };
        let label: TypeLabel = t.type_label.parse()?;
        label.validate(t.rank)?;
        let params = t.c.as_deref().map(Params::parse).transpose()?;
        let max_bidegree = t.max_bidegree.map(|v| (v[0], v[1]));
        Ok(Self {
            command,
            type_label: label.to_string(),
            rank: t.rank,
            m: t.m,
            c: t.c,
            max_bidegree,
            budgets: Budgets {
                group_order: t.budget,
                cell: t.cell_budget,
                form_basis: t.form_budget,
                diagonal_rank: t.diagonal_rank,
            },
            trunc: t.trunc,
            format: t.format,
            label,
            params,
            out: t.out,
        })
    }
}

//! Command-line surface: subcommands, global flags, and small parsers for
//! the range arguments the grid commands take.

use std::path::PathBuf;

use atomarch::connectivity::Routing;
use atomarch::units::{parse_quantity, Dimension};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "atomarch",
    version,
    about = "Resource estimates for neutral-atom quantum computer architectures",
    propagate_version = true
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Scenario TOML file; omitted, the built-in reference scenario is used
    #[arg(long, global = true, value_name = "PATH")]
    pub scenario: Option<PathBuf>,
    /// Override one scenario field, e.g. --set code.distance=7 (repeatable)
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Write the full JSON report to this path
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the tabular results as CSV to this path
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interaction strength and the entangling-error floor at one distance
    Bound(BoundArgs),
    /// Atom move times and the temperatures behind heating budgets
    Transport,
    /// Surface-code logical error rate and physical-qubit overhead
    Code(CodeArgs),
    /// Compare logical two-qubit gate strategies on the logical grid
    Connectivity(ConnectivityArgs),
    /// Classical simulation cost over a (qubit count, infidelity) grid
    NisqGrid(GridArgs),
    /// Regenerate the summary figures as CSV grids
    #[command(subcommand)]
    Figure(FigureCommand),
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Pair separation, e.g. "14 um"; defaults to code distance x gate-pair
    /// spacing
    #[arg(long, value_name = "LENGTH")]
    pub distance: Option<String>,
    /// Check a measured Rydberg population trace (CSV) against the bound
    #[arg(long, value_name = "PATH")]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Report the smallest distance reaching this inverse logical error rate
    #[arg(long, value_name = "INVERSE_PL")]
    pub target: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ConnectivityArgs {
    /// How array-averaged gate times weight the patch separations
    #[arg(long, value_enum, default_value_t = RoutingArg::Pairwise)]
    pub routing: RoutingArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoutingArg {
    /// Average over all ordered pairs of distinct patches
    Pairwise,
    /// Stage every gate through the grid's interaction zone
    Zone,
}

impl RoutingArg {
    pub fn to_routing(self) -> Routing {
        match self {
            RoutingArg::Pairwise => Routing::Pairwise,
            RoutingArg::Zone => Routing::Zone,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RoutingArg::Pairwise => "pairwise",
            RoutingArg::Zone => "zone",
        }
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Qubit-count range MIN:MAX
    #[arg(long = "n-range", value_name = "MIN:MAX", default_value = "10:1000")]
    pub n_range: String,
    /// Gate-infidelity range MIN:MAX (sampled logarithmically)
    #[arg(
        long = "epsilon-range",
        value_name = "MIN:MAX",
        default_value = "1e-4:1e-2"
    )]
    pub epsilon_range: String,
    /// Samples per axis
    #[arg(long, default_value_t = 50)]
    pub resolution: u32,
    /// Space the qubit-count axis logarithmically instead of linearly
    #[arg(long = "log-n")]
    pub log_n: bool,
}

#[derive(Debug, Subcommand)]
pub enum FigureCommand {
    /// Double-log classical simulation cost over qubit count and infidelity
    Fig2(GridArgs),
    /// Long-range logical gate time over gate time and beam-move time
    Fig5(Fig5Args),
    /// Transport round trip over distance and heating budget, plus inset
    Fig8(Fig8Args),
}

#[derive(Debug, Args)]
pub struct Fig5Args {
    /// Two-qubit gate time range MIN:MAX, e.g. 0.1us:1us
    #[arg(long = "tcz-range", value_name = "MIN:MAX")]
    pub tcz_range: String,
    /// Beam repointing time range MIN:MAX, e.g. 0.1us:10us
    #[arg(long = "tbeam-range", value_name = "MIN:MAX")]
    pub tbeam_range: String,
    /// Samples per axis
    #[arg(long, default_value_t = 40)]
    pub resolution: u32,
    /// Override the scenario's code distance
    #[arg(long)]
    pub d: Option<u32>,
}

#[derive(Debug, Args)]
pub struct Fig8Args {
    /// Traverse distance range MIN:MAX, e.g. 10um:200um (sampled linearly)
    #[arg(long = "R-range", value_name = "MIN:MAX")]
    pub r_range: String,
    /// Round-trip heating budget range MIN:MAX in motional quanta
    /// (sampled logarithmically)
    #[arg(long = "budget-range", value_name = "MIN:MAX")]
    pub budget_range: String,
    /// Samples per axis
    #[arg(long, default_value_t = 40)]
    pub resolution: u32,
    /// Code distance used to annotate the patch-traverse distance
    #[arg(long)]
    pub d: Option<u32>,
    /// Also write the temperature-per-quanta inset table to this path
    #[arg(long = "inset-csv", value_name = "PATH")]
    pub inset_csv: Option<PathBuf>,
}

/// Split a `MIN:MAX` range of plain numbers.
pub fn parse_number_range(flag: &str, raw: &str) -> Result<(f64, f64), CliError> {
    let (lo, hi) = raw.split_once(':').ok_or_else(|| {
        CliError::usage(format!("{flag} expects MIN:MAX, got \"{raw}\""))
    })?;
    let parse = |text: &str| {
        text.trim().parse::<f64>().map_err(|_| {
            CliError::usage(format!("{flag}: \"{}\" is not a number", text.trim()))
        })
    };
    Ok((parse(lo)?, parse(hi)?))
}

/// Split a `MIN:MAX` range of quantities with units, checking the dimension
/// of both ends.
pub fn parse_quantity_range(
    flag: &str,
    raw: &str,
    dimension: Dimension,
) -> Result<(f64, f64), CliError> {
    let (lo, hi) = raw.split_once(':').ok_or_else(|| {
        CliError::usage(format!("{flag} expects MIN:MAX, got \"{raw}\""))
    })?;
    let parse = |text: &str| -> Result<f64, CliError> {
        let value = parse_quantity(text.trim())
            .map_err(|e| CliError::usage(format!("{flag}: {e}")))?;
        value
            .expect(dimension)
            .map_err(|e| CliError::usage(format!("{flag}: {e}")))
    };
    Ok((parse(lo)?, parse(hi)?))
}

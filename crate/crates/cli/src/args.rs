use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay_core::groups::DEFAULT_CAP;

#[derive(Debug, Parser)]
#[command(
    name = "mckay",
    version,
    about = "Lefschetz numbers on crepant resolutions of quotient singularities"
)]
pub struct Cli {
    /// Print one PASS/FAIL line per check instead of the JSON report.
    #[arg(long, global = true)]
    pub summary: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Close a matrix group and count classes invariant under an outer action.
    Group(GroupArgs),
    /// Build or load an invariant crepant triangulation and compare L(h) with |H^h|.
    Toric(ToricArgs),
    /// Evaluate Euler and Lefschetz numbers on a G-space sheet.
    Orbifold(OrbifoldArgs),
    /// Run the cross-module property suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupFixtureName {
    Cyclic,
    BinaryDihedral,
    D4Triality,
    BinaryTetrahedral,
    QuinticSwap,
    QuinticSwapTwoPairs,
    LtCompleteIntersection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ActionName {
    /// [[0,1],[-1,0]]
    #[default]
    Rotation,
    /// [[0,1],[1,0]]
    Swap,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    #[arg(long, conflicts_with = "gens")]
    pub fixture: Option<GroupFixtureName>,
    /// Order of the cyclic group, or r for the binary dihedral group D_r.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, value_enum, default_value_t = ActionName::Rotation)]
    pub action: ActionName,
    /// Generators such as "[[z4^1, 0], [0, z4^3]]", separated by ';'.
    #[arg(long)]
    pub gens: Option<String>,
    /// Matrix acting by conjugation (default: identity).
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Work modulo scalar matrices.
    #[arg(long)]
    pub projective: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ToricFixtureName {
    /// H = Z_5 x Z_5 in SL_3 with the cyclic coordinate permutation.
    Z5sqCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OrderName {
    #[default]
    Lex,
    Revlex,
}

#[derive(Debug, Clone, Args)]
pub struct ToricArgs {
    #[arg(long, conflicts_with_all = ["n", "gen", "triangulation"])]
    pub fixture: Option<ToricFixtureName>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Generators of H as "a1,...,an@m", separated by ';'; empty for H trivial.
    #[arg(long)]
    pub gen: Option<String>,
    /// Coordinate permutation in cycle notation, 1-based.
    #[arg(long)]
    pub perm: Option<String>,
    /// Lattice point insertion order.
    #[arg(long, value_enum, default_value_t = OrderName::Lex)]
    pub order: OrderName,
    /// Coarse layout choice.
    #[arg(long, default_value_t = 0)]
    pub layout: usize,
    /// Replace the triangulation by its k-th equivariant flip.
    #[arg(long)]
    pub flip: Option<usize>,
    /// Load a triangulation document instead of constructing one.
    #[arg(long)]
    pub triangulation: Option<PathBuf>,
    /// Write the triangulation document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SheetFixtureName {
    QuinticSwap,
    QuinticSwapTwoPairs,
    QuinticIdentity,
    LtCompleteIntersection,
    Point,
}

#[derive(Debug, Clone, Args)]
pub struct OrbifoldArgs {
    #[arg(long, conflicts_with = "sheet", required_unless_present = "sheet")]
    pub fixture: Option<SheetFixtureName>,
    /// G-space sheet document (JSON).
    #[arg(long)]
    pub sheet: Option<PathBuf>,
    /// Write the sheet document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated check names; all checks when absent.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Largest |H| in the two-dimensional sweeps.
    #[arg(long, default_value_t = 30)]
    pub max_n: u64,
    /// Number of random three-dimensional instances.
    #[arg(long, default_value_t = 50)]
    pub cases: usize,
}

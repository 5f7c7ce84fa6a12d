//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "jknot",
    version,
    about = "Chern-Simons invariants of J(2n,-2m) knot cone-manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Bisection tolerance for alpha0.
    #[arg(long, default_value_t = jknot_cs::cs::ALPHA0_TOL, global = true)]
    pub tol: f64,

    /// Continuation steps per sweep of length pi.
    #[arg(long, global = true)]
    pub steps: Option<usize>,

    /// Simpson intervals on the hyperbolic range (samples, for `trace`).
    #[arg(long, global = true)]
    pub hyp_intervals: Option<usize>,

    /// Simpson intervals on the spherical range (samples, for `trace`).
    #[arg(long, global = true)]
    pub sph_intervals: Option<usize>,

    /// Directory that receives the tracked branches as CSV.
    #[arg(long, value_name = "PATH", global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euclidean angle alpha0 where the spherical pair collides.
    Alpha0(KnotArgs),
    /// Chern-Simons invariants.
    Cs {
        #[command(subcommand)]
        target: CsTarget,
    },
    /// Reproduce a reference table.
    Table {
        #[arg(value_enum)]
        which: TableName,
    },
    /// Dump one branch of the geometric component with its integrand.
    Trace(TraceArgs),
}

#[derive(Debug, Subcommand)]
pub enum CsTarget {
    /// Complete hyperbolic structure on the knot complement (mod 1/2).
    Knot(KnotArgs),
    /// Orbifold with cone angle 2pi/k (mod 1/k or 1/2k).
    Orbifold(OrbifoldArgs),
    /// k-fold cyclic cover of the orbifold (mod 1 or 1/2).
    Cover(OrbifoldArgs),
    /// Lens space L(4nm+1, 2n(2m-1)+1) (mod 1).
    Lens(KnotArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct KnotArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OrbifoldArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    /// Start the hyperbolic branch at 2pi/k instead of 0.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_enum, default_value_t = Branch::Hyperbolic)]
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    #[value(name = "paper-1")]
    Paper1,
    #[value(name = "paper-2")]
    Paper2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Branch {
    Hyperbolic,
    Spherical1,
    Spherical2,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Hyperbolic => "hyperbolic",
            Branch::Spherical1 => "spherical1",
            Branch::Spherical2 => "spherical2",
        }
    }
}

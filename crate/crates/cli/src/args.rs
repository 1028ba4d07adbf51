use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "pathcat", version, about = "Path categories of cubical and simplicial complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Comma-separated passes, applied in order: corner, refine, frontier,
    /// sk2, interval, source-sink.
    #[arg(long, global = true, default_value = "")]
    pub pipeline: String,

    /// Attach per-pass reports to the output.
    #[arg(long, global = true)]
    pub report: bool,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Report hom-set sizes only, using the streaming counter.
    #[arg(long, global = true)]
    pub count_only: bool,

    /// Query every pair of vertices.
    #[arg(long, global = true)]
    pub all: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute hom sets of a complex.
    Compute(ComputeArgs),
    /// Print a complex from one of the built-in families.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Check a pass against brute-force hom sets.
    Verify(VerifyArgs),
    /// Time direct, reduced and frontier computations over a family.
    Bench(BenchArgs),
    /// Apply the pipeline and print the reduced complex.
    Reduce(ReduceArgs),
}

/// Vertices are integers for simplicial complexes; for cubical ones, sets
/// such as `{1,3}`, `init`/`term`, or an index into the canonical order.
#[derive(Debug, Args, Default)]
pub struct Query {
    #[arg(long)]
    pub from: Option<String>,
    #[arg(long)]
    pub to: Option<String>,
}

#[derive(Debug, Args, Default)]
pub struct PassOptions {
    /// Frontier cut M: the lower block holds vertices of size ≤ M.
    #[arg(long)]
    pub cut: Option<usize>,

    /// Poset monomorphism JSON for the refine pass.
    #[arg(long)]
    pub alpha: Option<PathBuf>,

    /// Vertices the corner pass must keep, comma-separated.
    #[arg(long)]
    pub protect: Option<String>,

    /// Compute directly when the cut does not separate a pair.
    #[arg(long)]
    pub fallback_direct: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Complex JSON, or `-` for stdin.
    pub input: String,
    #[command(flatten)]
    pub query: Query,
    #[command(flatten)]
    pub options: PassOptions,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// `k` glued boundaries of a 2-simplex.
    Necklace { k: usize },
    /// The full cube `□^n`.
    Hypercube { n: usize },
    /// A `w × h` grid of squares in `□^(w+h)`.
    Grid {
        width: usize,
        height: usize,
        /// Empty squares as `i:j`, comma-separated.
        #[arg(long, default_value = "")]
        holes: String,
        /// Deleted edges as `i:j:h` or `i:j:v`, comma-separated.
        #[arg(long, default_value = "")]
        missing_edges: String,
    },
    /// The Swiss flag grid.
    SwissFlag,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Complex JSON, or `-` for stdin. Omit with `--random`.
    pub input: Option<String>,

    /// interval, source-sink, corner, refine, frontier, sk2 or levels.
    #[arg(long)]
    pub pass: String,

    /// Check this many seeded random complexes instead of a file.
    #[arg(long)]
    pub random: Option<usize>,

    #[command(flatten)]
    pub query: Query,
    #[command(flatten)]
    pub options: PassOptions,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// necklace, hypercube or grid.
    pub family: String,
    /// A size range such as `1..12`, or `w h` for grid.
    #[arg(required = true)]
    pub params: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub input: String,
    #[command(flatten)]
    pub query: Query,
    #[command(flatten)]
    pub options: PassOptions,
}

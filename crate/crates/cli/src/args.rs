use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Graph braid group cube complexes, RAAG word problems and their certificates.
///
/// Graphs come from a JSON file (`--graph`, or positionally) or from a
/// builtin family written `family:params`, e.g. `complete:5`,
/// `complete_bipartite:3,3`, `cycle:6`, `path:4`, `petersen`.
///
/// Exit codes: 0 success, 1 input error, 2 violations found, 3 budget exceeded.
#[derive(Debug, Parser)]
#[command(name = "cubist", version)]
pub struct Cli {
    /// Worker threads for the parallel checks.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph JSON file.
    #[arg(value_name = "GRAPH")]
    pub path: Option<PathBuf>,
    /// Graph JSON file.
    #[arg(long = "graph", alias = "delta", value_name = "FILE", conflicts_with_all = ["path", "builtin"])]
    pub graph: Option<PathBuf>,
    /// Builtin graph, `family:p1,p2`.
    #[arg(long, value_name = "FAMILY:PARAMS", conflicts_with = "path")]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the produced graph or complex here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOut,
}

#[derive(Debug, Args)]
pub struct ReportOut {
    /// Write the JSON report here.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

/// A complex from a file, or the configuration space of a graph.
#[derive(Debug, Args)]
pub struct ComplexInput {
    /// Complex JSON file.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["path", "graph", "builtin"])]
    pub complex: Option<PathBuf>,
    #[command(flatten)]
    pub graph: GraphInput,
    /// Number of points, when building from a graph.
    #[arg(long, short)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub budget: CubeBudget,
}

#[derive(Debug, Args)]
pub struct CubeBudget {
    /// Abort once more cubes than this have been enumerated.
    #[arg(long, default_value_t = 2_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_cubes: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced configuration space of n points on a graph.
    ConfigSpace {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, short)]
        n: usize,
        /// Identify the complex as a surface.
        #[arg(long)]
        surface: bool,
        /// Check that every vertex link is flag.
        #[arg(long)]
        flag: bool,
        #[command(flatten)]
        budget: CubeBudget,
        #[command(flatten)]
        output: Output,
    },
    /// Graph of edges, adjacent when disjoint.
    DeltaGraph {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        output: Output,
    },
    /// Complement graph.
    Opposite {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        output: Output,
    },
    /// Graph of edges, adjacent when sharing an endpoint.
    LineGraph {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        output: Output,
    },
    /// Replace every edge by a path of k edges.
    Subdivide {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Planarity with a rotation system or Kuratowski witness.
    Planar {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        report: ReportOut,
    },
    /// Covering maps of graphs.
    Cover {
        #[command(subcommand)]
        command: CoverCommand,
    },
    /// Flag condition on every vertex link.
    CheckFlag {
        #[command(flatten)]
        input: ComplexInput,
        #[command(flatten)]
        report: ReportOut,
    },
    /// Closed-surface recognition, Euler characteristic and orientability.
    SurfaceId {
        #[command(flatten)]
        input: ComplexInput,
        #[command(flatten)]
        report: ReportOut,
    },
    /// One-vertex cube complex of a defining graph.
    Salvetti {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        max_dim: u64,
        #[command(flatten)]
        output: Output,
    },
    /// The map from a configuration space to the Salvetti complex of its
    /// disjointness graph.
    Phi {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, short)]
        n: usize,
        /// Run the per-vertex local isometry certificate.
        #[arg(long)]
        certify: bool,
        /// Extract a presentation and check every relator image.
        #[arg(long)]
        relators: bool,
        #[command(flatten)]
        budget: CubeBudget,
        #[command(flatten)]
        report: ReportOut,
    },
    /// Fundamental group presentation of a connected square complex.
    Presentation {
        #[command(flatten)]
        input: ComplexInput,
        /// Basepoint label, e.g. `0,3` (default: least vertex).
        #[arg(long)]
        basepoint: Option<String>,
        #[command(flatten)]
        report: ReportOut,
    },
    /// Homomorphism induced by a finite cover of the opposite graph.
    CoverHom {
        #[command(flatten)]
        graph: GraphInput,
        /// Cover JSON: source, target and vertex_map.
        #[arg(long, value_name = "FILE")]
        cover: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        sheets: u64,
        /// Longest test word.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[command(flatten)]
        report: ReportOut,
    },
    /// Word problems in the RAAG of a defining graph.
    Word {
        #[command(subcommand)]
        command: WordCommand,
    },
    /// All solutions of x^2 y^2 = z^2 among short words.
    SearchSquare {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        max_len: usize,
        /// Cap on the number of (x, y) pairs examined.
        #[arg(long, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[command(flatten)]
        report: ReportOut,
    },
}

#[derive(Debug, Subcommand)]
pub enum CoverCommand {
    /// Check that a vertex map is a covering with the given number of sheets.
    Validate {
        /// Cover JSON: source, target and vertex_map.
        #[arg(value_name = "COVER")]
        cover: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        sheets: u64,
        #[command(flatten)]
        report: ReportOut,
    },
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Defining graph JSON file.
    #[arg(
        long,
        value_name = "FILE",
        alias = "delta",
        required_unless_present = "builtin"
    )]
    pub graph: Option<PathBuf>,
    #[arg(long, value_name = "FAMILY:PARAMS", conflicts_with = "graph")]
    pub builtin: Option<String>,
    #[command(flatten)]
    pub report: ReportOut,
}

#[derive(Debug, Subcommand)]
pub enum WordCommand {
    /// Cancel pairs separated only by commuting letters, with a certificate.
    Reduce {
        #[command(flatten)]
        args: WordArgs,
        word: String,
    },
    /// Normal form.
    Nf {
        #[command(flatten)]
        args: WordArgs,
        word: String,
    },
    /// Cyclically reduced conjugate.
    Cyclic {
        #[command(flatten)]
        args: WordArgs,
        word: String,
    },
    /// Whether two words are the same element.
    Equal {
        #[command(flatten)]
        args: WordArgs,
        first: String,
        second: String,
    },
    /// Whether two words are conjugate.
    Conj {
        #[command(flatten)]
        args: WordArgs,
        first: String,
        second: String,
    },
    /// Certificate that a word is the identity.
    Certify {
        #[command(flatten)]
        args: WordArgs,
        word: String,
    },
}

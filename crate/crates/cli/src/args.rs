use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chirality", version, about = "Classify small graphs by achiral embeddability")]
pub struct Cli {
    /// Worker threads; overrides CHIRALITY_THREADS.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Mg,
    Dot,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file; `-` reads standard input.
    pub file: PathBuf,

    /// Input format; defaults to mg for `.mg` files and graph6 otherwise.
    #[arg(long, value_enum)]
    pub format: Option<GraphFormat>,

    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one graph per isomorphism class.
    Gen {
        #[arg(long)]
        vertices: usize,
        /// Smallest order to include; defaults to --vertices.
        #[arg(long)]
        min_vertices: Option<usize>,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        nonplanar: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Test planarity and print an embedding or a Kuratowski witness.
    Planar(Input),
    /// Print the automorphism group order and generators.
    Aut(Input),
    /// Search for a minor, or replay a saved minor model.
    Minor {
        #[command(flatten)]
        input: Input,
        /// k5, k33, m3, m5, 11_8_1, or any catalog name.
        #[arg(long)]
        target: String,
        /// JSON minor model to check instead of searching.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Classify each graph and print its verdict with the full certificate.
    Certify(Input),
    /// Classify every non-planar connected simple graph up to a size.
    Classify {
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        /// Walk every proper minor of each chiral graph.
        #[arg(long)]
        audit: bool,
        /// Write JSON-lines records here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the named graphs, optionally with the validation report.
    Catalog {
        #[arg(long)]
        validate: bool,
        #[arg(long, value_enum, default_value = "mg")]
        format: GraphFormat,
    },
    /// Summarize JSON-lines records written by `classify`.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

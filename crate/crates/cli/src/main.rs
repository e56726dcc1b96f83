mod cache;
mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Association types, interchange consequences and commutativity
/// properties of double semigroups.
#[derive(Parser, Debug)]
#[command(name = "interchange", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Where quotient graphs are cached between runs.
    #[arg(long, global = true, env = "INTERCHANGE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Build graphs from scratch and leave the cache alone.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Size of the worker pool; output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of association types T(1), ..., T(N).
    Schroeder {
        #[arg(long, default_value_t = 10)]
        degree: usize,
    },
    /// The association types of degree N in index order.
    Types {
        #[arg(long)]
        degree: usize,
        /// Print only this type.
        #[arg(long)]
        vertex: Option<u32>,
    },
    /// Normalized consequences of the interchange law in degree N.
    Relations {
        #[arg(long)]
        degree: usize,
        /// Also derive them by induction from degree 4 and compare.
        #[arg(long)]
        check_inductive: bool,
    },
    /// The quotient graph, or one component of it.
    Graph {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        component: Option<usize>,
    },
    /// Component census with size and circuit-rank histograms.
    Components {
        #[arg(long)]
        degree: usize,
    },
    /// Monodromy of every component; lists those with nontrivial cycles.
    Analyze {
        #[arg(long)]
        degree: usize,
    },
    /// A commutativity identity and its proof from a nontrivial component.
    Identity {
        #[arg(long)]
        degree: usize,
        /// Defaults to the component containing --vertex.
        #[arg(long, required_unless_present = "vertex")]
        component: Option<usize>,
        /// Type at which to state the identity; defaults to the component's
        /// minimal vertex.
        #[arg(long)]
        vertex: Option<u32>,
        /// Also write the identity file here.
        #[arg(long)]
        identity_out: Option<PathBuf>,
    },
    /// Replays a proof file (JSON or transcript).
    Verify { file: PathBuf },
    /// Turns a transcript into a proof file.
    Transcribe { file: PathBuf },
    /// Derives the degree-16 identity from the degree-9 one.
    Kock {
        /// Take the degree-9 identity from the stored constant instead of
        /// extracting it from the graph.
        #[arg(long)]
        builtin: bool,
    },
    /// Number of free monomials modulo the interchange law: isolated types
    /// plus components.
    CountMonomials {
        #[arg(long)]
        degree: usize,
    },
}

/// Exit status 1: a proof or check did not go through.
#[derive(Debug)]
pub struct VerificationFailed(pub String);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailed {}

pub fn output(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(k) = cli.global.workers {
        rayon::ThreadPoolBuilder::new().num_threads(k as usize).build_global()?;
    }
    let g = &cli.global;
    match cli.command {
        Command::Schroeder { degree } => commands::schroeder(g, degree),
        Command::Types { degree, vertex } => commands::types(g, degree, vertex),
        Command::Relations { degree, check_inductive } => commands::relations(g, degree, check_inductive),
        Command::Graph { degree, component } => commands::graph(g, degree, component),
        Command::Components { degree } => commands::components(g, degree),
        Command::Analyze { degree } => commands::analyze(g, degree),
        Command::Identity { degree, component, vertex, identity_out } => {
            commands::identity(g, degree, component, vertex, identity_out)
        }
        Command::Verify { file } => commands::verify(g, &file),
        Command::Transcribe { file } => commands::transcribe(g, &file),
        Command::Kock { builtin } => commands::kock(g, builtin),
        Command::CountMonomials { degree } => commands::count_monomials(g, degree),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<VerificationFailed>() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

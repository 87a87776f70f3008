mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{Config, Output};
use cutalg::cutideal::DEFAULT_SEED;
use cutalg::poly::{PrimeField, DEFAULT_PRIME};
use cutalg::Error;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE_GUARD: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Cut ideals, Betti numbers and cut polytopes of small graphs.
///
/// Graphs are given as names (P4, C5, K4-e, K1_3, G7, 2K2, K2+P3,
/// K2#K1#K3) or explicitly as "n=4; 1-2,2-3,3-4".
#[derive(Debug, Parser)]
#[command(name = "cutalg", version)]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    /// Repeat the computation over this second prime and compare.
    #[arg(long, global = true)]
    check_prime: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Wall-clock limit in seconds; 0 disables it.
    #[arg(long, global = true, default_value_t = 300)]
    timeout: u64,
    /// Allow the expensive five-vertex computations.
    #[arg(long, global = true)]
    slow: bool,
    /// Seed for the random linear forms used by the Betti engine.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Groebner basis and minimal generators of the cut ideal.
    Ideal {
        graph: String,
        /// Use the elimination route instead of lattice saturation.
        #[arg(long)]
        elimination: bool,
    },
    /// Graded Betti diagram of S/I.
    Betti { graph: String },
    /// Vertices, facets and face counts of the cut polytope.
    Polytope { graph: String },
    /// Combinatorial retracts up to isomorphism.
    Retracts { graph: String },
    /// Every applicable classification check.
    Classify { graph: String },
    /// Recompute the invariant table and diff it against the published one.
    Table1 {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Polytope certificates.
    #[command(subcommand)]
    Certify(Certify),
}

#[derive(Debug, Subcommand)]
enum Certify {
    /// Why the square of P3 is not a face of the C4 cut polytope.
    Ohsugi,
    /// Contracting an edge realises the smaller cut polytope as a face.
    FaceMap {
        graph: String,
        /// Edge to contract, as a-b.
        #[arg(long)]
        edge: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeGuard { .. } | Error::TooManyVertices(_) => EXIT_SIZE_GUARD,
        Error::Timeout(_) => EXIT_TIMEOUT,
        Error::Parse(_)
        | Error::EmptyGraph
        | Error::Loop(_)
        | Error::DuplicateEdge(..)
        | Error::InvalidVertex { .. }
        | Error::InvalidVertexSet(_)
        | Error::NotAnEdge(..)
        | Error::NotPrime(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn config(cli: &Cli) -> cutalg::Result<Config> {
    let field = PrimeField::new(cli.prime)?;
    let check_field = cli.check_prime.map(PrimeField::new).transpose()?;
    if cli.check_prime == Some(cli.prime) {
        return Err(Error::Parse("--check-prime must differ from --prime".into()));
    }
    Ok(Config {
        field,
        check_field,
        timeout: (cli.timeout > 0).then(|| Duration::from_secs(cli.timeout)),
        slow: cli.slow,
        seed: cli.seed,
    })
}

fn run(command: Command, cfg: Config) -> cutalg::Result<Output> {
    match command {
        Command::Ideal { graph, elimination } => commands::ideal(&graph, &cfg, elimination),
        Command::Betti { graph } => commands::betti(&graph, &cfg),
        Command::Polytope { graph } => commands::polytope(&graph),
        Command::Retracts { graph } => commands::retracts(&graph),
        Command::Classify { graph } => commands::classify(&graph, &cfg),
        Command::Table1 { max_n } => commands::table(max_n, &cfg),
        Command::Certify(Certify::Ohsugi) => commands::certify_ohsugi(),
        Command::Certify(Certify::FaceMap { graph, edge }) => commands::certify_face_map(&graph, &edge),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let cfg = match config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    // table1 applies the limit per row instead of to the whole run
    let limit = match cli.command {
        Command::Table1 { .. } => None,
        _ => cfg.timeout,
    };
    let result = match limit {
        None => run(cli.command, cfg),
        Some(limit) => {
            let (tx, rx) = mpsc::channel();
            let command = cli.command;
            std::thread::spawn(move || {
                let _ = tx.send(run(command, cfg));
            });
            rx.recv_timeout(limit)
                .unwrap_or(Err(Error::Timeout(limit.as_secs())))
        }
    };
    match result {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use replika::error::Error;
use replika::harness::{run, Command, OutputFormat, RunConfig};
use replika::linalg::DEFAULT_PRIME;
use replika::quiver::Quiver;
use replika::tilting::Direction;

#[derive(Parser)]
#[command(
    name = "replika",
    version,
    about = "Tilting mutation for m-replicated algebras and m-cluster categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Algebra summary: dimension, vertices, gl.dim, radical length.
    Build(Common),
    /// Tilting modules, mutation graph and the m-cluster tilting count.
    Enumerate(Common),
    /// Complements of a tilting module with one summand removed.
    Complements {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tilting: String,
        #[arg(long)]
        summand: usize,
    },
    /// Replace one summand by the neighbouring complement.
    Mutate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tilting: String,
        #[arg(long)]
        summand: usize,
        #[arg(long, value_enum, default_value = "up")]
        direction: Dir,
    },
    /// Run a verification suite (or `all`).
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        target: String,
    },
    /// Objects and exchange graph of the m-cluster category.
    Cluster(Common),
}

#[derive(Args)]
struct Common {
    /// Quiver file, or a built-in name: A<n>, D4, kronecker.
    #[arg(long)]
    quiver: String,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    /// Rerun at this prime and compare all dimensions.
    #[arg(long)]
    crosscheck: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    pd_bound: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    out: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Up,
    Down,
}

fn load_quiver(spec: &str) -> Result<Quiver, Error> {
    let lower = spec.to_ascii_lowercase();
    if lower == "d4" {
        return Ok(Quiver::d4());
    }
    if lower == "kronecker" {
        return Ok(Quiver::kronecker());
    }
    if let Some(n) = lower
        .strip_prefix('a')
        .and_then(|n| n.parse::<usize>().ok())
    {
        if n >= 1 {
            return Ok(Quiver::linear_a(n));
        }
    }
    Quiver::parse(&std::fs::read_to_string(spec)?)
}

fn config(c: &Common) -> Result<RunConfig, Error> {
    Ok(RunConfig {
        quiver: load_quiver(&c.quiver)?,
        m: c.m,
        prime: c.prime,
        crosscheck: c.crosscheck,
        seed: c.seed,
        pd_bound: c.pd_bound,
        format: match c.out {
            Format::Json => OutputFormat::Json,
            Format::Dot => OutputFormat::Dot,
            Format::Text => OutputFormat::Text,
        },
    })
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::Io(_)
            | Error::InvalidQuiver(_)
            | Error::CyclicQuiver(_)
            | Error::NotPrime(_)
            | Error::NotDynkin
            | Error::UnknownId(_)
            | Error::Precondition(_)
            | Error::SinkEnd
            | Error::BongartzEnd
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, cmd) = match &cli.command {
        Sub::Build(c) => (c, Command::Build),
        Sub::Enumerate(c) => (c, Command::Enumerate),
        Sub::Complements {
            common,
            tilting,
            summand,
        } => (
            common,
            Command::Complements {
                tilting: tilting.clone(),
                summand: *summand,
            },
        ),
        Sub::Mutate {
            common,
            tilting,
            summand,
            direction,
        } => {
            let direction = match direction {
                Dir::Up => Direction::Up,
                Dir::Down => Direction::Down,
            };
            (
                common,
                Command::Mutate {
                    tilting: tilting.clone(),
                    summand: *summand,
                    direction,
                },
            )
        }
        Sub::Verify { common, target } => (
            common,
            Command::Verify {
                target: target.clone(),
            },
        ),
        Sub::Cluster(c) => (c, Command::Cluster),
    };
    let result = config(common).and_then(|cfg| {
        let out = run(&cfg, &cmd)?;
        Ok((out.render(cfg.format)?, out.pass))
    });
    match result {
        Ok((text, pass)) => {
            if let Some(path) = &common.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if usage_error(&e) { 2 } else { 1 })
        }
    }
}

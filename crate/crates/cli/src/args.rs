use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num::BigUint;
use serde::Serialize;

pub const MLD_LIMIT_ENV: &str = "DEGENSCOPE_MLD_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "degenscope",
    version,
    about = "Cyclic quotient singularities and degenerations of weighted projective planes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Emit a JSON envelope (default)
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit RFC 4180 CSV instead of JSON
    #[arg(long, global = true)]
    pub csv: bool,

    /// Print nothing on success
    #[arg(long, short, global = true)]
    pub quiet: bool,

    /// Largest germ order for brute-force mld
    #[arg(long, global = true, env = MLD_LIMIT_ENV, value_name = "M")]
    pub limit_mld: Option<u64>,

    /// Worker threads
    #[arg(long, global = true, value_name = "J", value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// Attach a plain-language explanation to every verdict reason
    #[arg(long, global = true)]
    pub explain: bool,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Classify the germ 1/M(W1, W2)
    Cqs(CqsArgs),
    /// Invariants and degeneration verdict of P(A, B, C)
    Wps(WpsArgs),
    /// Markov-type enumerations
    #[command(subcommand)]
    Markov(MarkovCommand),
    /// Exceptional-set census of [1,N]^3 for each N
    Density(DensityArgs),
    /// Verdicts for every well-formed a <= b <= c <= N
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CqsArgs {
    pub m: u64,
    #[arg(allow_negative_numbers = true)]
    pub w1: i64,
    #[arg(allow_negative_numbers = true)]
    pub w2: i64,
    /// Report the estimate 1/T + T/M instead of the brute-force mld
    #[arg(long, value_name = "T")]
    pub bound: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WpsArgs {
    #[arg(allow_negative_numbers = true)]
    pub a: i64,
    #[arg(allow_negative_numbers = true)]
    pub b: i64,
    #[arg(allow_negative_numbers = true)]
    pub c: i64,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "snake_case", tag = "subcommand")]
pub enum MarkovCommand {
    /// Solutions of a^2 + b^2 + c^2 = 3abc with max entry <= BOUND
    Classic {
        #[arg(long)]
        #[serde(serialize_with = "as_str")]
        bound: BigUint,
    },
    /// The solution chain of n + x^2 + y^2 = (n+2)xy up to BOUND
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        #[serde(serialize_with = "as_str")]
        bound: BigUint,
    },
    /// Toric degenerations P(x^2, y^2, n) of P(1,1,n)
    Degenerations {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        #[serde(serialize_with = "as_str")]
        bound: BigUint,
    },
    /// Central-fiber candidates from partial smoothings of P(x^2, y^2, n)
    Candidates {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        #[serde(serialize_with = "as_str")]
        x: BigUint,
        #[arg(long)]
        #[serde(serialize_with = "as_str")]
        y: BigUint,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DensityArgs {
    #[arg(required = true, num_args = 1.., value_parser = clap::value_parser!(u64).range(1..))]
    #[serde(rename = "N")]
    pub n: Vec<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ScanArgs {
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    #[serde(rename = "N")]
    pub n: u64,
    /// Write per-triple records here (JSON lines, or CSV with --csv)
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn as_str<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cqs(_) => "cqs",
            Command::Wps(_) => "wps",
            Command::Markov(MarkovCommand::Classic { .. }) => "markov classic",
            Command::Markov(MarkovCommand::Gen { .. }) => "markov gen",
            Command::Markov(MarkovCommand::Degenerations { .. }) => "markov degenerations",
            Command::Markov(MarkovCommand::Candidates { .. }) => "markov candidates",
            Command::Density(_) => "density",
            Command::Scan(_) => "scan",
        }
    }
}

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skein_cluster::{Error, DEFAULT_RNG_SEED};

#[derive(Parser, Debug)]
#[command(name = "skein-cluster", version, about = "Cluster mutation, torus-link Jones polynomials and their oracles")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized suites.
    #[arg(long, global = true, env = "SKEIN_CLUSTER_RNG_SEED")]
    pub rng_seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Seed mutation and rank-2 recurrences.
    #[command(subcommand)]
    Cluster(ClusterCmd),
    /// Jones polynomials of torus links and braid closures.
    #[command(subcommand)]
    Jones(JonesCmd),
    /// Chebyshev polynomial T_n.
    Chebyshev {
        #[arg(long)]
        n: usize,
        /// Print T_0 through T_n.
        #[arg(long)]
        all: bool,
    },
    /// Cluster monomials and Chebyshev elements of the (2,2) basis.
    Basis {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        p_max: u32,
        #[arg(long, default_value_t = 2)]
        q_max: u32,
        /// First and last index i of the monomials x_i^p x_(i+1)^q, e.g. "1,3".
        #[arg(long, default_value = "1,1")]
        window: String,
    },
    /// Bratteli diagrams.
    #[command(subcommand)]
    Bratteli(BratteliCmd),
    /// Verification suites; exit status 1 when any check fails.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand, Debug)]
pub enum ClusterCmd {
    /// Mutates the initial seed along a walk of 1-based directions.
    Mutate {
        /// Exchange matrix as JSON rows (or a path to a file holding them).
        #[arg(long, conflicts_with = "surface")]
        matrix: Option<String>,
        /// Use the triangulation matrix of a surface "genus,cusps".
        #[arg(long)]
        surface: Option<String>,
        /// Directions, e.g. "1,2,1".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        walk: String,
        /// Expected number of cluster variables.
        #[arg(long)]
        seed_vars: Option<usize>,
        /// Fail when a produced variable has a non-positive coefficient.
        #[arg(long)]
        positivity: bool,
    },
    /// The rank-2 recurrence x_(i-1) x_(i+1) = 1 + x_i^(b or c).
    Rank2 {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Laurent (and optionally positivity) check of x_3 ..= x_depth.
    Check {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long)]
        positivity: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bracket,
    #[value(name = "eq25", alias = "trace-formula")]
    TraceFormula,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Subcommand, Debug)]
pub enum JonesCmd {
    /// V_n of the (2,n) torus link from the skein recursion.
    Torus {
        #[arg(long)]
        n: usize,
        /// Print V_0 through V_n.
        #[arg(long)]
        all: bool,
    },
    /// Jones polynomial of a braid closure.
    Braid {
        #[arg(long)]
        strands: usize,
        /// Comma-separated signed generators, e.g. "1,-2,1"; empty for the identity.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Method::Bracket)]
        method: Method,
        /// Calibration exponent for the trace formula.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        kappa: i64,
        /// Sign of the loop value in the trace formula.
        #[arg(long, value_enum, default_value_t = Sign::Plus)]
        delta_sign: Sign,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Pascal,
    Tl,
    S11,
}

#[derive(Subcommand, Debug)]
pub enum BratteliCmd {
    /// Level sizes, dimension vectors and transition matrices.
    Dims {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        levels: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct MarkovArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 4)]
    pub max_strands: usize,
    #[arg(long, default_value_t = 6)]
    pub max_length: usize,
}

#[derive(Args, Debug, Clone)]
pub struct InvolutionArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 4)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 5)]
    pub bound: i64,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Skein relation on consecutive torus-chain triples.
    SkeinChain {
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
    /// Skein recurrence against Chebyshev recurrence and the cluster identity.
    Correspondence,
    /// Laurent phenomenon and positivity for (2,2) and (1,4).
    Laurent {
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Mutation is an involution on random seeds.
    Involution(InvolutionArgs),
    /// Bracket on sigma_1^n against the torus chain.
    Oracle {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Conjugation and stabilization invariance on random braids.
    Markov(MarkovArgs),
    /// Calibration of the trace formula against the bracket.
    TraceFormula {
        #[arg(long, default_value_t = 20)]
        random_words: usize,
    },
    /// Truncated-Pascal squares against Catalan numbers and matchings.
    Catalan {
        #[arg(long, default_value_t = 12)]
        levels: usize,
    },
    /// Truncated-Pascal paths embed in Pascal's triangle.
    Inclusion {
        #[arg(long, default_value_t = 8)]
        levels: usize,
    },
    /// Every suite with default sizes.
    All,
}

/// Errors caused by the caller's input rather than by a failed computation.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::InvalidBraid(_)
            | Error::InvalidMatrix(_)
            | Error::Json(_)
            | Error::Unsupported(_)
            | Error::IndexOutOfRange { .. }
            | Error::LevelOutOfRange { .. }
            | Error::StrandMismatch { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.rng_seed.unwrap_or(DEFAULT_RNG_SEED);
    match commands::run(&cli, seed) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}

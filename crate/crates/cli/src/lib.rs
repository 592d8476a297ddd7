//! The `qmf` command line: argument definitions, file parsers, the sequence
//! cache and command implementations. `main.rs` only parses and dispatches.

pub mod cache;
pub mod files;
pub mod output;

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{run, Exit};
pub use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "qmf",
    version,
    about = "Fishburn-type sequences, L-value coefficients and their p-adic congruences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Sequence cache directory [default: ~/.qmf-cache]
    #[arg(long, global = true, env = "QMF_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the sequence cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fishburn numbers ξ(0), …, ξ(count − 1).
    Fishburn {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Coefficients of the Hikami function F_m^(α) at q = 1.
    Hikami {
        #[command(flatten)]
        params: HikamiArgs,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// H_{a,b,χ}(n) from L-values.
    Hsequence {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = Method::Lvalue)]
        method: Method,
    },
    /// Congruences H(pᴬn − B) ≡ 0 (mod pᴬ) guaranteed for odd primes p ≤ pmax.
    Predict {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 100)]
        pmax: u64,
    },
    /// Tests congruences against a computed sequence.
    Verify {
        /// TOML file with [[claim]] tables holding p, A and B.
        #[arg(long, conflicts_with_all = ["p", "big_a", "big_b"])]
        claims_file: Option<PathBuf>,
        #[arg(long, requires_all = ["big_a", "big_b"])]
        p: Option<u64>,
        #[arg(long = "A", id = "big_a")]
        big_a: Option<u32>,
        #[arg(long = "B", id = "big_b")]
        big_b: Option<u64>,
        #[command(flatten)]
        source: SequenceArgs,
        /// Largest n to test; defaults to every n the sequence reaches.
        #[arg(long)]
        nmax: Option<u64>,
    },
    /// Decides whether a character is a good function and lists the pairing.
    Goodcheck {
        #[command(flatten)]
        chi: ChiArgs,
    },
    /// Fraction of odd primes p ∤ b with (a² − b | p) = −1.
    Density {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value_t = 10_000)]
        pmax: u64,
    },
    /// Compares H from L-values with −2 × (Hikami coefficients) and reports the ratio.
    Strange {
        #[command(flatten)]
        params: HikamiArgs,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// P(e^{−t}) minus its asymptotic expansion truncated after `terms` terms.
    Asymptotic {
        #[command(flatten)]
        datum: DatumArgs,
        /// Rational in (0, 1/10], e.g. 1/50.
        #[arg(long, default_value = "1/50")]
        t: String,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        /// Decimal digits of working precision.
        #[arg(long, default_value_t = 60)]
        precision: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lvalue,
    Stirling,
    Both,
}

#[derive(Clone, Copy, Debug, Args)]
pub struct HikamiArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub alpha: usize,
}

#[derive(Clone, Debug, Args)]
pub struct ChiArgs {
    /// TOML file with `period` and `values`.
    #[arg(long, conflicts_with = "chi")]
    pub chi_file: Option<PathBuf>,
    /// Built-in character: `chi12` or `hikami-M-ALPHA`.
    #[arg(long)]
    pub chi: Option<String>,
}

#[derive(Clone, Debug, Args)]
pub struct DatumArgs {
    /// Built-in datum: `fishburn` or `hikami-M-ALPHA`.
    #[arg(long, conflicts_with_all = ["a", "b", "chi_file", "chi"])]
    pub datum: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    #[command(flatten)]
    pub chi: ChiArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Fishburn,
    Hikami,
}

#[derive(Clone, Copy, Debug, Args)]
pub struct SequenceArgs {
    #[arg(long, value_enum, default_value_t = Generator::Fishburn)]
    pub generator: Generator,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub alpha: usize,
    /// Terms of the sequence to compute.
    #[arg(long, default_value_t = 600, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
}

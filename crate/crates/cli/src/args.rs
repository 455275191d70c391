use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "hopfian", version, about = "Exact experiments with free associative algebras")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV (series and sequences only).
    #[arg(long, global = true)]
    pub csv: bool,
    /// Largest matrix size exact evaluation may use.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_n: u64,
    /// Largest polynomial degree exact evaluation may take.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_degree: u64,
    /// Longest recurrent word that may be built.
    #[arg(long, global = true, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_word_len: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the recurrent word u_N.
    Word(WordArgs),
    /// Numbers of distinct factors of each length.
    Complexity(ComplexityArgs),
    /// Filtered growth series d_n.
    Growth(SeriesArgs),
    /// Polynomial growth degree estimate of a series.
    Gk(GkArgs),
    /// Check a_n <= c b_{kn} over a grid of (c, k).
    CompareGrowth(CompareArgs),
    /// Test whether a polynomial is an identity of n x n matrices.
    PiTest(PiTestArgs),
    /// Least matrix size on which a polynomial is nonzero, with witness matrices.
    Witness(PolyArgs),
    /// Endomorphisms given as files.
    #[command(subcommand)]
    Endo(EndoCommand),
    /// Verified reports.
    #[command(subcommand)]
    Demo(DemoCommand),
}

#[derive(Debug, Clone, Args)]
pub struct WordSpecArgs {
    #[arg(long, default_value_t = 10)]
    pub base: u64,
    #[arg(long, default_value_t = 5)]
    pub depth: u32,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[command(flatten)]
    pub spec: WordSpecArgs,
}

#[derive(Debug, Args)]
pub struct ComplexityArgs {
    #[command(flatten)]
    pub spec: WordSpecArgs,
    /// Use this word over {x, y} instead of u_N.
    #[arg(long)]
    pub input: Option<String>,
    /// Longest factor length; defaults to the word length capped at 500.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Count only factors with at most this many y.
    #[arg(long)]
    pub y_bound: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub spec: WordSpecArgs,
    /// Number of terms d_1 .. d_M.
    #[arg(long, default_value_t = 500)]
    pub max_n: usize,
    /// Quotient keeping factors with at most this many y.
    #[arg(long)]
    pub y_bound: Option<usize>,
    /// Closed-form series instead of the word: linear, quadratic or free.
    #[arg(long, conflicts_with_all = ["file", "commutative"])]
    pub closed_form: Option<String>,
    /// Read the series from CSV with header n,d_n,c_n.
    #[arg(long, conflicts_with = "commutative")]
    pub file: Option<PathBuf>,
    /// Commutative monomial quotient in this many variables.
    #[arg(long)]
    pub commutative: Option<usize>,
    /// Forbidden monomial as comma-separated exponents; repeatable.
    #[arg(long, requires = "commutative")]
    pub forbidden: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GkArgs {
    #[command(flatten)]
    pub series: SeriesArgs,
    /// Window start,end; defaults to max(2, M/10),M.
    #[arg(long)]
    pub window: Option<String>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Left series: linear, quadratic, free or a CSV path.
    #[arg(long)]
    pub a: String,
    /// Right series: linear, quadratic, free or a CSV path.
    #[arg(long)]
    pub b: String,
    /// Terms for closed-form series.
    #[arg(long, default_value_t = 200)]
    pub max_n: usize,
    #[arg(long, default_value = "1,2,4")]
    pub c_grid: String,
    #[arg(long, default_value = "1,2,3")]
    pub k_grid: String,
}

#[derive(Debug, Clone, Args)]
pub struct PolyArgs {
    /// Polynomial such as "x*y - y*x + 1/2".
    #[arg(required_unless_present = "standard", conflicts_with = "standard")]
    pub poly: Option<String>,
    /// Use the standard polynomial s_k.
    #[arg(long)]
    pub standard: Option<usize>,
    /// Comma-separated generator names; inferred when omitted.
    #[arg(long)]
    pub generators: Option<String>,
}

#[derive(Debug, Args)]
pub struct PiTestArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Matrix size.
    #[arg(long, short = 'n', default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Sample from F_p for this prime.
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Decide by generic-matrix evaluation instead of sampling.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Subcommand)]
pub enum EndoCommand {
    /// Look for an inverse of degree at most --degree-bound.
    Check(EndoArgs),
    /// Jacobian matrix, and its inverse when --degree-bound is given.
    Jacobian(JacobianArgs),
}

#[derive(Debug, Args)]
pub struct EndoArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub degree_bound: usize,
}

#[derive(Debug, Args)]
pub struct JacobianArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub degree_bound: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum DemoCommand {
    /// Separation reports; without arguments runs a small fixed corpus.
    Separation(DemoSeparationArgs),
    /// Growth of the factor algebra of u_N against its y-bounded quotient.
    GrowthLemma(GrowthLemmaArgs),
}

#[derive(Debug, Args)]
pub struct DemoSeparationArgs {
    pub polys: Vec<String>,
    #[arg(long)]
    pub generators: Option<String>,
}

#[derive(Debug, Args)]
pub struct GrowthLemmaArgs {
    #[command(flatten)]
    pub spec: WordSpecArgs,
    #[arg(long, default_value_t = 500)]
    pub max_n: usize,
    #[arg(long, default_value_t = 1)]
    pub y_bound: usize,
    /// Compare F[x,y] with F[x,y]/(y^2) instead.
    #[arg(long)]
    pub baseline: bool,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qplane", version, about = "Computations on the quantum plane xy = q yx")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Value of q: a rational or Gaussian rational ("1/2", "0.3+0.4i"), or "q" to keep it symbolic.
    #[arg(long, global = true, default_value = "1/2")]
    pub q: String,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Matrix truncation N.
    #[arg(long, global = true, default_value_t = 32)]
    pub trunc: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form in the y^k x^l basis.
    Normalize { expr: String },
    /// Rewrite an element in another basis.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        expr: String,
    },
    /// Evaluate a seminorm family over a grid of parameters.
    Seminorm(SeminormArgs),
    /// Matrices of the weighted-shift representations and data derived from them.
    Rep(RepArgs),
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Omega,
    BetaGamma,
    /// Pairs with f_n(0) = g_n(0) = c_n.
    Pairs,
    /// Pairs with f_n(0) = g_n(0) = c_n / 2.
    Rphixy,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormFamily {
    /// Weighted l1 norm of an element of C[u].
    Cw,
    /// |a|_(rho, r) over the Omega-pairs.
    Plane,
    /// Sum over n of max(||W_n(f)||, ||W_n(g)||).
    Tilde,
    /// ||a||'_(r,l), fixed x-degree l.
    DosiPrime,
    /// ||a||''_(r,k), fixed y-degree k.
    DosiDprime,
    /// |a|'_(r,k) from the beta coefficients.
    PiPrime,
    /// |a|''_(r,l) from the gamma coefficients.
    PiDprime,
}

#[derive(Args, Debug)]
pub struct SeminormArgs {
    #[arg(long, value_enum)]
    pub family: NormFamily,
    pub expr: String,
    /// Comma-separated indices.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub index: Vec<u32>,
    /// Comma-separated positive rationals.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub r: Vec<String>,
    /// Comma-separated positive radii.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub rho: Vec<f64>,
    /// "trivial" or "bs:<s>" with 0 < s < 1.
    #[arg(long, default_value = "trivial")]
    pub weight: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    PiLambda,
    PiPrimeMu,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Show {
    Matrix,
    Eta,
    Growth,
}

#[derive(Args, Debug)]
pub struct RepArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::PiLambda)]
    pub family: FamilyArg,
    /// lambda or mu.
    #[arg(long, default_value = "1")]
    pub param: String,
    #[arg(long, value_enum, default_value_t = Show::Matrix)]
    pub show: Show,
    /// Element to represent (matrix, eta).
    #[arg(default_value = "u")]
    pub expr: String,
    /// Largest entry index for eta; defaults to N - 1.
    #[arg(long)]
    pub jmax: Option<usize>,
    /// Largest power for growth.
    #[arg(long, default_value_t = 20)]
    pub nmax: u32,
}

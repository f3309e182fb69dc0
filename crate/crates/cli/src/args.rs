use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rmdesign", version, about = "Enumerators and design checks for RM(1,m) and extended Hamming codes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for every sampled mode.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest code dimension enumerated word by word.
    #[arg(long, global = true, default_value_t = 26)]
    pub max_dim: usize,
    /// Largest number of t-subsets a direct count may visit.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub subset_cap: u64,
    /// Largest C(n,k) accepted by the elimination harmonic basis.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub harm_cap: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Where a code comes from.
#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
pub struct CodeSource {
    /// RM(1,m).
    #[arg(long, value_name = "M")]
    pub rm1: Option<usize>,
    /// The extended Hamming code of length 2^m (dual of RM(1,m)).
    #[arg(long, value_name = "M")]
    pub ehamming: Option<usize>,
    /// Generator-matrix file: `n k`, then k rows of 0/1.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build codes and print matrices, enumerators or shells.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Jacobi polynomial of a code with a reference set.
    Jacobi(JacobiArgs),
    /// Test whether shells or block sets are t-designs.
    DesignCheck(DesignArgs),
    /// Largest t admitted by the Assmus-Mattson theorem.
    AssmusMattson {
        #[command(flatten)]
        source: CodeSource,
    },
    /// Basis of the harmonic functions of degree k on n points.
    HarmBasis(HarmBasisArgs),
    /// Harmonic weight enumerator of a code.
    Hwe(HweArgs),
    /// Harmonic weight enumerator of the dual, from that of the code.
    Bachoc(BachocArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CodeOutput {
    /// Print the weight enumerator.
    #[arg(long)]
    pub wenum: bool,
    /// Print the dimension.
    #[arg(long)]
    pub dim: bool,
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// RM(1,m).
    Rm1 {
        #[arg(short, long)]
        m: usize,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Extended Hamming code of length 2^m.
    Ehamming {
        #[arg(short, long)]
        m: usize,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Dual code.
    Dual {
        #[command(flatten)]
        source: CodeSource,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Weight enumerator.
    Wenum {
        #[command(flatten)]
        source: CodeSource,
    },
    /// Supports of the codewords of one weight.
    Shell {
        #[command(flatten)]
        source: CodeSource,
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Args, Debug)]
pub struct JacobiArgs {
    #[command(flatten)]
    pub source: CodeSource,
    /// Reference set, comma-separated indices.
    #[arg(long, value_delimiter = ',', conflicts_with = "class")]
    pub t: Option<Vec<usize>>,
    /// Canonical reference set of a class: {0,1,2,4} (indep) or {0,1,2,3} (dep).
    #[arg(long)]
    pub class: Option<String>,
    /// Print the closed form instead of enumerating.
    #[arg(long, conflicts_with = "check")]
    pub closed: bool,
    /// Compare enumeration with the closed form; exit 1 on mismatch.
    #[arg(long)]
    pub check: bool,
    /// Also print the transform (the Jacobi polynomial of the dual).
    #[arg(long)]
    pub transform: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Direct,
    Delsarte,
    Jacobi,
    All,
}

#[derive(Args, Debug)]
pub struct DesignArgs {
    #[command(flatten)]
    pub source: CodeSource,
    /// Block-set file instead of a code.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["rm1", "ehamming", "file"])]
    pub blocks: Option<PathBuf>,
    /// Number of points for a block-set file (default: largest index + 1).
    #[arg(long)]
    pub n: Option<usize>,
    /// Shell weights to test (default: every non-empty shell).
    #[arg(long, value_delimiter = ',')]
    pub ell: Option<Vec<usize>>,
    /// Strengths to test.
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    pub t: Vec<usize>,
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,
    /// Jacobi method: test this many random reference sets instead of all.
    #[arg(long)]
    pub sample: Option<usize>,
}

#[derive(Args, Debug)]
pub struct HarmBasisArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Polytabloid basis instead of exact elimination.
    #[arg(long)]
    pub specht: bool,
}

/// A harmonic function: from a file, or the degree-4 function built from
/// the 14 blocks of H_8 and a transposition.
#[derive(Args, Debug, Clone)]
pub struct FunctionSource {
    /// Subset-function JSON file.
    #[arg(long, value_name = "PATH", conflicts_with = "tau")]
    pub f: Option<PathBuf>,
    /// Transposition `a,b` of 0..8 for the H_8 block function.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub tau: Option<Vec<usize>>,
    /// Basis `b1,b2,b3` of the subspace carrying the H_8 block function.
    #[arg(long, value_delimiter = ',', requires = "tau")]
    pub subspace: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
pub struct HweArgs {
    #[command(flatten)]
    pub source: CodeSource,
    #[command(flatten)]
    pub function: FunctionSource,
    /// Also compare the dual's enumerator with the transform.
    #[arg(long)]
    pub check_dual: bool,
}

#[derive(Args, Debug)]
pub struct BachocArgs {
    /// Enumerator in x, y, e.g. "16*x^8*y^8".
    #[arg(long)]
    pub poly: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Size of the code whose enumerator is given.
    #[arg(long)]
    pub size: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// thm11, thm12, lemma31, lemma41, corollary, identities, structure or all.
    pub target: String,
    /// Range of m, e.g. `3..8` or `5`.
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
    /// Include the 2^26-codeword enumeration of H_32.
    #[arg(long)]
    pub slow: bool,
    /// jacobi, harmonic or both.
    #[arg(long, default_value = "both")]
    pub route: String,
    /// Random reference sets per class and m.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number '{t}'"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

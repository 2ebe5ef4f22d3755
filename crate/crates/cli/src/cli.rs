use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    JsonLines,
}

/// `lo:hi:n` as given to `scan --grid`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

pub fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err(format!("expected lo:hi:n, got {s:?}"));
    };
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad lo {lo:?}: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad hi {hi:?}: {e}"))?;
    let n: usize = n.trim().parse().map_err(|e| format!("bad n {n:?}: {e}"))?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!("need finite lo < hi, got {lo}:{hi}"));
    }
    if n < 2 {
        return Err(format!("need at least 2 grid points, got {n}"));
    }
    Ok(GridSpec { lo, hi, n })
}

#[derive(Debug, Parser)]
#[command(name = "pksums", version, about = "Prime-power sums, explicit formulas over zeta zeros, and related integral diagnostics")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table", env = "PKSUMS_FORMAT")]
    pub format: Format,

    /// Append-only run ledger (JSON lines).
    #[arg(long, global = true, default_value = "./pksums-runs.jsonl", env = "PKSUMS_LEDGER")]
    pub ledger: PathBuf,

    /// Do not append to the run ledger.
    #[arg(long, global = true)]
    pub no_ledger: bool,

    /// Maximum sieve worker threads; 1 gives bitwise-reproducible output.
    #[arg(long, global = true, env = "PKSUMS_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// key=value file supplying defaults (flags and PKSUMS_* variables win).
    #[arg(long, global = true, env = "PKSUMS_CONFIG")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    /// Zeros file: one ordinate per line, '#' comments.
    #[arg(long, env = "PKSUMS_ZEROS")]
    pub zeros: PathBuf,

    /// Number of zeros to use.
    #[arg(long, env = "PKSUMS_COUNT", value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// π_k(x), ψ_k(x), Π_k(x), π(x^{k+1}) and their difference.
    #[command(allow_negative_numbers = true)]
    Sums {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        #[arg(long, env = "PKSUMS_X")]
        x: f64,
    },
    /// ∫_1^x (π_k(t) − π(t^{k+1}))/t^{k+2} dt on a geometric grid, against its limit.
    #[command(allow_negative_numbers = true)]
    Theorem2 {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        #[arg(long, env = "PKSUMS_X_MAX")]
        x_max: f64,
        #[arg(long, env = "PKSUMS_X_MIN", default_value_t = 10.0)]
        x_min: f64,
        #[arg(long, env = "PKSUMS_SAMPLES", default_value_t = 13, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
    },
    /// Sign scan of ∫_1^x (π_k(t) − π(t^{k+1})) dt on a geometric grid over [10, x_max].
    #[command(allow_negative_numbers = true)]
    Theorem3 {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        #[arg(long, env = "PKSUMS_X_MAX")]
        x_max: f64,
        #[arg(long, env = "PKSUMS_SAMPLES", default_value_t = 25, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
    },
    /// Truncated explicit formula for ∫_2^x ψ_k(t) dt against the exact sum.
    #[command(allow_negative_numbers = true)]
    Explicit {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        #[arg(long, env = "PKSUMS_X")]
        x: f64,
        #[command(flatten)]
        zeros: ZerosArgs,
        /// Include the −Ax + B residue terms.
        #[arg(long, env = "PKSUMS_INCLUDE_LINEAR")]
        include_linear: bool,
    },
    /// Both sides of the averaged oscillation identity for ψ_k.
    #[command(allow_negative_numbers = true)]
    Littlewood {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        #[arg(long, env = "PKSUMS_X")]
        x: f64,
        #[arg(long, env = "PKSUMS_DELTA")]
        delta: f64,
        #[command(flatten)]
        zeros: ZerosArgs,
    },
    /// Σ 2/γ² over the first zeros, against the certified bound 0.04620999.
    ZerosStats {
        #[command(flatten)]
        zeros: ZerosArgs,
    },
    /// Normalized ψ_k(x) − x^{k+1}/(k+1) along a geometric grid.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        /// lo:hi:n, a geometric grid of n points.
        #[arg(long, env = "PKSUMS_GRID", value_parser = parse_grid)]
        grid: GridSpec,
    },
    /// Σ_{p≤x} 1/p − log log x against Mertens' constant.
    Mertens {
        #[arg(long, env = "PKSUMS_X")]
        x: f64,
    },
    /// |∫_2^x (ψ_k(t) − t^{k+1}/(k+1))/log t dt| · log x / x^{k+3/2}.
    #[command(allow_negative_numbers = true)]
    SmoothedRatio {
        #[arg(long, env = "PKSUMS_K")]
        k: f64,
        #[arg(long, env = "PKSUMS_X")]
        x: f64,
    },
    /// 0.04621 − 1/(2k+1) and its root.
    #[command(allow_negative_numbers = true)]
    Crossover {
        #[arg(long, env = "PKSUMS_K")]
        k: Option<f64>,
    },
    /// E(x) = π(x) − li(x).
    PiLi {
        #[arg(long, env = "PKSUMS_X")]
        x: f64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sums { .. } => "sums",
            Command::Theorem2 { .. } => "theorem2",
            Command::Theorem3 { .. } => "theorem3",
            Command::Explicit { .. } => "explicit",
            Command::Littlewood { .. } => "littlewood",
            Command::ZerosStats { .. } => "zeros-stats",
            Command::Scan { .. } => "scan",
            Command::Mertens { .. } => "mertens",
            Command::SmoothedRatio { .. } => "smoothed-ratio",
            Command::Crossover { .. } => "crossover",
            Command::PiLi { .. } => "pi-li",
        }
    }
}

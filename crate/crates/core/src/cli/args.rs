use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
    Latex,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
        }
    }
}

/// Poincaré polynomials and finite-field point counts of M̄₀,ₙ.
#[derive(Debug, Parser)]
#[command(name = "m0n", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "plain", global = true)]
    pub format: OutputFormat,

    /// Write the result to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomial P_n in t.
    Poincare {
        #[arg(short, long)]
        n: usize,
    },
    /// Even Betti numbers a_k(n).
    Betti {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, allow_negative_numbers = true)]
        k: Option<i64>,
    },
    /// Number of points of M̄₀,ₙ over the field with q elements.
    Count {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        q: u64,
    },
    /// One row per stable dual tree with its point-count polynomial.
    Strata {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        q: Option<u64>,
    },
    /// Factored zeta function and the coefficients of T d/dT log Z.
    Zeta {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Getzler's series f and g in x with coefficients in s = t^2.
    Getzler {
        /// Highest power of x to keep.
        #[arg(long, default_value_t = crate::getzler::DEFAULT_ORDER)]
        order: usize,
    },
    /// Run a verification suite; exit 0 iff every identity holds.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Comma-separated field sizes.
        #[arg(long, value_name = "LIST", default_value = "2,3,4,5,7,8,9,11")]
        q: String,
        /// Series order (defaults: 8 for getzler, 6 for zeta).
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Recurrence,
    Strata,
    Forget,
    Getzler,
    Zeta,
    All,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use congruence_lab::verify::{Grid, DEFAULT_BUDGET};
use congruence_lab::Sign;

#[derive(Debug, Parser)]
#[command(
    name = "congruence-lab",
    version,
    about = "Exact checks of binomial and ballot-number sum congruences"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format (text by default, csv for `table`)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest estimated number of big-integer multiplications a sweep may take
    #[arg(long, global = true, env = "CONGRUENCE_LAB_BUDGET", default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
    pub budget: u128,

    /// Worker threads for sweeps and searches
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

fn parse_budget(s: &str) -> Result<u128, String> {
    match s.trim().replace('_', "").parse::<u128>() {
        Ok(0) => Err("budget must be >= 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep a theorem, corollary or conjecture over a parameter grid
    Verify {
        /// Claim id, e.g. thm-1.1 (see `list`)
        id: String,
        #[command(flatten)]
        grid: GridArgs,
        /// Where to append counterexample records (JSON lines)
        #[arg(long, default_value = "findings.jsonl")]
        findings: PathBuf,
    },
    /// Run one of the searches over n
    Search {
        /// list-5.1, raw-5.1, f-condition, g-condition, table1, prime-chain or prime-chain-count
        id: String,
        /// Largest n for the condition searches
        #[arg(long, default_value_t = 300)]
        bound: u64,
        /// Columns for table1
        #[arg(long, value_delimiter = ',')]
        xs: Option<Vec<u64>>,
        /// Entries for prime-chain, or primes scanned for prime-chain-count
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Check an exact identity over its grid
    Identity {
        /// Identity id, e.g. delta (see `list`)
        id: String,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        beta: Option<u32>,
        /// Total truncation degree of series identities
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Print the f(x), g(x) table
    Table {
        #[arg(long, value_delimiter = ',')]
        xs: Option<Vec<u64>>,
    },
    /// List claim, identity and search ids
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Alternating,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Alternating => Sign::Alternating,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    /// Bounds as key=value pairs, e.g. m=3,n-max=6,r=2
    #[arg(long, value_delimiter = ',')]
    pub grid: Vec<String>,
    /// Largest m (chain length, power or factor count)
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub m_min: Option<u64>,
    /// Single value of n
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub n_min: Option<u64>,
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub r_max: Option<u32>,
    #[arg(long)]
    pub s_max: Option<u32>,
    /// Sets both r and s bounds
    #[arg(long)]
    pub rs_max: Option<u32>,
    #[arg(long)]
    pub a_max: Option<u32>,
    #[arg(long, value_enum)]
    pub sign: Option<SignArg>,
}

fn set(grid: &mut Grid, key: &str, value: &str) -> Result<(), String> {
    if key == "sign" {
        grid.sign = match value {
            "plus" => Some(Sign::Plus),
            "alternating" => Some(Sign::Alternating),
            "both" => None,
            _ => {
                return Err(format!(
                    "sign must be plus, alternating or both, got {value}"
                ))
            }
        };
        return Ok(());
    }
    let v: u64 = value
        .parse()
        .map_err(|_| format!("grid value for {key} is not a number: {value}"))?;
    let small = || u32::try_from(v).map_err(|_| format!("grid value for {key} is too large: {v}"));
    match key {
        "m" | "m-max" => grid.m_max = v,
        "m-min" => grid.m_min = v,
        "n" => {
            grid.n_min = v;
            grid.n_max = v;
        }
        "n-min" => grid.n_min = v,
        "n-max" => grid.n_max = v,
        "r" | "r-max" => grid.r_max = small()?,
        "s" | "s-max" => grid.s_max = small()?,
        "rs" | "rs-max" => {
            grid.r_max = small()?;
            grid.s_max = small()?;
        }
        "a" | "a-max" => grid.a_max = small()?,
        _ => return Err(format!("unknown grid key {key}")),
    }
    Ok(())
}

impl GridArgs {
    /// `base` with the `--grid` pairs applied, then the individual flags.
    pub fn apply(&self, mut grid: Grid) -> Result<Grid, String> {
        for pair in &self.grid {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| format!("grid entry {pair} is not key=value"))?;
            set(&mut grid, k.trim(), v.trim())?;
        }
        let flags: [(&str, Option<String>); 10] = [
            ("m", self.m.map(|v| v.to_string())),
            ("m-min", self.m_min.map(|v| v.to_string())),
            ("n", self.n.map(|v| v.to_string())),
            ("n-min", self.n_min.map(|v| v.to_string())),
            ("n-max", self.n_max.map(|v| v.to_string())),
            ("rs", self.rs_max.map(|v| v.to_string())),
            ("r", self.r_max.map(|v| v.to_string())),
            ("s", self.s_max.map(|v| v.to_string())),
            ("a", self.a_max.map(|v| v.to_string())),
            ("sign", self.sign.map(|s| Sign::from(s).to_string())),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                set(&mut grid, k, &v)?;
            }
        }
        if grid.m_min > grid.m_max {
            grid.m_min = grid.m_max;
        }
        if self.n.is_none() && grid.n_min > grid.n_max {
            grid.n_min = grid.n_max;
        }
        Ok(grid)
    }
}

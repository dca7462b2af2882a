mod args;
mod render;

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::Parser;
use congruence_lab::verify::search::BOUNDED_SEARCHES;
use congruence_lab::verify::{
    check_identity, claims, find_claim, find_identity, identities, prime_chain_count,
    prime_chain_search, search_bounded, table1, verify_claim_with, with_workers, write_findings,
    IdentityConfig, RunOptions, Status, TABLE1_XS,
};
use congruence_lab::Error;

use args::{Cli, Command, Format};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATED: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;
const EXIT_USAGE: u8 = 64;

const EXTRA_SEARCHES: [&str; 3] = ["table1", "prime-chain", "prime-chain-count"];

enum Failure {
    Usage(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn ids_line(label: &str, ids: impl IntoIterator<Item = &'static str>) -> String {
    format!(
        "known {label}: {}",
        ids.into_iter().collect::<Vec<_>>().join(", ")
    )
}

fn search_ids() -> impl Iterator<Item = &'static str> {
    BOUNDED_SEARCHES.into_iter().chain(EXTRA_SEARCHES)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let extra = match &e {
            Error::UnknownClaim(_) => Some(ids_line("claims", claims().iter().map(|c| c.id))),
            Error::UnknownIdentity(_) => {
                Some(ids_line("identities", identities().iter().map(|i| i.id)))
            }
            Error::UnknownSearch(_) => Some(ids_line("searches", search_ids())),
            Error::BudgetExceeded { .. } => Some("shrink the grid or raise --budget".to_string()),
            Error::InvalidArgument(_) => None,
            Error::NotPrime(_) => None,
        };
        match extra {
            Some(x) => Failure::Usage(format!("{e}\n{x}")),
            None => Failure::Usage(e.to_string()),
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let common = &cli.common;
    let workers = common.workers.map(|w| w as usize);
    let options = RunOptions {
        budget: common.budget,
        workers,
    };
    let format = common.format.unwrap_or(match cli.command {
        Command::Table { .. } => Format::Csv,
        _ => Format::Text,
    });
    let out = common.out.as_deref();
    let start = Instant::now();

    let code = match &cli.command {
        Command::Verify { id, grid, findings } => {
            let claim = find_claim(id)?;
            let grid = grid
                .apply(claim.default_grid.clone())
                .map_err(Failure::Usage)?;
            let report = verify_claim_with(id, &grid, &options)?;
            emit(out, &render::grid_report(&report, format)?)?;
            if !report.counterexamples.is_empty() {
                let file = OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(findings)
                    .with_context(|| format!("opening {}", findings.display()))?;
                let n = write_findings(&report, std::io::BufWriter::new(file))?;
                eprintln!("{n} findings appended to {}", findings.display());
            }
            match report.status {
                Status::Held => EXIT_OK,
                Status::Violated => EXIT_VIOLATED,
                Status::Counterexample => EXIT_COUNTEREXAMPLE,
            }
        }
        Command::Search {
            id,
            bound,
            xs,
            count,
        } => {
            let text = match id.as_str() {
                "table1" => {
                    let xs = xs.clone().unwrap_or_else(|| TABLE1_XS.to_vec());
                    let rows = with_workers(workers, || table1(&xs))??;
                    render::table(&rows, format)?
                }
                "prime-chain" => {
                    let entries = with_workers(workers, || prime_chain_search(*count))??;
                    render::prime_chain(&entries, format)?
                }
                "prime-chain-count" => {
                    if *count == 0 {
                        return Err(Failure::Usage("count must be >= 1".into()));
                    }
                    let n = with_workers(workers, || prime_chain_count(*count))?;
                    render::prime_chain_count(*count, n, format)?
                }
                _ => {
                    if *bound == 0 {
                        return Err(Failure::Usage("bound must be >= 1".into()));
                    }
                    let summary = with_workers(workers, || search_bounded(id, *bound))??;
                    render::search_summary(&summary, format)?
                }
            };
            emit(out, &text)?;
            EXIT_OK
        }
        Command::Identity {
            id,
            grid,
            alpha,
            beta,
            degree,
        } => {
            let identity = find_identity(id)?;
            let base = &identity.default_config;
            let config = IdentityConfig {
                grid: grid.apply(base.grid.clone()).map_err(Failure::Usage)?,
                alpha: alpha.or(base.alpha),
                beta: beta.or(base.beta),
                degree: degree.unwrap_or(base.degree),
            };
            let report = with_workers(workers, || check_identity(id, &config))??;
            emit(out, &render::identity_report(&report, format)?)?;
            if report.held() {
                EXIT_OK
            } else {
                EXIT_VIOLATED
            }
        }
        Command::Table { xs } => {
            let xs = xs.clone().unwrap_or_else(|| TABLE1_XS.to_vec());
            let rows = with_workers(workers, || table1(&xs))??;
            emit(out, &render::table(&rows, format)?)?;
            EXIT_OK
        }
        Command::List => {
            let mut s = String::new();
            for c in claims() {
                let aliases = if c.aliases.is_empty() {
                    String::new()
                } else {
                    format!(" (also {})", c.aliases.join(", "))
                };
                s.push_str(&format!(
                    "claim     {:<18} {:<10}{aliases}  {}\n",
                    c.id,
                    c.kind.to_string(),
                    c.statement
                ));
            }
            for i in identities() {
                s.push_str(&format!("identity  {:<18} {}\n", i.id, i.statement));
            }
            for id in search_ids() {
                s.push_str(&format!("search    {id}\n"));
            }
            emit(out, &s)?;
            EXIT_OK
        }
    };
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

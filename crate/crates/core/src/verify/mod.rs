//! Divisibility predicates for every registered statement, grid sweeps, the
//! gcd-condition searches and the exact identity checks.

pub mod claims;
pub mod findings;
pub mod grid;
pub mod identity;
pub mod report;
pub mod search;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

pub use claims::{claim_ids, claims, find_claim, Claim};
pub use findings::write_findings;
pub use grid::{Grid, ParamValue, Params};
pub use identity::{
    check_identity, find_identity, identities, identity_ids, IdentityConfig, IdentityReport,
};
pub use report::{
    check_divisibility, Check, ClaimKind, Counterexample, DivisibilityReport, Expectation,
    GridReport, Status, Verdict,
};
pub use search::{
    eq_2n1odd_condition, gcd_condition_f, gcd_condition_g, prime_chain_count, prime_chain_search,
    search_bounded, search_list_5_1, search_raw_5_1, table1, PrimeChainEntry, SearchSummary,
    Table1Row, TABLE1_XS,
};

use crate::error::{Error, Result};

/// Default cap on the estimated number of big-integer multiplications per sweep.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub budget: u128,
    /// Thread count; the global pool when `None`.
    pub workers: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }
}

/// Runs `f` on a pool of `workers` threads, or the global pool.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::invalid("workers must be >= 1")),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn verify_claim(id: &str, grid: &Grid) -> Result<GridReport> {
    verify_claim_with(id, grid, &RunOptions::default())
}

/// Sweeps `grid` for the claim `id`. Refuses grids whose estimated cost is
/// over `options.budget`.
pub fn verify_claim_with(id: &str, grid: &Grid, options: &RunOptions) -> Result<GridReport> {
    let claim = find_claim(id)?;
    grid.validate()?;
    let start = Instant::now();
    let enumeration = claim.enumerate(grid);
    let estimate = enumeration.cost();
    if estimate > options.budget {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: options.budget,
        });
    }
    let results: Vec<Vec<(Check, bool, DivisibilityReport)>> =
        with_workers(options.workers, || {
            enumeration
                .points
                .par_iter()
                .map(|point| {
                    claim
                        .evaluate(&point.params)
                        .into_iter()
                        .map(|check| {
                            let (ok, report) = check.holds().expect("moduli are positive");
                            (check, ok, report)
                        })
                        .collect()
                })
                .collect()
        })?;

    let mut checked = 0;
    let mut counterexamples = Vec::new();
    let mut moduli = BTreeSet::new();
    for (point, checks) in enumeration.points.iter().zip(results) {
        for (check, ok, report) in checks {
            checked += 1;
            if !moduli.contains(&check.modulus) {
                moduli.insert(check.modulus.clone());
            }
            if !ok {
                counterexamples.push(Counterexample {
                    params: point.params.clone(),
                    check: check.label,
                    expected: check.expect,
                    report,
                });
            }
        }
    }
    let status = GridReport::status_for(claim.kind, &counterexamples);
    Ok(GridReport {
        claim: claim.id,
        kind: claim.kind,
        grid: grid.clone(),
        points: enumeration.points.len() as u64,
        checked,
        skipped: enumeration.skipped,
        moduli: moduli.into_iter().collect(),
        counterexamples,
        status,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm_1_1_small_grid() {
        let grid = Grid::new((1, 3), (1, 6), 2, 0, 0);
        let report = verify_claim("thm-1.1", &grid).unwrap();
        assert!(report.held());
        assert_eq!(report.status, Status::Held);
        assert_eq!(report.points, (6 + 36 + 216) * 3 * 2);
        assert!(report.moduli.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn unknown_and_budget() {
        let grid = Grid::new((1, 1), (1, 3), 0, 1, 0);
        assert!(matches!(
            verify_claim("bogus", &grid),
            Err(Error::UnknownClaim(_))
        ));
        let tight = RunOptions {
            budget: 1,
            workers: Some(1),
        };
        assert!(matches!(
            verify_claim_with("conj-1.3", &grid, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn conjecture_counterexample_status() {
        let mut grid = find_claim("conj-6.2").unwrap().default_grid.clone();
        grid.n_max = 4;
        grid.a_max = 1;
        grid.r_max = 0;
        let report = verify_claim_with(
            "conj-6.2",
            &grid,
            &RunOptions {
                workers: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(report.status, Status::Counterexample);
        let mut buf = Vec::new();
        let n = write_findings(&report, &mut buf).unwrap();
        assert_eq!(n, report.counterexamples.len());
        let first = String::from_utf8(buf)
            .unwrap()
            .lines()
            .next()
            .unwrap()
            .to_string();
        assert!(
            first.starts_with(r#"{"claim":"conj-6.2","params":{"n":3"#),
            "{first}"
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let grid = Grid::new((1, 2), (1, 5), 1, 0, 0);
        let a = serde_json::to_string(&verify_claim("thm-1.2", &grid).unwrap()).unwrap();
        let b = serde_json::to_string(
            &verify_claim_with(
                "thm-1.2",
                &grid,
                &RunOptions {
                    workers: Some(3),
                    ..Default::default()
                },
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(a, b);
    }
}

//! Searches over `n` for the gcd conditions, all decided prime by prime with
//! Legendre sums so no large binomial is ever formed.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{
    binomial_valuation, classify_prime_power_u64, factor_u64, is_prime_u64, primes_up_to,
};
use crate::error::{Error, Result};

/// Hits of one condition up to a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub condition: &'static str,
    pub bound: u64,
    pub hits: Vec<u64>,
    pub count: u64,
}

impl SearchSummary {
    fn new(condition: &'static str, bound: u64, hits: Vec<u64>) -> Self {
        let count = hits.len() as u64;
        Self {
            condition,
            bound,
            hits,
            count,
        }
    }

    /// Number of hits `<= x`.
    pub fn count_to(&self, x: u64) -> u64 {
        self.hits.partition_point(|&n| n <= x) as u64
    }
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be >= 1"));
    }
    Ok(())
}

fn vp(p: u64, mut m: u64) -> u64 {
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

// v_p(C(top, k)) through Legendre sums; valid for any prime p.
fn vp_binomial(p: u64, top: u64, k: u64) -> u64 {
    binomial_valuation(p as u128, top as u128, k as u128).expect("p prime and k <= top")
}

/// No prime dividing `2n+1` divides `C(2n, n)`.
pub fn eq_2n1odd_condition(n: u64) -> Result<bool> {
    require_positive(n)?;
    Ok(factor_u64(2 * n + 1)
        .iter()
        .all(|&(p, _)| vp_binomial(p, 2 * n, n) == 0))
}

/// As [`eq_2n1odd_condition`] for a `2n+1` whose prime divisors are already known.
fn eq_2n1odd_with_primes(n: u128, primes: &[u64]) -> bool {
    primes
        .iter()
        .all(|&p| binomial_valuation(p as u128, 2 * n, n).expect("p prime") == 0)
}

pub(crate) fn gcd_condition_f_unchecked(n: u64) -> bool {
    let (a, b) = (2 * n + 1, 2 * n + 3);
    let primes = factor_u64(a)
        .into_iter()
        .chain(factor_u64(b))
        .map(|(p, _)| p);
    primes.into_iter().all(|p| vp_binomial(p, a, n) == vp(p, a))
}

pub(crate) fn gcd_condition_g_unchecked(n: u64) -> bool {
    let (a, b) = (2 * n + 1, 4 * n + 1);
    let primes = factor_u64(a)
        .into_iter()
        .chain(factor_u64(b))
        .map(|(p, _)| p);
    primes.into_iter().all(|p| vp_binomial(p, b, n) == vp(p, b))
}

/// `gcd(C(2n+1, n)/(2n+1), (2n+1)(2n+3)) = 1`.
pub fn gcd_condition_f(n: u64) -> Result<bool> {
    require_positive(n)?;
    Ok(gcd_condition_f_unchecked(n))
}

/// `gcd(C(4n+1, n)/(4n+1), (2n+1)(4n+1)) = 1`.
pub fn gcd_condition_g(n: u64) -> Result<bool> {
    require_positive(n)?;
    Ok(gcd_condition_g_unchecked(n))
}

fn sweep(condition: &'static str, bound: u64, pred: impl Fn(u64) -> bool + Sync) -> SearchSummary {
    let hits: Vec<u64> = (1..=bound).into_par_iter().filter(|&n| pred(n)).collect();
    SearchSummary::new(condition, bound, hits)
}

fn two_n_plus_one_prime_power(n: u64) -> bool {
    classify_prime_power_u64(2 * n + 1)
        .expect("2n+1 >= 3")
        .is_some()
}

/// Every `n <= bound` satisfying the `2n+1` gcd condition.
pub fn search_raw_5_1(bound: u64) -> SearchSummary {
    sweep("raw-5.1", bound, |n| {
        eq_2n1odd_condition(n).expect("n >= 1")
    })
}

/// As [`search_raw_5_1`] but leaving out `n` with `2n+1` a prime power.
pub fn search_list_5_1(bound: u64) -> SearchSummary {
    let raw = search_raw_5_1(bound);
    let hits = raw
        .hits
        .into_iter()
        .filter(|&n| !two_n_plus_one_prime_power(n))
        .collect();
    SearchSummary::new("list-5.1", bound, hits)
}

pub fn search_f(bound: u64) -> SearchSummary {
    sweep("f-condition", bound, gcd_condition_f_unchecked)
}

pub fn search_g(bound: u64) -> SearchSummary {
    sweep("g-condition", bound, gcd_condition_g_unchecked)
}

/// Ids accepted by [`search_bounded`].
pub const BOUNDED_SEARCHES: [&str; 4] = ["list-5.1", "raw-5.1", "f-condition", "g-condition"];

pub fn search_bounded(id: &str, bound: u64) -> Result<SearchSummary> {
    match id {
        "list-5.1" => Ok(search_list_5_1(bound)),
        "raw-5.1" => Ok(search_raw_5_1(bound)),
        "f-condition" => Ok(search_f(bound)),
        "g-condition" => Ok(search_g(bound)),
        _ => Err(Error::UnknownSearch(id.to_string())),
    }
}

/// One column of the `f`/`g` table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub x: u64,
    pub f: u64,
    pub g: u64,
}

/// `f(x)` and `g(x)` at each `x`, from a single sweep to the largest bound.
pub fn table1(xs: &[u64]) -> Result<Vec<Table1Row>> {
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("table bounds must be strictly ascending"));
    }
    let Some(&max) = xs.last() else {
        return Ok(Vec::new());
    };
    let (f, g) = rayon::join(|| search_f(max), || search_g(max));
    Ok(xs
        .iter()
        .map(|&x| Table1Row {
            x,
            f: f.count_to(x),
            g: g.count_to(x),
        })
        .collect())
}

/// Columns of the published table.
pub const TABLE1_XS: [u64; 12] = [1, 10, 20, 50, 100, 200, 500, 1000, 2000, 3000, 4000, 5000];

/// An odd prime `p` with `q = p^2 - p + 1` prime, and the `n` it produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeChainEntry {
    pub p: u64,
    pub q: u64,
    /// `(p^3 - p^2 + p - 1) / 2`, so that `2n + 1 = p q`.
    #[serde(serialize_with = "as_decimal")]
    pub n: u128,
    /// Whether `n` satisfies the `2n+1` gcd condition.
    pub condition: bool,
}

fn as_decimal<S: serde::Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn chain_entry(p: u64) -> Option<PrimeChainEntry> {
    let q = p.checked_mul(p)?.checked_sub(p)?.checked_add(1)?;
    if !is_prime_u64(q) {
        return None;
    }
    let n = (p as u128 * q as u128 - 1) / 2;
    Some(PrimeChainEntry {
        p,
        q,
        n,
        condition: eq_2n1odd_with_primes(n, &[p, q]),
    })
}

/// The first `count` odd primes `p` with `p^2 - p + 1` prime.
pub fn prime_chain_search(count: usize) -> Result<Vec<PrimeChainEntry>> {
    if count == 0 {
        return Err(Error::invalid("count must be >= 1"));
    }
    let mut limit = 1024u64;
    loop {
        let found: Vec<PrimeChainEntry> = primes_up_to(limit)
            .into_par_iter()
            .skip(1)
            .filter_map(chain_entry)
            .collect();
        if found.len() >= count {
            return Ok(found.into_iter().take(count).collect());
        }
        limit *= 4;
    }
}

/// How many of the first `first` primes are odd with `p^2 - p + 1` prime.
pub fn prime_chain_count(first: usize) -> u64 {
    let mut limit = 1024u64;
    let primes = loop {
        let ps = primes_up_to(limit);
        if ps.len() >= first {
            break ps;
        }
        limit *= 2;
    };
    primes[..first]
        .par_iter()
        .filter(|&&p| p != 2 && is_prime_u64(p * p - p + 1))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_examples() {
        assert!(eq_2n1odd_condition(10).unwrap());
        assert!(eq_2n1odd_condition(1).unwrap());
        assert!(!eq_2n1odd_condition(7).unwrap());
        assert!(eq_2n1odd_condition(0).is_err());
        assert!(gcd_condition_f(1).unwrap());
        assert!(gcd_condition_g(1).unwrap());
        assert!(gcd_condition_f(0).is_err());
    }

    #[test]
    fn small_lists() {
        assert_eq!(search_list_5_1(10).hits, vec![10]);
        assert!(search_list_5_1(9).hits.is_empty());
        assert_eq!(search_f(10).count, 8);
        let raw = search_raw_5_1(9);
        assert!(raw.hits.iter().all(|&n| two_n_plus_one_prime_power(n)));
    }

    #[test]
    fn table_rejects_unsorted() {
        assert!(table1(&[10, 1]).is_err());
        assert!(table1(&[]).unwrap().is_empty());
        assert_eq!(table1(&[1]).unwrap(), vec![Table1Row { x: 1, f: 1, g: 1 }]);
    }

    #[test]
    fn prime_chain_start() {
        let first = prime_chain_search(1).unwrap();
        assert_eq!(first[0].p, 3);
        assert_eq!(first[0].n, 10);
        assert!(first[0].condition);
        let five: Vec<u64> = prime_chain_search(5).unwrap().iter().map(|e| e.p).collect();
        assert_eq!(five, vec![3, 7, 13, 67, 79]);
        assert!(prime_chain_search(0).is_err());
    }

    #[test]
    fn bounded_registry() {
        assert_eq!(search_bounded("list-5.1", 10).unwrap().hits, vec![10]);
        assert!(matches!(
            search_bounded("nope", 10),
            Err(Error::UnknownSearch(_))
        ));
    }
}

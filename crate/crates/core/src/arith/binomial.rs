use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::One;

use crate::error::{Error, Result};
use crate::ExactInt;

/// Rows above this index are computed on demand and not retained.
const MAX_CACHED_ROW: u64 = 4096;

/// Append-only cache of half rows of Pascal's triangle.
///
/// Row `n` stores `C(n, 0..=n/2)`; the other half follows by symmetry.
/// Concurrent readers share a read lock, insertion takes the write lock.
#[derive(Default)]
pub struct BinomialCache {
    rows: RwLock<HashMap<u64, Arc<[ExactInt]>>>,
}

impl BinomialCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide cache used by [`choose`].
    pub fn global() -> &'static BinomialCache {
        static CACHE: OnceLock<BinomialCache> = OnceLock::new();
        CACHE.get_or_init(BinomialCache::new)
    }

    pub fn row(&self, n: u64) -> Arc<[ExactInt]> {
        if let Some(row) = self.rows.read().expect("binomial cache poisoned").get(&n) {
            return Arc::clone(row);
        }
        let row: Arc<[ExactInt]> = half_row(n).into();
        if n <= MAX_CACHED_ROW {
            let mut rows = self.rows.write().expect("binomial cache poisoned");
            // another writer may have won the race; keep the first entry
            return Arc::clone(rows.entry(n).or_insert(row));
        }
        row
    }

    pub fn get(&self, n: u64, k: i64) -> ExactInt {
        if k < 0 || k as u64 > n {
            return ExactInt::default();
        }
        let k = (k as u64).min(n - k as u64);
        self.row(n)[k as usize].clone()
    }

    pub fn len(&self) -> usize {
        self.rows.read().expect("binomial cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn half_row(n: u64) -> Vec<ExactInt> {
    let half = n / 2;
    let mut row = Vec::with_capacity(half as usize + 1);
    let mut c = ExactInt::one();
    row.push(c.clone());
    for k in 0..half {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// `C(n, k)`, zero when `k < 0` or `k > n`. Served from the global cache.
pub fn choose(n: u64, k: i64) -> ExactInt {
    BinomialCache::global().get(n, k)
}

/// `C(n, k)` with the lower index unrestricted; negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::invalid(format!(
            "binomial upper index must be >= 0, got {n}"
        )));
    }
    Ok(choose(n as u64, k))
}

pub fn factorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::invalid(format!("factorial of negative {n}")));
    }
    Ok((2..=n as u64).fold(ExactInt::one(), |acc, i| acc * i))
}

pub(crate) fn factorial_u(n: u64) -> ExactInt {
    (2..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<ExactInt>> {
        let mut t: Vec<Vec<ExactInt>> = vec![vec![ExactInt::one()]];
        for n in 1..rows {
            let prev = &t[n - 1];
            let mut row = vec![ExactInt::one(); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn examples() {
        assert_eq!(binomial(14, 7).unwrap(), ExactInt::from(3432));
        assert_eq!(binomial(5, -1).unwrap(), ExactInt::from(0));
        assert_eq!(binomial(20, 10).unwrap(), ExactInt::from(184756));
        assert_eq!(binomial(3, 4).unwrap(), ExactInt::from(0));
        assert!(matches!(binomial(-1, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn matches_pascal_triangle() {
        let t = pascal(201);
        for n in 0..=200u64 {
            for k in 0..=n {
                assert_eq!(choose(n, k as i64), t[n as usize][k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn uncached_rows_still_exact() {
        let cache = BinomialCache::new();
        let big = cache.get(5000, 2);
        assert_eq!(big, ExactInt::from(5000u64 * 4999 / 2));
        assert_eq!(cache.get(5000, 4999), ExactInt::from(5000));
        assert!(cache.is_empty());
        cache.get(10, 3);
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0).unwrap(), ExactInt::from(1));
        assert_eq!(factorial(5).unwrap(), ExactInt::from(120));
        let oracle: u64 = (1..=10).product();
        assert_eq!(factorial(10).unwrap(), ExactInt::from(oracle));
        assert!(factorial(-3).is_err());
    }
}

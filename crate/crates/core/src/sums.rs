//! Definition-level evaluation of the sum families: chain sums over products of
//! binomials, ballot-number power sums, and the `U_r`/`V_r` sums.
//!
//! Every value is computed term by term with exact integers. Binomials with a
//! lower index outside `[0, n]` are zero, so summation ranges never need
//! clipping.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial::factorial_u, BinomialCache};
use crate::error::{Error, Result};
use crate::{ExactInt, ExactRat};

/// The two values of `ε`: all terms added, or signs alternating with `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Alternating,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Alternating];

    /// `ε^k`
    pub fn at(self, k: u64) -> i32 {
        match self {
            Sign::Alternating if k % 2 == 1 => -1,
            _ => 1,
        }
    }

    fn apply(self, k: u64, term: ExactInt) -> ExactInt {
        if self.at(k) < 0 {
            -term
        } else {
            term
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Alternating => "alternating",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Weight {
    /// `(2k+1)^(2r+1)`
    OddPower,
    /// `k^r (k+1)^r (2k+1)`
    Kk1,
}

impl Weight {
    pub fn at(self, k: u64, r: u32) -> ExactInt {
        match self {
            Weight::OddPower => ExactInt::from(2 * k + 1).pow(2 * r + 1),
            Weight::Kk1 => ExactInt::from(k * (k + 1)).pow(r) * (2 * k + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    /// factors `C(n_i + n_{i+1} + 1, n_i - k)` with `n_{m+1} = n_1`
    Cyclic,
    /// factors `C(2 n_i + 1, n_i - k)`
    Diagonal,
}

/// Parameters selecting one chain sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainSpec {
    ns: Vec<u64>,
    pub r: u32,
    pub sign: Sign,
    pub weight: Weight,
    pub closure: Closure,
}

impl ChainSpec {
    pub fn new(ns: Vec<u64>, r: u32, sign: Sign, weight: Weight, closure: Closure) -> Result<Self> {
        if ns.is_empty() {
            return Err(Error::invalid("chain needs at least one n_i"));
        }
        if ns.contains(&0) {
            return Err(Error::invalid(format!(
                "chain entries must be >= 1, got {ns:?}"
            )));
        }
        Ok(Self {
            ns,
            r,
            sign,
            weight,
            closure,
        })
    }

    /// Shorthand for the cyclic chains of the main congruences.
    pub fn cyclic(ns: Vec<u64>, r: u32, sign: Sign, weight: Weight) -> Result<Self> {
        Self::new(ns, r, sign, weight, Closure::Cyclic)
    }

    // Reduction recurrences pass through chains whose first entry is 0.
    pub(crate) fn new_unchecked(
        ns: Vec<u64>,
        r: u32,
        sign: Sign,
        weight: Weight,
        closure: Closure,
    ) -> Self {
        debug_assert!(!ns.is_empty());
        Self {
            ns,
            r,
            sign,
            weight,
            closure,
        }
    }

    pub fn ns(&self) -> &[u64] {
        &self.ns
    }

    pub fn m(&self) -> usize {
        self.ns.len()
    }

    pub fn first(&self) -> u64 {
        self.ns[0]
    }

    pub fn last(&self) -> u64 {
        self.ns[self.ns.len() - 1]
    }

    /// `(top, shift)` per factor: the factor at `k` is `C(top, shift - k)`.
    fn factors(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let m = self.ns.len();
        (0..m).map(move |i| {
            let n = self.ns[i];
            let top = match self.closure {
                Closure::Cyclic => n + self.ns[(i + 1) % m] + 1,
                Closure::Diagonal => 2 * n + 1,
            };
            (top, n)
        })
    }
}

fn entry(row: &[ExactInt], top: u64, k: i64) -> Option<&ExactInt> {
    if k < 0 || k as u64 > top {
        return None;
    }
    let k = (k as u64).min(top - k as u64);
    Some(&row[k as usize])
}

struct RowSet {
    rows: Vec<(Arc<[ExactInt]>, u64, u64)>,
}

impl RowSet {
    fn for_spec(spec: &ChainSpec) -> Self {
        let cache = BinomialCache::global();
        Self {
            rows: spec
                .factors()
                .map(|(top, shift)| (cache.row(top), top, shift))
                .collect(),
        }
    }

    fn product(&self, k: u64) -> ExactInt {
        let mut acc = ExactInt::one();
        for (row, top, shift) in &self.rows {
            match entry(row, *top, *shift as i64 - k as i64) {
                Some(c) => acc *= c,
                None => return ExactInt::zero(),
            }
        }
        acc
    }
}

/// `A_{n,k} = C(2n, n-k) - C(2n, n-k-1)`.
pub fn ballot(n: u64, k: u64) -> Result<ExactInt> {
    if k > n {
        return Err(Error::invalid(format!(
            "ballot number needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(ballot_unchecked(n, k))
}

pub(crate) fn ballot_unchecked(n: u64, k: u64) -> ExactInt {
    let row = BinomialCache::global().row(2 * n);
    let hi = entry(&row, 2 * n, n as i64 - k as i64)
        .cloned()
        .unwrap_or_default();
    match entry(&row, 2 * n, n as i64 - k as i64 - 1) {
        Some(lo) => hi - lo,
        None => hi,
    }
}

/// `A_{n,0..=n}`.
pub fn ballot_row(n: u64) -> Vec<ExactInt> {
    (0..=n).map(|k| ballot_unchecked(n, k)).collect()
}

/// Product of the chain's binomial factors at index `k`.
pub fn chain_product(spec: &ChainSpec, k: u64) -> ExactInt {
    RowSet::for_spec(spec).product(k)
}

/// `sum_{k=0}^{n_1} ε^k w(k) chain_product(spec, k)`.
pub fn chain_sum(spec: &ChainSpec) -> ExactInt {
    let rows = RowSet::for_spec(spec);
    (0..=spec.first()).fold(ExactInt::zero(), |acc, k| {
        let p = rows.product(k);
        if p.is_zero() {
            return acc;
        }
        acc + spec.sign.apply(k, spec.weight.at(k, spec.r) * p)
    })
}

/// The rational prefactor that turns a chain sum into its normalized form.
///
/// Cyclic: `n_1! n_m! / (n_1 + n_m + 1)!`. Diagonal:
/// `n_1! prod_i (n_i + n_{i+1} + 1)! / (2 n_i + 1)!` with `n_{m+1} = -1`.
pub fn normalization(spec: &ChainSpec) -> ExactRat {
    let (n1, nm) = (spec.first(), spec.last());
    match spec.closure {
        Closure::Cyclic => {
            ExactRat::new(factorial_u(n1) * factorial_u(nm), factorial_u(n1 + nm + 1))
        }
        Closure::Diagonal => {
            let ns = spec.ns();
            let mut num = factorial_u(n1);
            let mut den = ExactInt::one();
            for (i, &n) in ns.iter().enumerate() {
                // n_{m+1} = -1 turns the last numerator into n_m!
                let next = ns.get(i + 1).map_or(n, |&nx| n + nx + 1);
                num *= factorial_u(next);
                den *= factorial_u(2 * n + 1);
            }
            ExactRat::new(num, den)
        }
    }
}

/// Prefactor times chain sum, exactly.
pub fn normalized_sum(spec: &ChainSpec) -> ExactRat {
    normalization(spec) * ExactRat::from_integer(chain_sum(spec))
}

/// Factors `(n_j, s_j)` of a product of ballot-number powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallotSumSpec {
    factors: Vec<(u64, u32)>,
    pub r: u32,
    pub sign: Sign,
}

impl BallotSumSpec {
    pub fn new(factors: Vec<(u64, u32)>, r: u32, sign: Sign) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("ballot power sum needs at least one factor"));
        }
        if factors.iter().any(|&(_, s)| s == 0) {
            return Err(Error::invalid("ballot exponents must be >= 1"));
        }
        Ok(Self { factors, r, sign })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Summation runs over `0..=min_j n_j`.
    pub fn upper(&self) -> u64 {
        self.factors.iter().map(|&(n, _)| n).min().unwrap_or(0)
    }
}

/// `sum_{k=0}^{K} ε^k (2k+1)^r prod_j A_{n_j,k}^{s_j}`.
pub fn ballot_power_sum(spec: &BallotSumSpec) -> ExactInt {
    ballot_power_sum_to(spec, spec.upper())
}

/// As [`ballot_power_sum`] with an explicit upper summation limit (clipped to
/// the common support).
pub fn ballot_power_sum_to(spec: &BallotSumSpec, upper: u64) -> ExactInt {
    let upper = upper.min(spec.upper());
    let rows: Vec<(Vec<ExactInt>, u32)> = spec
        .factors
        .iter()
        .map(|&(n, s)| ((0..=upper).map(|k| ballot_unchecked(n, k)).collect(), s))
        .collect();
    (0..=upper).fold(ExactInt::zero(), |acc, k| {
        let mut term = ExactInt::from(2 * k + 1).pow(spec.r);
        for (row, s) in &rows {
            term *= row[k as usize].pow(*s);
        }
        acc + spec.sign.apply(k, term)
    })
}

/// One factor `C(top, shift - k)^power` of a [`binomial_power_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialFactor {
    pub top: u64,
    pub shift: i64,
    pub power: u32,
}

impl BinomialFactor {
    pub fn new(top: u64, shift: i64, power: u32) -> Self {
        Self { top, shift, power }
    }
}

/// `sum_{k=0}^{upper} ε^k (2k+1)^{2r+1} prod_j C(top_j, shift_j - k)^{p_j}`.
pub fn binomial_power_sum(factors: &[BinomialFactor], upper: u64, r: u32, sign: Sign) -> ExactInt {
    let cache = BinomialCache::global();
    let rows: Vec<_> = factors.iter().map(|f| (cache.row(f.top), f)).collect();
    (0..=upper).fold(ExactInt::zero(), |acc, k| {
        let mut term = Weight::OddPower.at(k, r);
        for (row, f) in &rows {
            match entry(row, f.top, f.shift - k as i64) {
                Some(c) => term *= c.pow(f.power),
                None if f.power == 0 => {}
                None => return acc,
            }
        }
        acc + sign.apply(k, term)
    })
}

/// `U_r(n)` (plus) or `V_r(n)` (alternating): `sum_k ε^k C(2n+1, n-k) (2k+1)^{2r}`.
pub fn uv_sum(n: u64, r: u32, sign: Sign) -> ExactInt {
    let row = BinomialCache::global().row(2 * n + 1);
    (0..=n).fold(ExactInt::zero(), |acc, k| {
        let c = entry(&row, 2 * n + 1, (n - k) as i64).expect("n - k in range");
        acc + sign.apply(k, c * ExactInt::from(2 * k + 1).pow(2 * r))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::choose;
    use num_integer::Integer;

    fn brute_chain(ns: &[u64], r: u32, sign: Sign, weight: Weight) -> ExactInt {
        let m = ns.len();
        let mut total = ExactInt::zero();
        for k in 0..=ns[0] {
            let mut term = weight.at(k, r) * sign.at(k);
            for i in 0..m {
                term *= choose(ns[i] + ns[(i + 1) % m] + 1, ns[i] as i64 - k as i64);
            }
            total += term;
        }
        total
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot(7, 0).unwrap(), ExactInt::from(429));
        assert_eq!(ballot(7, 6).unwrap(), ExactInt::from(13));
        assert_eq!(ballot(9, 9).unwrap(), ExactInt::from(1));
        assert!(ballot(3, 4).is_err());
        let row: Vec<i64> = ballot_row(7)
            .iter()
            .map(|a| i64::try_from(a).unwrap())
            .collect();
        assert_eq!(row, vec![429, 1001, 1001, 637, 273, 77, 13, 1]);
    }

    #[test]
    fn ballot_definitions_agree() {
        for n in 0..=60u64 {
            for k in 0..=n {
                let scaled = choose(2 * n + 1, (n - k) as i64) * (2 * k + 1);
                let (q, rem) = scaled.div_rem(&ExactInt::from(2 * n + 1));
                assert!(rem.is_zero());
                assert_eq!(ballot(n, k).unwrap(), q, "A({n},{k})");
            }
        }
    }

    #[test]
    fn chain_product_examples() {
        let one = ChainSpec::cyclic(vec![1], 0, Sign::Plus, Weight::OddPower).unwrap();
        assert_eq!(chain_product(&one, 0), ExactInt::from(3));
        let two = ChainSpec::cyclic(vec![1, 2], 0, Sign::Plus, Weight::OddPower).unwrap();
        assert_eq!(chain_product(&two, 1), choose(4, 0) * choose(4, 1));
        assert_eq!(chain_product(&two, 1), ExactInt::from(4));
        assert!(chain_product(&two, 3).is_zero());
        let diag = ChainSpec::new(
            vec![2, 3],
            0,
            Sign::Plus,
            Weight::OddPower,
            Closure::Diagonal,
        )
        .unwrap();
        assert_eq!(chain_product(&diag, 1), choose(5, 1) * choose(7, 2));
    }

    #[test]
    fn chain_sum_examples() {
        let p0 = ChainSpec::cyclic(vec![1], 0, Sign::Plus, Weight::OddPower).unwrap();
        assert_eq!(chain_sum(&p0), ExactInt::from(6));
        let q1 = ChainSpec::cyclic(vec![1], 1, Sign::Alternating, Weight::Kk1).unwrap();
        assert_eq!(chain_sum(&q1), ExactInt::from(-6));
        let three =
            ChainSpec::cyclic(vec![1, 1, 1], 0, Sign::Alternating, Weight::OddPower).unwrap();
        assert_eq!(chain_sum(&three), ExactInt::from(24));
    }

    #[test]
    fn chain_sum_matches_brute_force() {
        for ns in [vec![3], vec![2, 5], vec![4, 1, 3], vec![2, 2, 3, 1]] {
            for r in 0..3 {
                for sign in Sign::BOTH {
                    for weight in [Weight::OddPower, Weight::Kk1] {
                        let spec = ChainSpec::cyclic(ns.clone(), r, sign, weight).unwrap();
                        assert_eq!(chain_sum(&spec), brute_chain(&ns, r, sign, weight));
                    }
                }
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(ChainSpec::cyclic(vec![], 0, Sign::Plus, Weight::Kk1).is_err());
        assert!(ChainSpec::cyclic(vec![1, 0], 0, Sign::Plus, Weight::Kk1).is_err());
        assert!(BallotSumSpec::new(vec![], 0, Sign::Plus).is_err());
        assert!(BallotSumSpec::new(vec![(3, 0)], 0, Sign::Plus).is_err());
    }

    #[test]
    fn ballot_power_sum_examples() {
        let s1 = BallotSumSpec::new(vec![(7, 1)], 0, Sign::Plus).unwrap();
        assert_eq!(ballot_power_sum(&s1), ExactInt::from(3432));
        let alt = BallotSumSpec::new(vec![(1, 1)], 0, Sign::Alternating).unwrap();
        assert!(ballot_power_sum(&alt).is_zero());
        let s2 = BallotSumSpec::new(vec![(7, 2)], 1, Sign::Plus).unwrap();
        let brute: i64 = [429i64, 1001, 1001, 637, 273, 77, 13, 1]
            .iter()
            .enumerate()
            .map(|(k, a)| (2 * k as i64 + 1) * a * a)
            .sum();
        assert_eq!(ballot_power_sum(&s2), ExactInt::from(brute));
        assert_eq!(brute % 3432, 0);
        let mixed = BallotSumSpec::new(vec![(3, 1), (2, 2)], 0, Sign::Plus).unwrap();
        assert_eq!(mixed.upper(), 2);
    }

    #[test]
    fn binomial_power_sum_matches_chain_sum() {
        for (l, m, n) in [(1u64, 1u64, 1u64), (3, 2, 4), (2, 5, 1)] {
            for r in 0..3 {
                for sign in Sign::BOTH {
                    let spec = ChainSpec::cyclic(vec![l, m, n], r, sign, Weight::OddPower).unwrap();
                    let factors = [
                        BinomialFactor::new(l + m + 1, l as i64, 1),
                        BinomialFactor::new(m + n + 1, m as i64, 1),
                        BinomialFactor::new(n + l + 1, n as i64, 1),
                    ];
                    assert_eq!(binomial_power_sum(&factors, l, r, sign), chain_sum(&spec));
                }
            }
        }
        // zero powers contribute 1 even outside the support
        let f = [BinomialFactor::new(3, 1, 1), BinomialFactor::new(1, -1, 0)];
        assert_eq!(
            binomial_power_sum(&f, 1, 0, Sign::Plus),
            ExactInt::from(3 + 3)
        );
    }

    #[test]
    fn uv_examples() {
        assert_eq!(uv_sum(1, 0, Sign::Plus), ExactInt::from(4));
        assert_eq!(uv_sum(2, 0, Sign::Alternating), ExactInt::from(6));
        assert_eq!(uv_sum(1, 1, Sign::Plus), ExactInt::from(12));
        for n in 0..=60u64 {
            assert_eq!(uv_sum(n, 0, Sign::Plus), ExactInt::from(4).pow(n as u32));
            assert_eq!(uv_sum(n, 0, Sign::Alternating), choose(2 * n, n as i64));
        }
    }

    #[test]
    fn normalized_examples() {
        for n in 1..=30 {
            let spec = ChainSpec::cyclic(vec![n], 0, Sign::Plus, Weight::Kk1).unwrap();
            assert_eq!(normalized_sum(&spec), ExactRat::one(), "n={n}");
        }
        let q1 = ChainSpec::cyclic(vec![1], 1, Sign::Alternating, Weight::Kk1).unwrap();
        assert_eq!(normalized_sum(&q1), ExactRat::from_integer((-1).into()));
        let diag = ChainSpec::new(
            vec![1, 1],
            0,
            Sign::Plus,
            Weight::OddPower,
            Closure::Diagonal,
        )
        .unwrap();
        let v = normalized_sum(&diag);
        assert!(v.is_integer());
        assert_eq!(v, ExactRat::from_integer(2.into()));
    }
}

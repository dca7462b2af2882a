use num_traits::Zero;

use crate::arith::choose;
use crate::error::{Error, Result};
use crate::ExactInt;

/// `n_1 >= λ_1 >= ... >= λ_{m-2} >= 0`, with `λ_0 = n_1` implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChain {
    n1: u64,
    parts: Vec<u64>,
}

impl LambdaChain {
    pub fn new(n1: u64, parts: Vec<u64>) -> Result<Self> {
        let mut prev = n1;
        for &p in &parts {
            if p > prev {
                return Err(Error::invalid(format!(
                    "lambda chain {parts:?} is not nonincreasing from {n1}"
                )));
            }
            prev = p;
        }
        Ok(Self { n1, parts })
    }

    /// `λ_i` for `i` in `0..=len`, where `λ_0 = n_1`.
    pub fn at(&self, i: usize) -> u64 {
        if i == 0 {
            self.n1
        } else {
            self.parts[i - 1]
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn last(&self) -> u64 {
        self.parts.last().copied().unwrap_or(self.n1)
    }
}

/// All chains of the given length below `n1`, in lexicographically decreasing order.
pub fn lambda_chains(n1: u64, len: usize) -> Vec<LambdaChain> {
    fn walk(prev: u64, left: usize, cur: &mut Vec<u64>, n1: u64, out: &mut Vec<LambdaChain>) {
        if left == 0 {
            out.push(LambdaChain {
                n1,
                parts: cur.clone(),
            });
            return;
        }
        for v in (0..=prev).rev() {
            cur.push(v);
            walk(v, left - 1, cur, n1, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(n1, len, &mut Vec::with_capacity(len), n1, &mut out);
    out
}

/// Which of the four lambda-sum identities is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaVariant {
    /// weight `(2k+1)`, all signs plus
    PlusR0,
    /// weight `k(k+1)(2k+1)`, all signs plus
    PlusR1,
    /// weight `(2k+1)`, sign `(-1)^k`
    AltR0,
    /// weight `k(k+1)(2k+1)`, sign `(-1)^{k+1}`
    AltR1,
}

impl LambdaVariant {
    pub const ALL: [LambdaVariant; 4] = [
        LambdaVariant::PlusR0,
        LambdaVariant::PlusR1,
        LambdaVariant::AltR0,
        LambdaVariant::AltR1,
    ];
}

fn check_ns(ns: &[u64]) -> Result<()> {
    if ns.len() < 3 {
        return Err(Error::invalid("lambda sums need m >= 3"));
    }
    if ns.contains(&0) {
        return Err(Error::invalid("lambda sums need every n_i >= 1"));
    }
    Ok(())
}

/// The factor in front of the lambda sum: `(n_1+n_m+1) C(n_1+n_m, n_1)`,
/// times `n_m` for the `r = 1` variants.
pub fn lambda_prefactor(ns: &[u64], variant: LambdaVariant) -> Result<ExactInt> {
    check_ns(ns)?;
    let (n1, nm) = (ns[0], ns[ns.len() - 1]);
    let base = choose(n1 + nm, n1 as i64) * (n1 + nm + 1);
    Ok(match variant {
        LambdaVariant::PlusR0 | LambdaVariant::AltR0 => base,
        LambdaVariant::PlusR1 | LambdaVariant::AltR1 => base * nm,
    })
}

/// Sum over every lambda chain of
/// `tail(λ_{m-2}) prod_{i=1}^{m-2} C(λ_{i-1}, λ_i) C(n_{i+1}+n_{i+2}+1, n_{i+1}-λ_i)`,
/// where the tail is `C(λ+n_m, λ)`, `C(λ+n_m-1, λ-1)`, `1` or `λ` by variant.
pub fn lambda_sum(ns: &[u64], variant: LambdaVariant) -> Result<ExactInt> {
    check_ns(ns)?;
    let m = ns.len();
    let nm = ns[m - 1];
    let mut total = ExactInt::zero();
    for chain in lambda_chains(ns[0], m - 2) {
        let last = chain.last();
        let mut term = match variant {
            LambdaVariant::PlusR0 => choose(last + nm, last as i64),
            LambdaVariant::PlusR1 if last == 0 => continue,
            LambdaVariant::PlusR1 => choose(last + nm - 1, last as i64 - 1),
            LambdaVariant::AltR0 => ExactInt::from(1),
            LambdaVariant::AltR1 => ExactInt::from(last),
        };
        for i in 1..=m - 2 {
            let lam = chain.at(i);
            term *= choose(chain.at(i - 1), lam as i64);
            term *= choose(ns[i] + ns[i + 1] + 1, ns[i] as i64 - lam as i64);
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    Ok(total)
}

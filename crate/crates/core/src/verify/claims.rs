//! Registry of every congruence, parity and integrality statement, each with
//! a grid enumerator and an evaluator producing [`Check`]s.

use num_integer::Integer;
use num_traits::One;

use super::grid::{tuples, Grid, Params};
use super::report::{Check, ClaimKind, Expectation};
use super::search::{gcd_condition_f_unchecked, gcd_condition_g_unchecked};
use crate::arith::binomial::factorial_u;
use crate::arith::{bit_count_ones, choose, classify_prime_power_u64};
use crate::error::{Error, Result};
use crate::sums::{
    ballot_power_sum, binomial_power_sum, chain_sum, normalized_sum, BallotSumSpec, BinomialFactor,
    ChainSpec, Closure, Sign, Weight,
};
use crate::ExactInt;

/// A grid point and a rough count of the big-integer multiplications it costs.
#[derive(Debug, Clone)]
pub struct Point {
    pub params: Params,
    pub cost: u128,
}

#[derive(Debug, Clone, Default)]
pub struct Enumeration {
    pub points: Vec<Point>,
    /// Points whose hypothesis fails.
    pub skipped: u64,
}

impl Enumeration {
    fn push(&mut self, params: Params, upper: u64, mults: u64) {
        self.points.push(Point {
            params,
            cost: (upper as u128 + 1) * (mults as u128 + 1),
        });
    }

    pub fn cost(&self) -> u128 {
        self.points.iter().map(|p| p.cost).sum()
    }
}

pub struct Claim {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub kind: ClaimKind,
    pub statement: &'static str,
    /// How the grid fields map onto the statement's parameters.
    pub dims: &'static str,
    pub default_grid: Grid,
    enumerate: fn(&Grid) -> Enumeration,
    evaluate: fn(&Params) -> Vec<Check>,
}

impl Claim {
    pub fn enumerate(&self, grid: &Grid) -> Enumeration {
        (self.enumerate)(grid)
    }

    pub fn evaluate(&self, params: &Params) -> Vec<Check> {
        (self.evaluate)(params)
    }

    pub fn matches(&self, id: &str) -> bool {
        self.id == id || self.aliases.contains(&id)
    }
}

pub fn claims() -> &'static [Claim] {
    &CLAIMS
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    CLAIMS
        .iter()
        .find(|c| c.matches(id))
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn c(n: u64, k: i64) -> ExactInt {
    choose(n, k)
}

fn int(n: u64) -> ExactInt {
    ExactInt::from(n)
}

/// `value ≡ 0 mod num/den`, i.e. `num | value * den` with the fraction reduced.
fn rational_check(label: &'static str, value: ExactInt, num: ExactInt, den: ExactInt) -> Check {
    let g = num.gcd(&den);
    Check::divisible(label, value * (den / &g), num / g)
}

fn central(n: u64) -> ExactInt {
    c(2 * n, n as i64)
}

// (n_1 + n_m + 1) C(n_1 + n_m, n_1)
fn chain_modulus(ns: &[u64]) -> ExactInt {
    let (a, b) = (ns[0], ns[ns.len() - 1]);
    int(a + b + 1) * c(a + b, a as i64)
}

fn odd_chain(ns: &[u64], r: u32, sign: Sign) -> ExactInt {
    chain_sum(&ChainSpec::cyclic(ns.to_vec(), r, sign, Weight::OddPower).expect("entries >= 1"))
}

fn chain_points(g: &Grid, ms: impl Iterator<Item = u64>) -> Enumeration {
    let mut e = Enumeration::default();
    for m in ms {
        for ns in tuples(g.n_min, g.n_max, m as usize) {
            for r in 0..=g.r_max {
                for sign in g.signs() {
                    let upper = ns[0];
                    e.push(
                        Params::new()
                            .with("ns", ns.clone())
                            .with("r", r)
                            .with("sign", sign),
                        upper,
                        m + 2 * r as u64,
                    );
                }
            }
        }
    }
    e
}

fn enum_all_chains(g: &Grid) -> Enumeration {
    chain_points(g, g.ms())
}

fn enum_pairs(g: &Grid) -> Enumeration {
    chain_points(g, 2..=2)
}

fn eval_thm_1_1(p: &Params) -> Vec<Check> {
    let ns = p.list("ns");
    vec![Check::divisible(
        "",
        odd_chain(ns, p.exp("r"), p.sign()),
        chain_modulus(ns),
    )]
}

fn eval_thm_1_2(p: &Params) -> Vec<Check> {
    let (ns, r, sign) = (p.list("ns"), p.exp("r"), p.sign());
    let spec = ChainSpec::cyclic(ns.to_vec(), r, sign, Weight::Kk1).expect("entries >= 1");
    let (n1, nm) = (ns[0], ns[ns.len() - 1]);
    let last_exp = match sign {
        Sign::Plus => (r * r.saturating_sub(1) / 2).min(1),
        Sign::Alternating => r.min(1),
    };
    let modulus = chain_modulus(ns) * int(n1).pow(r.min(1)) * int(nm).pow(last_exp);
    vec![Check::divisible("", chain_sum(&spec), modulus)]
}

fn eval_thm_6_6(p: &Params) -> Vec<Check> {
    let spec = ChainSpec::new(
        p.list("ns").to_vec(),
        p.exp("r"),
        p.sign(),
        Weight::OddPower,
        Closure::Diagonal,
    )
    .expect("entries >= 1");
    let q = normalized_sum(&spec);
    vec![Check::divisible("", q.numer().clone(), q.denom().clone())]
}

fn enum_positive(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for m in g.m_min.max(3)..=g.m_max {
        for ns in tuples(g.n_min, g.n_max, m as usize) {
            let upper = ns[0];
            e.push(Params::new().with("ns", ns), upper, 2 * m + 4);
        }
    }
    e
}

fn eval_positive(p: &Params) -> Vec<Check> {
    let ns = p.list("ns");
    let sum = |r| {
        chain_sum(
            &ChainSpec::cyclic(ns.to_vec(), r, Sign::Alternating, Weight::Kk1)
                .expect("entries >= 1"),
        )
    };
    let positive = |label, value| Check {
        label,
        value,
        modulus: ExactInt::one(),
        expect: Expectation::Positive,
    };
    vec![positive("r=0", sum(0)), positive("r=1", -sum(1))]
}

fn enum_ballot_single(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for r in 0..=g.r_max {
            for s in 1..=g.s_max {
                if (r + s) % 2 == 0 {
                    continue;
                }
                for sign in g.signs() {
                    e.push(
                        Params::new()
                            .with("n", n)
                            .with("r", r)
                            .with("s", s)
                            .with("sign", sign),
                        n,
                        (r + s) as u64,
                    );
                }
            }
        }
    }
    e
}

fn eval_ballot_single(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let spec = BallotSumSpec::new(vec![(n, p.exp("s"))], p.exp("r"), p.sign()).expect("s >= 1");
    vec![Check::divisible("", ballot_power_sum(&spec), central(n))]
}

fn enum_thm_1_4(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        let prime_power = classify_prime_power_u64(2 * n + 1)
            .expect("2n+1 >= 3")
            .is_some();
        for r in 0..=g.r_max {
            for s in 1..=g.s_max {
                if (r + s) % 2 == 0 || (!prime_power && s != 1) {
                    continue;
                }
                let route = if prime_power { "prime-power" } else { "s=1" };
                for sign in g.signs() {
                    let params = Params::new()
                        .with("n", n)
                        .with("r", r)
                        .with("s", s)
                        .with("sign", sign)
                        .with("route", route);
                    e.push(params, n, (r + s) as u64);
                }
            }
        }
    }
    e
}

fn enum_n_r_sign(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for r in 0..=g.r_max {
            for sign in g.signs() {
                e.push(
                    Params::new().with("n", n).with("r", r).with("sign", sign),
                    n,
                    2 * r as u64 + 2,
                );
            }
        }
    }
    e
}

fn eval_thm_2_1(p: &Params) -> Vec<Check> {
    let (n, r, sign) = (p.int("n"), p.exp("r"), p.sign());
    let value = chain_sum(&ChainSpec::cyclic(vec![n], r, sign, Weight::Kk1).expect("n >= 1"));
    let exp = match sign {
        Sign::Plus => r.min(2),
        Sign::Alternating => (2 * r).min(2),
    };
    vec![Check::divisible(
        "",
        value,
        int(2 * n + 1) * central(n) * int(n).pow(exp),
    )]
}

fn eval_cor_2_2(p: &Params) -> Vec<Check> {
    let (n, r, sign) = (p.int("n"), p.exp("r"), p.sign());
    let modulus = match sign {
        Sign::Plus => ExactInt::from(4).pow(n as u32),
        Sign::Alternating => ExactInt::from(2).pow(bit_count_ones(n)),
    };
    let value = crate::sums::uv_sum(n, r, sign);
    vec![Check {
        label: "",
        value,
        modulus,
        expect: Expectation::QuotientParity(1),
    }]
}

fn enum_power_m(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for m in g.ms() {
            for r in 0..=g.r_max {
                for sign in g.signs() {
                    e.push(
                        Params::new()
                            .with("n", n)
                            .with("m", m)
                            .with("r", r)
                            .with("sign", sign),
                        n,
                        m + 2 * r as u64,
                    );
                }
            }
        }
    }
    e
}

fn eval_cor_6_1(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let ns = vec![n; p.int("m") as usize];
    vec![Check::divisible(
        "",
        odd_chain(&ns, p.exp("r"), p.sign()),
        int(2 * n + 1) * central(n),
    )]
}

fn enum_conj_6_2(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for a in 1..=g.a_max {
            for r in 0..=g.r_max {
                for sign in g.signs() {
                    let params = Params::new()
                        .with("n", n)
                        .with("a", a)
                        .with("r", r)
                        .with("sign", sign);
                    e.push(params, n, 2 * (a + r) as u64 + 2);
                }
            }
        }
    }
    e
}

/// Parity the conjectured classification assigns to the quotient.
pub fn conj_6_2_parity(n: u64, sign: Sign) -> u8 {
    let odd = match sign {
        // n = 2^b - 1
        Sign::Plus => (n + 1).is_power_of_two(),
        // n = 2^b + 2^c with b, c >= 0, allowing b = c
        Sign::Alternating => bit_count_ones(n) == 2 || (n >= 2 && n.is_power_of_two()),
    };
    u8::from(odd)
}

fn eval_conj_6_2(p: &Params) -> Vec<Check> {
    let (n, sign) = (p.int("n"), p.sign());
    let ns = vec![n; 2 * p.int("a") as usize + 1];
    let value = odd_chain(&ns, p.exp("r"), sign);
    vec![Check {
        label: "",
        value,
        modulus: central(n),
        expect: Expectation::QuotientParity(conj_6_2_parity(n, sign)),
    }]
}

fn enum_tuple_a(g: &Grid, len: usize) -> Enumeration {
    let mut e = Enumeration::default();
    for ns in tuples(g.n_min, g.n_max, len) {
        for a in 1..=g.a_max {
            for r in 0..=g.r_max {
                for sign in g.signs() {
                    let upper = ns[0];
                    let params = Params::new()
                        .with("ns", ns.clone())
                        .with("a", a)
                        .with("r", r)
                        .with("sign", sign);
                    e.push(params, upper, (len as u64) * a as u64 + 2 * r as u64);
                }
            }
        }
    }
    e
}

fn enum_cor_6_3(g: &Grid) -> Enumeration {
    enum_tuple_a(g, 2)
}

fn enum_cor_6_4(g: &Grid) -> Enumeration {
    enum_tuple_a(g, 3)
}

fn eval_repeated_chain(p: &Params) -> Vec<Check> {
    let base = p.list("ns");
    let ns: Vec<u64> = base
        .iter()
        .copied()
        .cycle()
        .take(base.len() * p.int("a") as usize)
        .collect();
    let (first, second) = (base[0], base[1]);
    let modulus = int(first + second + 1) * c(first + second, first as i64);
    vec![Check::divisible(
        "",
        odd_chain(&ns, p.exp("r"), p.sign()),
        modulus,
    )]
}

/// Points over `n`, exponent tuples in `[lo, a_max]^len`, `r` and sign.
fn enum_n_exps(g: &Grid, lo: u32, len: usize) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for exps in tuples(lo.into(), g.a_max.into(), len) {
            for r in 0..=g.r_max {
                for sign in g.signs() {
                    let mults: u64 = exps.iter().sum::<u64>() + 2 * r as u64;
                    let params = Params::new()
                        .with("n", n)
                        .with("exps", exps.clone())
                        .with("r", r)
                        .with("sign", sign);
                    e.push(params, n, mults);
                }
            }
        }
    }
    e
}

fn enum_exps2(g: &Grid) -> Enumeration {
    enum_n_exps(g, 1, 2)
}

fn enum_exps3(g: &Grid) -> Enumeration {
    enum_n_exps(g, 1, 3)
}

fn enum_cor_6_5(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for a in 1..=g.a_max {
            for b in 0..=g.s_max {
                for r in 0..=g.r_max {
                    for sign in g.signs() {
                        let params = Params::new()
                            .with("n", n)
                            .with("a", a)
                            .with("b", b)
                            .with("r", r)
                            .with("sign", sign);
                        e.push(params, n, 2 * (a + r) as u64 + b as u64);
                    }
                }
            }
        }
    }
    e
}

/// `sum_{k=0}^{n} ε^k (2k+1)^{2r+1} prod C(top, shift - k)^{exp}` with the
/// point's exponents paired with `(top, shift)` in order.
fn factor_sum(p: &Params, tops: &[(u64, u64)]) -> ExactInt {
    let factors: Vec<BinomialFactor> = tops
        .iter()
        .zip(p.list("exps"))
        .map(|(&(top, shift), &e)| BinomialFactor::new(top, shift as i64, e as u32))
        .collect();
    binomial_power_sum(&factors, p.int("n"), p.exp("r"), p.sign())
}

fn eval_cor_6_5(p: &Params) -> Vec<Check> {
    let (n, a, b) = (p.int("n"), p.exp("a"), p.exp("b"));
    let factors = [
        BinomialFactor::new(2 * n, n as i64, a),
        BinomialFactor::new(2 * n, n as i64 - 1, a),
        BinomialFactor::new(2 * n - 1, n as i64 - 1, b),
    ];
    let value = binomial_power_sum(&factors, n, p.exp("r"), p.sign());
    vec![Check::divisible("", value, int(n) * central(n))]
}

fn enum_cor_6_7(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for mn in tuples(g.n_min, g.n_max, 2) {
        for exps in tuples(1, g.a_max.into(), 2) {
            for r in 0..=g.r_max {
                for sign in g.signs() {
                    let mults = exps.iter().sum::<u64>() + 2 * r as u64;
                    let params = Params::new()
                        .with("ns", mn.clone())
                        .with("exps", exps.clone())
                        .with("r", r)
                        .with("sign", sign);
                    e.push(params, mn[0], mults);
                }
            }
        }
    }
    e
}

fn eval_cor_6_7(p: &Params) -> Vec<Check> {
    let (mn, exps) = (p.list("ns"), p.list("exps"));
    let (m, n) = (mn[0], mn[1]);
    let factors = [
        BinomialFactor::new(2 * m + 1, m as i64, exps[0] as u32),
        BinomialFactor::new(2 * n + 1, n as i64, exps[1] as u32),
    ];
    let value = binomial_power_sum(&factors, m, p.exp("r"), p.sign());
    let modulus = factorial_u(2 * m + 1) * factorial_u(2 * n + 1)
        / (factorial_u(m + n + 1) * factorial_u(m) * factorial_u(n));
    vec![Check::divisible("", value, modulus)]
}

fn eval_eq_n1_n2(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let value = factor_sum(p, &[(2 * n + 3, n + 1), (2 * n + 1, n)]);
    vec![Check::divisible(
        "",
        value,
        int(2 * n + 3) * c(2 * n + 1, n as i64),
    )]
}

fn eval_eq_4n(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let value = factor_sum(p, &[(4 * n + 1, 2 * n), (2 * n + 1, n)]);
    vec![Check::divisible(
        "",
        value,
        int(2 * n + 1) * c(4 * n + 1, n as i64),
    )]
}

fn eval_eq_6n(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let value = factor_sum(p, &[(6 * n + 1, 3 * n), (2 * n + 1, n)]);
    let modulus = factorial_u(6 * n + 1) * factorial_u(2 * n + 1)
        / (factorial_u(4 * n + 1) * factorial_u(3 * n) * factorial_u(n));
    vec![Check::divisible("", value, modulus)]
}

fn enum_rst(g: &Grid, hypothesis: Option<fn(u64) -> bool>) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        let general = hypothesis.is_none_or(|h| h(n));
        for r in 0..=g.r_max {
            for s in 1..=g.s_max {
                for t in 1..=g.s_max {
                    if (r + s + t) % 2 == 0 {
                        continue;
                    }
                    if !(general || (s == 1 && t == 1)) {
                        e.skipped += g.signs().len() as u64;
                        continue;
                    }
                    for sign in g.signs() {
                        let params = Params::new()
                            .with("n", n)
                            .with("r", r)
                            .with("s", s)
                            .with("t", t)
                            .with("sign", sign);
                        e.push(params, n, (r + s + t) as u64);
                    }
                }
            }
        }
    }
    e
}

fn enum_cor_6_8(g: &Grid) -> Enumeration {
    enum_rst(g, Some(gcd_condition_f_unchecked))
}

fn enum_cor_6_9(g: &Grid) -> Enumeration {
    enum_rst(g, Some(gcd_condition_g_unchecked))
}

fn enum_conj_6_10(g: &Grid) -> Enumeration {
    enum_rst(g, None)
}

fn ballot_pair(p: &Params, first: u64, second: u64) -> ExactInt {
    let spec = BallotSumSpec::new(
        vec![(first, p.exp("s")), (second, p.exp("t"))],
        p.exp("r"),
        p.sign(),
    )
    .expect("s, t >= 1");
    ballot_power_sum(&spec)
}

fn check_n_plus_1(p: &Params) -> Check {
    let n = p.int("n");
    rational_check(
        "n+1",
        ballot_pair(p, n + 1, n),
        c(2 * n + 1, n as i64),
        int(2 * n + 1),
    )
}

fn check_2n(p: &Params) -> Check {
    let n = p.int("n");
    rational_check(
        "2n",
        ballot_pair(p, 2 * n, n),
        c(4 * n + 1, n as i64),
        int(4 * n + 1),
    )
}

fn eval_cor_6_8(p: &Params) -> Vec<Check> {
    vec![check_n_plus_1(p)]
}

fn eval_cor_6_9(p: &Params) -> Vec<Check> {
    vec![check_2n(p)]
}

fn eval_conj_6_10(p: &Params) -> Vec<Check> {
    vec![check_n_plus_1(p), check_2n(p)]
}

fn enum_super_catalan(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for mn in tuples(g.n_min, g.n_max, 2) {
        for r in 0..=g.r_max {
            for s in 1..=g.s_max {
                for t in 1..=g.s_max {
                    if (r + s + t) % 2 == 0 {
                        continue;
                    }
                    for sign in g.signs() {
                        let params = Params::new()
                            .with("ns", mn.clone())
                            .with("r", r)
                            .with("s", s)
                            .with("t", t)
                            .with("sign", sign);
                        e.push(params, mn[0], (r + s + t) as u64);
                    }
                }
            }
        }
    }
    e
}

fn eval_super_catalan(p: &Params) -> Vec<Check> {
    let mn = p.list("ns");
    let (m, n) = (mn[0], mn[1]);
    let value = ballot_pair(p, m, n) * (m + n + 1);
    let modulus = factorial_u(2 * m) * factorial_u(2 * n)
        / (factorial_u(m + n) * factorial_u(m) * factorial_u(n));
    vec![Check::divisible("", value, modulus)]
}

fn eval_cor_6_14(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let value = factor_sum(p, &[(2 * n + 1, n), (2 * n + 3, n + 1), (2 * n + 5, n + 2)]);
    vec![Check::divisible(
        "",
        value,
        int(2 * n + 5) * c(2 * n + 1, n as i64),
    )]
}

fn eval_cor_6_15(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let value = factor_sum(p, &[(6 * n + 1, 3 * n), (4 * n + 1, 2 * n), (2 * n + 1, n)]);
    vec![
        Check::divisible(
            "C(6n+1,n)",
            value.clone(),
            int(2 * n + 1) * c(6 * n + 1, n as i64),
        ),
        Check::divisible(
            "C(6n+1,3n)",
            value,
            int(2 * n + 1) * c(6 * n + 1, 3 * n as i64),
        ),
    ]
}

fn eval_cor_6_16(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let (big, next) = (c(8 * n + 1, 3 * n as i64), c(8 * n + 2, 3 * n as i64 + 1));
    // 2 C(8n+1, 3n) / (3n+1) as an integer combination
    let ratio = &big * 8u8 - &next * 3u8;
    let integrality = &ratio * (3 * n + 1) - &big * 2u8;
    let first = factor_sum(p, &[(8 * n + 1, 4 * n), (4 * n + 1, 2 * n), (2 * n + 1, n)]) * 2u8;
    let second = factor_sum(
        p,
        &[(8 * n + 1, 4 * n), (6 * n + 1, 3 * n), (4 * n + 1, 2 * n)],
    );
    vec![
        Check {
            label: "integrality",
            value: integrality,
            modulus: ExactInt::one(),
            expect: Expectation::Zero,
        },
        Check::divisible("(4,2,1)", first, ratio * int((2 * n + 1) * (4 * n + 1))),
        Check::divisible("(4,3,2)", second, int(4 * n + 1) * big),
    ]
}

fn enum_conj_6_17(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for rst in tuples(1, g.s_max.into(), 3) {
            if rst.iter().sum::<u64>() % 2 == 0 {
                continue;
            }
            for sign in g.signs() {
                e.push(
                    Params::new()
                        .with("n", n)
                        .with("exps", rst.clone())
                        .with("sign", sign),
                    n,
                    3 * rst.iter().sum::<u64>(),
                );
            }
        }
    }
    e
}

fn ballot_triple(p: &Params, ns: [u64; 3]) -> ExactInt {
    let exps = p.list("exps");
    let factors = ns.iter().zip(exps).map(|(&n, &e)| (n, e as u32)).collect();
    ballot_power_sum(&BallotSumSpec::new(factors, 0, p.sign()).expect("exponents >= 1"))
}

fn eval_conj_6_17(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let s1 = ballot_triple(p, [3 * n, 2 * n, n]) * (4 * n + 1);
    let s2 = ballot_triple(p, [4 * n, 2 * n, n]);
    let s3 = ballot_triple(p, [4 * n, 3 * n, 2 * n]) * (6 * n + 1);
    let (six, eight) = (int(6 * n + 1), int(8 * n + 1));
    vec![
        rational_check(
            "(3,2,1) C(6n+1,n)",
            s1.clone(),
            c(6 * n + 1, n as i64),
            six.clone(),
        ),
        rational_check("(3,2,1) C(6n+1,3n)", s1, c(6 * n + 1, 3 * n as i64), six),
        rational_check("(4,2,1)", s2, c(8 * n + 1, 3 * n as i64), eight.clone()),
        rational_check("(4,3,2)", s3, c(8 * n + 1, 3 * n as i64), eight),
    ]
}

fn enum_cor_final(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for m in g.m_min.max(2)..=g.m_max {
        for n in g.ns() {
            for exps in tuples(1, g.a_max.into(), m as usize) {
                for r in 0..=g.r_max {
                    for sign in g.signs() {
                        let mults = exps.iter().sum::<u64>() + 2 * r as u64;
                        let params = Params::new()
                            .with("m", m)
                            .with("n", n)
                            .with("exps", exps.clone())
                            .with("r", r)
                            .with("sign", sign);
                        e.push(params, n, mults);
                    }
                }
            }
        }
    }
    e
}

fn eval_cor_final(p: &Params) -> Vec<Check> {
    let (m, n) = (p.int("m"), p.int("n"));
    let tops: Vec<(u64, u64)> = (1..=m).map(|i| (2 * n + 2 * i - 1, n + i - 1)).collect();
    let value = factor_sum(p, &tops);
    vec![Check::divisible(
        "",
        value,
        int(2 * n + 2 * m - 1) * c(2 * n + 1, n as i64),
    )]
}

fn enum_conj_final(g: &Grid) -> Enumeration {
    let mut e = Enumeration::default();
    for n in g.ns() {
        for m in g.ms() {
            for exps in tuples(1, g.s_max.into(), m as usize) {
                if exps.iter().sum::<u64>() % 2 == 0 {
                    continue;
                }
                for sign in g.signs() {
                    let mults = exps.iter().sum::<u64>();
                    e.push(
                        Params::new()
                            .with("n", n)
                            .with("m", m)
                            .with("exps", exps.clone())
                            .with("sign", sign),
                        n,
                        mults,
                    );
                }
            }
        }
    }
    e
}

fn eval_conj_final(p: &Params) -> Vec<Check> {
    let n = p.int("n");
    let factors = p
        .list("exps")
        .iter()
        .enumerate()
        .map(|(i, &e)| (n + i as u64, e as u32))
        .collect();
    let value =
        ballot_power_sum(&BallotSumSpec::new(factors, 0, p.sign()).expect("exponents >= 1"));
    vec![rational_check(
        "",
        value,
        c(2 * n + 1, n as i64),
        int(2 * n + 1),
    )]
}

const fn grid(m: (u64, u64), n: (u64, u64), r: u32, s: u32, a: u32) -> Grid {
    Grid::new(m, n, r, s, a)
}

const CHAIN_DIMS: &str = "m: chain length; n: range of each n_i; r: exponent r";

static CLAIMS: [Claim; 28] = [
    Claim {
        id: "thm-1.1",
        aliases: &[],
        kind: ClaimKind::Theorem,
        statement: "sum ε^k (2k+1)^(2r+1) prod C(n_i+n_{i+1}+1, n_i-k) ≡ 0 mod (n_1+n_m+1) C(n_1+n_m, n_1)",
        dims: CHAIN_DIMS,
        default_grid: grid((1, 4), (1, 10), 3, 0, 0),
        enumerate: enum_all_chains,
        evaluate: eval_thm_1_1,
    },
    Claim {
        id: "thm-1.2",
        aliases: &[],
        kind: ClaimKind::Theorem,
        statement: "sum ε^k k^r(k+1)^r(2k+1) prod C(..) ≡ 0 mod (n_1+n_m+1) C(n_1+n_m, n_1) n_1^min(1,r) n_m^e, \
                    e = min(1, C(r,2)) (plus) or min(1, r) (alternating)",
        dims: CHAIN_DIMS,
        default_grid: grid((1, 4), (1, 10), 3, 0, 0),
        enumerate: enum_all_chains,
        evaluate: eval_thm_1_2,
    },
    Claim {
        id: "conj-1.3",
        aliases: &[],
        kind: ClaimKind::Conjecture,
        statement: "sum_{k=0}^n ε^k (2k+1)^r A_{n,k}^s ≡ 0 mod C(2n, n) when r+s is odd",
        dims: "n: range of n; r: exponent r (from 0); s: exponent s (from 1)",
        default_grid: grid((1, 1), (1, 30), 4, 4, 0),
        enumerate: enum_ballot_single,
        evaluate: eval_ballot_single,
    },
    Claim {
        id: "thm-1.4",
        aliases: &[],
        kind: ClaimKind::Theorem,
        statement: "the ballot-power congruence holds when 2n+1 is a prime power (all r+s odd) or s = 1",
        dims: "n: range of n; r: exponent r; s: exponent s (only s = 1 unless 2n+1 is a prime power)",
        default_grid: grid((1, 1), (1, 60), 4, 4, 0),
        enumerate: enum_thm_1_4,
        evaluate: eval_ballot_single,
    },
    Claim {
        id: "thm-2.1",
        aliases: &[],
        kind: ClaimKind::Theorem,
        statement: "P_r(n) ≡ 0 mod (2n+1) C(2n,n) n^min(2,r); Q_r(n) ≡ 0 mod (2n+1) C(2n,n) n^min(2,2r)",
        dims: "n: range of n; r: exponent r; plus gives P_r, alternating gives Q_r",
        default_grid: grid((1, 1), (1, 20), 4, 0, 0),
        enumerate: enum_n_r_sign,
        evaluate: eval_thm_2_1,
    },
    Claim {
        id: "cor-2.2",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "U_r(n) / 4^n and V_r(n) / 2^α(n) are odd integers, α(n) the binary digit sum",
        dims: "n: range of n; r: exponent r; plus gives U_r, alternating gives V_r",
        default_grid: grid((1, 1), (1, 30), 4, 0, 0),
        enumerate: enum_n_r_sign,
        evaluate: eval_cor_2_2,
    },
    Claim {
        id: "thm-3.2",
        aliases: &[],
        kind: ClaimKind::Theorem,
        statement: "the m = 2 case of thm-1.2 for P_r(n_1, n_2) and Q_r(n_1, n_2)",
        dims: "n: range of n_1 and n_2; r: exponent r",
        default_grid: grid((2, 2), (1, 12), 4, 0, 0),
        enumerate: enum_pairs,
        evaluate: eval_thm_1_2,
    },
    Claim {
        id: "cor-4.2-positive",
        aliases: &["positivity"],
        kind: ClaimKind::Corollary,
        statement: "sum (-1)^k (2k+1) prod C(..) > 0 and sum (-1)^(k+1) k(k+1)(2k+1) prod C(..) > 0 for m >= 3",
        dims: "m: chain length (from 3); n: range of each n_i",
        default_grid: grid((3, 5), (1, 8), 0, 0, 0),
        enumerate: enum_positive,
        evaluate: eval_positive,
    },
    Claim {
        id: "cor-6.1",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(2n+1, n-k)^m ≡ 0 mod (2n+1) C(2n, n)",
        dims: "m: power m; n: range of n; r: exponent r",
        default_grid: grid((1, 4), (1, 12), 3, 0, 0),
        enumerate: enum_power_m,
        evaluate: eval_cor_6_1,
    },
    Claim {
        id: "conj-6.2",
        aliases: &[],
        kind: ClaimKind::Conjecture,
        statement: "C(2n,n)^-1 sum ε^k (2k+1)^(2r+1) C(2n+1, n-k)^(2a+1) is odd exactly when n = 2^b - 1 (plus) \
                    or n = 2^b + 2^c (alternating)",
        dims: "n: range of n; a: exponent a; r: exponent r",
        default_grid: grid((1, 1), (1, 64), 3, 0, 3),
        enumerate: enum_conj_6_2,
        evaluate: eval_conj_6_2,
    },
    Claim {
        id: "cor-6.3",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "sum_{k=0}^m ε^k (2k+1)^(2r+1) C(m+n+1, m-k)^a C(m+n+1, n-k)^a ≡ 0 mod (m+n+1) C(m+n, m)",
        dims: "n: range of m and n; a: exponent a; r: exponent r",
        default_grid: grid((1, 1), (1, 8), 2, 0, 3),
        enumerate: enum_cor_6_3,
        evaluate: eval_repeated_chain,
    },
    Claim {
        id: "cor-6.4",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "sum_{k=0}^l ε^k (2k+1)^(2r+1) (C(l+m+1, l-k) C(m+n+1, m-k) C(n+l+1, n-k))^a ≡ 0 mod (l+m+1) C(l+m, l)",
        dims: "n: range of l, m and n; a: exponent a; r: exponent r",
        default_grid: grid((1, 1), (1, 6), 2, 0, 2),
        enumerate: enum_cor_6_4,
        evaluate: eval_repeated_chain,
    },
    Claim {
        id: "cor-6.5",
        aliases: &["cor-nn+1"],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(2n, n-k)^a C(2n, n-k-1)^a C(2n-1, n-k-1)^b ≡ 0 mod n C(2n, n)",
        dims: "n: range of n; a: exponent a (from 1); s: exponent b (from 0); r: exponent r",
        default_grid: grid((1, 1), (1, 12), 2, 3, 3),
        enumerate: enum_cor_6_5,
        evaluate: eval_cor_6_5,
    },
    Claim {
        id: "thm-6.6",
        aliases: &["integrality"],
        kind: ClaimKind::Theorem,
        statement: "n_1! prod (n_i+n_{i+1}+1)!/(2n_i+1)! sum ε^k (2k+1)^(2r+1) prod C(2n_i+1, n_i-k) is an integer (n_{m+1} = -1)",
        dims: CHAIN_DIMS,
        default_grid: grid((1, 4), (1, 8), 3, 0, 0),
        enumerate: enum_all_chains,
        evaluate: eval_thm_6_6,
    },
    Claim {
        id: "cor-6.7",
        aliases: &["cor-mn"],
        kind: ClaimKind::Corollary,
        statement: "sum_{k=0}^m ε^k (2k+1)^(2r+1) C(2m+1, m-k)^a C(2n+1, n-k)^b ≡ 0 mod (2m+1)!(2n+1)!/((m+n+1)! m! n!)",
        dims: "n: range of m and n; a: exponents a and b; r: exponent r",
        default_grid: grid((1, 1), (1, 8), 2, 0, 3),
        enumerate: enum_cor_6_7,
        evaluate: eval_cor_6_7,
    },
    Claim {
        id: "eq-n1+n2",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(2n+3, n-k+1)^a C(2n+1, n-k)^b ≡ 0 mod (2n+3) C(2n+1, n)",
        dims: "n: range of n; a: exponents a and b; r: exponent r",
        default_grid: grid((1, 1), (1, 12), 2, 0, 3),
        enumerate: enum_exps2,
        evaluate: eval_eq_n1_n2,
    },
    Claim {
        id: "eq-4n",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(4n+1, 2n-k)^a C(2n+1, n-k)^b ≡ 0 mod (2n+1) C(4n+1, n)",
        dims: "n: range of n; a: exponents a and b; r: exponent r",
        default_grid: grid((1, 1), (1, 12), 2, 0, 3),
        enumerate: enum_exps2,
        evaluate: eval_eq_4n,
    },
    Claim {
        id: "eq-6n",
        aliases: &[],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(6n+1, 3n-k)^a C(2n+1, n-k)^b ≡ 0 mod (6n+1)!(2n+1)!/((4n+1)!(3n)! n!)",
        dims: "n: range of n; a: exponents a and b; r: exponent r",
        default_grid: grid((1, 1), (1, 12), 2, 0, 3),
        enumerate: enum_exps2,
        evaluate: eval_eq_6n,
    },
    Claim {
        id: "cor-6.8",
        aliases: &["cor-n2n"],
        kind: ClaimKind::Corollary,
        statement: "sum_{k=0}^n ε^k (2k+1)^r A_{n+1,k}^s A_{n,k}^t ≡ 0 mod C(2n+1, n)/(2n+1) when r+s+t is odd \
                    and s = t = 1 or gcd(C(2n+1,n)/(2n+1), (2n+1)(2n+3)) = 1",
        dims: "n: range of n; r: exponent r; s: exponents s and t",
        default_grid: grid((1, 1), (1, 20), 3, 3, 0),
        enumerate: enum_cor_6_8,
        evaluate: eval_cor_6_8,
    },
    Claim {
        id: "cor-6.9",
        aliases: &["cor-2n"],
        kind: ClaimKind::Corollary,
        statement: "sum_{k=0}^n ε^k (2k+1)^r A_{2n,k}^s A_{n,k}^t ≡ 0 mod C(4n+1, n)/(4n+1) when r+s+t is odd \
                    and s = t = 1 or gcd(C(4n+1,n)/(4n+1), (2n+1)(4n+1)) = 1",
        dims: "n: range of n; r: exponent r; s: exponents s and t",
        default_grid: grid((1, 1), (1, 20), 3, 3, 0),
        enumerate: enum_cor_6_9,
        evaluate: eval_cor_6_9,
    },
    Claim {
        id: "conj-6.10",
        aliases: &[],
        kind: ClaimKind::Conjecture,
        statement: "the congruences of cor-6.8 and cor-6.9 hold for every n",
        dims: "n: range of n; r: exponent r; s: exponents s and t",
        default_grid: grid((1, 1), (1, 20), 3, 3, 0),
        enumerate: enum_conj_6_10,
        evaluate: eval_conj_6_10,
    },
    Claim {
        id: "conj-6.13",
        aliases: &["super-catalan"],
        kind: ClaimKind::Conjecture,
        statement: "(m+n+1) sum_{k=0}^m ε^k (2k+1)^r A_{m,k}^s A_{n,k}^t ≡ 0 mod (2m)!(2n)!/((m+n)! m! n!) when r+s+t is odd",
        dims: "n: range of m and n; r: exponent r; s: exponents s and t",
        default_grid: grid((1, 1), (1, 10), 2, 2, 0),
        enumerate: enum_super_catalan,
        evaluate: eval_super_catalan,
    },
    Claim {
        id: "cor-6.14",
        aliases: &["cor-n1n2n3"],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(2n+1, n-k)^a C(2n+3, n-k+1)^b C(2n+5, n-k+2)^c ≡ 0 mod (2n+5) C(2n+1, n)",
        dims: "n: range of n; a: exponents a, b, c; r: exponent r",
        default_grid: grid((1, 1), (1, 8), 2, 0, 2),
        enumerate: enum_exps3,
        evaluate: eval_cor_6_14,
    },
    Claim {
        id: "cor-6.15",
        aliases: &["cor-rst-246n"],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) C(6n+1, 3n-k)^a C(4n+1, 2n-k)^b C(2n+1, n-k)^c ≡ 0 mod (2n+1) C(6n+1, n) \
                    and mod (2n+1) C(6n+1, 3n)",
        dims: "n: range of n; a: exponents a, b, c; r: exponent r",
        default_grid: grid((1, 1), (1, 8), 2, 0, 2),
        enumerate: enum_exps3,
        evaluate: eval_cor_6_15,
    },
    Claim {
        id: "cor-6.16",
        aliases: &["cor-rst-248n"],
        kind: ClaimKind::Corollary,
        statement: "2 sum ε^k (2k+1)^(2r+1) C(8n+1, 4n-k)^a C(4n+1, 2n-k)^b C(2n+1, n-k)^c ≡ 0 mod 2(2n+1)(4n+1) C(8n+1, 3n)/(3n+1); \
                    sum ε^k (2k+1)^(2r+1) C(8n+1, 4n-k)^a C(6n+1, 3n-k)^b C(4n+1, 2n-k)^c ≡ 0 mod (4n+1) C(8n+1, 3n)",
        dims: "n: range of n; a: exponents a, b, c; r: exponent r",
        default_grid: grid((1, 1), (1, 8), 2, 0, 2),
        enumerate: enum_exps3,
        evaluate: eval_cor_6_16,
    },
    Claim {
        id: "conj-6.17",
        aliases: &[],
        kind: ClaimKind::Conjecture,
        statement: "four ballot-triple congruences for A_{3n}, A_{4n} with moduli C(6n+1, n)/(6n+1), C(6n+1, 3n)/(6n+1) \
                    and C(8n+1, 3n)/(8n+1), r+s+t odd",
        dims: "n: range of n; s: exponents r, s, t (from 1)",
        default_grid: grid((1, 1), (1, 8), 0, 3, 0),
        enumerate: enum_conj_6_17,
        evaluate: eval_conj_6_17,
    },
    Claim {
        id: "cor-6.18",
        aliases: &["cor-final"],
        kind: ClaimKind::Corollary,
        statement: "sum ε^k (2k+1)^(2r+1) prod_{i=1}^m C(2n+2i-1, n+i-k-1)^{a_i} ≡ 0 mod (2n+2m-1) C(2n+1, n)",
        dims: "m: number of factors (from 2); n: range of n; a: each a_i; r: exponent r",
        default_grid: grid((2, 4), (1, 8), 2, 0, 2),
        enumerate: enum_cor_final,
        evaluate: eval_cor_final,
    },
    Claim {
        id: "conj-6.19",
        aliases: &["conj-final"],
        kind: ClaimKind::Conjecture,
        statement: "sum_{k=0}^n ε^k prod_{i=1}^m A_{n+i-1,k}^{r_i} ≡ 0 mod C(2n+1, n)/(2n+1) when sum r_i is odd",
        dims: "m: number of factors; n: range of n; s: each r_i (from 1)",
        default_grid: grid((1, 3), (1, 12), 0, 3, 0),
        enumerate: enum_conj_final,
        evaluate: eval_conj_final,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: &str, grid: &Grid) -> (usize, usize) {
        let claim = find_claim(id).unwrap();
        let e = claim.enumerate(grid);
        let mut failed = 0;
        let mut checked = 0;
        for p in &e.points {
            for check in claim.evaluate(&p.params) {
                checked += 1;
                if !check.holds().unwrap().0 {
                    failed += 1;
                }
            }
        }
        (checked, failed)
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = CLAIMS
            .iter()
            .flat_map(|c| std::iter::once(c.id).chain(c.aliases.iter().copied()))
            .collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(before, ids.len());
        assert!(find_claim("bogus").is_err());
        assert_eq!(find_claim("cor-final").unwrap().id, "cor-6.18");
    }

    #[test]
    fn small_grids_hold() {
        for claim in claims() {
            if claim.id == "conj-6.2" {
                continue;
            }
            let mut g = claim.default_grid.clone();
            g.n_max = g.n_max.min(g.n_min + 3);
            g.m_max = g.m_max.min(g.m_min + 1);
            let (checked, failed) = run(claim.id, &g);
            assert!(checked > 0, "{}", claim.id);
            assert_eq!(failed, 0, "{}", claim.id);
        }
    }

    #[test]
    fn conj_6_2_parity_classes() {
        assert_eq!(conj_6_2_parity(7, Sign::Plus), 1);
        assert_eq!(conj_6_2_parity(6, Sign::Plus), 0);
        assert_eq!(conj_6_2_parity(3, Sign::Alternating), 1);
        assert_eq!(conj_6_2_parity(2, Sign::Alternating), 1);
        assert_eq!(conj_6_2_parity(1, Sign::Alternating), 0);
        assert_eq!(conj_6_2_parity(7, Sign::Alternating), 0);
    }

    #[test]
    fn conj_6_2_alternating_fails_at_three() {
        let mut g = find_claim("conj-6.2").unwrap().default_grid.clone();
        g.n_min = 3;
        g.n_max = 3;
        g.a_max = 1;
        g.r_max = 0;
        g.sign = Some(Sign::Alternating);
        assert_eq!(run("conj-6.2", &g), (1, 1));
        g.sign = Some(Sign::Plus);
        assert_eq!(run("conj-6.2", &g), (1, 0));
    }

    #[test]
    fn n7_modulus() {
        let claim = find_claim("conj-1.3").unwrap();
        let p = Params::new()
            .with("n", 7u64)
            .with("r", 1u32)
            .with("s", 2u32)
            .with("sign", Sign::Plus);
        let checks = claim.evaluate(&p);
        assert_eq!(checks[0].modulus, ExactInt::from(3432));
    }
}

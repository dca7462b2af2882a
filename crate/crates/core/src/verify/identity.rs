//! Exact-equality checks: closed forms, recurrences, lambda sums and the
//! series identities, each compared against direct evaluation.

use rayon::prelude::*;
use serde::Serialize;

use super::grid::{tuples, Grid, Params};
use crate::arith::choose;
use crate::closed::gf::{delta_rhs, double_binomial_series, gf_remark_steps};
use crate::closed::{
    chain_reduce, lambda_prefactor, lambda_sum, m3_closed, overline_p, overline_p_direct, p_closed,
    pq_recurrence, two_var_closed, two_var_recurrence, uv_recurrence, LambdaVariant, M3Form,
};
use crate::error::{Error, Result};
use crate::sums::{ballot, chain_sum, normalized_sum, uv_sum, ChainSpec, Closure, Sign, Weight};
use crate::{ExactInt, RationalSeries};

/// Grid plus the series parameters some identities take.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityConfig {
    pub grid: Grid,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u32>,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub config: IdentityConfig,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl IdentityReport {
    pub fn held(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub struct Identity {
    pub id: &'static str,
    pub statement: &'static str,
    pub default_config: IdentityConfig,
    run: fn(&IdentityConfig) -> Outcome,
}

type Outcome = (u64, Vec<Mismatch>);

pub fn identities() -> &'static [Identity] {
    &IDENTITIES
}

pub fn find_identity(id: &str) -> Result<&'static Identity> {
    IDENTITIES
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn identity_ids() -> Vec<&'static str> {
    IDENTITIES.iter().map(|i| i.id).collect()
}

pub fn check_identity(id: &str, config: &IdentityConfig) -> Result<IdentityReport> {
    let identity = find_identity(id)?;
    config.grid.validate()?;
    let (checked, mismatches) = (identity.run)(config);
    Ok(IdentityReport {
        identity: identity.id,
        config: config.clone(),
        checked,
        mismatches,
    })
}

/// Evaluates both sides at every point in parallel, keeping point order.
fn compare(points: Vec<Params>, sides: impl Fn(&Params) -> (ExactInt, ExactInt) + Sync) -> Outcome {
    let checked = points.len() as u64;
    let mismatches = points
        .into_par_iter()
        .filter_map(|params| {
            let (lhs, rhs) = sides(&params);
            (lhs != rhs).then(|| Mismatch {
                params,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        })
        .collect();
    (checked, mismatches)
}

fn series_mismatch(params: Params, lhs: &RationalSeries, rhs: &RationalSeries) -> Option<Mismatch> {
    let d = lhs.degree().min(rhs.degree());
    let (i, j) = (0..=d)
        .flat_map(|t| (0..=t).map(move |j| (t - j, j)))
        .find(|&(i, j)| lhs.coeff(i, j) != rhs.coeff(i, j))?;
    let params = params.with("i", i as u64).with("j", j as u64);
    Some(Mismatch {
        params,
        lhs: lhs.coeff(i, j).to_string(),
        rhs: rhs.coeff(i, j).to_string(),
    })
}

fn kk1(ns: Vec<u64>, r: u32, sign: Sign) -> ExactInt {
    chain_sum(&ChainSpec::cyclic(ns, r, sign, Weight::Kk1).expect("entries >= 1"))
}

fn run_delta(c: &IdentityConfig) -> Outcome {
    let range = |v: Option<u32>| v.map_or(0..=c.grid.a_max, |v| v..=v);
    let pairs: Vec<(u32, u32)> = range(c.alpha)
        .flat_map(|a| range(c.beta).map(move |b| (a, b)))
        .collect();
    let checked = pairs.len() as u64;
    let mismatches = pairs
        .into_par_iter()
        .filter_map(|(a, b)| {
            let params = Params::new()
                .with("alpha", a)
                .with("beta", b)
                .with("degree", c.degree as u64);
            series_mismatch(
                params,
                &double_binomial_series(a.into(), b.into(), c.degree),
                &delta_rhs(a, b, c.degree),
            )
        })
        .collect();
    (checked, mismatches)
}

fn run_remark(c: &IdentityConfig) -> Outcome {
    let steps = gf_remark_steps(c.degree);
    let (first, rest) = steps.split_first().expect("chain has steps");
    let mismatches = rest
        .iter()
        .filter_map(|(name, s)| series_mismatch(Params::new().with("step", *name), &first.1, s))
        .collect();
    (rest.len() as u64, mismatches)
}

fn run_lemma_3_1(c: &IdentityConfig) -> Outcome {
    let mut points = Vec::new();
    for n1 in 0..=c.grid.n_max {
        for n2 in 0..=c.grid.n_max {
            for sign in c.grid.signs() {
                points.push(
                    Params::new()
                        .with("n1", n1)
                        .with("n2", n2)
                        .with("sign", sign),
                );
            }
        }
    }
    compare(points, |p| {
        let (n1, n2, sign) = (p.int("n1"), p.int("n2"), p.sign());
        // the lemma allows n_i = 0, which the checked constructor rejects
        let spec = ChainSpec::new_unchecked(vec![n1, n2], 0, sign, Weight::Kk1, Closure::Cyclic);
        let base = choose(n1 + n2, n1 as i64) * (n1 + n2 + 1);
        let rhs = match sign {
            Sign::Plus => base * choose(n1 + n2, n1 as i64),
            Sign::Alternating => base,
        };
        (chain_sum(&spec), rhs)
    })
}

fn pair_points(g: &Grid, r_max: u32) -> Vec<Params> {
    let mut points = Vec::new();
    for r in 0..=r_max {
        for ns in tuples(g.n_min, g.n_max, 2) {
            for sign in g.signs() {
                points.push(
                    Params::new()
                        .with("r", r)
                        .with("n1", ns[0])
                        .with("n2", ns[1])
                        .with("sign", sign),
                );
            }
        }
    }
    points
}

fn run_two_var_closed(c: &IdentityConfig) -> Outcome {
    compare(pair_points(&c.grid, c.grid.r_max.min(2)), |p| {
        let (r, n1, n2, sign) = (p.exp("r"), p.int("n1"), p.int("n2"), p.sign());
        (
            kk1(vec![n1, n2], r, sign),
            two_var_closed(r, n1, n2, sign).expect("r <= 2, n_i >= 1"),
        )
    })
}

fn run_two_var_recurrence(c: &IdentityConfig) -> Outcome {
    compare(pair_points(&c.grid, c.grid.r_max), |p| {
        let (r, n1, n2, sign) = (p.exp("r"), p.int("n1"), p.int("n2"), p.sign());
        (
            kk1(vec![n1, n2], r, sign),
            two_var_recurrence(r, n1, n2, sign).expect("n_i >= 1"),
        )
    })
}

fn run_overline_p(c: &IdentityConfig) -> Outcome {
    let mut g = c.grid.clone();
    g.sign = Some(Sign::Plus);
    compare(pair_points(&g, c.grid.r_max), |p| {
        let (r, n1, n2) = (p.exp("r"), p.int("n1"), p.int("n2"));
        (
            overline_p_direct(r, n1, n2),
            overline_p(r, n1, n2).expect("n_i >= 1"),
        )
    })
}

fn single_points(g: &Grid, r_max: u32, signs: &[Sign]) -> Vec<Params> {
    let mut points = Vec::new();
    for r in 0..=r_max {
        for n in g.ns() {
            for &sign in signs {
                points.push(Params::new().with("r", r).with("n", n).with("sign", sign));
            }
        }
    }
    points
}

fn run_p_closed(c: &IdentityConfig) -> Outcome {
    compare(
        single_points(&c.grid, c.grid.r_max.min(2), &[Sign::Plus]),
        |p| {
            let (r, n) = (p.exp("r"), p.int("n"));
            (kk1(vec![n], r, Sign::Plus), p_closed(r, n).expect("r <= 2"))
        },
    )
}

fn run_pq_recurrence(c: &IdentityConfig) -> Outcome {
    compare(single_points(&c.grid, c.grid.r_max, &c.grid.signs()), |p| {
        let (r, n, sign) = (p.exp("r"), p.int("n"), p.sign());
        (
            kk1(vec![n], r, sign),
            pq_recurrence(r, n, sign).expect("n >= 1"),
        )
    })
}

fn run_uv_recurrence(c: &IdentityConfig) -> Outcome {
    compare(single_points(&c.grid, c.grid.r_max, &c.grid.signs()), |p| {
        let (r, n, sign) = (p.exp("r"), p.int("n"), p.sign());
        (
            uv_sum(n, r, sign),
            uv_recurrence(r, n, sign).expect("n >= 1"),
        )
    })
}

fn run_binomial_theorem(c: &IdentityConfig) -> Outcome {
    let points = c.grid.ns().flat_map(|n| {
        c.grid
            .signs()
            .into_iter()
            .map(move |s| Params::new().with("n", n).with("sign", s))
    });
    compare(points.collect(), |p| {
        let n = p.int("n");
        let rhs = match p.sign() {
            Sign::Plus => ExactInt::from(4).pow(n as u32),
            Sign::Alternating => choose(2 * n, n as i64),
        };
        (uv_sum(n, 0, p.sign()), rhs)
    })
}

fn run_ballot(c: &IdentityConfig) -> Outcome {
    let points = c
        .grid
        .ns()
        .flat_map(|n| (0..=n).map(move |k| Params::new().with("n", n).with("k", k)));
    compare(points.collect(), |p| {
        let (n, k) = (p.int("n"), p.int("k"));
        let scaled = choose(2 * n + 1, (n - k) as i64) * (2 * k + 1);
        (ballot(n, k).expect("k <= n") * (2 * n + 1), scaled)
    })
}

fn run_m3(c: &IdentityConfig) -> Outcome {
    let mut points = Vec::new();
    for ns in tuples(c.grid.n_min, c.grid.n_max, 3) {
        for form in ["r0", "kk1"] {
            points.push(Params::new().with("ns", ns.clone()).with("form", form));
        }
    }
    compare(points, |p| {
        let ns = p.list("ns");
        let (n1, n2, n3) = (ns[0], ns[1], ns[2]);
        match p.text("form") {
            "r0" => (
                kk1(ns.to_vec(), 0, Sign::Alternating),
                m3_closed(n1, n2, n3, M3Form::R0Alt).expect("n_i >= 1"),
            ),
            _ => (
                -kk1(ns.to_vec(), 1, Sign::Alternating),
                m3_closed(n1, n2, n3, M3Form::Kk1Alt).expect("n_i >= 1"),
            ),
        }
    })
}

fn variant_name(v: LambdaVariant) -> &'static str {
    match v {
        LambdaVariant::PlusR0 => "plus-r0",
        LambdaVariant::PlusR1 => "plus-r1",
        LambdaVariant::AltR0 => "alt-r0",
        LambdaVariant::AltR1 => "alt-r1",
    }
}

fn variant_of(name: &str) -> LambdaVariant {
    LambdaVariant::ALL
        .into_iter()
        .find(|&v| variant_name(v) == name)
        .expect("known variant")
}

fn run_lambda(c: &IdentityConfig, variants: [LambdaVariant; 2]) -> Outcome {
    let mut points = Vec::new();
    for m in c.grid.m_min.max(3)..=c.grid.m_max {
        for ns in tuples(c.grid.n_min, c.grid.n_max, m as usize) {
            for v in variants {
                points.push(
                    Params::new()
                        .with("ns", ns.clone())
                        .with("variant", variant_name(v)),
                );
            }
        }
    }
    compare(points, |p| {
        let (ns, v) = (p.list("ns"), variant_of(p.text("variant")));
        let lhs = match v {
            LambdaVariant::PlusR0 => kk1(ns.to_vec(), 0, Sign::Plus),
            LambdaVariant::PlusR1 => kk1(ns.to_vec(), 1, Sign::Plus),
            LambdaVariant::AltR0 => kk1(ns.to_vec(), 0, Sign::Alternating),
            LambdaVariant::AltR1 => -kk1(ns.to_vec(), 1, Sign::Alternating),
        };
        let rhs = lambda_prefactor(ns, v).expect("m >= 3") * lambda_sum(ns, v).expect("m >= 3");
        (lhs, rhs)
    })
}

fn run_cor_4_1(c: &IdentityConfig) -> Outcome {
    run_lambda(c, [LambdaVariant::PlusR0, LambdaVariant::PlusR1])
}

fn run_cor_4_2(c: &IdentityConfig) -> Outcome {
    run_lambda(c, [LambdaVariant::AltR0, LambdaVariant::AltR1])
}

fn run_chain_reduce(c: &IdentityConfig) -> Outcome {
    let mut points = Vec::new();
    for m in c.grid.m_min.max(3)..=c.grid.m_max {
        for ns in tuples(c.grid.n_min, c.grid.n_max, m as usize) {
            for r in 0..=c.grid.r_max {
                for sign in c.grid.signs() {
                    points.push(
                        Params::new()
                            .with("ns", ns.clone())
                            .with("r", r)
                            .with("sign", sign),
                    );
                }
            }
        }
    }
    let checked = points.len() as u64;
    let mismatches = points
        .into_par_iter()
        .filter_map(|params| {
            let spec = ChainSpec::cyclic(
                params.list("ns").to_vec(),
                params.exp("r"),
                params.sign(),
                Weight::Kk1,
            )
            .expect("entries >= 1");
            let (lhs, rhs) = (chain_reduce(&spec).expect("m >= 3"), normalized_sum(&spec));
            (lhs != rhs).then(|| Mismatch {
                params,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        })
        .collect();
    (checked, mismatches)
}

const fn config(
    m: (u64, u64),
    n_max: u64,
    r_max: u32,
    a_max: u32,
    degree: usize,
) -> IdentityConfig {
    IdentityConfig {
        grid: Grid::new(m, (1, n_max), r_max, 0, a_max),
        alpha: None,
        beta: None,
        degree,
    }
}

static IDENTITIES: [Identity; 15] = [
    Identity {
        id: "delta",
        statement: "sum C(m+n+α, m) C(m+n+β, n) x^m y^n = 2^(α+β) / (Δ (1-x+y+Δ)^α (1+x-y+Δ)^β), α, β <= a unless fixed",
        default_config: config((1, 1), 1, 0, 3, 12),
        run: run_delta,
    },
    Identity {
        id: "remark-gf",
        statement: "every rewriting of the alternating r = 0 generating function equals 1/(1-x-y)^2",
        default_config: config((1, 1), 1, 0, 0, 12),
        run: run_remark,
    },
    Identity {
        id: "lemma-3.1",
        statement: "the r = 0 two-variable sums equal (n_1+n_2+1) C(n_1+n_2, n_1)^2 and (n_1+n_2+1) C(n_1+n_2, n_1), n_i from 0",
        default_config: config((1, 1), 30, 0, 0, 0),
        run: run_lemma_3_1,
    },
    Identity {
        id: "two-var-closed",
        statement: "closed forms of P_r(n_1, n_2) and Q_r(n_1, n_2) for r <= 2",
        default_config: config((1, 1), 10, 2, 0, 0),
        run: run_two_var_closed,
    },
    Identity {
        id: "p-closed",
        statement: "P_0, P_1, P_2 closed forms",
        default_config: config((1, 1), 50, 2, 0, 0),
        run: run_p_closed,
    },
    Identity {
        id: "m3-closed",
        statement: "m = 3 alternating sums as factorial quotients",
        default_config: config((3, 3), 10, 0, 0, 0),
        run: run_m3,
    },
    Identity {
        id: "cor-4.1",
        statement: "plus-sign chain sums for r = 0, 1 as prefactor times lambda sums",
        default_config: config((3, 5), 6, 0, 0, 0),
        run: run_cor_4_1,
    },
    Identity {
        id: "cor-4.2",
        statement: "alternating chain sums for r = 0, 1 as prefactor times lambda sums",
        default_config: config((3, 5), 6, 0, 0, 0),
        run: run_cor_4_2,
    },
    Identity {
        id: "recurrence-pq",
        statement: "P_r(n), Q_r(n) by recurrence in r equal direct sums",
        default_config: config((1, 1), 25, 4, 0, 0),
        run: run_pq_recurrence,
    },
    Identity {
        id: "recurrence-uv",
        statement: "U_r(n), V_r(n) by recurrence in r equal direct sums",
        default_config: config((1, 1), 25, 4, 0, 0),
        run: run_uv_recurrence,
    },
    Identity {
        id: "recurrence-two-var",
        statement: "P_r(n_1, n_2), Q_r(n_1, n_2) by recurrence in r equal direct sums",
        default_config: config((1, 1), 12, 4, 0, 0),
        run: run_two_var_recurrence,
    },
    Identity {
        id: "overline-p",
        statement: "the odd-power k sums over C(n_1+n_2, n_1-k) C(n_1+n_2, n_2-k) by recurrence equal direct sums",
        default_config: config((1, 1), 12, 4, 0, 0),
        run: run_overline_p,
    },
    Identity {
        id: "chain-reduce",
        statement: "the m -> m-1 reduction reproduces normalized chain sums",
        default_config: config((3, 4), 8, 3, 0, 0),
        run: run_chain_reduce,
    },
    Identity {
        id: "binomial-theorem",
        statement: "U_0(n) = 4^n and V_0(n) = C(2n, n)",
        default_config: config((1, 1), 60, 0, 0, 0),
        run: run_binomial_theorem,
    },
    Identity {
        id: "ballot",
        statement: "(2n+1) A_{n,k} = (2k+1) C(2n+1, n-k)",
        default_config: config((1, 1), 60, 0, 0, 0),
        run: run_ballot,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        assert!(find_identity("delta").is_ok());
        assert!(matches!(
            find_identity("nope"),
            Err(Error::UnknownIdentity(_))
        ));
        let mut ids = identity_ids();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), IDENTITIES.len());
    }

    #[test]
    fn small_configs_hold() {
        for identity in identities() {
            let mut c = identity.default_config.clone();
            c.grid.n_max = c.grid.n_max.min(4);
            c.grid.m_max = c.grid.m_max.min(c.grid.m_min + 1);
            c.grid.a_max = c.grid.a_max.min(1);
            c.degree = c.degree.min(5);
            let report = check_identity(identity.id, &c).unwrap();
            assert!(report.checked > 0, "{}", identity.id);
            assert!(report.held(), "{}: {:?}", identity.id, report.mismatches);
        }
    }

    #[test]
    fn fixed_alpha_beta() {
        let mut c = find_identity("delta").unwrap().default_config.clone();
        c.alpha = Some(2);
        c.beta = Some(1);
        c.degree = 6;
        let report = check_identity("delta", &c).unwrap();
        assert_eq!(report.checked, 1);
        assert!(report.held());
    }

    #[test]
    fn series_mismatch_points_at_first_coefficient() {
        let a = RationalSeries::one(3);
        let b = &a + &RationalSeries::x(3);
        let m = series_mismatch(Params::new(), &b, &a).unwrap();
        assert_eq!(m.params.to_string(), "i=1 j=0");
    }
}

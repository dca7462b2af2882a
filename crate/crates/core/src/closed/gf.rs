//! Generating-function identities, checked coefficientwise with exact
//! rational series.
//!
//! `Δ = sqrt(1 - 2x - 2y - 2xy + x^2 + y^2)`. The double-binomial identity
//!
//! `sum_{m,n} C(m+n+α, m) C(m+n+β, n) x^m y^n = 2^{α+β} / (Δ (1-x+y+Δ)^α (1+x-y+Δ)^β)`
//!
//! is checked directly, and the chain of rewritings that turns the
//! generating function of the alternating `r = 0` two-variable sum into
//! `1/(1-x-y)^2` is checked one expression at a time.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::choose;
use crate::{ExactInt, ExactRat, RationalSeries};

fn rat(n: impl Into<BigInt>) -> ExactRat {
    ExactRat::from_integer(n.into())
}

fn poly(degree: usize, terms: &[(usize, usize, i64)]) -> RationalSeries {
    let mut s = RationalSeries::zero(degree);
    for &(i, j, c) in terms.iter().filter(|t| t.0 + t.1 <= degree) {
        s.set_coeff(i, j, rat(c)).expect("within degree");
    }
    s
}

/// `Δ` truncated at total degree `degree`.
pub fn delta(degree: usize) -> RationalSeries {
    poly(
        degree,
        &[
            (0, 0, 1),
            (1, 0, -2),
            (0, 1, -2),
            (1, 1, -2),
            (2, 0, 1),
            (0, 2, 1),
        ],
    )
    .sqrt()
    .expect("constant term is 1")
}

/// Coefficient table `C(m+n+α, m) C(m+n+β, n)`.
pub fn double_binomial_series(alpha: u64, beta: u64, degree: usize) -> RationalSeries {
    RationalSeries::from_fn(degree, |m, n| {
        let (m, n) = (m as u64, n as u64);
        rat(choose(m + n + alpha, m as i64) * choose(m + n + beta, n as i64))
    })
}

/// `2^{α+β} / (Δ (1-x+y+Δ)^α (1+x-y+Δ)^β)`.
pub fn delta_rhs(alpha: u32, beta: u32, degree: usize) -> RationalSeries {
    let d = delta(degree);
    let left = &poly(degree, &[(0, 0, 1), (1, 0, -1), (0, 1, 1)]) + &d;
    let right = &poly(degree, &[(0, 0, 1), (1, 0, 1), (0, 1, -1)]) + &d;
    let den = &(&d * &left.pow(alpha)) * &right.pow(beta);
    den.inverse()
        .expect("constant term is nonzero")
        .scale(&rat(ExactInt::from(2).pow(alpha + beta)))
}

/// True when both sides of the double-binomial identity agree through total degree `degree`.
pub fn delta_gf_check(alpha: u32, beta: u32, degree: usize) -> bool {
    double_binomial_series(alpha as u64, beta as u64, degree) == delta_rhs(alpha, beta, degree)
}

/// `sum_{k=0}^{min(n_1,n_2)} (-1)^k C(n_1+n_2+1, n_1-k) C(n_1+n_2+1, n_2-k) (2k+1)`.
pub fn remark_lhs_coefficient(n1: u64, n2: u64) -> ExactInt {
    let top = n1 + n2 + 1;
    (0..=n1.min(n2)).fold(ExactInt::zero(), |acc, k| {
        let term = choose(top, (n1 - k) as i64) * choose(top, (n2 - k) as i64) * (2 * k + 1);
        if k % 2 == 1 {
            acc - term
        } else {
            acc + term
        }
    })
}

/// Each expression of the rewriting chain, expanded to total degree `degree`,
/// in the order they are derived. The first entry is the coefficient table of
/// the alternating sums themselves; the last is `1/(1-x-y)^2`.
pub fn gf_remark_steps(degree: usize) -> Vec<(&'static str, RationalSeries)> {
    let d = delta(degree);
    let xy = poly(degree, &[(1, 1, -1)]); // -xy
    let lhs = RationalSeries::from_fn(degree, |i, j| {
        rat(remark_lhs_coefficient(i as u64, j as u64))
    });

    // sum_k (2k+1)(-xy)^k 2^{4k+2} / (Δ (1-x+y+Δ)^{2k+1} (1+x-y+Δ)^{2k+1})
    let mut via_delta = RationalSeries::zero(degree);
    for k in 0..=degree / 2 {
        let a = 2 * k as u32 + 1;
        // the 2^{4k+2} / Δ(...)^a(...)^a factor is the α = β = 2k+1 right-hand side
        let term = &delta_rhs(a, a, degree) * &xy.pow(k as u32);
        via_delta = &via_delta + &term.scale(&rat(a));
    }

    // sum_k 2^{2k+1} (2k+1) (-xy)^k / (Δ (1-x-y+Δ)^{2k+1})
    let base = &poly(degree, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]) + &d;
    let base_inv = base.inverse().expect("constant term is 2");
    let d_inv = d.inverse().expect("constant term is 1");
    let mut merged = RationalSeries::zero(degree);
    for k in 0..=degree / 2 {
        let a = 2 * k as u32 + 1;
        let term = &(&d_inv * &base_inv.pow(a)) * &xy.pow(k as u32);
        merged = &merged + &term.scale(&rat(ExactInt::from(2).pow(a) * a));
    }

    // 2 (1 - 4xy u^{-2}) / (Δ u (1 + 4xy u^{-2})^2), u = 1-x-y+Δ
    let four_xy_over_u2 = &poly(degree, &[(1, 1, 4)]) * &base_inv.pow(2);
    let one = RationalSeries::one(degree);
    let numer = (&one - &four_xy_over_u2).scale(&rat(2));
    let denom = &(&d * &base) * &(&one + &four_xy_over_u2).pow(2);
    let closed = &numer * &denom.inverse().expect("constant term is 2");

    let endpoint = poly(degree, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
        .pow(2)
        .inverse()
        .expect("constant term is 1");

    vec![
        ("alternating sums", lhs),
        ("delta expansion", via_delta),
        ("merged denominator", merged),
        ("closed quotient", closed),
        ("1/(1-x-y)^2", endpoint),
    ]
}

/// True when every expression of the rewriting chain agrees with the
/// alternating sums through total degree `degree`.
pub fn gf_remark_check(degree: usize) -> bool {
    let steps = gf_remark_steps(degree);
    steps.iter().all(|(_, s)| *s == steps[0].1)
}

/// Mismatching steps, by name, for reporting.
pub fn gf_remark_mismatches(degree: usize) -> Vec<&'static str> {
    let steps = gf_remark_steps(degree);
    steps
        .iter()
        .filter(|(_, s)| *s != steps[0].1)
        .map(|(name, _)| *name)
        .collect()
}

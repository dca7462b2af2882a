use congruence_lab::arith::{choose, gcd};
use congruence_lab::sums::{ballot, chain_sum};
use congruence_lab::verify::{
    claims, eq_2n1odd_condition, gcd_condition_f, gcd_condition_g, search_raw_5_1, verify_claim,
    Grid, Status,
};
use congruence_lab::{ChainSpec, ExactInt, Sign, Weight};
use num_traits::One;

// gcd(C(top, n)/top, a*b) = 1 with big integers throughout
fn direct_gcd(top: u64, n: u64, a: u64, b: u64) -> bool {
    let c = choose(top, n as i64) / ExactInt::from(top);
    gcd(&c, &ExactInt::from(a * b)).is_one()
}

#[test]
fn gcd_conditions_match_big_binomials() {
    for n in 1..=200u64 {
        assert_eq!(
            gcd_condition_f(n).unwrap(),
            direct_gcd(2 * n + 1, n, 2 * n + 1, 2 * n + 3),
            "f at {n}"
        );
        assert_eq!(
            gcd_condition_g(n).unwrap(),
            direct_gcd(4 * n + 1, n, 2 * n + 1, 4 * n + 1),
            "g at {n}"
        );
        let direct = gcd(&choose(2 * n, n as i64), &ExactInt::from(2 * n + 1)).is_one();
        assert_eq!(eq_2n1odd_condition(n).unwrap(), direct, "2n+1 at {n}");
    }
}

#[test]
fn raw_search_agrees_with_predicate() {
    let raw = search_raw_5_1(150);
    let direct: Vec<u64> = (1..=150)
        .filter(|&n| eq_2n1odd_condition(n).unwrap())
        .collect();
    assert_eq!(raw.hits, direct);
}

#[test]
fn ballot_numbers_both_ways() {
    for n in 0..=25u64 {
        for k in 0..=n {
            let diff = choose(2 * n, (n - k) as i64) - choose(2 * n, n as i64 - k as i64 - 1);
            assert_eq!(ballot(n, k).unwrap(), diff, "A({n},{k})");
        }
    }
}

#[test]
fn single_chain_is_p_and_q() {
    // m = 1 chain sums against a hand-rolled loop
    for n in 1..=12u64 {
        for r in 0..=3u32 {
            for sign in Sign::BOTH {
                let spec = ChainSpec::cyclic(vec![n], r, sign, Weight::Kk1).unwrap();
                let mut sum = ExactInt::from(0);
                for k in 0..=n {
                    let w = ExactInt::from(k * (k + 1)).pow(r) * (2 * k + 1);
                    let term = w * choose(2 * n + 1, (n - k) as i64);
                    sum += if sign == Sign::Alternating && k % 2 == 1 {
                        -term
                    } else {
                        term
                    };
                }
                assert_eq!(chain_sum(&spec), sum, "n={n} r={r} {sign}");
            }
        }
    }
}

#[test]
fn proved_claims_hold_on_small_grids() {
    let small = Grid::new((1, 2), (1, 4), 1, 1, 1);
    for claim in claims() {
        if claim.kind.falsifiable() {
            continue;
        }
        let mut grid = small.clone();
        grid.m_min = claim.default_grid.m_min;
        grid.m_max = claim
            .default_grid
            .m_min
            .max(2)
            .min(claim.default_grid.m_max);
        let report = verify_claim(claim.id, &grid).unwrap();
        assert_eq!(report.status, Status::Held, "{}", claim.id);
    }
}

#[test]
fn conjecture_6_2_fails_at_three() {
    let report = verify_claim("conj-6.2", &Grid::new((1, 1), (3, 3), 0, 0, 1)).unwrap();
    assert_eq!(report.status, Status::Counterexample);
    let bad = &report.counterexamples[0];
    assert_eq!(bad.report.value, ExactInt::from(16800));
    assert_eq!(bad.report.modulus, ExactInt::from(20));
}

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::choose;
use crate::error::{Error, Result};
use crate::sums::Sign;
use crate::ExactInt;

fn require_inputs(r: u32, n: u64, what: &str) -> Result<()> {
    if r >= 1 && n == 0 {
        return Err(Error::invalid(format!(
            "{what} recurrence needs n >= 1 when r >= 1"
        )));
    }
    Ok(())
}

/// Runs `next(prev_row, n)` for rows `1..=r` over `n in 0..=n_max`, starting from `base`.
fn run_rows(
    r: u32,
    base: Vec<ExactInt>,
    mut next: impl FnMut(&[ExactInt], u64) -> ExactInt,
) -> Vec<ExactInt> {
    let mut row = base;
    for _ in 0..r {
        row = (0..row.len() as u64).map(|n| next(&row, n)).collect();
    }
    row
}

/// `P_r(n)` (plus) or `Q_r(n)` (alternating) through
/// `X_r(n) = n(n+1) X_{r-1}(n) - 2n(2n+1) X_{r-1}(n-1)`, grounded at
/// `P_0(n) = (2n+1) C(2n, n)` and `Q_0(n) = [n = 0]`.
pub fn pq_recurrence(r: u32, n: u64, sign: Sign) -> Result<ExactInt> {
    require_inputs(r, n, "P/Q")?;
    let base = (0..=n)
        .map(|j| match sign {
            Sign::Plus => choose(2 * j, j as i64) * (2 * j + 1),
            Sign::Alternating if j == 0 => ExactInt::one(),
            Sign::Alternating => ExactInt::zero(),
        })
        .collect();
    let row = run_rows(r, base, |prev, j| {
        if j == 0 {
            return ExactInt::zero();
        }
        &prev[j as usize] * (j * (j + 1)) - &prev[j as usize - 1] * (2 * j * (2 * j + 1))
    });
    Ok(row[n as usize].clone())
}

/// `U_r(n)` (plus) or `V_r(n)` (alternating) through
/// `X_r(n) = (2n+1)^2 X_{r-1}(n) - 8n(2n+1) X_{r-1}(n-1)`, grounded at
/// `U_0(n) = 4^n` and `V_0(n) = C(2n, n)`.
pub fn uv_recurrence(r: u32, n: u64, sign: Sign) -> Result<ExactInt> {
    require_inputs(r, n, "U/V")?;
    let base = (0..=n)
        .map(|j| match sign {
            Sign::Plus => ExactInt::from(4).pow(j as u32),
            Sign::Alternating => choose(2 * j, j as i64),
        })
        .collect();
    let row = run_rows(r, base, |prev, j| {
        let here = &prev[j as usize] * ((2 * j + 1) * (2 * j + 1));
        if j == 0 {
            return here;
        }
        here - &prev[j as usize - 1] * (8 * j * (2 * j + 1))
    });
    Ok(row[n as usize].clone())
}

/// `P_r(n_1, n_2)` or `Q_r(n_1, n_2)` through
/// `X_r(n_1,n_2) = n_1(n_1+1) X_{r-1}(n_1,n_2) - (n_1+n_2+1)^2 X_{r-1}(n_1-1,n_2)`,
/// grounded at the two `r = 0` closed forms.
pub fn two_var_recurrence(r: u32, n1: u64, n2: u64, sign: Sign) -> Result<ExactInt> {
    require_inputs(r, n1, "two-variable")?;
    let base = (0..=n1)
        .map(|a| {
            let c = choose(a + n2, a as i64);
            let lead = ExactInt::from(a + n2 + 1);
            match sign {
                Sign::Plus => lead * &c * &c,
                Sign::Alternating => lead * c,
            }
        })
        .collect();
    let row = run_rows(r, base, |prev, a| {
        if a == 0 {
            return ExactInt::zero();
        }
        let s = a + n2 + 1;
        &prev[a as usize] * (a * (a + 1)) - &prev[a as usize - 1] * (s * s)
    });
    Ok(row[n1 as usize].clone())
}

/// `sum_{k=0}^{n_1} C(n_1+n_2, n_1-k) C(n_1+n_2, n_2-k) k^{2r+1}` by direct summation.
pub fn overline_p_direct(r: u32, n1: u64, n2: u64) -> ExactInt {
    let top = n1 + n2;
    (0..=n1).fold(ExactInt::zero(), |acc, k| {
        acc + choose(top, n1 as i64 - k as i64)
            * choose(top, n2 as i64 - k as i64)
            * ExactInt::from(k).pow(2 * r + 1)
    })
}

/// `overline{P}_r(n_1, n_2)` through
/// `X_r(n_1,n_2) = n_1^2 X_{r-1}(n_1,n_2) - (n_1+n_2)^2 X_{r-1}(n_1-1,n_2)`, grounded at
/// `X_0(n_1,n_2) = (n_1/2) C(n_1+n_2, n_1) C(n_1+n_2-1, n_1)`.
pub fn overline_p(r: u32, n1: u64, n2: u64) -> Result<ExactInt> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::invalid("overline P needs n1, n2 >= 1"));
    }
    let base = (0..=n1)
        .map(|a| {
            if a == 0 {
                return ExactInt::zero();
            }
            let twice = choose(a + n2, a as i64) * choose(a + n2 - 1, a as i64) * a;
            let (half, rem) = twice.div_rem(&ExactInt::from(2));
            debug_assert!(rem.is_zero(), "base value must be an integer");
            half
        })
        .collect();
    let row = run_rows(r, base, |prev, a| {
        if a == 0 {
            return ExactInt::zero();
        }
        let s = a + n2;
        &prev[a as usize] * (a * a) - &prev[a as usize - 1] * (s * s)
    });
    Ok(row[n1 as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::{chain_sum, uv_sum, ChainSpec, Weight};

    fn direct_pq(r: u32, n: u64, sign: Sign) -> ExactInt {
        chain_sum(&ChainSpec::cyclic(vec![n], r, sign, Weight::Kk1).unwrap())
    }

    fn direct_two_var(r: u32, n1: u64, n2: u64, sign: Sign) -> ExactInt {
        chain_sum(&ChainSpec::cyclic(vec![n1, n2], r, sign, Weight::Kk1).unwrap())
    }

    #[test]
    fn pq_examples() {
        assert_eq!(pq_recurrence(1, 1, Sign::Plus).unwrap(), ExactInt::from(6));
        assert_eq!(
            pq_recurrence(2, 2, Sign::Alternating).unwrap(),
            ExactInt::from(120)
        );
        assert_eq!(
            pq_recurrence(1, 5, Sign::Alternating).unwrap(),
            ExactInt::zero()
        );
        assert!(pq_recurrence(1, 0, Sign::Plus).is_err());
        assert_eq!(
            pq_recurrence(0, 0, Sign::Alternating).unwrap(),
            ExactInt::one()
        );
    }

    #[test]
    fn uv_examples() {
        assert_eq!(uv_recurrence(1, 1, Sign::Plus).unwrap(), ExactInt::from(12));
        assert_eq!(
            uv_recurrence(1, 1, Sign::Alternating).unwrap(),
            ExactInt::from(-6)
        );
        assert!(uv_recurrence(1, 0, Sign::Plus).is_err());
        assert_eq!(
            uv_recurrence(0, 0, Sign::Alternating).unwrap(),
            ExactInt::one()
        );
    }

    #[test]
    fn one_variable_recurrences_match_direct_sums() {
        for r in 0..=4 {
            for n in 1..=25 {
                for sign in Sign::BOTH {
                    assert_eq!(
                        pq_recurrence(r, n, sign).unwrap(),
                        direct_pq(r, n, sign),
                        "r={r} n={n}"
                    );
                    assert_eq!(
                        uv_recurrence(r, n, sign).unwrap(),
                        uv_sum(n, r, sign),
                        "r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn two_variable_recurrence_matches_direct_sums() {
        for (r, n1, n2, sign) in [
            (1, 1, 1, Sign::Plus),
            (2, 2, 3, Sign::Alternating),
            (1, 1, 1, Sign::Alternating),
        ] {
            assert_eq!(
                two_var_recurrence(r, n1, n2, sign).unwrap(),
                direct_two_var(r, n1, n2, sign)
            );
        }
        assert_eq!(
            two_var_recurrence(1, 1, 1, Sign::Alternating).unwrap(),
            ExactInt::from(-6)
        );
        for r in 0..=4 {
            for n1 in 1..=12 {
                for n2 in 1..=12 {
                    for sign in Sign::BOTH {
                        assert_eq!(
                            two_var_recurrence(r, n1, n2, sign).unwrap(),
                            direct_two_var(r, n1, n2, sign)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn overline_p_examples() {
        assert_eq!(overline_p(0, 1, 1).unwrap(), ExactInt::from(1));
        assert_eq!(overline_p(0, 2, 2).unwrap(), ExactInt::from(18));
        assert_eq!(overline_p_direct(0, 2, 2), ExactInt::from(18));
        assert_eq!(overline_p(1, 1, 1).unwrap(), overline_p_direct(1, 1, 1));
        assert!(overline_p(1, 0, 3).is_err());
    }

    #[test]
    fn overline_p_recurrence_and_divisibility() {
        for r in 0..=4 {
            for n1 in 1..=10 {
                for n2 in 1..=10 {
                    let v = overline_p(r, n1, n2).unwrap();
                    assert_eq!(v, overline_p_direct(r, n1, n2), "r={r} ({n1},{n2})");
                    let modulus = choose(n1 + n2, n1 as i64) * n1;
                    assert!((v * 2u8).is_multiple_of(&modulus));
                }
            }
        }
    }
}

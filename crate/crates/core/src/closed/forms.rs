use num_integer::Integer;

use crate::arith::{choose, factorial};
use crate::error::{Error, Result};
use crate::sums::Sign;
use crate::ExactInt;

/// Printed closed forms of `P_r(n)` for `r <= 2`:
/// `(2n+1)C(2n,n)`, `n(2n+1)C(2n,n)`, `2n^2(2n+1)C(2n,n)`.
pub fn p_closed(r: u32, n: u64) -> Result<ExactInt> {
    let central = choose(2 * n, n as i64) * (2 * n + 1);
    match r {
        0 => Ok(central),
        1 => Ok(central * n),
        2 => Ok(central * (2 * n * n)),
        _ => Err(Error::invalid(format!("no closed form for P_{r}(n)"))),
    }
}

/// Closed forms of the two-variable sums `P_r(n_1, n_2)` / `Q_r(n_1, n_2)` for `r <= 2`.
///
/// `Q_2` uses the factor `n_1 n_2 - n_1 - n_2 - 1`, which is the form that
/// matches direct summation.
pub fn two_var_closed(r: u32, n1: u64, n2: u64, sign: Sign) -> Result<ExactInt> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::invalid("two-variable closed forms need n1, n2 >= 1"));
    }
    let (a, b) = (ExactInt::from(n1), ExactInt::from(n2));
    let lead = ExactInt::from(n1 + n2 + 1) * choose(n1 + n2, n1 as i64);
    let value = match (r, sign) {
        (0, Sign::Plus) => lead * choose(n1 + n2, n1 as i64),
        (0, Sign::Alternating) => lead,
        (1, Sign::Plus) => lead * &a * choose(n1 + n2 - 1, n1 as i64),
        (1, Sign::Alternating) => -(lead * &a * &b),
        (2, Sign::Plus) => lead * &a * &b * 2u8 * choose(n1 + n2 - 2, n1 as i64 - 1),
        (2, Sign::Alternating) => lead * &a * &b * (&a * &b - &a - &b - 1u8),
        _ => return Err(Error::invalid(format!("no closed form for r = {r}"))),
    };
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum M3Form {
    /// `sum (-1)^k (2k+1) C(..)C(..)C(..) = (n_1+n_2+n_3+1)! / (n_1! n_2! n_3!)`
    R0Alt,
    /// `sum (-1)^{k+1} k(k+1)(2k+1) C(..)C(..)C(..) = (n_1+n_2+n_3)! / ((n_1-1)!(n_2-1)!(n_3-1)!)`
    Kk1Alt,
}

/// Factorial-quotient values of the `m = 3` alternating sums.
pub fn m3_closed(n1: u64, n2: u64, n3: u64, which: M3Form) -> Result<ExactInt> {
    if n1 == 0 || n2 == 0 || n3 == 0 {
        return Err(Error::invalid("m = 3 closed forms need n_i >= 1"));
    }
    let (top, shift) = match which {
        M3Form::R0Alt => (n1 + n2 + n3 + 1, 0),
        M3Form::Kk1Alt => (n1 + n2 + n3, 1),
    };
    let den: ExactInt = [n1, n2, n3]
        .iter()
        .map(|&n| factorial(n as i64 - shift).expect("n >= 1"))
        .product();
    let (q, rem) = factorial(top as i64)?.div_rem(&den);
    debug_assert!(num_traits::Zero::is_zero(&rem));
    Ok(q)
}

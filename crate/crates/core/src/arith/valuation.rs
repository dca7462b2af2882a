use num_traits::{PrimInt, Unsigned};

use super::prime::require_prime;
use crate::error::{Error, Result};

/// `v_p(n!)` by Legendre's formula, `sum_{i>=1} floor(n / p^i)`.
pub fn legendre_valuation<T: PrimInt + Unsigned>(p: T, n: T) -> Result<u64> {
    require_prime(p)?;
    Ok(legendre_unchecked(p, n))
}

pub(crate) fn legendre_unchecked<T: PrimInt + Unsigned>(p: T, mut n: T) -> u64 {
    let mut v = 0u64;
    while n > T::zero() {
        n = n / p;
        v += n.to_u64().expect("quotient fits in u64");
    }
    v
}

/// `v_p(C(n, k))` as a difference of Legendre sums.
pub fn binomial_valuation<T: PrimInt + Unsigned>(p: T, n: T, k: T) -> Result<u64> {
    require_prime(p)?;
    if k > n {
        return Err(Error::invalid("binomial_valuation needs 0 <= k <= n"));
    }
    Ok(binomial_valuation_unchecked(p, n, k))
}

pub(crate) fn binomial_valuation_unchecked<T: PrimInt + Unsigned>(p: T, n: T, k: T) -> u64 {
    legendre_unchecked(p, n) - legendre_unchecked(p, k) - legendre_unchecked(p, n - k)
}

/// Number of carries when adding `a` and `b` in base `p` (Kummer).
pub fn kummer_carries<T: PrimInt + Unsigned>(p: T, mut a: T, mut b: T) -> u64 {
    let mut carry = T::zero();
    let mut count = 0;
    while a > T::zero() || b > T::zero() || carry > T::zero() {
        let digit = a % p + b % p + carry;
        carry = if digit >= p { T::one() } else { T::zero() };
        count += carry.to_u64().unwrap_or(0);
        a = a / p;
        b = b / p;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;

    fn brute_factorial_valuation(p: u64, n: u64) -> u64 {
        (2..=n)
            .map(|mut i| {
                let mut v = 0;
                while i % p == 0 {
                    i /= p;
                    v += 1;
                }
                v
            })
            .sum()
    }

    #[test]
    fn examples() {
        assert_eq!(legendre_valuation(5u64, 0).unwrap(), 0);
        assert_eq!(legendre_valuation(2u64, 10).unwrap(), 8);
        assert_eq!(legendre_valuation(3u32, 9).unwrap(), 4);
        assert!(matches!(
            legendre_valuation(4u64, 10),
            Err(Error::NotPrime(_))
        ));

        assert_eq!(binomial_valuation(7u64, 14, 7).unwrap(), 0);
        assert_eq!(binomial_valuation(13u64, 14, 7).unwrap(), 1);
        assert_eq!(binomial_valuation(2u64, 14, 7).unwrap(), 3);
        assert_eq!(binomial_valuation(11u64, 9, 0).unwrap(), 0);
        assert!(binomial_valuation(3u64, 4, 5).is_err());
    }

    #[test]
    fn legendre_agrees_with_trial_division() {
        for p in primes_up_to(50) {
            for n in 0..=500 {
                assert_eq!(
                    legendre_unchecked(p, n),
                    brute_factorial_valuation(p, n),
                    "p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn kummer_matches_legendre() {
        for p in primes_up_to(50) {
            for n in 0..=150u64 {
                for k in 0..=n {
                    assert_eq!(
                        binomial_valuation_unchecked(p, n, k),
                        kummer_carries(p, k, n - k)
                    );
                }
            }
        }
    }

    #[test]
    fn works_for_narrow_types() {
        assert_eq!(
            legendre_valuation(2u8, 200).unwrap(),
            brute_factorial_valuation(2, 200)
        );
        assert_eq!(kummer_carries(2u16, 7, 1), 3);
    }
}

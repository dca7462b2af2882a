//! Exact integer arithmetic: binomials, factorials, p-adic valuations, Lucas
//! residues, primality and prime-power classification.

pub(crate) mod binomial;
mod lucas;
mod prime;
mod valuation;

pub use binomial::{binomial, choose, factorial, BinomialCache};
pub use lucas::lucas_binomial_mod;
pub use prime::{
    classify_prime_power, classify_prime_power_u64, factor_u64, is_prime_u64, is_probable_prime,
    primes_up_to, Certainty, PrimePower,
};
pub use valuation::{binomial_valuation, kummer_carries, legendre_valuation};

use crate::ExactInt;
use num_integer::Integer;
use num_traits::Signed;

/// Number of one bits in the binary expansion of `n`.
pub fn bit_count_ones(n: u64) -> u32 {
    n.count_ones()
}

/// Nonnegative gcd of two exact integers.
pub fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    a.abs().gcd(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn popcount_examples() {
        assert_eq!(bit_count_ones(0), 0);
        assert_eq!(bit_count_ones(7), 3);
        assert_eq!(bit_count_ones(10), 2);
    }

    #[test]
    fn gcd_is_nonnegative() {
        let g = gcd(&ExactInt::from(-12), &ExactInt::from(18));
        assert_eq!(g, ExactInt::from(6));
        assert_eq!(
            gcd(&ExactInt::from(0), &ExactInt::from(-5)),
            ExactInt::from(5)
        );
    }
}

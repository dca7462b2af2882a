use num_traits::{PrimInt, Unsigned};

use super::prime::require_prime;
use crate::error::Result;

/// `C(n, k) mod p` by Lucas' theorem: the product of digit binomials
/// `C(n_i, k_i)` over the base-`p` expansions of `n` and `k`.
pub fn lucas_binomial_mod<T: PrimInt + Unsigned>(n: T, k: T, p: T) -> Result<T> {
    require_prime(p)?;
    let p64 = p.to_u64().expect("prime checked above fits in u64");
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > T::zero() {
        let a = (n % p).to_u64().unwrap();
        let b = (k % p).to_u64().unwrap();
        if b > a {
            return Ok(T::zero());
        }
        acc = mul_mod(acc, small_binomial_mod(a, b, p64), p64);
        n = n / p;
        k = k / p;
    }
    Ok(T::from(acc % p64).unwrap())
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// C(a, b) mod p for digits 0 <= b <= a < p; the denominator is a unit mod p.
fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    let b = b.min(a - b);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..b {
        num = mul_mod(num, a - i, p);
        den = mul_mod(den, i + 1, p);
    }
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

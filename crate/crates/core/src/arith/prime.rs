use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_traits::{One, PrimInt, ToPrimitive, Unsigned, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ExactInt;

/// Bases for which strong-pseudoprime testing is exact below 2^64
/// (the first twelve primes suffice below 3.3 * 10^24).
const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Strong-probable-prime rounds used above 2^64; error below 4^-64 per composite.
const PROBABLE_ROUNDS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    Proven,
    Probable,
}

/// `n = p^a` with `p` prime and `a >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub p: ExactInt,
    pub a: u32,
    pub certainty: Certainty,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &DETERMINISTIC_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality of an arbitrary-size nonnegative integer: proven below 2^64,
/// strong-probable-prime to the first 64 prime bases above. `None` means composite.
pub fn is_probable_prime(n: &BigUint) -> Option<Certainty> {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small).then_some(Certainty::Proven);
    }
    for p in primes_up_to(1000) {
        if (n % p).is_zero() {
            return None;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    'witness: for a in primes_up_to(400).into_iter().take(PROBABLE_ROUNDS) {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u8), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return None;
    }
    Some(Certainty::Probable)
}

pub(crate) fn require_prime<T: PrimInt + Unsigned>(p: T) -> Result<()> {
    let ok = match p.to_u64() {
        Some(v) => is_prime_u64(v),
        None => {
            is_probable_prime(&BigUint::from(p.to_u128().expect("unsigned fits u128"))).is_some()
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NotPrime(
            p.to_u128()
                .map_or_else(|| "modulus".into(), |v| v.to_string()),
        ))
    }
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Prime factorization by trial division, as ascending `(p, exponent)` pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, a))` when `n = p^a`, deciding primality deterministically.
pub fn classify_prime_power_u64(n: u64) -> Result<Option<(u64, u32)>> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "prime-power classification needs n >= 2, got {n}"
        )));
    }
    for a in 1..=63u32 {
        let root = n.nth_root(a);
        if root < 2 {
            break;
        }
        if root.checked_pow(a) == Some(n) && is_prime_u64(root) {
            return Ok(Some((root, a)));
        }
    }
    Ok(None)
}

/// Prime-power classification for arbitrary-size `n >= 2`.
pub fn classify_prime_power(n: &ExactInt) -> Result<Option<PrimePower>> {
    if *n < BigInt::from(2) {
        return Err(Error::invalid(format!(
            "prime-power classification needs n >= 2, got {n}"
        )));
    }
    if let Some(small) = n.to_u64() {
        return Ok(classify_prime_power_u64(small)?.map(|(p, a)| PrimePower {
            p: p.into(),
            a,
            certainty: Certainty::Proven,
        }));
    }
    let mag = n.magnitude();
    for a in 1..=mag.bits() as u32 {
        let root = mag.nth_root(a);
        if root < BigUint::from(2u8) {
            break;
        }
        if num_traits::pow(root.clone(), a as usize) == *mag {
            if let Some(certainty) = is_probable_prime(&root) {
                return Ok(Some(PrimePower {
                    p: BigInt::from_biguint(Sign::Plus, root),
                    a,
                    certainty,
                }));
            }
        }
    }
    Ok(None)
}

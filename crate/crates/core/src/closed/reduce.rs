use crate::arith::choose;
use crate::error::{Error, Result};
use crate::sums::{normalized_sum, ChainSpec, Closure};
use crate::{ExactInt, ExactRat};

/// Normalized chain sum `S_r` / `T_r` by the reduction
/// `S(n_1, ..., n_m) = sum_{l=0}^{n_1} C(n_1, l) C(n_2+n_3+1, n_2-l) S(l, n_3, ..., n_m)`,
/// applied until two entries remain and finished by direct summation.
pub fn chain_reduce(spec: &ChainSpec) -> Result<ExactRat> {
    if spec.m() < 3 {
        return Err(Error::invalid("chain reduction needs m >= 3"));
    }
    if spec.closure != Closure::Cyclic {
        return Err(Error::invalid("chain reduction applies to cyclic chains"));
    }
    Ok(reduce(spec.ns(), spec))
}

fn reduce(ns: &[u64], spec: &ChainSpec) -> ExactRat {
    if ns.len() <= 2 {
        let leaf =
            ChainSpec::new_unchecked(ns.to_vec(), spec.r, spec.sign, spec.weight, Closure::Cyclic);
        return normalized_sum(&leaf);
    }
    let (n1, n2, n3) = (ns[0], ns[1], ns[2]);
    let mut rest = Vec::with_capacity(ns.len() - 1);
    rest.push(0);
    rest.extend_from_slice(&ns[2..]);
    let mut total = ExactRat::default();
    for l in 0..=n1.min(n2) {
        let coeff: ExactInt = choose(n1, l as i64) * choose(n2 + n3 + 1, n2 as i64 - l as i64);
        rest[0] = l;
        total += ExactRat::from_integer(coeff) * reduce(&rest, spec);
    }
    total
}

//! Bivariate power series in `x` and `y`, truncated at total degree `D`.
//!
//! Coefficients are stored densely in a triangular array: for total degree
//! `t = i + j` the coefficient of `x^i y^j` lives at `t(t+1)/2 + j`. Products
//! discard everything above the truncation degree, so all arithmetic is exact
//! modulo terms of total degree `> D` when the scalar is exact.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries2<T> {
    degree: usize,
    coeffs: Vec<T>,
}

fn slot(i: usize, j: usize) -> usize {
    let t = i + j;
    t * (t + 1) / 2 + j
}

fn len_for(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

impl<T: Scalar> TruncatedSeries2<T> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: vec![T::zero(); len_for(degree)],
        }
    }

    pub fn constant(value: T, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = value;
        s
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(T::one(), degree)
    }

    pub fn x(degree: usize) -> Self {
        Self::monomial(T::one(), 1, 0, degree)
    }

    pub fn y(degree: usize) -> Self {
        Self::monomial(T::one(), 0, 1, degree)
    }

    /// `c x^i y^j`, or zero when `i + j` exceeds the truncation degree.
    pub fn monomial(c: T, i: usize, j: usize, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if i + j <= degree {
            s.coeffs[slot(i, j)] = c;
        }
        s
    }

    /// Series whose coefficient at `(i, j)` is `f(i, j)`.
    pub fn from_fn(degree: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut s = Self::zero(degree);
        for t in 0..=degree {
            for j in 0..=t {
                s.coeffs[slot(t - j, j)] = f(t - j, j);
            }
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `x^i y^j`; zero beyond the truncation degree.
    pub fn coeff(&self, i: usize, j: usize) -> T {
        if i + j > self.degree {
            T::zero()
        } else {
            self.coeffs[slot(i, j)].clone()
        }
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, value: T) -> Result<()> {
        if i + j > self.degree {
            return Err(Error::invalid(format!(
                "coefficient ({i}, {j}) is above truncation degree {}",
                self.degree
            )));
        }
        self.coeffs[slot(i, j)] = value;
        Ok(())
    }

    /// Nonzero coefficients in total-degree order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &T)> + '_ {
        (0..=self.degree)
            .flat_map(|t| (0..=t).map(move |j| (t - j, j)))
            .map(|(i, j)| ((i, j), &self.coeffs[slot(i, j)]))
            .filter(|(_, c)| !c.is_zero())
    }

    /// Same series with every coefficient of total degree `> d` dropped.
    pub fn truncated(&self, d: usize) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(len_for(d.min(self.degree))) {
            *c = T::zero();
        }
        out
    }

    /// Coefficientwise equality through total degree `d`.
    pub fn agrees_to(&self, other: &Self, d: usize) -> bool {
        let d = d.min(self.degree).min(other.degree);
        self.coeffs[..len_for(d)] == other.coeffs[..len_for(d)]
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    fn check_same_degree(&self, other: &Self) {
        assert_eq!(
            self.degree, other.degree,
            "series truncation degrees differ"
        );
    }

    /// Product keeping only terms of total degree `<= d`.
    fn mul_to(&self, other: &Self, d: usize) -> Self {
        self.check_same_degree(other);
        let d = d.min(self.degree);
        let mut out = Self::zero(self.degree);
        for ta in 0..=d {
            for ja in 0..=ta {
                let a = &self.coeffs[slot(ta - ja, ja)];
                if a.is_zero() {
                    continue;
                }
                for tb in 0..=d - ta {
                    for jb in 0..=tb {
                        let b = &other.coeffs[slot(tb - jb, jb)];
                        if b.is_zero() {
                            continue;
                        }
                        let k = slot(ta - ja + tb - jb, ja + jb);
                        out.coeffs[k] = out.coeffs[k].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.degree);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse by Newton iteration `u <- u (2 - s u)`, doubling
    /// the number of correct degrees each step.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::invalid(
                "series with zero constant term has no inverse",
            ));
        }
        let two = Self::constant(T::from_int(2), self.degree);
        let mut u = Self::constant(T::one() / c0, self.degree);
        let mut prec = 0;
        while prec < self.degree {
            prec = (2 * prec + 1).min(self.degree);
            let su = self.mul_to(&u, prec);
            u = u.mul_to(&(&two - &su), prec);
        }
        Ok(u)
    }

    /// Square root with constant term 1, by Newton iteration
    /// `t <- (t + s / t) / 2` with degree doubling.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != T::one() {
            return Err(Error::invalid("series square root needs constant term 1"));
        }
        Ok(self.sqrt_iterates().pop().expect("at least one iterate"))
    }

    /// Every Newton iterate for the square root, paired with the degree
    /// through which it is already correct.
    pub fn sqrt_iterates(&self) -> Vec<Self> {
        let mut t = Self::one(self.degree);
        let mut out = vec![t.clone()];
        let mut prec = 0;
        let half = T::half();
        while prec < self.degree {
            prec = (2 * prec + 1).min(self.degree);
            let inv = t
                .truncated(prec)
                .inverse()
                .expect("iterate has constant term 1");
            t = (&t + &self.mul_to(&inv, prec)).truncated(prec).scale(&half);
            out.push(t.clone());
        }
        out
    }
}

impl<T: Scalar> Add for &TruncatedSeries2<T> {
    type Output = TruncatedSeries2<T>;

    fn add(self, rhs: Self) -> TruncatedSeries2<T> {
        self.check_same_degree(rhs);
        TruncatedSeries2 {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &TruncatedSeries2<T> {
    type Output = TruncatedSeries2<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries2<T> {
        self.check_same_degree(rhs);
        TruncatedSeries2 {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &TruncatedSeries2<T> {
    type Output = TruncatedSeries2<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries2<T> {
        self.mul_to(rhs, self.degree)
    }
}

impl<T: Scalar> Neg for &TruncatedSeries2<T> {
    type Output = TruncatedSeries2<T>;

    fn neg(self) -> TruncatedSeries2<T> {
        TruncatedSeries2 {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for TruncatedSeries2<T> {
            type Output = TruncatedSeries2<T>;

            fn $method(self, rhs: Self) -> TruncatedSeries2<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactRat, FloatSeries, RationalSeries};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRat {
        ExactRat::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(d: usize, terms: &[(usize, usize, i64)]) -> RationalSeries {
        let mut s = RationalSeries::zero(d);
        for &(i, j, c) in terms {
            s.set_coeff(i, j, q(c, 1)).unwrap();
        }
        s
    }

    #[test]
    fn sqrt_of_one_is_one() {
        let one = RationalSeries::one(6);
        assert_eq!(one.sqrt().unwrap(), one);
    }

    #[test]
    fn sqrt_of_one_minus_two_x() {
        let s = poly(3, &[(0, 0, 1), (1, 0, -2)]);
        let t = s.sqrt().unwrap();
        // (1-2x)^{1/2} = 1 - x - x^2/2 - x^3/2 - ...
        let expected = [q(1, 1), q(-1, 1), q(-1, 2), q(-1, 2)];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(&t.coeff(i, 0), e, "x^{i}");
        }
        assert_eq!(t.coeff(0, 1), q(0, 1));
    }

    #[test]
    fn sqrt_rejects_bad_constant() {
        assert!(poly(3, &[(0, 0, 4), (1, 0, 1)]).sqrt().is_err());
        assert!(RationalSeries::zero(3).inverse().is_err());
    }

    #[test]
    fn newton_iterates_gain_degrees() {
        let s = poly(
            8,
            &[
                (0, 0, 1),
                (1, 0, -2),
                (0, 1, -2),
                (1, 1, -2),
                (2, 0, 1),
                (0, 2, 1),
            ],
        );
        let iterates = s.sqrt_iterates();
        let mut prec = 0;
        for t in &iterates[1..] {
            prec = (2 * prec + 1).min(8);
            assert!((t * t).agrees_to(&s, prec));
        }
        assert_eq!(prec, 8);
    }

    #[test]
    fn monomials_and_coefficients() {
        let x = RationalSeries::x(4);
        let y = RationalSeries::y(4);
        let p = (&x + &y).pow(3);
        assert_eq!(p.coeff(2, 1), q(3, 1));
        assert_eq!(p.coeff(5, 0), q(0, 1));
        assert_eq!(
            RationalSeries::monomial(q(1, 1), 3, 3, 4),
            RationalSeries::zero(4)
        );
        assert!(p.clone().set_coeff(4, 1, q(1, 1)).is_err());
        assert_eq!(p.terms().count(), 4);
        assert_eq!((&p - &p), RationalSeries::zero(4));
        assert_eq!(&(-&p) + &p, RationalSeries::zero(4));
    }

    #[test]
    fn float_series_sqrt_is_close() {
        let s = FloatSeries::from_fn(6, |i, j| {
            if i + j == 0 {
                1.0
            } else {
                0.25 / (1 + i + 2 * j) as f64
            }
        });
        let t = s.sqrt().unwrap();
        let back = &t * &t;
        for i in 0..=6 {
            for j in 0..=6 - i {
                approx::assert_relative_eq!(back.coeff(i, j), s.coeff(i, j), epsilon = 1e-12);
            }
        }
    }

    fn small_series(d: usize) -> impl Strategy<Value = RationalSeries> {
        prop::collection::vec(-3i64..=3, len_for(d)).prop_map(move |cs| {
            let mut s = RationalSeries::from_fn(d, |i, j| q(cs[slot(i, j)], 1));
            s.set_coeff(0, 0, q(1, 1)).unwrap();
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn sqrt_squares_back(s in small_series(6)) {
            let t = s.sqrt().unwrap();
            prop_assert_eq!(&t * &t, s);
        }

        #[test]
        fn inverse_times_self_is_one(s in small_series(6)) {
            let u = s.inverse().unwrap();
            prop_assert_eq!(&u * &s, RationalSeries::one(6));
        }
    }
}

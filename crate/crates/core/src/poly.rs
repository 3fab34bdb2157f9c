//! Sparse Laurent polynomials with exact integer coefficients.
//!
//! [`Laurent`] is generic over the monomial key: `i64` for one variable,
//! `(i64, i64)` for two. Zero coefficients are never stored, so structural
//! equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent key of a monomial. Multiplying monomials adds exponents.
pub trait Monomial: Copy + Ord + fmt::Debug {
    fn unit() -> Self;
    fn times(self, other: Self) -> Self;
}

impl Monomial for i64 {
    fn unit() -> Self {
        0
    }
    fn times(self, other: Self) -> Self {
        self + other
    }
}

impl Monomial for (i64, i64) {
    fn unit() -> Self {
        (0, 0)
    }
    fn times(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<K: Monomial> {
    terms: BTreeMap<K, BigInt>,
}

/// One-variable Laurent polynomial (variable printed as `t` unless stated).
pub type LaurentPoly1 = Laurent<i64>;
/// Two-variable Laurent polynomial in `(a, z)`.
pub type LaurentPoly2 = Laurent<(i64, i64)>;

impl<K: Monomial> Default for Laurent<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Monomial> Laurent<K> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(K::unit(), 1)
    }

    pub fn monomial(exp: K, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(K::unit(), c)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (K, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: K) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (K, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial with exponent `exp`.
    pub fn shift(&self, exp: K) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, v)| (k.times(exp), v.clone())).collect(),
        }
    }

    pub fn map_exponents<L: Monomial>(&self, f: impl Fn(K) -> L) -> Laurent<L> {
        let mut out = Laurent::zero();
        for (k, v) in &self.terms {
            out.add_term(f(*k), v.clone());
        }
        out
    }
}

impl<K: Monomial> AddAssign<&Laurent<K>> for Laurent<K> {
    fn add_assign(&mut self, rhs: &Laurent<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v.clone());
        }
    }
}

impl<K: Monomial> SubAssign<&Laurent<K>> for Laurent<K> {
    fn sub_assign(&mut self, rhs: &Laurent<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, -v);
        }
    }
}

impl<K: Monomial> Add for &Laurent<K> {
    type Output = Laurent<K>;
    fn add(self, rhs: Self) -> Laurent<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Monomial> Sub for &Laurent<K> {
    type Output = Laurent<K>;
    fn sub(self, rhs: Self) -> Laurent<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Monomial> Neg for &Laurent<K> {
    type Output = Laurent<K>;
    fn neg(self) -> Laurent<K> {
        Laurent {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl<K: Monomial> Mul for &Laurent<K> {
    type Output = Laurent<K>;
    fn mul(self, rhs: Self) -> Laurent<K> {
        let mut out = Laurent::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &rhs.terms {
                out.add_term(k1.times(*k2), v1 * v2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<K: Monomial> $tr for Laurent<K> {
            type Output = Laurent<K>;
            fn $m(self, rhs: Self) -> Laurent<K> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl LaurentPoly1 {
    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// `t^n - 1`.
    pub fn power_minus_one(n: i64) -> Self {
        Self::from_terms([(n, 1), (0, -1)])
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval(&self, x: i64) -> Result<BigInt> {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let term = if *e >= 0 {
                c * x.pow(*e as u32)
            } else {
                if x.abs() != BigInt::one() {
                    return Err(Error::InvalidArgument(format!(
                        "cannot evaluate negative power t^{e} exactly at {x}"
                    )));
                }
                // x = ±1, so x^-k = x^k
                c * x.pow((-*e) as u32)
            };
            acc += term;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e - 1, c * BigInt::from(*e));
        }
        out
    }

    /// Exact division. Fails if the divisor's leading coefficient does not
    /// divide the running remainder, or if the remainder is non-zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lead_exp, lead_coeff) = match divisor.terms.iter().next_back() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::InvalidArgument("division by zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let low = divisor.min_degree().unwrap_or(0);
        // every quotient exponent lies in [min(self) - low, max(self) - lead_exp]
        let floor = self.min_degree().unwrap_or(0) - low;
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if e - lead_exp < floor {
                break;
            }
            if !(&c % &lead_coeff).is_zero() {
                break;
            }
            let q = Self::monomial(e - lead_exp, &c / &lead_coeff);
            rem -= &(&q * divisor);
            quot += &q;
        }
        if !rem.is_zero() {
            return Err(Error::InvalidArgument("polynomial division leaves a remainder".into()));
        }
        Ok(quot)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_coeff(f, i == 0, c)?;
            if *e != 0 {
                write!(f, "*{var}^{e}")?;
            }
        }
        Ok(())
    }

    /// Display with a custom variable name.
    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a LaurentPoly1, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        D(self, var)
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, _) => write!(f, "{c}"),
        (false, true) => write!(f, " - {}", c.abs()),
        (false, false) => write!(f, " + {c}"),
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "t")
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly1({self})")
    }
}

impl LaurentPoly2 {
    /// Range of exponents of the first variable `a`.
    pub fn a_span(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|k| k.0).min()?;
        let hi = self.terms.keys().map(|k| k.0).max()?;
        Some((lo, hi))
    }

    /// Substitutes `a = 1`, leaving a polynomial in `z`.
    pub fn at_a_one(&self) -> LaurentPoly1 {
        self.map_exponents(|(_, j)| j)
    }

    /// Lifts a polynomial in `z` into `(a, z)` with `a`-degree zero.
    pub fn from_z(p: &LaurentPoly1) -> Self {
        p.map_exponents(|j| (0, j))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            write_coeff(f, n == 0, c)?;
            if *i != 0 {
                write!(f, "*a^{i}")?;
            }
            if *j != 0 {
                write!(f, "*z^{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(terms: &[(i64, i64)]) -> LaurentPoly1 {
        LaurentPoly1::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = p1(&[(0, 1), (2, 3)]);
        let b = p1(&[(2, 3)]);
        let d = &a - &b;
        assert_eq!(d, LaurentPoly1::one());
        assert_eq!((&a - &a).len(), 0);
    }

    #[test]
    fn exact_division() {
        // (t^3 - 1) / (t - 1) = t^2 + t + 1
        let q = LaurentPoly1::power_minus_one(3)
            .div_exact(&LaurentPoly1::power_minus_one(1))
            .unwrap();
        assert_eq!(q, p1(&[(0, 1), (1, 1), (2, 1)]));
        assert!(p1(&[(2, 1), (0, 1)]).div_exact(&LaurentPoly1::power_minus_one(1)).is_err());
    }

    #[test]
    fn eval_and_derivative() {
        let p = p1(&[(-1, 2), (0, 1), (3, -1)]);
        assert_eq!(p.eval(-1).unwrap(), BigInt::from(-2 + 1 + 1));
        assert_eq!(p.derivative(), p1(&[(-2, -2), (2, -3)]));
        assert!(p.eval(2).is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(p1(&[(0, 1), (1, -1), (2, 1)]).to_string(), "1 - 1*t^1 + 1*t^2");
        let q = LaurentPoly2::from_terms([((-2, 2), 1), ((-4, 0), -1), ((-2, 0), 2)]);
        assert_eq!(q.to_string(), "-1*a^-4 + 2*a^-2 + 1*a^-2*z^2");
        assert_eq!(LaurentPoly2::one().to_string(), "1");
    }
}

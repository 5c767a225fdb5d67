//! Exact coefficient fields.
//!
//! Everything downstream is generic over [`Field`]: arbitrary-precision
//! rationals, the rational function field `Q(t)` and small prime fields.
//! There is no floating point anywhere in this crate.

mod poly;
mod prime;
mod ratfunc;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use poly::{interpolate, Poly};
pub use prime::Fp;
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero polynomial")]
    ZeroDenominator,
    #[error("pole at t = {0}")]
    Pole(Rational),
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(Rational),
    #[error("need at least {needed} points for degree bound {bound}, got {got}")]
    TooFewPoints { needed: usize, bound: usize, got: usize },
    #[error("degree bound violated or unstable pattern: residual {residual} at {at}")]
    Inconsistent { at: Rational, residual: Rational },
}

/// A commutative field with exact, canonical elements.
///
/// Canonical means structural equality is value equality, so elements can be
/// used as hash keys and compared with `==`.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Image of an integer under the unique ring map `Z -> F`.
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Image of a rational, `None` when the denominator vanishes in `F`.
    fn from_rational(q: &Rational) -> Option<Self> {
        let den = Self::from_integer(q.denom());
        Some(Self::from_integer(q.numer()).mul(&den.inv()?))
    }

    /// Short name used in reports.
    fn field_name() -> String;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_integer(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn field_name() -> String {
        "Q".to_string()
    }
}

/// Parse `a` or `a/b` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(10, 7), BigInt::from(120));
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("7/2"), Some(ratio(7, 2)));
        assert_eq!(parse_rational("-3"), Some(rat(-3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn rational_from_rational_in_prime_field() {
        let half = ratio(1, 2);
        let h = Fp::<5>::from_rational(&half).unwrap();
        assert_eq!(h.mul(&Fp::from_i64(2)), Fp::one());
        assert!(Fp::<5>::from_rational(&ratio(1, 5)).is_none());
    }
}

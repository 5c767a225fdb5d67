use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero as _;

use super::{Field, FieldError, Poly, Rational};

/// Element of `Q(t)` in canonical form: coprime numerator and denominator,
/// denominator monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
        let lead = den.leading().expect("nonzero denominator").recip();
        Ok(RatFunc { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The indeterminate `t`.
    pub fn t() -> RatFunc {
        RatFunc::from_poly(Poly::t())
    }

    /// `t^k`.
    pub fn t_pow(k: usize) -> RatFunc {
        RatFunc::from_poly(Poly::monomial(k, Rational::from_integer(1.into())))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn evaluate(&self, t0: &Rational) -> Result<Rational, FieldError> {
        let d = self.den.evaluate(t0);
        if Field::is_zero(&d) {
            return Err(FieldError::Pole(t0.clone()));
        }
        Ok(self.num.evaluate(t0) / d)
    }

    fn combine(num: Poly, den: Poly) -> RatFunc {
        RatFunc::normalize(num, den).expect("product of nonzero denominators is nonzero")
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc::combine(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFunc::combine(num, self.den.mul(&other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && other.is_polynomial() {
            return RatFunc { num: self.num.mul(&other.num), den: Poly::one() };
        }
        RatFunc::combine(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::combine(self.den.clone(), self.num.clone()))
    }
    fn from_integer(n: &BigInt) -> Self {
        if n.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::constant(Rational::from_integer(n.clone()))
    }
    fn field_name() -> String {
        "Q(t)".to_string()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !Field::is_zero(*c)).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

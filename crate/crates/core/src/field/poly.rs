use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FieldError, Rational};

/// Univariate polynomial in `t` with rational coefficients, lowest degree first.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `t^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division over `Q`: returns `(q, r)` with `self = q*d + r`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), FieldError> {
        let dd = d.degree().ok_or(FieldError::ZeroDenominator)?;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * dc;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Division that is known to be exact.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly, FieldError> {
        let (q, r) = self.div_rem(d)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Monic greatest common divisor, computed with a primitive
    /// pseudo-remainder sequence over `Z[t]`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (primitive_part(&self.coeffs), primitive_part(&other.coeffs));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part_int(r);
        }
        Poly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }
}

/// Clear denominators and divide out the integer content.
fn primitive_part(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    primitive_part_int(ints)
}

fn primitive_part_int(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let content = content * sign;
    ints.into_iter().map(|c| c / &content).collect()
}

/// `lc(b)^e * a mod b` over `Z`, leading terms cancelled one at a time.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: usize, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let var = match k {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    };
    if k == 0 {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{var}")
    } else {
        write!(f, "{abs}*{var}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            fmt_coeff_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// The unique polynomial of degree at most `degree_bound` through `points`.
///
/// The first `degree_bound + 1` points determine the polynomial (Newton
/// divided differences); every remaining point must lie on it exactly.
pub fn interpolate(points: &[(Rational, Rational)], degree_bound: usize) -> Result<Poly, FieldError> {
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(FieldError::TooFewPoints { needed, bound: degree_bound, got: points.len() });
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(FieldError::DuplicateAbscissa(x.clone()));
        }
    }
    let xs: Vec<Rational> = points[..needed].iter().map(|p| p.0.clone()).collect();
    let mut dd: Vec<Rational> = points[..needed].iter().map(|p| p.1.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner form of the Newton polynomial.
    let mut p = Poly::constant(dd[needed - 1].clone());
    for i in (0..needed - 1).rev() {
        let factor = Poly::new(vec![-xs[i].clone(), Rational::one()]);
        p = p.mul(&factor).add(&Poly::constant(dd[i].clone()));
    }
    for (x, y) in &points[needed..] {
        let residual = y - p.evaluate(x);
        if !residual.is_zero() {
            return Err(FieldError::Inconsistent { at: x.clone(), residual });
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ratio};

    #[test]
    fn gcd_of_shared_factor() {
        // (t^2 - 1) and (t - 1)(t + 3)
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = Poly::new(vec![ratio(1, 2), ratio(1, 2)]); // (t+1)/2
        let b = Poly::from_ints(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[1, 1]));
        assert_eq!(a.gcd(&Poly::zero()), Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[0, 1]);
        assert_eq!(a.gcd(&b), Poly::one());
    }

    #[test]
    fn division() {
        let a = Poly::from_ints(&[-1, 0, 0, 1]);
        let d = Poly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        assert!(a.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[1, 0, 1]).to_string(), "t^2 + 1");
        assert_eq!(Poly::new(vec![rat(0), ratio(-3, 2)]).to_string(), "-3/2*t");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn interpolation_examples() {
        let pts = vec![(rat(1), rat(2)), (rat(2), rat(5)), (rat(3), rat(10))];
        assert_eq!(interpolate(&pts, 2).unwrap(), Poly::from_ints(&[1, 0, 1]));

        let c = ratio(7, 3);
        assert_eq!(interpolate(&[(rat(0), c.clone())], 0).unwrap(), Poly::constant(c));

        let bad = vec![(rat(1), rat(1)), (rat(2), rat(2)), (rat(3), rat(4))];
        assert!(matches!(interpolate(&bad, 1), Err(FieldError::Inconsistent { .. })));

        let dup = vec![(rat(1), rat(1)), (rat(1), rat(2))];
        assert!(matches!(interpolate(&dup, 1), Err(FieldError::DuplicateAbscissa(_))));
        assert!(matches!(interpolate(&pts, 3), Err(FieldError::TooFewPoints { .. })));
    }
}

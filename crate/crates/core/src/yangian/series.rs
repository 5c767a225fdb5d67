//! `n x n` matrices of power series in `u^{-1}`, truncated at a fixed order,
//! with coefficients in a noncommutative algebra.

use thiserror::Error;

use crate::algebra::{Generator, NcElement};
use crate::field::{binomial, Field};

/// What a series coefficient must support.
pub trait SeriesAlgebra: Clone + PartialEq {
    type Scalar: Field;
    fn zero_like() -> Self;
    fn one_like() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &Self::Scalar) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn filtration_degree(&self) -> usize;
}

impl<G: Generator, F: Field> SeriesAlgebra for NcElement<G, F> {
    type Scalar = F;
    fn zero_like() -> Self {
        NcElement::zero()
    }
    fn one_like() -> Self {
        NcElement::one()
    }
    fn add(&self, other: &Self) -> Self {
        NcElement::add(self, other)
    }
    fn scale(&self, c: &F) -> Self {
        NcElement::scale(self, c)
    }
    fn mul(&self, other: &Self) -> Self {
        NcElement::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        NcElement::is_zero(self)
    }
    fn filtration_degree(&self) -> usize {
        self.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient of u^-{power} has degree {degree}, above the truncation bound {bound}")]
    Truncation { power: usize, degree: usize, bound: usize },
    #[error("inversion needs constant term equal to the identity")]
    NotUnital,
    #[error("series sizes differ")]
    Shape,
}

/// `sum_{r=0}^{order} T_r u^{-r}`, each `T_r` an `n x n` matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSeries<A> {
    n: usize,
    coeffs: Vec<Vec<A>>,
    bound: Option<usize>,
}

impl<A: SeriesAlgebra> MatrixSeries<A> {
    /// Build from a coefficient function `(r, i, j) -> A`, indices 1-based.
    pub fn from_fn(n: usize, order: usize, mut f: impl FnMut(usize, usize, usize) -> A) -> Self {
        let coeffs =
            (0..=order).map(|r| (0..n * n).map(|p| f(r, p / n + 1, p % n + 1)).collect()).collect();
        MatrixSeries { n, coeffs, bound: None }
    }

    /// Unit constant term plus the given higher coefficients.
    pub fn unital(n: usize, order: usize, mut f: impl FnMut(usize, usize, usize) -> A) -> Self {
        Self::from_fn(n, order, |r, i, j| {
            if r == 0 {
                if i == j {
                    A::one_like()
                } else {
                    A::zero_like()
                }
            } else {
                f(r, i, j)
            }
        })
    }

    /// Fail whenever a coefficient of `u^{-r}` exceeds filtration degree `bound`.
    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^{-r}` in entry `(i, j)`, 1-based.
    pub fn entry(&self, r: usize, i: usize, j: usize) -> &A {
        &self.coeffs[r][(i - 1) * self.n + (j - 1)]
    }

    fn check(self) -> Result<Self, SeriesError> {
        if let Some(bound) = self.bound {
            for (power, c) in self.coeffs.iter().enumerate() {
                for x in c {
                    let degree = x.filtration_degree();
                    if degree > bound {
                        return Err(SeriesError::Truncation { power, degree, bound });
                    }
                }
            }
        }
        Ok(self)
    }

    fn blank(&self) -> Self {
        MatrixSeries { n: self.n, coeffs: vec![vec![A::zero_like(); self.n * self.n]; self.coeffs.len()], bound: self.bound }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.n != other.n {
            return Err(SeriesError::Shape);
        }
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|r| self.coeffs[r].iter().zip(&other.coeffs[r]).map(|(a, b)| a.add(b)).collect())
            .collect();
        MatrixSeries { n: self.n, coeffs, bound: self.bound.or(other.bound) }.check()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.n != other.n {
            return Err(SeriesError::Shape);
        }
        let n = self.n;
        let order = self.order().min(other.order());
        let mut coeffs = vec![vec![A::zero_like(); n * n]; order + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            for (b, cb) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                for i in 0..n {
                    for k in 0..n {
                        let x = &ca[i * n + k];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            let y = &cb[k * n + j];
                            if !y.is_zero() {
                                let slot = &mut coeffs[a + b][i * n + j];
                                *slot = slot.add(&x.mul(y));
                            }
                        }
                    }
                }
            }
        }
        MatrixSeries { n, coeffs, bound: self.bound.or(other.bound) }.check()
    }

    /// `T^{-1} = sum_j (1 - T)^j`, valid when the constant term is the identity.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let n = self.n;
        for p in 0..n * n {
            let expected = if p / n == p % n { A::one_like() } else { A::zero_like() };
            if self.coeffs[0][p] != expected {
                return Err(SeriesError::NotUnital);
            }
        }
        let minus_one = A::Scalar::from_i64(-1);
        let mut x = self.blank();
        for r in 1..self.coeffs.len() {
            x.coeffs[r] = self.coeffs[r].iter().map(|c| c.scale(&minus_one)).collect();
        }
        let identity = Self::unital(n, self.order(), |_, _, _| A::zero_like());
        let mut acc = identity.clone();
        let mut power = identity;
        // x has no constant term, so x^j starts at u^{-j}
        for _ in 0..self.order() {
            power = power.multiply(&x)?;
            acc = acc.add(&power)?;
        }
        acc.bound = self.bound;
        acc.check()
    }

    /// `T(u + s)` re-expanded in `u^{-1}`.
    pub fn shift(&self, s: &A::Scalar) -> Result<Self, SeriesError> {
        let mut out = self.blank();
        out.coeffs[0] = self.coeffs[0].clone();
        let order = self.order();
        for k in 1..=order {
            // (u + s)^{-k} = sum_j (-1)^j C(k+j-1, j) s^j u^{-k-j}
            let mut s_pow = A::Scalar::one();
            for j in 0..=order - k {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let c = A::Scalar::from_integer(&(binomial((k + j - 1) as u64, j as u64) * sign)).mul(&s_pow);
                if !c.is_zero() {
                    for p in 0..self.n * self.n {
                        let slot = &mut out.coeffs[k + j][p];
                        *slot = slot.add(&self.coeffs[k][p].scale(&c));
                    }
                }
                s_pow = s_pow.mul(s);
            }
        }
        out.check()
    }

    /// `T(-u)`: the coefficient of `u^{-r}` picks up `(-1)^r`.
    pub fn negate(&self) -> Self {
        let minus_one = A::Scalar::from_i64(-1);
        let mut out = self.clone();
        for (r, c) in out.coeffs.iter_mut().enumerate() {
            if r % 2 == 1 {
                for x in c.iter_mut() {
                    *x = x.scale(&minus_one);
                }
            }
        }
        out
    }

    /// `T(-u - c)^{-1}`.
    pub fn omega(&self, c: &A::Scalar) -> Result<Self, SeriesError> {
        self.negate().shift(c)?.invert()
    }
}

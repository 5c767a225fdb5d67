//! The evaluation functor at `t = N`: `V` becomes `Q^N`, `V*` its dual, and
//! a diagram becomes the product of Kronecker deltas over its pairs.
//!
//! Legs map to tensor factors left to right, the leftmost factor being the
//! most significant digit of a row or column index.

use thiserror::Error;

use crate::diagram::{BrauerDiagram, DiagramError, Morphism, Signature};
use crate::field::{rat, Field, FieldError, RatFunc, Rational};
use crate::linalg::rank;

/// Largest number of matrix entries `realize` will allocate.
pub const MAX_ENTRIES: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("N must be at least 1")]
    ZeroDimension,
    #[error("coefficient has a pole at t = {0}")]
    Pole(usize),
    #[error("realization would need {0} entries")]
    TooLarge(u128),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// An exact `N^|target| x N^|source|` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTensorMap {
    source: Signature,
    target: Signature,
    n: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl DenseTensorMap {
    pub fn zero(source: Signature, target: Signature, n: usize) -> Result<Self, TensorError> {
        if n == 0 {
            return Err(TensorError::ZeroDimension);
        }
        let size = (n as u128).pow((source.len() + target.len()) as u32);
        if size > MAX_ENTRIES as u128 {
            return Err(TensorError::TooLarge(size));
        }
        let rows = n.pow(target.len() as u32);
        let cols = n.pow(source.len() as u32);
        Ok(DenseTensorMap { source, target, n, rows, cols, entries: vec![Rational::zero(); rows * cols] })
    }

    pub fn identity(sig: &Signature, n: usize) -> Result<Self, TensorError> {
        let mut m = Self::zero(sig.clone(), sig.clone(), n)?;
        for i in 0..m.rows {
            m.entries[i * m.cols + i] = Rational::one();
        }
        Ok(m)
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Matrix product `self . rhs` (apply `rhs` first).
    pub fn after(&self, rhs: &DenseTensorMap) -> Option<DenseTensorMap> {
        if rhs.target != self.source || rhs.n != self.n {
            return None;
        }
        let mut out = DenseTensorMap::zero(rhs.source.clone(), self.target.clone(), self.n).ok()?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * out.cols + j] += a * b;
                    }
                }
            }
        }
        Some(out)
    }

    /// Kronecker product, `self` on the left factors.
    pub fn kron(&self, other: &DenseTensorMap) -> Option<DenseTensorMap> {
        if self.n != other.n {
            return None;
        }
        let mut out =
            DenseTensorMap::zero(self.source.concat(&other.source), self.target.concat(&other.target), self.n).ok()?;
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            let (r, c) = (i1 * other.rows + i2, j1 * other.cols + j2);
                            out.entries[r * out.cols + c] = a * b;
                        }
                    }
                }
            }
        }
        Some(out)
    }

    fn add_scaled_diagram(&mut self, d: &BrauerDiagram, c: &Rational) {
        let n = self.n;
        let s = self.source.len();
        let legs = s + self.target.len();
        let pairs = d.pairs();
        let mut values = vec![0usize; legs];
        let mut choice = vec![0usize; pairs.len()];
        loop {
            for (p, &(a, b)) in pairs.iter().enumerate() {
                values[a] = choice[p];
                values[b] = choice[p];
            }
            let col = values[..s].iter().fold(0, |acc, v| acc * n + v);
            let row = values[s..].iter().fold(0, |acc, v| acc * n + v);
            self.entries[row * self.cols + col] += c;
            // next assignment of an index to each pair
            let mut p = 0;
            loop {
                if p == choice.len() {
                    return;
                }
                choice[p] += 1;
                if choice[p] < n {
                    break;
                }
                choice[p] = 0;
                p += 1;
            }
        }
    }
}

/// Realize one diagram with coefficient one.
pub fn realize_diagram(d: &BrauerDiagram, n: usize) -> Result<DenseTensorMap, TensorError> {
    let mut m = DenseTensorMap::zero(d.source().clone(), d.target().clone(), n)?;
    m.add_scaled_diagram(d, &Rational::one());
    Ok(m)
}

/// The evaluation functor on a morphism, coefficients evaluated at `t = n`.
pub fn realize(f: &Morphism, n: usize) -> Result<DenseTensorMap, TensorError> {
    let mut m = DenseTensorMap::zero(f.source().clone(), f.target().clone(), n)?;
    let t0 = rat(n as i64);
    for (d, c) in f.terms().iter() {
        let c = c.evaluate(&t0).map_err(|e| match e {
            FieldError::Pole(_) => TensorError::Pole(n),
            other => panic!("unexpected evaluation error {other}"),
        })?;
        m.add_scaled_diagram(d, &c);
    }
    Ok(m)
}

/// Composition that forgets the factor `t` per closed loop. Only useful as
/// a negative control for [`functoriality_check_with`].
pub fn compose_without_loop_factor(f: &Morphism, g: &Morphism) -> Result<Morphism, DiagramError> {
    let mut out = Morphism::zero(f.source().clone(), g.target().clone());
    for (df, cf) in f.terms().iter() {
        for (dg, cg) in g.terms().iter() {
            let (d, _loops) = df.compose(dg)?;
            out = out.add(&Morphism::from_term(d, cf.mul(cg)))?;
        }
    }
    Ok(out)
}

/// `realize(g . f) == realize(g) realize(f)` with composition supplied by the caller.
pub fn functoriality_check_with(
    f: &Morphism,
    g: &Morphism,
    n: usize,
    compose: impl Fn(&Morphism, &Morphism) -> Result<Morphism, DiagramError>,
) -> Result<bool, TensorError> {
    let gf = compose(f, g)?;
    let lhs = realize(&gf, n)?;
    let rhs = realize(g, n)?.after(&realize(f, n)?).ok_or_else(|| DiagramError::SignatureMismatch { left: g.source().clone(), right: f.target().clone() })?;
    Ok(lhs == rhs)
}

pub fn functoriality_check(f: &Morphism, g: &Morphism, n: usize) -> Result<bool, TensorError> {
    functoriality_check_with(f, g, n, |a, b| a.then(b))
}

/// Rank of the realized diagram basis of `End(sig)` at `t = n`.
pub fn faithfulness_rank(sig: &Signature, n: usize) -> Result<usize, TensorError> {
    let rows = BrauerDiagram::enumerate(sig, sig)
        .iter()
        .map(|d| realize_diagram(d, n).map(|m| m.entries))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rank(&rows))
}

/// Random element of `Hom(source, target)` with small integer coefficients,
/// some multiplied by `t` so that loop factors matter.
pub fn random_morphism(source: &Signature, target: &Signature, rng: &mut impl rand::Rng) -> Morphism {
    let mut acc = Morphism::zero(source.clone(), target.clone());
    for d in BrauerDiagram::enumerate(source, target) {
        let c = RatFunc::from_i64(rng.gen_range(-2..=2));
        let c = if rng.gen_bool(0.5) { c.mul(&RatFunc::t()) } else { c };
        acc = acc.add(&Morphism::from_term(d, c)).expect("same hom space");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Letter;

    #[test]
    fn loop_is_dimension() {
        let f = Morphism::coev().then(&Morphism::ev()).unwrap();
        let m = realize(&f, 3).unwrap();
        assert_eq!(m.shape(), (1, 1));
        assert_eq!(m.get(0, 0), &rat(3));
        assert_eq!(realize(&Morphism::identity(&Signature::empty()), 4).unwrap().get(0, 0), &rat(1));
    }

    #[test]
    fn identity_realizes_to_identity() {
        let sig = Signature::kl(1, 1);
        for n in 1..=3 {
            assert_eq!(realize(&Morphism::identity(&sig), n).unwrap(), DenseTensorMap::identity(&sig, n).unwrap());
        }
    }

    #[test]
    fn rank_one_projector() {
        let e = Morphism::ev().then(&Morphism::coev()).unwrap();
        let m = realize(&e, 2).unwrap();
        assert_eq!(m.shape(), (4, 4));
        assert_eq!(m.trace(), rat(2));
        assert_eq!(rank(&m.to_rows()), 1);
        let sq = m.after(&m).unwrap();
        let mut twice = m.clone();
        for x in twice.entries.iter_mut() {
            *x *= rat(2);
        }
        assert_eq!(sq, twice);
    }

    #[test]
    fn crossing_swaps_factors() {
        let m = realize(&Morphism::crossing(Letter::V, Letter::V), 2).unwrap();
        // e_0 (x) e_1 = column 1 goes to e_1 (x) e_0 = row 2
        assert_eq!(m.get(2, 1), &rat(1));
        assert_eq!(m.get(1, 1), &rat(0));
    }

    #[test]
    fn pole_is_reported() {
        let c = RatFunc::normalize(crate::field::Poly::one(), crate::field::Poly::from_ints(&[-2, 1])).unwrap();
        let f = Morphism::from_term(BrauerDiagram::identity(&Signature::kl(1, 0)), c);
        assert_eq!(realize(&f, 2), Err(TensorError::Pole(2)));
        assert!(realize(&f, 3).is_ok());
    }

    #[test]
    fn faithfulness_examples() {
        assert_eq!(faithfulness_rank(&Signature::kl(1, 1), 2).unwrap(), 2);
        assert_eq!(faithfulness_rank(&Signature::kl(2, 1), 3).unwrap(), 6);
        assert_eq!(faithfulness_rank(&Signature::kl(1, 1), 1).unwrap(), 1);
    }

    #[test]
    fn snake_and_corrupted_composer() {
        let v = Signature::kl(1, 0);
        let id = Morphism::identity(&v);
        let f = id.tensor(&Morphism::coev_dual());
        let g = Morphism::ev().tensor(&id);
        assert!(functoriality_check(&f, &g, 3).unwrap());
        assert_eq!(realize(&f.then(&g).unwrap(), 3).unwrap(), DenseTensorMap::identity(&v, 3).unwrap());

        let e = Morphism::ev().then(&Morphism::coev()).unwrap();
        assert!(functoriality_check(&e, &e, 3).unwrap());
        assert!(!functoriality_check_with(&e, &e, 3, compose_without_loop_factor).unwrap());
    }
}

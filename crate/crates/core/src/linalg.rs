//! Exact rank computations over any [`Field`].

use std::collections::BTreeMap;
use std::ops::Bound;

use crate::field::{Field, Poly, RatFunc, Rational};

/// Rank of a dense matrix by Gaussian elimination.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            m[rank][c] = m[rank][c].mul(&inv);
        }
        for r in 0..m.len() {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..ncols {
                let delta = factor.mul(&m[rank][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = det.neg();
        }
        det = det.mul(&m[col][col]);
        let inv = m[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].mul(&inv);
            for c in col..n {
                let delta = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
    }
    det
}

/// Rank over `Q(t)` by specialization.
///
/// Rows are first cleared of denominators, which leaves the generic rank
/// unchanged. If the entries then have degree at most `d`, a nonzero
/// `r x r` minor has degree at most `r*d`, so it is nonzero at one of any
/// `r*d + 1` distinct points. The maximum rank over that many evaluation
/// points is therefore exactly the rank over `Q(t)`.
pub fn rank_over_ratfunc(rows: &[Vec<RatFunc>]) -> usize {
    let poly_rows: Vec<Vec<Poly>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let ncols = poly_rows.first().map_or(0, |r| r.len());
    let full = poly_rows.len().min(ncols);
    let d = poly_rows.iter().flatten().filter_map(Poly::degree).max().unwrap_or(0);
    let mut best = 0;
    for point in 0..=(full * d) as i64 {
        let x = Rational::from_integer(point.into());
        let numeric: Vec<Vec<Rational>> =
            poly_rows.iter().map(|r| r.iter().map(|p| p.evaluate(&x)).collect()).collect();
        best = best.max(rank(&numeric));
        if best == full {
            break;
        }
    }
    best
}

fn clear_denominators(row: &[RatFunc]) -> Vec<Poly> {
    let mut lcm = Poly::one();
    for x in row {
        let g = lcm.gcd(x.den());
        lcm = lcm.mul(&x.den().exact_div(&g).expect("gcd divides"));
    }
    row.iter().map(|x| x.num().mul(&lcm.exact_div(x.den()).expect("lcm is a multiple"))).collect()
}

/// Incrementally built semi-echelon basis of sparse vectors indexed by `K`.
///
/// Each stored vector has coefficient one at its smallest key and no other
/// stored vector has that key as pivot.
#[derive(Debug, Clone)]
pub struct SparseEchelon<K: Ord + Clone, F: Field> {
    basis: BTreeMap<K, BTreeMap<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for SparseEchelon<K, F> {
    fn default() -> Self {
        SparseEchelon { basis: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> SparseEchelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduce `v` against the basis; returns the residue.
    pub fn reduce(&self, mut v: BTreeMap<K, F>) -> BTreeMap<K, F> {
        let mut cursor: Option<K> = None;
        loop {
            let lower = match &cursor {
                None => Bound::Unbounded,
                Some(k) => Bound::Excluded(k.clone()),
            };
            let next = v
                .range((lower, Bound::Unbounded))
                .find(|(k, _)| self.basis.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((key, coeff)) = next else {
                return v;
            };
            subtract_scaled(&mut v, &self.basis[&key], &coeff);
            cursor = Some(key);
        }
    }

    /// Insert `v`; returns `true` when it was independent of the basis.
    pub fn insert(&mut self, v: BTreeMap<K, F>) -> bool {
        let mut r = self.reduce_to_pivot(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        for c in r.values_mut() {
            *c = c.mul(&inv);
        }
        self.basis.insert(pivot, r);
        true
    }

    /// Reduce only until the smallest key is not a pivot.
    fn reduce_to_pivot(&self, mut v: BTreeMap<K, F>) -> BTreeMap<K, F> {
        loop {
            let Some((key, coeff)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            let Some(b) = self.basis.get(&key) else {
                return v;
            };
            subtract_scaled(&mut v, b, &coeff);
        }
    }

    /// Whether `v` lies in the span of the basis.
    pub fn contains(&self, v: BTreeMap<K, F>) -> bool {
        self.reduce(v).is_empty()
    }
}

fn subtract_scaled<K: Ord + Clone, F: Field>(v: &mut BTreeMap<K, F>, b: &BTreeMap<K, F>, coeff: &F) {
    for (bk, bc) in b {
        let delta = coeff.mul(bc);
        let entry = v.entry(bk.clone()).or_insert_with(F::zero);
        *entry = entry.sub(&delta);
        if entry.is_zero() {
            v.remove(bk);
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<K: Ord + Clone, F: Field>(vectors: impl IntoIterator<Item = BTreeMap<K, F>>) -> usize {
    let mut ech = SparseEchelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Fp};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn dense_rank() {
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&q(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank::<Rational>(&[]), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m: Vec<Vec<Fp<5>>> = vec![vec![Fp::new(1), Fp::new(2)], vec![Fp::new(3), Fp::new(1)]];
        // det = 1 - 6 = -5
        assert_eq!(rank(&m), 1);
        assert_eq!(rank(&q(&[&[1, 2], &[3, 1]])), 2);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&q(&[&[1, 2], &[3, 4]])), rat(-2));
        assert_eq!(determinant(&q(&[&[0, 1], &[1, 0]])), rat(-1));
    }

    #[test]
    fn symbolic_rank_matches_elimination_in_field() {
        let t = RatFunc::t();
        let t2 = t.mul(&t);
        let m = vec![vec![t2.clone(), t.clone()], vec![t.clone(), t2.clone()]];
        assert_eq!(rank_over_ratfunc(&m), 2);
        assert_eq!(rank(&m), 2);
        let singular = vec![vec![t.clone(), t2.clone()], vec![RatFunc::one(), t.clone()]];
        assert_eq!(rank_over_ratfunc(&singular), 1);
        assert_eq!(rank(&singular), 1);
    }

    #[test]
    fn sparse_echelon_detects_dependence() {
        let v = |pairs: &[(u32, i64)]| pairs.iter().map(|&(k, c)| (k, rat(c))).collect::<BTreeMap<_, _>>();
        let mut e = SparseEchelon::new();
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(e.insert(v(&[(2, 1), (3, 1)])));
        assert!(!e.insert(v(&[(1, 1), (3, -1)])));
        assert!(e.contains(v(&[(1, 2), (2, 3), (3, 1)])));
        assert!(!e.contains(v(&[(3, 1)])));
        assert!(e.insert(v(&[(3, 5)])));
        assert_eq!(e.rank(), 3);
        assert!(!e.insert(BTreeMap::new()));
    }
}

//! The maps `Y(gl_n) (x) A_0 -> U(gl_M)`, `M = N + n`, at finite `N`.
//!
//! The small block `gl_n` sits at indices `1..=n`, the large block at
//! `n+1..=M`. The image of `t[r;i,j]` is the coefficient of `u^{-r}` in
//! entry `(i,j)` of `omega_c(1 + E u^{-1}) = (1 - E/(u + c))^{-1}` with
//! `E = (E_ab)` the `M x M` matrix of generators and `c = M`. Expanding,
//!
//! ```text
//! psi(r, i, j) = sum_{k=1}^{r} C(r-1, k-1) (-c)^(r-k) (E^k)_ij
//! ```
//!
//! which is what the series computation produces. Membership in the
//! centralizer and the homomorphism property hold for every `c`; the choice
//! `c = M` only fixes the lower-order terms.
//!
//! `x_k` in `A_0` maps to the Gelfand invariant `tr(E^k)` of `gl_M`.

use std::collections::BTreeMap;

use crate::algebra::NcElement;
use crate::envelope::{self, gelfand, GlGen, UElement};
use crate::field::{interpolate, rat, Field, Poly, Rational};
use crate::linalg::SparseEchelon;
use crate::yangian::{relations_up_to, sorted_words, MatrixSeries, YGen};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockConvention {
    pub n: usize,
    pub big_n: usize,
}

impl BlockConvention {
    pub fn new(n: usize, big_n: usize) -> Self {
        assert!(n >= 1 && big_n >= 1, "both blocks must be nonempty");
        BlockConvention { n, big_n }
    }

    /// `M = N + n`.
    pub fn total(&self) -> usize {
        self.n + self.big_n
    }

    pub fn small_block(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    pub fn large_block(&self) -> Vec<usize> {
        (self.n + 1..=self.total()).collect()
    }

    /// The shift constant in `omega`.
    pub fn shift(&self) -> usize {
        self.total()
    }
}

/// A monomial of `Y_n (x) A_0`: a sorted word in the Yangian generators and
/// a multiset of `x_k`, listed as the degrees `k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedMonomial {
    pub y: Vec<YGen>,
    pub x: Vec<usize>,
}

impl MixedMonomial {
    pub fn degree(&self) -> usize {
        self.y.iter().map(|g| g.level).sum::<usize>() + self.x.iter().sum::<usize>()
    }
}

/// Partitions of `m` as nonincreasing part lists.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// The monomial basis of `F^m(Y_n (x) A_0)`.
pub fn mixed_basis(n: usize, m: usize) -> Vec<MixedMonomial> {
    let mut out = Vec::new();
    for y in sorted_words(n, m) {
        let k: usize = y.iter().map(|g| g.level).sum();
        for rest in 0..=m - k {
            for x in partitions(rest) {
                out.push(MixedMonomial { y: y.clone(), x });
            }
        }
    }
    out
}

/// Images of generators for one block convention, computed once up to a
/// fixed order.
pub struct Centralizer<F: Field> {
    conv: BlockConvention,
    series: MatrixSeries<UElement<F>>,
    zeds: BTreeMap<usize, UElement<F>>,
}

impl<F: Field> Centralizer<F> {
    /// Prepare images of `t[r;i,j]` for `r <= order`.
    pub fn new(conv: BlockConvention, order: usize) -> Self {
        let m = conv.total();
        let t = MatrixSeries::unital(m, order, |r, i, j| if r == 1 { envelope::gen(i, j) } else { UElement::zero() });
        let c = F::from_i64(conv.shift() as i64);
        let series = t.omega(&c).expect("unital series inverts");
        Centralizer { conv, series, zeds: BTreeMap::new() }
    }

    pub fn convention(&self) -> BlockConvention {
        self.conv
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn psi(&self, r: usize, i: usize, j: usize) -> UElement<F> {
        assert!(i <= self.conv.n && j <= self.conv.n, "psi is defined on the small block");
        assert!(r <= self.order(), "level {r} above the prepared order {}", self.order());
        self.series.entry(r, i, j).clone()
    }

    pub fn zed(&mut self, k: usize) -> UElement<F> {
        let m = self.conv.total();
        self.zeds.entry(k).or_insert_with(|| gelfand(k, m)).clone()
    }

    pub fn psi_word(&self, w: &[YGen]) -> UElement<F> {
        w.iter().fold(UElement::one(), |acc, g| acc.mul(&self.psi(g.level, g.i, g.j)))
    }

    pub fn phi(&mut self, mono: &MixedMonomial) -> UElement<F> {
        let mut acc = self.psi_word(&mono.y);
        for &k in &mono.x {
            acc = acc.mul(&self.zed(k));
        }
        acc
    }

    /// Whether `x` commutes with the large block.
    pub fn in_centralizer(&self, x: &UElement<F>) -> bool {
        envelope::centralizer_membership(x, &self.conv.large_block())
    }

    /// Defining relations with both levels at most `max_level` whose image is nonzero.
    pub fn homomorphism_failures(&self, max_level: usize) -> Vec<(YGen, YGen)> {
        let top = 2 * max_level;
        relations_up_to(self.conv.n, top)
            .into_iter()
            .filter(|((x, y), _)| x.level <= max_level && y.level <= max_level)
            .filter(|(_, rel)| {
                let mut acc = UElement::<F>::zero();
                for (w, c) in rel {
                    acc = acc.add(&self.psi_word(w).scale(&F::from_integer(c)));
                }
                !acc.is_zero()
            })
            .map(|(pair, _)| pair)
            .collect()
    }
}

/// Rank of the images of the basis of `F^m(Y_n (x) A_0)` and the size of that basis.
pub fn injectivity_rank(m: usize, conv: BlockConvention) -> (usize, usize) {
    let basis = mixed_basis(conv.n, m);
    let mut lab: Centralizer<Rational> = Centralizer::new(conv, m.max(1));
    let mut ech: SparseEchelon<Vec<GlGen>, Rational> = SparseEchelon::new();
    for mono in &basis {
        let img = lab.phi(mono);
        ech.insert(img.terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect());
    }
    (ech.rank(), basis.len())
}

/// `injectivity_rank(m)` for each `N` in `ns`.
pub fn stabilization(m: usize, n: usize, ns: &[usize]) -> Vec<(usize, usize, usize)> {
    ns.iter()
        .map(|&big_n| {
            let (rank, expected) = injectivity_rank(m, BlockConvention::new(n, big_n));
            (big_n, rank, expected)
        })
        .collect()
}

/// A structure coefficient: the coefficient of a fixed PBW word in the image of a mixed monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCoefficient {
    pub expr: MixedMonomial,
    pub word: Vec<GlGen>,
}

impl StructureCoefficient {
    pub fn evaluate(&self, n: usize, big_n: usize) -> Rational {
        let order = self.expr.y.iter().map(|g| g.level).max().unwrap_or(1);
        let mut lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(n, big_n), order);
        NcElement::coefficient(&lab.phi(&self.expr), &self.word)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpError {
    #[error("degree bound violated or unstable pattern")]
    Inconsistent,
    #[error("need at least {0} samples")]
    TooFewSamples(usize),
}

/// Evaluate the coefficient at `t = N` for each sample, interpolate with
/// the first `degree_bound + 1` samples and check the remaining ones.
pub fn interp_structure(
    coeff: &StructureCoefficient,
    n: usize,
    samples: &[usize],
    degree_bound: usize,
) -> Result<Poly, InterpError> {
    if samples.len() < degree_bound + 1 {
        return Err(InterpError::TooFewSamples(degree_bound + 1));
    }
    let points: Vec<(Rational, Rational)> =
        samples.iter().map(|&big_n| (rat(big_n as i64), coeff.evaluate(n, big_n))).collect();
    let p = interpolate(&points[..degree_bound + 1], degree_bound).map_err(|_| InterpError::Inconsistent)?;
    if points[degree_bound + 1..].iter().any(|(x, y)| p.evaluate(x) != *y) {
        return Err(InterpError::Inconsistent);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::e;
    use crate::field::binomial;
    use crate::yangian::t;

    type U = UElement<Rational>;

    /// `(E^k)_ij` summed over all indices.
    fn matrix_power_entry(k: usize, i: usize, j: usize, m: usize) -> U {
        let mut row: Vec<U> = (1..=m).map(|b| envelope::gen(i, b)).collect();
        for _ in 1..k {
            row = (1..=m)
                .map(|b| (1..=m).fold(U::zero(), |acc, a| acc.add(&row[a - 1].mul(&envelope::gen(a, b)))))
                .collect();
        }
        row[j - 1].clone()
    }

    #[test]
    fn psi_matches_binomial_expansion() {
        let conv = BlockConvention::new(1, 2);
        let m = conv.total();
        let c = conv.shift() as i64;
        let lab: Centralizer<Rational> = Centralizer::new(conv, 3);
        for r in 1..=3 {
            let mut want = U::zero();
            for k in 1..=r {
                let coef = binomial((r - 1) as u64, (k - 1) as u64) * num_bigint::BigInt::from(-c).pow((r - k) as u32);
                want = want.add(&matrix_power_entry(k, 1, 1, m).scale(&Rational::from_integer(coef)));
            }
            assert_eq!(lab.psi(r, 1, 1), want, "r = {r}");
        }
        assert_eq!(lab.psi(1, 1, 1), envelope::gen(1, 1));
    }

    #[test]
    fn images_commute_with_large_block() {
        let mut lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(1, 2), 3);
        for r in 1..=3 {
            assert!(lab.in_centralizer(&lab.psi(r, 1, 1)));
        }
        let z = lab.zed(2);
        assert!(envelope::centralizer_membership(&z, &[1, 2, 3]));
        assert!(z.commutator(&lab.psi(2, 1, 1)).is_zero());
        // E_11 + E_22 is not in the centralizer of the large block {2, 3}
        assert!(!lab.in_centralizer(&envelope::gen(1, 1).add(&envelope::gen(2, 2))));
    }

    #[test]
    fn homomorphism_small() {
        let lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(1, 2), 3);
        assert!(lab.homomorphism_failures(1).is_empty());
        let lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(2, 1), 3);
        assert!(lab.homomorphism_failures(1).is_empty());
    }

    #[test]
    fn phi_examples() {
        let mut lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(1, 2), 2);
        assert_eq!(lab.phi(&MixedMonomial { y: vec![], x: vec![] }), U::one());
        let mono = MixedMonomial { y: vec![t(1, 1, 1)], x: vec![1] };
        let want = lab.psi(1, 1, 1).mul(&lab.zed(1));
        assert_eq!(lab.phi(&mono), want);
        assert!(lab.in_centralizer(&want));
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(mixed_basis(1, 1).len(), 3);
        assert_eq!(mixed_basis(1, 2).len(), 8);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn injectivity_small() {
        assert_eq!(injectivity_rank(1, BlockConvention::new(1, 2)), (3, 3));
    }

    #[test]
    fn interpolation_examples() {
        let z2 = StructureCoefficient { expr: MixedMonomial { y: vec![], x: vec![2] }, word: vec![e(1, 1)] };
        // coefficient 1 - M = -t for n = 1
        let p = interp_structure(&z2, 1, &[2, 3, 4, 5], 1).unwrap();
        assert_eq!(p, Poly::from_ints(&[0, -1]));
        let z11 = StructureCoefficient { expr: MixedMonomial { y: vec![], x: vec![1, 1] }, word: vec![e(1, 1), e(2, 2)] };
        assert_eq!(interp_structure(&z11, 1, &[2, 3, 4], 0).unwrap(), Poly::from_ints(&[2]));
        assert_eq!(interp_structure(&z2, 1, &[2, 3, 4], 0), Err(InterpError::Inconsistent));
    }
}

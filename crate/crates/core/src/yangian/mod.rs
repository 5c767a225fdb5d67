//! The Yangian `Y(gl_n)` with `T(u) = 1 + sum_r t[r;i,j] u^{-r}` and
//! `R(u) = 1 - u^{-1} P`.
//!
//! The commutation rules are not typed in: for each pair of generators the
//! coefficient of `u^{-r} v^{-s}` in `R(u-v) T_1(u) T_2(v) - T_2(v) T_1(u) R(u-v)`
//! is extracted from an explicit matrix computation over the free algebra,
//! and its top part `[t^(r)_ij, t^(s)_kl]` is solved for.
//!
//! Generators are ordered lexicographically on `(level, i, j)`.

pub mod series;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{word_weight, Generator, IntComb, Memo, NcElement};
use crate::envelope::{self, UElement};
use crate::field::Field;
use crate::linalg::SparseEchelon;

pub use series::{MatrixSeries, SeriesAlgebra, SeriesError};

/// `t[r;i,j]`, level `r >= 1`, indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YGen {
    pub level: usize,
    pub i: usize,
    pub j: usize,
}

pub fn t(level: usize, i: usize, j: usize) -> YGen {
    assert!(level >= 1, "generator levels start at one");
    YGen { level, i, j }
}

impl fmt::Display for YGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{};{},{}]", self.level, self.i, self.j)
    }
}

static Y_MEMO: LazyLock<Memo<YGen>> = LazyLock::new(Default::default);
static Y_RULES: LazyLock<Mutex<HashMap<(YGen, YGen), Arc<IntComb<YGen>>>>> = LazyLock::new(Default::default);

impl Generator for YGen {
    fn weight(&self) -> usize {
        self.level
    }

    fn commutator(&self, other: &Self) -> Arc<IntComb<Self>> {
        let key = (*self, *other);
        if let Some(hit) = Y_RULES.lock().expect("rules lock").get(&key) {
            return hit.clone();
        }
        let rule = Arc::new(solve_commutator(self, other));
        Y_RULES.lock().expect("rules lock").insert(key, rule.clone());
        rule
    }

    fn parse_prefix(s: &str) -> Option<(Self, &str)> {
        let rest = s.strip_prefix("t[")?;
        let (inside, rest) = rest.split_once(']')?;
        let (r, ij) = inside.split_once(';')?;
        let (i, j) = ij.split_once(',')?;
        let level: usize = r.trim().parse().ok()?;
        (level >= 1).then_some(())?;
        Some((YGen { level, i: i.trim().parse().ok()?, j: j.trim().parse().ok()? }, rest))
    }

    fn memo() -> &'static Memo<Self> {
        &Y_MEMO
    }
}

/// Element of the Yangian in PBW normal form.
pub type YElement<F> = NcElement<YGen, F>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YangianError {
    #[error("word has degree {degree}, above the truncation bound {bound}")]
    Truncation { degree: usize, bound: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

// ---- coefficient extraction over the free algebra ----

type Free = IntComb<YGen>;
/// Bivariate series keyed by the exponents of `u^{-1}` and `v^{-1}`.
type Series2 = BTreeMap<(i32, i32), Free>;

fn free_add(acc: &mut Free, x: &Free, c: &BigInt) {
    for (w, v) in x {
        let e = acc.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += v * c;
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

fn free_mul(x: &Free, y: &Free) -> Free {
    let mut out = Free::new();
    for (w1, c1) in x {
        for (w2, c2) in y {
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            let e = out.entry(w).or_insert_with(BigInt::zero);
            *e += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn unit_free() -> Free {
    [(Vec::new(), BigInt::one())].into()
}

/// Square matrix of bivariate series, row-major.
struct Mat {
    d: usize,
    e: Vec<Series2>,
}

impl Mat {
    fn zero(d: usize) -> Mat {
        Mat { d, e: vec![Series2::new(); d * d] }
    }

    fn mul(&self, other: &Mat, max_u: i32) -> Mat {
        let d = self.d;
        let mut out = Mat::zero(d);
        for i in 0..d {
            for k in 0..d {
                let x = &self.e[i * d + k];
                if x.is_empty() {
                    continue;
                }
                for j in 0..d {
                    let y = &other.e[k * d + j];
                    for (&(a1, b1), f1) in x {
                        for (&(a2, b2), f2) in y {
                            if a1 + a2 > max_u {
                                continue;
                            }
                            let slot = out.e[i * d + j].entry((a1 + a2, b1 + b2)).or_default();
                            free_add(slot, &free_mul(f1, f2), &BigInt::one());
                        }
                    }
                }
            }
        }
        for s in out.e.iter_mut() {
            s.retain(|_, f| !f.is_empty());
        }
        out
    }
}

/// Series `T(u)` entry `(i, j)` up to level `top`, placed in the `u` slot
/// (`in_v = false`) or the `v` slot.
fn t_entry(i: usize, j: usize, top: usize, in_v: bool) -> Series2 {
    let mut s = Series2::new();
    if i == j {
        s.insert((0, 0), unit_free());
    }
    for r in 1..=top {
        let key = if in_v { (0, r as i32) } else { (r as i32, 0) };
        s.insert(key, [(vec![t(r, i, j)], BigInt::one())].into());
    }
    s
}

/// Coefficient of `u^{-r} v^{-s}` in the RTT expression, as an `n^2 x n^2`
/// matrix indexed by `(i,k),(j,l)` of free-algebra elements.
pub fn rtt_coefficient(n: usize, r: usize, s: usize) -> Vec<Free> {
    let d = n * n;
    let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let (ri, si) = (r as i32, s as i32);
    let mut t1 = Mat::zero(d);
    let mut t2 = Mat::zero(d);
    let mut rm = Mat::zero(d);
    for i in 1..=n {
        for k in 1..=n {
            for j in 1..=n {
                for l in 1..=n {
                    let p = idx(i, k) * d + idx(j, l);
                    if k == l {
                        t1.e[p] = t_entry(i, j, r, false);
                    }
                    if i == j {
                        t2.e[p] = t_entry(k, l, r + s - 1, true);
                    }
                    let mut entry = Series2::new();
                    if i == j && k == l {
                        entry.insert((0, 0), unit_free());
                    }
                    if i == l && k == j {
                        // -(u - v)^{-1} P with (u - v)^{-1} = sum_q v^q u^{-q-1}
                        for q in 0..ri {
                            entry.insert((q + 1, -q), [(Vec::new(), BigInt::from(-1))].into());
                        }
                    }
                    rm.e[p] = entry;
                }
            }
        }
    }
    let lhs = rm.mul(&t1, ri).mul(&t2, ri);
    let rhs = t2.mul(&t1, ri).mul(&rm, ri);
    (0..d * d)
        .map(|p| {
            let mut f = lhs.e[p].get(&(ri, si)).cloned().unwrap_or_default();
            if let Some(g) = rhs.e[p].get(&(ri, si)) {
                free_add(&mut f, g, &BigInt::from(-1));
            }
            f
        })
        .collect()
}

/// The defining relation attached to `(t[r;i,j], t[s;k,l])`: the
/// `u^{-r} v^{-s}` coefficient, entry `((i,k),(j,l))`, as a free-algebra element.
pub fn rtt_relation(x: &YGen, y: &YGen) -> Free {
    let n = [x.i, x.j, y.i, y.j].into_iter().max().expect("four indices");
    let d = n * n;
    let row = (x.i - 1) * n + (y.i - 1);
    let col = (x.j - 1) * n + (y.j - 1);
    rtt_coefficient(n, x.level, y.level).swap_remove(row * d + col)
}

fn solve_commutator(b: &YGen, a: &YGen) -> Free {
    let mut rel = rtt_relation(b, a);
    let ba = vec![*b, *a];
    let ab = vec![*a, *b];
    assert_eq!(rel.remove(&ba), Some(BigInt::one()), "relation must contain {b}{a} once");
    assert_eq!(rel.remove(&ab), Some(BigInt::from(-1)), "relation must contain -{a}{b} once");
    let top = b.level + a.level;
    assert!(rel.keys().all(|w| word_weight(w) < top), "lower terms must have smaller degree");
    // rel = ba - ab + rest = 0
    rel.into_iter().map(|(w, c)| (w, -c)).collect()
}

/// `[t[r;i,j], t[s;k,l]]` in normal form.
pub fn y_relations<F: Field>(r: usize, i: usize, j: usize, s: usize, k: usize, l: usize) -> YElement<F> {
    let (x, y) = (t(r, i, j), t(s, k, l));
    YElement::gen(x).commutator(&YElement::gen(y))
}

/// Normal form of a word, refusing words above the truncation bound.
pub fn straighten_y<F: Field>(word: &[YGen], m: usize) -> Result<YElement<F>, YangianError> {
    let degree = word_weight(word);
    if degree > m {
        return Err(YangianError::Truncation { degree, bound: m });
    }
    Ok(YElement::word(word))
}

/// All generators `t[r;i,j]` with `r <= m`, `i, j <= n`, in order.
pub fn generators(n: usize, m: usize) -> Vec<YGen> {
    let mut out = Vec::new();
    for r in 1..=m {
        for i in 1..=n {
            for j in 1..=n {
                out.push(t(r, i, j));
            }
        }
    }
    out
}

/// All words (not necessarily sorted) of total degree at most `m`.
pub fn free_words(n: usize, m: usize) -> Vec<Vec<YGen>> {
    let gens = generators(n, m);
    let mut out = vec![Vec::new()];
    let mut i = 0;
    while i < out.len() {
        let w = out[i].clone();
        let deg = word_weight(&w);
        for g in &gens {
            if deg + g.level <= m {
                let mut x = w.clone();
                x.push(*g);
                out.push(x);
            }
        }
        i += 1;
    }
    out
}

/// Sorted words of total degree at most `m`.
pub fn sorted_words(n: usize, m: usize) -> Vec<Vec<YGen>> {
    free_words(n, m).into_iter().filter(|w| w.windows(2).all(|p| p[0] <= p[1])).collect()
}

/// Every defining relation of total degree at most `m`, one per ordered pair of generators.
pub fn relations_up_to(n: usize, m: usize) -> Vec<((YGen, YGen), Free)> {
    let gens = generators(n, m);
    let mut out = Vec::new();
    for x in &gens {
        for y in &gens {
            if x.level + y.level <= m {
                out.push(((*x, *y), rtt_relation(x, y)));
            }
        }
    }
    out
}

/// Dimensions for the truncated PBW comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwCount {
    /// Words of degree `<= m` modulo the two-sided span of the relations inside that range.
    pub quotient_dim: usize,
    /// Sorted monomials of degree `<= m`.
    pub sorted_monomials: usize,
    /// Span of the normal forms of all words of degree `<= m`.
    pub normal_form_span: usize,
}

/// Compute the truncated PBW counts over `F`.
pub fn pbw_count<F: Field>(n: usize, m: usize) -> PbwCount {
    let words = free_words(n, m);
    let sorted = sorted_words(n, m);
    let mut ech: SparseEchelon<Vec<YGen>, F> = SparseEchelon::new();
    for (_, rel) in relations_up_to(n, m) {
        let rel_deg = rel.keys().map(|w| word_weight(w)).max().unwrap_or(0);
        for left in words.iter().filter(|w| word_weight(w) + rel_deg <= m) {
            for right in words.iter().filter(|w| word_weight(left) + rel_deg + word_weight(w) <= m) {
                let v: BTreeMap<Vec<YGen>, F> = rel
                    .iter()
                    .map(|(w, c)| {
                        let mut full = left.clone();
                        full.extend_from_slice(w);
                        full.extend_from_slice(right);
                        (full, F::from_integer(c))
                    })
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !v.is_empty() {
                    ech.insert(v);
                }
            }
        }
    }
    let mut span: SparseEchelon<Vec<YGen>, F> = SparseEchelon::new();
    for w in &words {
        let nf: YElement<F> = YElement::word(w);
        span.insert(nf.terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect());
    }
    PbwCount { quotient_dim: words.len() - ech.rank(), sorted_monomials: sorted.len(), normal_form_span: span.rank() }
}

// ---- series and automorphisms ----

/// `T(u)` with generator coefficients, truncated at order `m`.
pub fn t_series<F: Field>(n: usize, m: usize) -> MatrixSeries<YElement<F>> {
    MatrixSeries::unital(n, m, |r, i, j| YElement::gen(t(r, i, j))).with_bound(m)
}

/// The maps of the series `T(u)` studied here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesMap<F> {
    Shift(F),
    NegateU,
    Invert,
    Omega(F),
}

impl<F: Field> SeriesMap<F> {
    /// Anti-automorphisms reverse products.
    pub fn is_anti(&self) -> bool {
        matches!(self, SeriesMap::NegateU | SeriesMap::Invert)
    }

    pub fn name(&self) -> String {
        match self {
            SeriesMap::Shift(s) => format!("shift {s}"),
            SeriesMap::NegateU => "negate-u".into(),
            SeriesMap::Invert => "invert".into(),
            SeriesMap::Omega(c) => format!("omega {c}"),
        }
    }

    pub fn apply(&self, s: &MatrixSeries<YElement<F>>) -> Result<MatrixSeries<YElement<F>>, SeriesError> {
        match self {
            SeriesMap::Shift(c) => s.shift(c),
            SeriesMap::NegateU => Ok(s.negate()),
            SeriesMap::Invert => s.invert(),
            SeriesMap::Omega(c) => s.omega(c),
        }
    }
}

/// Generator images `t[r;i,j] -> coefficient of u^{-r}, entry (i,j)` of the mapped series.
pub struct Substitution<F: Field> {
    series: MatrixSeries<YElement<F>>,
}

impl<F: Field> Substitution<F> {
    pub fn new(map: &SeriesMap<F>, n: usize, m: usize) -> Result<Self, SeriesError> {
        Ok(Substitution { series: map.apply(&t_series(n, m))? })
    }

    pub fn image(&self, g: &YGen) -> YElement<F> {
        self.series.entry(g.level, g.i, g.j).clone()
    }

    /// Apply to a free-algebra element, reversing products when `reverse`.
    pub fn apply_free(&self, x: &Free, reverse: bool) -> YElement<F> {
        let mut acc = YElement::zero();
        for (w, c) in x {
            let mut prod = YElement::one();
            for g in w {
                let im = self.image(g);
                prod = if reverse { im.mul(&prod) } else { prod.mul(&im) };
            }
            acc = acc.add(&prod.scale(&F::from_integer(c)));
        }
        acc
    }

    pub fn apply(&self, x: &YElement<F>, reverse: bool) -> YElement<F> {
        x.substitute(&mut |g| self.image(g), reverse)
    }
}

#[derive(Debug, Clone)]
pub struct AutomorphismReport {
    pub map: String,
    pub relations_checked: usize,
    /// Relations whose image did not reduce to zero.
    pub failures: Vec<(YGen, YGen)>,
}

impl AutomorphismReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Map every defining relation of degree `<= m` and check it reduces to zero.
pub fn automorphism_check<F: Field>(map: &SeriesMap<F>, n: usize, m: usize) -> Result<AutomorphismReport, YangianError> {
    let sub = Substitution::new(map, n, m)?;
    let mut failures = Vec::new();
    let rels = relations_up_to(n, m);
    for (pair, rel) in &rels {
        if !sub.apply_free(rel, map.is_anti()).is_zero() {
            failures.push(*pair);
        }
    }
    Ok(AutomorphismReport { map: map.name(), relations_checked: rels.len(), failures })
}

/// Evaluation homomorphism `Y(gl_n) -> U(gl_n)`: `t[1;i,j] -> E[i,j]`, higher levels to zero.
pub fn eval_hom<F: Field>(y: &YElement<F>) -> UElement<F> {
    y.substitute(&mut |g| if g.level == 1 { envelope::gen(g.i, g.j) } else { UElement::zero() }, false)
}

//! Filtered algebras presented by generators and commutation rules, in PBW
//! normal form.
//!
//! A presentation supplies, for every descent `b > a`, the commutator
//! `b a - a b` as an integer combination of words of strictly smaller total
//! weight. Straightening swaps descents until every word is sorted; the
//! measure `(weight, inversions)` decreases, so it terminates. Normal forms
//! are computed over `Z` and mapped into the coefficient field afterwards.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{parse_rational, Field};
use crate::lincomb::LinComb;

/// Integer combination of words.
pub type IntComb<G> = BTreeMap<Vec<G>, BigInt>;

/// Memo table from words to their normal forms.
pub type Memo<G> = Mutex<HashMap<Vec<G>, Arc<IntComb<G>>>>;

pub trait Generator: Ord + Clone + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Filtration degree of the generator.
    fn weight(&self) -> usize;

    /// `self * other - other * self` for `self > other`, as words of total
    /// weight below `self.weight() + other.weight()`.
    fn commutator(&self, other: &Self) -> Arc<IntComb<Self>>;

    /// Parse one generator from the front of `s`, returning the rest.
    fn parse_prefix(s: &str) -> Option<(Self, &str)>;

    /// Shared normal-form memo for this presentation.
    fn memo() -> &'static Memo<Self>;
}

pub fn word_weight<G: Generator>(w: &[G]) -> usize {
    w.iter().map(Generator::weight).sum()
}

/// Which descent to swap first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostDescent,
    RightmostDescent,
}

fn add_into<G: Ord + Clone>(acc: &mut IntComb<G>, part: &IntComb<G>, c: &BigInt) {
    for (w, x) in part {
        let e = acc.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

fn descent<G: Ord>(word: &[G], strategy: Strategy) -> Option<usize> {
    let mut positions = (0..word.len().saturating_sub(1)).filter(|&i| word[i] > word[i + 1]);
    match strategy {
        Strategy::LeftmostDescent => positions.next(),
        Strategy::RightmostDescent => positions.last(),
    }
}

fn rewrite<G: Generator>(word: &[G], strategy: Strategy, lookup: &mut dyn FnMut(&[G]) -> Arc<IntComb<G>>) -> IntComb<G> {
    let Some(i) = descent(word, strategy) else {
        return [(word.to_vec(), BigInt::one())].into();
    };
    let mut swapped = word.to_vec();
    swapped.swap(i, i + 1);
    let mut out = (*lookup(&swapped)).clone();
    for (middle, c) in word[i].commutator(&word[i + 1]).iter() {
        let mut w = word[..i].to_vec();
        w.extend_from_slice(middle);
        w.extend_from_slice(&word[i + 2..]);
        add_into(&mut out, &lookup(&w), c);
    }
    out
}

/// Normal form of a word, memoized in the presentation's shared table.
pub fn straighten<G: Generator>(word: &[G]) -> Arc<IntComb<G>> {
    if let Some(hit) = G::memo().lock().expect("memo lock").get(word) {
        return hit.clone();
    }
    let nf = Arc::new(rewrite(word, Strategy::LeftmostDescent, &mut |w| straighten(w)));
    G::memo().lock().expect("memo lock").insert(word.to_vec(), nf.clone());
    nf
}

/// Normal form computed with a private table and the given strategy; used
/// to check that the answer does not depend on the rewriting order.
pub fn straighten_with<G: Generator>(word: &[G], strategy: Strategy) -> IntComb<G> {
    fn go<G: Generator>(w: &[G], s: Strategy, memo: &mut HashMap<Vec<G>, Arc<IntComb<G>>>) -> Arc<IntComb<G>> {
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let nf = Arc::new(rewrite(w, s, &mut |x| go(x, s, memo)));
        memo.insert(w.to_vec(), nf.clone());
        nf
    }
    let mut memo = HashMap::new();
    (*go(word, strategy, &mut memo)).clone()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse term `{0}`")]
    Term(String),
    #[error("coefficient `{0}` is not defined in this field")]
    Coefficient(String),
}

/// Element of a presented algebra in PBW normal form over `F`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NcElement<G: Ord, F: Field> {
    terms: LinComb<Vec<G>, F>,
}

impl<G: Generator, F: Field> Default for NcElement<G, F> {
    fn default() -> Self {
        NcElement { terms: LinComb::zero() }
    }
}

impl<G: Generator, F: Field> NcElement<G, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(c: F) -> Self {
        NcElement { terms: LinComb::term(Vec::new(), c) }
    }

    pub fn gen(g: G) -> Self {
        NcElement { terms: LinComb::term(vec![g], F::one()) }
    }

    /// The product of the generators in `word`, straightened.
    pub fn word(word: &[G]) -> Self {
        Self::from_int_comb(&straighten(word))
    }

    pub fn from_int_comb(c: &IntComb<G>) -> Self {
        NcElement { terms: c.iter().map(|(w, x)| (w.clone(), F::from_integer(x))).collect() }
    }

    /// Build from terms that are already sorted words.
    pub fn from_sorted_terms(terms: impl IntoIterator<Item = (Vec<G>, F)>) -> Self {
        let terms: LinComb<Vec<G>, F> = terms.into_iter().collect();
        debug_assert!(terms.keys().all(|w| w.windows(2).all(|p| p[0] <= p[1])));
        NcElement { terms }
    }

    pub fn terms(&self) -> &LinComb<Vec<G>, F> {
        &self.terms
    }

    pub fn coefficient(&self, word: &[G]) -> F {
        self.terms.get(&word.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Filtration degree; zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| word_weight(w)).max().unwrap_or(0)
    }

    /// The homogeneous component of weight `k`.
    pub fn component(&self, k: usize) -> Self {
        NcElement {
            terms: self.terms.iter().filter(|(w, _)| word_weight(w) == k).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        NcElement { terms: self.terms.add(&other.terms) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        NcElement { terms: self.terms.sub(&other.terms) }
    }

    pub fn neg(&self) -> Self {
        NcElement { terms: self.terms.neg() }
    }

    pub fn scale(&self, c: &F) -> Self {
        NcElement { terms: self.terms.scale(c) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: LinComb<Vec<G>, F> = LinComb::zero();
        for (w1, c1) in self.terms.iter() {
            for (w2, c2) in other.terms.iter() {
                let c = c1.mul(c2);
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                for (nw, x) in straighten(&w).iter() {
                    acc.add_term(nw.clone(), c.mul(&F::from_integer(x)));
                }
            }
        }
        NcElement { terms: acc }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Image under the (anti-)homomorphism determined by generator images.
    pub fn substitute<H: Generator>(
        &self,
        image: &mut impl FnMut(&G) -> NcElement<H, F>,
        reverse: bool,
    ) -> NcElement<H, F> {
        let mut acc = NcElement::zero();
        for (w, c) in self.terms.iter() {
            let mut prod = NcElement::one();
            for g in w {
                let x = image(g);
                prod = if reverse { x.mul(&prod) } else { prod.mul(&x) };
            }
            acc = acc.add(&prod.scale(c));
        }
        acc
    }

    /// Parse the textual form `c1*g g ... + c2*g ...`; each term is read as a
    /// product and straightened.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Self::zero());
        }
        let mut acc = Self::zero();
        for raw in s.split(" + ") {
            let term = raw.trim();
            let (coeff, word) = match term.split_once('*') {
                Some((c, w)) => (c.trim(), w.trim()),
                None if term.starts_with(|ch: char| ch.is_ascii_digit() || ch == '-') => (term, "1"),
                None => ("1", term),
            };
            let q = parse_rational(coeff).ok_or_else(|| ParseError::Term(term.to_string()))?;
            let c = F::from_rational(&q).ok_or_else(|| ParseError::Coefficient(coeff.to_string()))?;
            let mut gens = Vec::new();
            if word != "1" {
                let mut rest = word;
                while !rest.is_empty() {
                    let (g, r) = G::parse_prefix(rest).ok_or_else(|| ParseError::Term(term.to_string()))?;
                    gens.push(g);
                    rest = r.trim_start();
                }
            }
            acc = acc.add(&Self::word(&gens).scale(&c));
        }
        Ok(acc)
    }
}

impl<G: Generator, F: Field> fmt::Display for NcElement<G, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("{c}*1")
                } else {
                    let word: String = w.iter().map(|g| g.to_string()).collect();
                    format!("{c}*{word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Number of sorted words of total weight at most `m` when there are
/// `per_weight[k]` generators of weight `k + 1`.
pub fn sorted_monomial_count(per_weight: &[usize], m: usize) -> usize {
    // coefficients of prod_k (1 - q^k)^{-per_weight[k-1]}
    let mut series = vec![0usize; m + 1];
    series[0] = 1;
    for (k, &count) in per_weight.iter().enumerate() {
        let w = k + 1;
        for _ in 0..count {
            for d in w..=m {
                series[d] += series[d - w];
            }
        }
    }
    series.iter().sum()
}

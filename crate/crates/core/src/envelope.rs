//! `U(gl_M)` with generators `E[a,b]`, ordered lexicographically on `(a, b)`,
//! and relations `[E_ab, E_cd] = d_bc E_ad - d_da E_cb`.
//!
//! Nothing here depends on `M` except the index ranges passed by callers:
//! the straightening rules are the same for every `M`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;

use crate::algebra::{Generator, IntComb, Memo, NcElement};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlGen {
    pub a: usize,
    pub b: usize,
}

/// `E[a,b]`, 1-indexed.
pub fn e(a: usize, b: usize) -> GlGen {
    GlGen { a, b }
}

impl fmt::Display for GlGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.a, self.b)
    }
}

static GL_MEMO: LazyLock<Memo<GlGen>> = LazyLock::new(Default::default);

impl Generator for GlGen {
    fn weight(&self) -> usize {
        1
    }

    fn commutator(&self, other: &Self) -> Arc<IntComb<Self>> {
        let mut out = IntComb::new();
        if self.b == other.a {
            *out.entry(vec![e(self.a, other.b)]).or_default() += 1;
        }
        if other.b == self.a {
            *out.entry(vec![e(other.a, self.b)]).or_default() -= 1;
        }
        out.retain(|_, c: &mut BigInt| *c != BigInt::from(0));
        Arc::new(out)
    }

    fn parse_prefix(s: &str) -> Option<(Self, &str)> {
        let rest = s.strip_prefix("E[")?;
        let (inside, rest) = rest.split_once(']')?;
        let (a, b) = inside.split_once(',')?;
        Some((e(a.trim().parse().ok()?, b.trim().parse().ok()?), rest))
    }

    fn memo() -> &'static Memo<Self> {
        &GL_MEMO
    }
}

/// Element of `U(gl_M)` in PBW normal form.
pub type UElement<F> = NcElement<GlGen, F>;

/// Normal form of a product of generators.
pub fn straighten<F: Field>(word: &[GlGen]) -> UElement<F> {
    UElement::word(word)
}

pub fn gen<F: Field>(a: usize, b: usize) -> UElement<F> {
    UElement::gen(e(a, b))
}

/// `sum E_{a1 a2} E_{a2 a3} ... E_{ak a1}` over `1..=m`, in normal form.
pub fn gelfand<F: Field>(k: usize, m: usize) -> UElement<F> {
    assert!(k >= 1, "Gelfand invariants start at degree one");
    let mut counts: HashMap<Vec<GlGen>, i64> = HashMap::new();
    let mut idx = vec![1usize; k];
    loop {
        let word: Vec<GlGen> = (0..k).map(|p| e(idx[p], idx[(p + 1) % k])).collect();
        *counts.entry(word).or_default() += 1;
        let mut p = 0;
        loop {
            if p == k {
                let mut acc = UElement::zero();
                let mut words: Vec<_> = counts.into_iter().collect();
                words.sort();
                for (w, c) in words {
                    acc = acc.add(&UElement::word(&w).scale(&F::from_i64(c)));
                }
                return acc;
            }
            idx[p] += 1;
            if idx[p] <= m {
                break;
            }
            idx[p] = 1;
            p += 1;
        }
    }
}

/// Whether `x` commutes with every `E_ab`, `a, b` in `block`.
pub fn centralizer_membership<F: Field>(x: &UElement<F>, block: &[usize]) -> bool {
    block.iter().all(|&a| block.iter().all(|&b| x.commutator(&gen(a, b)).is_zero()))
}

/// All sorted monomials with at most `m` factors in `gl_size x gl_size` generators.
pub fn filtration_basis(m: usize, gl_size: usize) -> Vec<Vec<GlGen>> {
    let gens: Vec<GlGen> = (1..=gl_size).flat_map(|a| (1..=gl_size).map(move |b| e(a, b))).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for w in &frontier {
            let start = w.last().map_or(0, |last| gens.iter().position(|g| g == last).expect("known generator"));
            for g in &gens[start..] {
                let mut x: Vec<GlGen> = w.clone();
                x.push(*g);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    type U = UElement<Rational>;

    #[test]
    fn straighten_examples() {
        let x: U = straighten(&[e(2, 1), e(1, 2)]);
        assert_eq!(x.to_string(), "-1*E[1,1] + 1*E[1,2]E[2,1] + 1*E[2,2]");
        // E12 E21 = E21 E12 + E11 - E22
        let rhs = x.add(&gen(1, 1)).sub(&gen(2, 2));
        assert_eq!(straighten::<Rational>(&[e(1, 2), e(2, 1)]), rhs);
        let sq: U = straighten(&[e(1, 1), e(1, 1)]);
        assert_eq!(sq.to_string(), "1*E[1,1]E[1,1]");
        assert_eq!(gen::<Rational>(1, 1).commutator(&gen(1, 2)), gen(1, 2));
    }

    #[test]
    fn gelfand_examples() {
        assert_eq!(gelfand::<Rational>(1, 3).to_string(), "1*E[1,1] + 1*E[2,2] + 1*E[3,3]");
        let g2: U = gelfand(2, 2);
        let expected = U::parse("E[1,1]E[1,1] + 2*E[1,2]E[2,1] + E[2,2]E[2,2] + E[2,2] + -1*E[1,1]").unwrap();
        assert_eq!(g2, expected);
        assert_eq!(g2.degree(), 2);
    }

    #[test]
    fn membership_examples() {
        assert!(centralizer_membership(&gelfand::<Rational>(2, 3), &[1, 2, 3]));
        assert!(!centralizer_membership(&gen::<Rational>(1, 1), &[1, 2]));
        assert!(centralizer_membership(&gen::<Rational>(1, 1), &[2, 3]));
    }

    #[test]
    fn basis_counts() {
        assert_eq!(filtration_basis(1, 2).len(), 5);
        assert_eq!(filtration_basis(2, 2).len(), 15);
        assert_eq!(filtration_basis(2, 3).len(), 55);
    }

    #[test]
    fn text_round_trip() {
        let x: U = straighten(&[e(2, 1), e(1, 2), e(1, 1)]).scale(&rat(-3)).add(&U::scalar(crate::field::ratio(1, 2)));
        assert_eq!(U::parse(&x.to_string()).unwrap(), x);
        assert_eq!(U::parse("0").unwrap(), U::zero());
        assert!(U::parse("2*E[1,").is_err());
    }
}

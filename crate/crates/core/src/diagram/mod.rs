//! The skeletal diagram category of `GL_t`.
//!
//! Objects are words in `V` and `V*`. A morphism between two words is a
//! `Q(t)`-linear combination of walled Brauer diagrams: perfect matchings of
//! the source and target legs in which a through-strand joins equal letters
//! and a cap or cup joins opposite letters. Stacking diagrams may close
//! loops, each of which contributes a factor of `t`.
//!
//! Legs are numbered left to right, source row first. In the text format
//! legs are 1-indexed: `src=VV*;tgt=V*V;pairs=(1,4)(2,3)`.
//!
//! For balanced words a diagram is the same thing as a permutation: orient
//! every leg so that source `V` and target `V*` legs are *outgoing* and the
//! rest are *incoming*; a diagram pairs each outgoing leg with an incoming
//! one. Listing both sets by leg index, [`BrauerDiagram::to_permutation`]
//! returns `p` with outgoing leg `i` paired to incoming leg `p[i]`.

mod gram;
mod lie;
mod rtt;

use std::fmt;
use std::str::FromStr;

use crate::field::{Field, RatFunc};
use crate::lincomb::LinComb;

pub use gram::{gram_matrix, gram_rank, GramPoint};
pub use lie::{lie_structure_check, lie_bracket, lie_product, IdentityCheck};
pub use rtt::{rtt_degree1_check, RttCheck, TensorAlgElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    V,
    Vdual,
}

impl Letter {
    pub fn dual(self) -> Letter {
        match self {
            Letter::V => Letter::Vdual,
            Letter::Vdual => Letter::V,
        }
    }
}

/// A word in `V` and `V*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Signature(Vec<Letter>);

impl Signature {
    pub fn new(letters: Vec<Letter>) -> Self {
        Signature(letters)
    }

    pub fn empty() -> Self {
        Signature(Vec::new())
    }

    /// The object `[k, l] = V^k (x) V*^l`.
    pub fn kl(k: usize, l: usize) -> Self {
        let mut w = vec![Letter::V; k];
        w.extend(std::iter::repeat_n(Letter::Vdual, l));
        Signature(w)
    }

    /// `V* (x) V`, the underlying object of `gl_t`.
    pub fn gl() -> Self {
        Signature(vec![Letter::Vdual, Letter::V])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `V` letters.
    pub fn k(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::V).count()
    }

    /// Number of `V*` letters.
    pub fn l(&self) -> usize {
        self.0.len() - self.k()
    }

    pub fn concat(&self, other: &Signature) -> Signature {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Signature(w)
    }

    pub fn repeat(&self, times: usize) -> Signature {
        Signature(self.0.repeat(times))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::V { "V" } else { "V*" })?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            if c != 'V' {
                return Err(DiagramError::Parse(format!("unexpected '{c}' in signature '{s}'")));
            }
            if chars.peek() == Some(&'*') {
                chars.next();
                out.push(Letter::Vdual);
            } else {
                out.push(Letter::V);
            }
        }
        Ok(Signature(out))
    }
}

/// A single walled Brauer diagram.
///
/// `partner[x]` is the leg matched with leg `x`; source legs come first.
/// The partner array determines the canonical sorted pair list, so derived
/// equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BrauerDiagram {
    source: Signature,
    target: Signature,
    partner: Vec<usize>,
}

impl BrauerDiagram {
    /// Build from 0-indexed leg pairs, validating the wall constraints.
    pub fn from_pairs(source: Signature, target: Signature, pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let n = source.len() + target.len();
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || a == b {
                return Err(DiagramError::InvalidMatching(format!("bad pair ({a}, {b})")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(DiagramError::InvalidMatching(format!("leg reused in ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(free) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(DiagramError::InvalidMatching(format!("leg {free} unmatched")));
        }
        let d = BrauerDiagram { source, target, partner };
        for (a, b) in d.pairs() {
            if d.oriented(a) == d.oriented(b) {
                return Err(DiagramError::InvalidMatching(format!(
                    "pair ({a}, {b}) joins {:?} with {:?}",
                    d.letter(a),
                    d.letter(b)
                )));
            }
        }
        Ok(d)
    }

    pub fn identity(sig: &Signature) -> Self {
        let n = sig.len();
        let partner = (0..2 * n).map(|x| if x < n { x + n } else { x - n }).collect();
        BrauerDiagram { source: sig.clone(), target: sig.clone(), partner }
    }

    /// The diagram sending source leg `i` to target leg `perm[i]`.
    pub fn permutation(source: &Signature, perm: &[usize]) -> Result<Self, DiagramError> {
        let n = source.len();
        if perm.len() != n {
            return Err(DiagramError::InvalidMatching("permutation length".into()));
        }
        let mut target = vec![Letter::V; n];
        for (i, &p) in perm.iter().enumerate() {
            target[p] = source.letters()[i];
        }
        let pairs: Vec<(usize, usize)> = perm.iter().enumerate().map(|(i, &p)| (i, n + p)).collect();
        BrauerDiagram::from_pairs(source.clone(), Signature(target), &pairs)
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn num_legs(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, leg: usize) -> usize {
        self.partner[leg]
    }

    fn letter(&self, leg: usize) -> Letter {
        let s = self.source.len();
        if leg < s {
            self.source.0[leg]
        } else {
            self.target.0[leg - s]
        }
    }

    /// Letter seen from above: target legs are read with reversed orientation,
    /// so every admissible pair joins opposite oriented letters.
    fn oriented(&self, leg: usize) -> Letter {
        if leg < self.source.len() {
            self.letter(leg)
        } else {
            self.letter(leg).dual()
        }
    }

    /// Canonical pair list: smaller leg first, sorted by first leg.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner.iter().enumerate().filter(|&(a, &b)| a < b).map(|(a, &b)| (a, b)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == BrauerDiagram::identity(&self.source)
    }

    /// Every wall-respecting matching between `source` and `target`.
    pub fn enumerate(source: &Signature, target: &Signature) -> Vec<BrauerDiagram> {
        let proto = BrauerDiagram {
            source: source.clone(),
            target: target.clone(),
            partner: vec![usize::MAX; source.len() + target.len()],
        };
        let mut out = Vec::new();
        let mut partner = proto.partner.clone();
        enumerate_rec(&proto, &mut partner, &mut out);
        out.sort();
        out
    }

    /// Stack `self: A -> B` under `next: B -> C`; returns the composite
    /// matching and the number of closed loops.
    pub fn compose(&self, next: &BrauerDiagram) -> Result<(BrauerDiagram, usize), DiagramError> {
        if self.target != next.source {
            return Err(DiagramError::SignatureMismatch { left: self.target.clone(), right: next.source.clone() });
        }
        let a = self.source.len();
        let b = self.target.len();
        let c = next.target.len();
        // Outer legs of the result: A as 0..a, C as a..a+c.
        let mut partner = vec![usize::MAX; a + c];
        let mut middle_seen = vec![false; b];

        // Walk from an outer leg through the middle row until the path exits.
        let walk = |start_outer: usize, middle_seen: &mut Vec<bool>| -> usize {
            // (in_lower, leg index within that diagram)
            let (mut in_lower, mut leg) = if start_outer < a { (true, start_outer) } else { (false, b + start_outer - a) };
            loop {
                if in_lower {
                    let p = self.partner[leg];
                    if p < a {
                        return p;
                    }
                    let m = p - a;
                    middle_seen[m] = true;
                    in_lower = false;
                    leg = m;
                } else {
                    let p = next.partner[leg];
                    if p >= b {
                        return a + (p - b);
                    }
                    middle_seen[p] = true;
                    in_lower = true;
                    leg = a + p;
                }
            }
        };

        for start in 0..a + c {
            if partner[start] != usize::MAX {
                continue;
            }
            let end = walk(start, &mut middle_seen);
            partner[start] = end;
            partner[end] = start;
        }

        // Remaining middle legs lie on closed loops.
        let mut loops = 0;
        for m0 in 0..b {
            if middle_seen[m0] {
                continue;
            }
            loops += 1;
            let mut m = m0;
            loop {
                middle_seen[m] = true;
                let up = next.partner[m];
                middle_seen[up] = true;
                let down = self.partner[a + up] - a;
                if down == m0 {
                    break;
                }
                m = down;
            }
        }

        Ok((BrauerDiagram { source: self.source.clone(), target: next.target.clone(), partner }, loops))
    }

    /// Horizontal juxtaposition.
    pub fn tensor(&self, other: &BrauerDiagram) -> BrauerDiagram {
        let (s1, t1) = (self.source.len(), self.target.len());
        let (s2, t2) = (other.source.len(), other.target.len());
        let map1 = |x: usize| if x < s1 { x } else { s1 + s2 + (x - s1) };
        let map2 = |x: usize| if x < s2 { s1 + x } else { s1 + s2 + t1 + (x - s2) };
        let mut partner = vec![0; s1 + s2 + t1 + t2];
        for (x, &p) in self.partner.iter().enumerate() {
            partner[map1(x)] = map1(p);
        }
        for (x, &p) in other.partner.iter().enumerate() {
            partner[map2(x)] = map2(p);
        }
        BrauerDiagram { source: self.source.concat(&other.source), target: self.target.concat(&other.target), partner }
    }

    /// Vertical mirror image, a diagram `target -> source`.
    pub fn mirror(&self) -> BrauerDiagram {
        let s = self.source.len();
        let t = self.target.len();
        let remap = |x: usize| if x < s { t + x } else { x - s };
        let mut partner = vec![0; s + t];
        for (x, &p) in self.partner.iter().enumerate() {
            partner[remap(x)] = remap(p);
        }
        BrauerDiagram { source: self.target.clone(), target: self.source.clone(), partner }
    }

    /// Number of loops in the closure joining target leg `i` to source leg `i`.
    pub fn trace_loops(&self) -> Result<usize, DiagramError> {
        if self.source != self.target {
            return Err(DiagramError::SignatureMismatch { left: self.source.clone(), right: self.target.clone() });
        }
        let s = self.source.len();
        let mut seen = vec![false; 2 * s];
        let mut loops = 0;
        for start in 0..2 * s {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut x = start;
            loop {
                seen[x] = true;
                let p = self.partner[x];
                seen[p] = true;
                let closed = if p < s { p + s } else { p - s };
                if closed == start {
                    break;
                }
                x = closed;
            }
        }
        Ok(loops)
    }

    fn outgoing_legs(&self) -> Vec<usize> {
        (0..self.partner.len()).filter(|&x| self.oriented(x) == Letter::V).collect()
    }

    /// Permutation form of the diagram; see the module docs for the convention.
    pub fn to_permutation(&self) -> Vec<usize> {
        let outgoing = self.outgoing_legs();
        let incoming: Vec<usize> = (0..self.partner.len()).filter(|&x| self.oriented(x) == Letter::Vdual).collect();
        outgoing.iter().map(|&o| incoming.iter().position(|&i| i == self.partner[o]).expect("matched")).collect()
    }

    /// Inverse of [`to_permutation`](Self::to_permutation).
    pub fn from_permutation(source: &Signature, target: &Signature, perm: &[usize]) -> Result<Self, DiagramError> {
        let proto = BrauerDiagram {
            source: source.clone(),
            target: target.clone(),
            partner: vec![0; source.len() + target.len()],
        };
        let outgoing = proto.outgoing_legs();
        let incoming: Vec<usize> = (0..proto.partner.len()).filter(|&x| proto.oriented(x) == Letter::Vdual).collect();
        if outgoing.len() != incoming.len() || perm.len() != outgoing.len() {
            return Err(DiagramError::InvalidMatching("unbalanced signatures".into()));
        }
        let pairs: Vec<(usize, usize)> = outgoing.iter().zip(perm).map(|(&o, &p)| (o, incoming[p])).collect();
        BrauerDiagram::from_pairs(source.clone(), target.clone(), &pairs)
    }
}

fn enumerate_rec(proto: &BrauerDiagram, partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
    let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
        out.push(BrauerDiagram { source: proto.source.clone(), target: proto.target.clone(), partner: partner.clone() });
        return;
    };
    for other in first + 1..partner.len() {
        if partner[other] != usize::MAX || proto.oriented(first) == proto.oriented(other) {
            continue;
        }
        partner[first] = other;
        partner[other] = first;
        enumerate_rec(proto, partner, out);
        partner[first] = usize::MAX;
        partner[other] = usize::MAX;
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "src={};tgt={};pairs=", self.source, self.target)?;
        for (a, b) in self.pairs() {
            write!(f, "({},{})", a + 1, b + 1)?;
        }
        Ok(())
    }
}

impl FromStr for BrauerDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || DiagramError::Parse(format!("expected src=..;tgt=..;pairs=.. in '{s}'"));
        let mut parts = s.trim().split(';');
        let src = parts.next().and_then(|p| p.strip_prefix("src=")).ok_or_else(err)?;
        let tgt = parts.next().and_then(|p| p.strip_prefix("tgt=")).ok_or_else(err)?;
        let pairs_txt = parts.next().and_then(|p| p.strip_prefix("pairs=")).ok_or_else(err)?;
        if parts.next().is_some() {
            return Err(err());
        }
        let mut pairs = Vec::new();
        for chunk in pairs_txt.split(')').filter(|c| !c.trim().is_empty()) {
            let inner = chunk.trim().strip_prefix('(').ok_or_else(err)?;
            let (a, b) = inner.split_once(',').ok_or_else(err)?;
            let a: usize = a.trim().parse().map_err(|_| err())?;
            let b: usize = b.trim().parse().map_err(|_| err())?;
            if a == 0 || b == 0 {
                return Err(DiagramError::Parse("legs are 1-indexed".into()));
            }
            pairs.push((a - 1, b - 1));
        }
        BrauerDiagram::from_pairs(src.parse()?, tgt.parse()?, &pairs)
    }
}

/// Number of diagrams `a -> b`; zero unless `k_a + l_b = l_a + k_b`.
pub fn hom_dim(a: &Signature, b: &Signature) -> usize {
    if a.k() + b.l() != a.l() + b.k() {
        return 0;
    }
    BrauerDiagram::enumerate(a, b).len()
}

/// A `Q(t)`-linear combination of diagrams with a common source and target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    source: Signature,
    target: Signature,
    terms: LinComb<BrauerDiagram, RatFunc>,
}

impl Morphism {
    pub fn zero(source: Signature, target: Signature) -> Self {
        Morphism { source, target, terms: LinComb::zero() }
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        Morphism::from_term(d, RatFunc::one())
    }

    pub fn from_term(d: BrauerDiagram, c: RatFunc) -> Self {
        Morphism { source: d.source.clone(), target: d.target.clone(), terms: LinComb::term(d, c) }
    }

    /// Parse a diagram in text form and wrap it with coefficient one.
    pub fn parse_diagram(s: &str) -> Result<Self, DiagramError> {
        Ok(Morphism::from_diagram(s.parse()?))
    }

    pub fn identity(sig: &Signature) -> Self {
        Morphism::from_diagram(BrauerDiagram::identity(sig))
    }

    /// `ev: V (x) V* -> 1`.
    pub fn ev() -> Self {
        let d = BrauerDiagram::from_pairs(Signature::kl(1, 1), Signature::empty(), &[(0, 1)]).expect("valid");
        Morphism::from_diagram(d)
    }

    /// `coev: 1 -> V (x) V*`.
    pub fn coev() -> Self {
        Morphism::ev().mirror()
    }

    /// `ev: V* (x) V -> 1`.
    pub fn ev_dual() -> Self {
        let d = BrauerDiagram::from_pairs(Signature::gl(), Signature::empty(), &[(0, 1)]).expect("valid");
        Morphism::from_diagram(d)
    }

    /// `coev: 1 -> V* (x) V`.
    pub fn coev_dual() -> Self {
        Morphism::ev_dual().mirror()
    }

    /// The symmetry `x (x) y -> y (x) x`.
    pub fn crossing(x: Letter, y: Letter) -> Self {
        let d = BrauerDiagram::permutation(&Signature::new(vec![x, y]), &[1, 0]).expect("valid");
        Morphism::from_diagram(d)
    }

    /// Permute the letters of `source`: leg `i` goes to position `perm[i]`.
    pub fn permutation(source: &Signature, perm: &[usize]) -> Result<Self, DiagramError> {
        Ok(Morphism::from_diagram(BrauerDiagram::permutation(source, perm)?))
    }

    /// Permute whole blocks of a word made of `blocks` copies of `block`.
    pub fn block_permutation(block: &Signature, perm: &[usize]) -> Self {
        let w = block.len();
        let full: Vec<usize> = perm.iter().flat_map(|&p| (0..w).map(move |j| p * w + j)).collect();
        Morphism::permutation(&block.repeat(perm.len()), &full).expect("block permutation")
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn terms(&self) -> &LinComb<BrauerDiagram, RatFunc> {
        &self.terms
    }

    pub fn coefficient(&self, d: &BrauerDiagram) -> RatFunc {
        self.terms.get(d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check_same_hom(&self, other: &Morphism) -> Result<(), DiagramError> {
        if self.source != other.source {
            return Err(DiagramError::SignatureMismatch { left: self.source.clone(), right: other.source.clone() });
        }
        if self.target != other.target {
            return Err(DiagramError::SignatureMismatch { left: self.target.clone(), right: other.target.clone() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, DiagramError> {
        self.check_same_hom(other)?;
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism, DiagramError> {
        self.check_same_hom(other)?;
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), terms: self.terms.sub(&other.terms) })
    }

    pub fn scale(&self, c: &RatFunc) -> Morphism {
        Morphism { source: self.source.clone(), target: self.target.clone(), terms: self.terms.scale(c) }
    }

    pub fn neg(&self) -> Morphism {
        Morphism { source: self.source.clone(), target: self.target.clone(), terms: self.terms.neg() }
    }

    /// `g . f` for `f = self: A -> B` and `g = next: B -> C`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism, DiagramError> {
        if self.target != next.source {
            return Err(DiagramError::SignatureMismatch { left: self.target.clone(), right: next.source.clone() });
        }
        let mut terms = LinComb::zero();
        for (d1, c1) in self.terms.iter() {
            for (d2, c2) in next.terms.iter() {
                let (d, loops) = d1.compose(d2)?;
                terms.add_term(d, c1.mul(c2).mul(&RatFunc::t_pow(loops)));
            }
        }
        Ok(Morphism { source: self.source.clone(), target: next.target.clone(), terms })
    }

    pub fn tensor(&self, other: &Morphism) -> Morphism {
        let mut terms = LinComb::zero();
        for (d1, c1) in self.terms.iter() {
            for (d2, c2) in other.terms.iter() {
                terms.add_term(d1.tensor(d2), c1.mul(c2));
            }
        }
        Morphism { source: self.source.concat(&other.source), target: self.target.concat(&other.target), terms }
    }

    pub fn mirror(&self) -> Morphism {
        Morphism {
            source: self.target.clone(),
            target: self.source.clone(),
            terms: self.terms.iter().map(|(d, c)| (d.mirror(), c.clone())).collect(),
        }
    }

    /// Categorical trace of an endomorphism.
    pub fn trace(&self) -> Result<RatFunc, DiagramError> {
        let mut acc = RatFunc::zero();
        for (d, c) in self.terms.iter() {
            acc = acc.add(&c.mul(&RatFunc::t_pow(d.trace_loops()?)));
        }
        Ok(acc)
    }
}

/// `compose(f, g) = g . f`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism, DiagramError> {
    f.then(g)
}

pub fn tensor(f: &Morphism, g: &Morphism) -> Morphism {
    f.tensor(g)
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0 : {} -> {}", self.source, self.target);
        }
        let mut first = true;
        for (d, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})*[{d}]")?;
            first = false;
        }
        Ok(())
    }
}

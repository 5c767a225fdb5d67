//! Graded `gl_N`-invariants of `S((V + 1^n)* (x) (V + 1^n))` as strings of
//! leg pairs, their chain/cycle decomposition, and three ways to count them.
//!
//! A pair `(white a, black b)` stands for the generator `E_ab` of
//! `gl_M`, `M = N + n`. Square legs carry a fixed small-block index
//! `1..=n`; circle legs are V-block indices `n+1..=M` tied together by
//! arcs. An arc `(p, q)` identifies the black index of pair `p` with the
//! white index of pair `q` and sums over it.
//!
//! Text format: `[Wc][Bc][Ws(1)][Bc];arcs=(1,2)(2,1)` with pairs and arcs 1-indexed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::centralizer::{BlockConvention, Centralizer};
use crate::envelope::{e, GlGen};
use crate::field::{Field, Rational};
use crate::lincomb::LinComb;
use crate::linalg::SparseEchelon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Leg {
    Circle,
    Square(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSymbol {
    pub white: Leg,
    pub black: Leg,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("malformed matching: {0}")]
    Matching(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairString {
    pairs: Vec<PairSymbol>,
    /// `arcs[p] = q` when the black circle of pair `p` meets the white circle of pair `q` (0-based).
    arcs: BTreeMap<usize, usize>,
}

impl PairString {
    /// `arcs` are 0-based `(black pair, white pair)`.
    pub fn new(pairs: Vec<PairSymbol>, arcs: &[(usize, usize)]) -> Result<Self, InvariantError> {
        let mut map = BTreeMap::new();
        let mut whites_used = vec![false; pairs.len()];
        for &(p, q) in arcs {
            let (Some(bp), Some(wq)) = (pairs.get(p), pairs.get(q)) else {
                return Err(InvariantError::Matching(format!("arc ({p},{q}) out of range")));
            };
            if bp.black != Leg::Circle || wq.white != Leg::Circle {
                return Err(InvariantError::Matching(format!("arc ({p},{q}) must join circles")));
            }
            if map.insert(p, q).is_some() || std::mem::replace(&mut whites_used[q], true) {
                return Err(InvariantError::Matching(format!("leg used twice in arc ({p},{q})")));
            }
        }
        for (p, s) in pairs.iter().enumerate() {
            if s.black == Leg::Circle && !map.contains_key(&p) {
                return Err(InvariantError::Matching(format!("black circle of pair {p} is unmatched")));
            }
            if s.white == Leg::Circle && !whites_used[p] {
                return Err(InvariantError::Matching(format!("white circle of pair {p} is unmatched")));
            }
        }
        Ok(PairString { pairs, arcs: map })
    }

    pub fn pairs(&self) -> &[PairSymbol] {
        &self.pairs
    }

    pub fn degree(&self) -> usize {
        self.pairs.len()
    }

    /// Every pair string of degree `m` with square indices in `1..=n`.
    pub fn enumerate(m: usize, n: usize) -> Vec<PairString> {
        let mut legs = vec![Leg::Circle];
        legs.extend((1..=n).map(Leg::Square));
        let symbols: Vec<PairSymbol> =
            legs.iter().flat_map(|&w| legs.iter().map(move |&b| PairSymbol { white: w, black: b })).collect();
        let mut out = Vec::new();
        let mut seqs: Vec<Vec<PairSymbol>> = vec![Vec::new()];
        for _ in 0..m {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    symbols.iter().map(move |x| {
                        let mut y = s.clone();
                        y.push(*x);
                        y
                    })
                })
                .collect();
        }
        for pairs in seqs {
            let blacks: Vec<usize> = (0..m).filter(|&p| pairs[p].black == Leg::Circle).collect();
            let whites: Vec<usize> = (0..m).filter(|&p| pairs[p].white == Leg::Circle).collect();
            if blacks.len() != whites.len() {
                continue;
            }
            for perm in permutations(whites.len()) {
                let arcs: Vec<(usize, usize)> = blacks.iter().zip(&perm).map(|(&b, &k)| (b, whites[k])).collect();
                out.push(PairString::new(pairs.clone(), &arcs).expect("valid by construction"));
            }
        }
        out
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

impl fmt::Display for PairString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.pairs {
            match s.white {
                Leg::Circle => write!(f, "[Wc]")?,
                Leg::Square(i) => write!(f, "[Ws({i})]")?,
            }
            match s.black {
                Leg::Circle => write!(f, "[Bc]")?,
                Leg::Square(j) => write!(f, "[Bs({j})]")?,
            }
        }
        write!(f, ";arcs=")?;
        for (p, q) in &self.arcs {
            write!(f, "({},{})", p + 1, q + 1)?;
        }
        Ok(())
    }
}

impl FromStr for PairString {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| InvariantError::Parse(m.to_string());
        let (body, arcs) = s.trim().split_once(";arcs=").ok_or_else(|| bad("missing ;arcs="))?;
        let mut tokens = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('[').ok_or_else(|| bad(rest))?;
            let (tok, r) = inner.split_once(']').ok_or_else(|| bad(rest))?;
            tokens.push(tok);
            rest = r;
        }
        if tokens.len() % 2 != 0 {
            return Err(bad("white and black figures must come in pairs"));
        }
        let leg = |tok: &str, color: char| -> Result<Leg, InvariantError> {
            let t = tok.strip_prefix(color).ok_or_else(|| bad(tok))?;
            if t == "c" {
                return Ok(Leg::Circle);
            }
            let idx = t.strip_prefix("s(").and_then(|x| x.strip_suffix(')')).ok_or_else(|| bad(tok))?;
            let i: usize = idx.parse().map_err(|_| bad(tok))?;
            if i == 0 {
                return Err(bad("square indices start at 1"));
            }
            Ok(Leg::Square(i))
        };
        let pairs = tokens
            .chunks(2)
            .map(|c| Ok(PairSymbol { white: leg(c[0], 'W')?, black: leg(c[1], 'B')? }))
            .collect::<Result<Vec<_>, InvariantError>>()?;
        let mut arc_list = Vec::new();
        let mut rest = arcs.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(|| bad(rest))?;
            let (pq, r) = inner.split_once(')').ok_or_else(|| bad(rest))?;
            let (p, q) = pq.split_once(',').ok_or_else(|| bad(pq))?;
            let p: usize = p.trim().parse().map_err(|_| bad(pq))?;
            let q: usize = q.trim().parse().map_err(|_| bad(pq))?;
            if p == 0 || q == 0 {
                return Err(bad("arcs are 1-indexed"));
            }
            arc_list.push((p - 1, q - 1));
            rest = r;
        }
        PairString::new(pairs, &arc_list)
    }
}

/// A connected component of a pair string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnectedType {
    /// `k` circle pairs closed into a loop.
    Cycle(usize),
    /// `k` pairs from a white square `i` to a black square `j`.
    Chain { k: usize, i: usize, j: usize },
}

impl ConnectedType {
    pub fn degree(&self) -> usize {
        match *self {
            ConnectedType::Cycle(k) | ConnectedType::Chain { k, .. } => k,
        }
    }
}

/// Split a pair string into its connected components, sorted.
pub fn decompose(s: &PairString) -> Vec<ConnectedType> {
    let m = s.pairs.len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    // chains start at white squares
    for start in 0..m {
        let Leg::Square(i) = s.pairs[start].white else { continue };
        let mut p = start;
        let mut k = 1;
        loop {
            seen[p] = true;
            match s.pairs[p].black {
                Leg::Square(j) => {
                    out.push(ConnectedType::Chain { k, i, j });
                    break;
                }
                Leg::Circle => {
                    p = s.arcs[&p];
                    k += 1;
                }
            }
        }
    }
    // everything left is circle-only and closes up
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut p = start;
        let mut k = 0;
        while !seen[p] {
            seen[p] = true;
            k += 1;
            p = s.arcs[&p];
        }
        out.push(ConnectedType::Cycle(k));
    }
    out.sort();
    out
}

/// Connected types of degree `k` with square indices in `1..=n`.
pub fn types_of_degree(k: usize, n: usize) -> Vec<ConnectedType> {
    let mut out = vec![ConnectedType::Cycle(k)];
    for i in 1..=n {
        for j in 1..=n {
            out.push(ConnectedType::Chain { k, i, j });
        }
    }
    out
}

/// All multisets of connected types with total degree `m`.
pub fn type_multisets(m: usize, n: usize) -> Vec<Vec<ConnectedType>> {
    let all: Vec<ConnectedType> = (1..=m).flat_map(|k| types_of_degree(k, n)).collect();
    fn go(
        all: &[ConnectedType],
        from: usize,
        rest: usize,
        cur: &mut Vec<ConnectedType>,
        out: &mut Vec<Vec<ConnectedType>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for idx in from..all.len() {
            let d = all[idx].degree();
            if d <= rest {
                cur.push(all[idx]);
                go(all, idx, rest - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&all, 0, m, &mut Vec::new(), &mut out);
    out
}

/// Number of multisets of connected types of total degree `m`.
pub fn dim_graded(m: usize, n: usize) -> usize {
    type_multisets(m, n).len()
}

/// Coefficients of `prod_k (1 - q^k)^{-(n^2 + 1)}` up to `q^{m_max}`.
pub fn hilbert_series(n: usize, m_max: usize) -> Vec<u64> {
    let mut s = vec![0u64; m_max + 1];
    s[0] = 1;
    for k in 1..=m_max {
        for _ in 0..n * n + 1 {
            for d in k..=m_max {
                s[d] += s[d - k];
            }
        }
    }
    s
}

/// Element of the commutative algebra `S(gl_M)`; keys are sorted generator lists.
pub type SElement = LinComb<Vec<GlGen>, Rational>;

pub fn s_mul(x: &SElement, y: &SElement) -> SElement {
    let mut out = SElement::zero();
    for (w1, c1) in x.iter() {
        for (w2, c2) in y.iter() {
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            w.sort();
            out.add_term(w, c1.mul(c2));
        }
    }
    out
}

fn s_one() -> SElement {
    SElement::term(Vec::new(), Rational::one())
}

/// Sum over all index paths `start -> v_1 -> ... -> v_{k-1} -> end` with
/// interior indices in the V-block.
fn path_sum(k: usize, start: usize, end: Option<usize>, conv: BlockConvention) -> SElement {
    let large = conv.large_block();
    let mut out = SElement::zero();
    let interior = k - 1;
    let mut idx = vec![0usize; interior];
    loop {
        let mut path = vec![start];
        path.extend(idx.iter().map(|&x| large[x]));
        path.push(end.unwrap_or(start));
        let mut w: Vec<GlGen> = path.windows(2).map(|p| e(p[0], p[1])).collect();
        w.sort();
        out.add_term(w, Rational::one());
        let mut p = 0;
        loop {
            if p == interior {
                return out;
            }
            idx[p] += 1;
            if idx[p] < large.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// The symmetric-algebra element of a connected type.
pub fn expand_type(c: &ConnectedType, conv: BlockConvention) -> SElement {
    match *c {
        ConnectedType::Chain { k, i, j } => path_sum(k, i, Some(j), conv),
        ConnectedType::Cycle(k) => {
            let mut out = SElement::zero();
            for v in conv.large_block() {
                out = out.add(&path_sum(k, v, None, conv));
            }
            out
        }
    }
}

/// Product of the expansions of a multiset of types.
pub fn expand_types(types: &[ConnectedType], conv: BlockConvention) -> SElement {
    types.iter().fold(s_one(), |acc, c| s_mul(&acc, &expand_type(c, conv)))
}

/// The invariant attached to a pair string: sum over V-block values of the
/// circle legs of the product of its generators.
pub fn string_invariant(s: &PairString, conv: BlockConvention) -> SElement {
    let large = conv.large_block();
    let arcs: Vec<(usize, usize)> = s.arcs.iter().map(|(&p, &q)| (p, q)).collect();
    let mut vals = vec![0usize; arcs.len()];
    let mut out = SElement::zero();
    loop {
        let mut white = vec![0usize; s.pairs.len()];
        let mut black = vec![0usize; s.pairs.len()];
        for (a, &(p, q)) in arcs.iter().enumerate() {
            black[p] = large[vals[a]];
            white[q] = large[vals[a]];
        }
        let mut w: Vec<GlGen> = s
            .pairs
            .iter()
            .enumerate()
            .map(|(p, sym)| {
                let a = if let Leg::Square(i) = sym.white { i } else { white[p] };
                let b = if let Leg::Square(j) = sym.black { j } else { black[p] };
                e(a, b)
            })
            .collect();
        w.sort();
        out.add_term(w, Rational::one());
        let mut p = 0;
        loop {
            if p == vals.len() {
                return out;
            }
            vals[p] += 1;
            if vals[p] < large.len() {
                break;
            }
            vals[p] = 0;
            p += 1;
        }
    }
}

fn block_weight(g: &GlGen, conv: BlockConvention) -> Vec<i32> {
    let mut w = vec![0i32; conv.big_n];
    if g.a > conv.n {
        w[g.a - conv.n - 1] += 1;
    }
    if g.b > conv.n {
        w[g.b - conv.n - 1] -= 1;
    }
    w
}

/// `[E_{c,c+1}, -]` as a derivation of `S(gl_M)` applied to a sorted monomial.
fn raise(c: usize, mono: &[GlGen]) -> BTreeMap<Vec<GlGen>, Rational> {
    let mut out: SElement = SElement::zero();
    for (pos, g) in mono.iter().enumerate() {
        let mut terms = Vec::new();
        if g.a == c + 1 {
            terms.push((e(c, g.b), 1));
        }
        if g.b == c {
            terms.push((e(g.a, c + 1), -1));
        }
        for (h, sign) in terms {
            let mut w = mono.to_vec();
            w[pos] = h;
            w.sort();
            out.add_term(w, Rational::from_i64(sign));
        }
    }
    out.into_terms()
}

/// Dimension of the `gl_N`-invariants in `S^m(gl_M)` for the realized action
/// on `Q^N + Q^n`: highest-weight vectors of weight zero for the large block.
pub fn realized_invariant_dim(m: usize, conv: BlockConvention) -> usize {
    let size = conv.total();
    let gens: Vec<GlGen> = (1..=size).flat_map(|a| (1..=size).map(move |b| e(a, b))).collect();
    let weights: Vec<Vec<i32>> = gens.iter().map(|g| block_weight(g, conv)).collect();
    let mut zero_weight = Vec::new();
    fn go(
        gens: &[GlGen],
        weights: &[Vec<i32>],
        from: usize,
        left: usize,
        cur: &mut Vec<usize>,
        acc: &mut Vec<i32>,
        out: &mut Vec<Vec<GlGen>>,
    ) {
        if left == 0 {
            if acc.iter().all(|&x| x == 0) {
                out.push(cur.iter().map(|&i| gens[i]).collect());
            }
            return;
        }
        // prune: a monomial with `left` more factors changes each coordinate by at most `left`
        if acc.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>() > 2 * left {
            return;
        }
        for i in from..gens.len() {
            cur.push(i);
            for (a, w) in acc.iter_mut().zip(&weights[i]) {
                *a += w;
            }
            go(gens, weights, i, left - 1, cur, acc, out);
            for (a, w) in acc.iter_mut().zip(&weights[i]) {
                *a -= w;
            }
            cur.pop();
        }
    }
    go(&gens, &weights, 0, m, &mut Vec::new(), &mut vec![0; conv.big_n], &mut zero_weight);
    let raising: Vec<usize> = (conv.n + 1..size).collect();
    let mut ech: SparseEchelon<(usize, Vec<GlGen>), Rational> = SparseEchelon::new();
    for mono in &zero_weight {
        let mut v = BTreeMap::new();
        for (op, &c) in raising.iter().enumerate() {
            for (w, x) in raise(c, mono) {
                v.insert((op, w), x);
            }
        }
        ech.insert(v);
    }
    zero_weight.len() - ech.rank()
}

/// The three counts of degree-`m` invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimMatch {
    pub graded: usize,
    pub hilbert: usize,
    pub realized: usize,
}

impl DimMatch {
    pub fn holds(&self) -> bool {
        self.graded == self.hilbert && self.hilbert == self.realized
    }
}

pub fn dim_match_check(m: usize, n: usize, big_n: usize) -> DimMatch {
    DimMatch {
        graded: dim_graded(m, n),
        hilbert: hilbert_series(n, m)[m] as usize,
        realized: realized_invariant_dim(m, BlockConvention::new(n, big_n)),
    }
}

/// Whether the top symbol of `psi(t[k;i,j])` minus the chain `a_k` lies in
/// the span of products of two or more shorter chains.
pub fn leading_symbol_check(k: usize, i: usize, j: usize, conv: BlockConvention) -> bool {
    let lab: Centralizer<Rational> = Centralizer::new(conv, k);
    let top = lab.psi(k, i, j).component(k);
    let symbol: SElement = top
        .terms()
        .iter()
        .map(|(w, c)| {
            let mut w = w.clone();
            w.sort();
            (w, c.clone())
        })
        .collect();
    let diff = symbol.sub(&expand_type(&ConnectedType::Chain { k, i, j }, conv));
    let mut ech: SparseEchelon<Vec<GlGen>, Rational> = SparseEchelon::new();
    for types in type_multisets(k, conv.n) {
        let only_chains = types.iter().all(|t| matches!(t, ConnectedType::Chain { .. }));
        if only_chains && types.len() >= 2 {
            ech.insert(expand_types(&types, conv).into_terms());
        }
    }
    ech.contains(diff.into_terms())
}

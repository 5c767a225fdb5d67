use proptest::prelude::*;

use deligne_yangian::algebra::{straighten_with, NcElement, Strategy as Rewrite};
use deligne_yangian::diagram::{BrauerDiagram, Morphism, Signature};
use deligne_yangian::envelope::{self, e, gelfand, GlGen, UElement};
use deligne_yangian::field::{rat, Field, Fp, Poly, RatFunc, Rational};
use deligne_yangian::tensor::realize;
use deligne_yangian::yangian::{t, YGen};

type U = UElement<Rational>;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::normalize(n, d).ok())
}

fn signature(max: usize) -> impl Strategy<Value = Signature> {
    (0..=max).prop_flat_map(move |k| (Just(k), 0..=max - k)).prop_map(|(k, l)| Signature::kl(k, l))
}

fn diagram_in(source: Signature, target: Signature) -> impl Strategy<Value = BrauerDiagram> {
    let all = BrauerDiagram::enumerate(&source, &target);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// A morphism `source -> target` with small coefficients, possibly zero.
fn morphism(source: Signature, target: Signature) -> impl Strategy<Value = Morphism> {
    let all = BrauerDiagram::enumerate(&source, &target);
    let n = all.len();
    prop::collection::vec((-2i64..=2, 0usize..2), n).prop_map(move |cs| {
        let mut m = Morphism::zero(source.clone(), target.clone());
        for (d, (c, tp)) in all.iter().zip(cs) {
            let c = RatFunc::from_i64(c).mul(&RatFunc::t_pow(tp));
            m = m.add(&Morphism::from_term(d.clone(), c)).unwrap();
        }
        m
    })
}

/// Three signatures with the same number of legs on each side of the wall
/// so that Hom spaces between them are nonzero.
fn composable_triple() -> impl Strategy<Value = (Signature, Signature, Signature)> {
    (0usize..=2, 0usize..=1, 0usize..=1, 0usize..=1).prop_map(|(k, a, b, c)| {
        (Signature::kl(k + a, a), Signature::kl(k + b, b), Signature::kl(k + c, c))
    })
}

fn gl_word(size: usize, max_len: usize) -> impl Strategy<Value = Vec<GlGen>> {
    prop::collection::vec((1..=size, 1..=size).prop_map(|(a, b)| e(a, b)), 0..=max_len)
}

fn y_word(n: usize, max_level: usize, max_len: usize) -> impl Strategy<Value = Vec<YGen>> {
    prop::collection::vec((1..=max_level, 1..=n, 1..=n).prop_map(|(r, i, j)| t(r, i, j)), 0..=max_len)
}

/// Loop count and outer matching by union-find over the glued legs.
fn glue_oracle(lower: &BrauerDiagram, upper: &BrauerDiagram) -> (Vec<(usize, usize)>, usize) {
    let a = lower.source().len();
    let b = lower.target().len();
    let c = upper.target().len();
    // nodes: lower legs 0..a+b, then upper target legs a+b..a+b+c; upper source leg m is node a+m
    let node_of_upper = |leg: usize| if leg < b { a + leg } else { a + b + (leg - b) };
    let mut parent: Vec<usize> = (0..a + b + c).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut union = |x: usize, y: usize| {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent[rx] = ry;
    };
    for (x, y) in lower.pairs() {
        union(x, y);
    }
    for (x, y) in upper.pairs() {
        union(node_of_upper(x), node_of_upper(y));
    }
    let outer: Vec<usize> = (0..a).chain(a + b..a + b + c).collect();
    let mut pairs = Vec::new();
    for (ix, &x) in outer.iter().enumerate() {
        for (iy, &y) in outer.iter().enumerate().skip(ix + 1) {
            if find(&mut parent, x) == find(&mut parent, y) {
                pairs.push((ix, iy));
            }
        }
    }
    let mut roots: Vec<usize> = (a..a + b).map(|m| find(&mut parent, m)).collect();
    let outer_roots: Vec<usize> = outer.iter().map(|&x| find(&mut parent, x)).collect();
    roots.retain(|r| !outer_roots.contains(r));
    roots.sort();
    roots.dedup();
    (pairs, roots.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfunc_is_canonical(n in poly(), d in poly(), k in poly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let a = RatFunc::normalize(n.clone(), d.clone()).unwrap();
        let b = RatFunc::normalize(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.den().leading() == Some(&rat(1)));
        prop_assert!(a.num().gcd(a.den()).is_one());
    }

    #[test]
    fn evaluation_is_a_ring_map(x in ratfunc(), y in ratfunc(), t0 in -6i64..=6) {
        let t0 = rat(t0);
        if let (Ok(ex), Ok(ey)) = (x.evaluate(&t0), y.evaluate(&t0)) {
            prop_assert_eq!(x.add(&y).evaluate(&t0).unwrap(), &ex + &ey);
            prop_assert_eq!(x.mul(&y).evaluate(&t0).unwrap(), ex * ey);
        }
    }

    #[test]
    fn prime_field_inverses(a in 1i64..1000) {
        let x = Fp::<7>::new(a);
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(Fp::<5>::new(a).add(&Fp::<5>::new(-a)), Fp::<5>::zero());
    }

    #[test]
    fn composition_matches_union_find((x, y, z) in composable_triple(), seed in 0usize..10_000) {
        let f = BrauerDiagram::enumerate(&x, &y);
        let g = BrauerDiagram::enumerate(&y, &z);
        let (f, g) = (&f[seed % f.len()], &g[(seed / 7) % g.len()]);
        let (h, loops) = f.compose(g).unwrap();
        let (pairs, oracle_loops) = glue_oracle(f, g);
        prop_assert_eq!(loops, oracle_loops);
        prop_assert_eq!(h.pairs(), pairs);
    }

    #[test]
    fn composition_is_associative(
        (f, g, h) in composable_triple().prop_flat_map(|(x, y, z)| {
            (morphism(x.clone(), y.clone()), morphism(y, z.clone()), morphism(z.clone(), z))
        })
    ) {
        let left = f.then(&g).unwrap().then(&h).unwrap();
        let right = f.then(&g.then(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interchange_law(
        (f, g) in composable_triple().prop_flat_map(|(x, y, z)| (morphism(x.clone(), y.clone()), morphism(y, z))),
        (p, q) in (0usize..=1, 0usize..=1).prop_flat_map(|(a, b)| {
            let (s, t) = (Signature::kl(a, 0), Signature::kl(b, b.min(1)));
            (morphism(s.clone(), s.clone()), morphism(s, t))
        }),
    ) {
        // (g . f) (x) (q . p) == (g (x) q) . (f (x) p)
        let left = f.then(&g).unwrap().tensor(&p.then(&q).unwrap());
        let right = f.tensor(&p).then(&g.tensor(&q)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_units(f in (signature(2), signature(2)).prop_flat_map(|(x, y)| morphism(x, y))) {
        prop_assert_eq!(&Morphism::identity(f.source()).then(&f).unwrap(), &f);
        prop_assert_eq!(&f.then(&Morphism::identity(f.target())).unwrap(), &f);
    }

    #[test]
    fn realize_is_monoidal(
        f in (signature(2), signature(2)).prop_flat_map(|(x, y)| morphism(x, y)),
        g in (signature(1), signature(2)).prop_flat_map(|(x, y)| morphism(x, y)),
        n in 1usize..=3,
    ) {
        let lhs = realize(&f.tensor(&g), n).unwrap();
        let rhs = realize(&f, n).unwrap().kron(&realize(&g, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn realize_is_functorial(
        (f, g) in composable_triple().prop_flat_map(|(x, y, z)| (morphism(x.clone(), y.clone()), morphism(y, z))),
        n in 1usize..=3,
    ) {
        let lhs = realize(&f.then(&g).unwrap(), n).unwrap();
        let rhs = realize(&g, n).unwrap().after(&realize(&f, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn single_diagram_from_text(d in composable_triple().prop_flat_map(|(x, y, _)| diagram_in(x, y))) {
        let back: BrauerDiagram = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn straightening_is_multiplicative(u in gl_word(3, 4), v in gl_word(3, 4)) {
        let uv: Vec<GlGen> = u.iter().chain(v.iter()).copied().collect();
        let prod = envelope::straighten::<Rational>(&u).mul(&envelope::straighten(&v));
        prop_assert_eq!(envelope::straighten::<Rational>(&uv), prod);
    }

    #[test]
    fn normal_form_does_not_depend_on_strategy(u in gl_word(3, 5)) {
        prop_assert_eq!(
            straighten_with(&u, Rewrite::LeftmostDescent),
            straighten_with(&u, Rewrite::RightmostDescent)
        );
    }

    #[test]
    fn yangian_normal_form_does_not_depend_on_strategy(w in y_word(2, 2, 3)) {
        prop_assert_eq!(
            straighten_with(&w, Rewrite::LeftmostDescent),
            straighten_with(&w, Rewrite::RightmostDescent)
        );
    }

    #[test]
    fn yangian_words_associate(a in y_word(2, 2, 2), b in y_word(2, 2, 2), c in y_word(2, 1, 2)) {
        let (x, y, z) = (
            NcElement::<YGen, Rational>::word(&a),
            NcElement::<YGen, Rational>::word(&b),
            NcElement::<YGen, Rational>::word(&c),
        );
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn normal_form_text_round_trip(u in gl_word(3, 4)) {
        let x = envelope::straighten::<Rational>(&u);
        let back: U = NcElement::parse(&x.to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn gelfand_invariants_are_central(k in 1usize..=3, m in 1usize..=3, w in gl_word(3, 2)) {
        let g: U = gelfand(k, m);
        let w: Vec<GlGen> = w.into_iter().filter(|x| x.a <= m && x.b <= m).collect();
        prop_assert!(g.commutator(&envelope::straighten(&w)).is_zero());
        let h: U = gelfand(1 + k % 3, m);
        prop_assert!(g.commutator(&h).is_zero());
    }
}

//! Acceptance criteria. Each prints one PASS or FAIL line with its wall
//! time; a criterion fails if its check fails or it overruns its limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use deligne_yangian::centralizer::{self, BlockConvention, Centralizer, MixedMonomial, StructureCoefficient};
use deligne_yangian::diagram::{self, gram_rank, hom_dim, GramPoint, Morphism, Signature};
use deligne_yangian::envelope::{self, e};
use deligne_yangian::field::{ratio, rat, Fp, Poly, RatFunc, Rational};
use deligne_yangian::invariants::{self, decompose, hilbert_series, PairString};
use deligne_yangian::tensor::{self, faithfulness_rank, random_morphism};
use deligne_yangian::yangian::{automorphism_check, pbw_count, PbwCount, SeriesMap};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn walled_brauer() -> Outcome {
    for k in 0..=4 {
        for l in 0..=4 - k {
            let sig = Signature::kl(k, l);
            let d = hom_dim(&sig, &sig);
            ensure(d == factorial(k + l), || format!("dim End([{k},{l}]) = {d}"))?;
        }
    }
    let lhs = Morphism::coev().then(&Morphism::ev()).map_err(|e| e.to_string())?;
    let rhs = Morphism::identity(&Signature::empty()).scale(&RatFunc::t());
    ensure(lhs == rhs, || format!("ev . coev = {lhs}"))?;
    let sig = Signature::kl(2, 2);
    let symbolic = gram_rank(&sig, &GramPoint::Symbolic);
    let special = gram_rank(&sig, &GramPoint::At(ratio(7, 2)));
    ensure(symbolic == 24 && special == 24, || format!("Gram ranks {symbolic}, {special}"))?;
    Ok("dims (k+l)!, ev.coev = t, Gram rank 24 over Q(t) and at 7/2".into())
}

fn lie_structure() -> Outcome {
    let checks = diagram::lie_structure_check(4, 2024);
    if let Some(bad) = checks.iter().find(|c| !c.holds) {
        return Err(format!("{} leaves {}", bad.name, bad.residual));
    }
    let rtt = diagram::rtt_degree1_check();
    ensure(rtt.holds(), || format!("degree-one RTT residual {:?}", rtt.difference.parts()))?;
    Ok(format!("{} identities vanish, degree-one RTT identity holds", checks.len()))
}

fn evaluation_functor() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut done = 0;
    while done < 100 {
        // objects with at most three legs, so every morphism has at most six
        let object = |rng: &mut ChaCha8Rng, wall: usize| {
            let l = rng.gen_range(0..=wall.min(1));
            Signature::kl(wall + l, l)
        };
        let wall = rng.gen_range(0..=1);
        let (x, y, z) = (object(&mut rng, wall), object(&mut rng, wall), object(&mut rng, wall));
        let f = random_morphism(&x, &y, &mut rng);
        let g = random_morphism(&y, &z, &mut rng);
        let n = rng.gen_range(1..=4);
        let ok = tensor::functoriality_check(&f, &g, n).map_err(|e| e.to_string())?;
        ensure(ok, || format!("functoriality fails for {f} then {g} at N = {n}"))?;
        done += 1;
    }
    for k in 0..=3 {
        for l in 0..=3 - k {
            for n in (k + l).max(1)..=4 {
                let sig = Signature::kl(k, l);
                let r = faithfulness_rank(&sig, n).map_err(|e| e.to_string())?;
                ensure(r == factorial(k + l), || format!("rank End([{k},{l}]) at N = {n} is {r}"))?;
            }
        }
    }
    Ok("100 random composable pairs agree, diagram bases realize faithfully".into())
}

fn pbw() -> Outcome {
    let cases: Vec<(usize, usize)> = (1..=4).map(|m| (1, m)).chain((1..=3).map(|m| (2, m))).collect();
    let mut seen = Vec::new();
    for &(n, m) in &cases {
        let counts: [(&str, PbwCount); 3] = [
            ("Q", pbw_count::<Rational>(n, m)),
            ("F5", pbw_count::<Fp<5>>(n, m)),
            ("F7", pbw_count::<Fp<7>>(n, m)),
        ];
        for (name, c) in counts {
            ensure(c.quotient_dim == c.sorted_monomials && c.normal_form_span == c.sorted_monomials, || {
                format!("(n,m) = ({n},{m}) over {name}: {c:?}")
            })?;
        }
        seen.push(pbw_count::<Rational>(n, m).sorted_monomials);
    }
    ensure(seen[2] == 7, || format!("n=1 dim F^3 = {}", seen[2]))?;
    Ok(format!("dims {seen:?} for (1,1..4), (2,1..3) over Q, F5, F7"))
}

fn automorphisms() -> Outcome {
    let mut total = 0;
    for n in 1..=2 {
        for map in [
            SeriesMap::Shift(ratio(3, 2)),
            SeriesMap::NegateU,
            SeriesMap::Invert,
            SeriesMap::Omega(rat(5)),
        ] {
            let rep = automorphism_check::<Rational>(&map, n, 3).map_err(|e| e.to_string())?;
            ensure(rep.holds(), || format!("{} on gl_{n} fails on {:?}", rep.map, rep.failures))?;
            total += rep.relations_checked;
        }
    }
    Ok(format!("{total} relation images reduce to zero"))
}

fn centralizer_construction() -> Outcome {
    for big_n in 2..=4 {
        let conv = BlockConvention::new(1, big_n);
        let mut lab: Centralizer<Rational> = Centralizer::new(conv, 5);
        for r in 1..=3 {
            let img = lab.psi(r, 1, 1);
            ensure(lab.in_centralizer(&img), || format!("psi(t[{r};1,1]) not in centralizer at N = {big_n}"))?;
        }
        let failures = lab.homomorphism_failures(3);
        ensure(failures.is_empty(), || format!("relations fail at N = {big_n}: {failures:?}"))?;
        let all: Vec<usize> = (1..=conv.total()).collect();
        for k in 1..=3 {
            let z = lab.zed(k);
            ensure(envelope::centralizer_membership(&z, &all), || format!("Z({k}) not central at N = {big_n}"))?;
        }
    }
    Ok("psi images centralize, satisfy the relations; Z images central, N = 2,3,4".into())
}

fn injectivity() -> Outcome {
    let (rank, expected) = centralizer::injectivity_rank(2, BlockConvention::new(1, 4));
    ensure(rank == 8 && expected == 8, || format!("rank {rank}, expected {expected}"))?;
    let scan = centralizer::stabilization(2, 1, &[1, 2, 3, 4, 5]);
    let ranks: Vec<usize> = scan.iter().map(|x| x.1).collect();
    ensure(ranks.windows(2).all(|w| w[0] <= w[1]), || format!("ranks {ranks:?} not monotone"))?;
    Ok(format!("rank 8 of 8 at N = 4; ranks over N = 1..5: {ranks:?}"))
}

fn dimension_match() -> Outcome {
    for (m, n, big_n) in [(1, 1, 3), (2, 1, 4), (3, 1, 6), (1, 2, 3), (2, 2, 5)] {
        let d = invariants::dim_match_check(m, n, big_n);
        ensure(d.holds(), || format!("(m,n,N) = ({m},{n},{big_n}): {d:?}"))?;
    }
    let one = hilbert_series(1, 4);
    let two = hilbert_series(2, 2);
    ensure(one == [1, 2, 5, 10, 20], || format!("n = 1 series {one:?}"))?;
    ensure(two == [1, 5, 20], || format!("n = 2 series {two:?}"))?;
    Ok("three counts agree; series 1,2,5,10,20 and 1,5,20".into())
}

fn round_trip() -> Outcome {
    let conv = BlockConvention::new(1, 4);
    let mut count = 0;
    for m in 1..=3 {
        for s in PairString::enumerate(m, 1) {
            let types = decompose(&s);
            ensure(invariants::expand_types(&types, conv) == invariants::string_invariant(&s, conv), || {
                format!("{s} decomposes to {types:?} but does not expand back")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} pair strings"))
}

fn interpolation() -> Outcome {
    let coeff = StructureCoefficient { expr: MixedMonomial { y: vec![], x: vec![2] }, word: vec![e(1, 1)] };
    let p = centralizer::interp_structure(&coeff, 1, &[2, 3, 4, 5], 1).map_err(|e| e.to_string())?;
    ensure(p == Poly::from_ints(&[0, -1]), || format!("interpolant {p}"))?;
    let held_out = coeff.evaluate(1, 6);
    ensure(p.evaluate(&rat(6)) == held_out, || format!("held-out N = 6 gives {held_out}"))?;
    let wrong = centralizer::interp_structure(&coeff, 1, &[2, 3, 4, 5], 0);
    ensure(wrong.is_err(), || "constant fit should be rejected".into())?;
    Ok(format!("coefficient of E[1,1] in Z(2) is {p}, residual 0 on held-out samples"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("1 walled Brauer", 10, walled_brauer),
        ("2 Lie structure", 5, lie_structure),
        ("3 evaluation functor", 60, evaluation_functor),
        ("4 PBW", 120, pbw),
        ("5 automorphisms", 60, automorphisms),
        ("6 centralizer", 300, centralizer_construction),
        ("7 injectivity", 300, injectivity),
        ("8 dimension match", 300, dimension_match),
        ("9 round trip", 60, round_trip),
        ("10 interpolation", 60, interpolation),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, limit, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let (mark, detail) = match (&outcome, over) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("over the {limit} s limit: {msg}")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if mark == "FAIL" {
            failed += 1;
        }
        println!("{mark} criterion {name} ({:.2} s / {limit} s): {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

use deligne_yangian::centralizer::{injectivity_rank, stabilization, BlockConvention, Centralizer, MixedMonomial};
use deligne_yangian::envelope;
use deligne_yangian::field::{Fp, Rational};
use deligne_yangian::yangian::t;

#[test]
fn two_by_two_block_relations_hold() {
    for big_n in 1..=2 {
        let lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(2, big_n), 3);
        assert_eq!(lab.homomorphism_failures(2), vec![], "N = {big_n}");
        for r in 1..=2 {
            for i in 1..=2 {
                for j in 1..=2 {
                    assert!(lab.in_centralizer(&lab.psi(r, i, j)));
                }
            }
        }
    }
}

#[test]
fn relations_hold_in_characteristic_seven() {
    let lab: Centralizer<Fp<7>> = Centralizer::new(BlockConvention::new(1, 3), 5);
    assert!(lab.homomorphism_failures(3).is_empty());
}

#[test]
fn mixed_monomials_land_in_the_centralizer() {
    let mut lab: Centralizer<Rational> = Centralizer::new(BlockConvention::new(1, 3), 3);
    for mono in [
        MixedMonomial { y: vec![t(1, 1, 1), t(2, 1, 1)], x: vec![1] },
        MixedMonomial { y: vec![t(3, 1, 1)], x: vec![] },
        MixedMonomial { y: vec![], x: vec![1, 2] },
    ] {
        let img = lab.phi(&mono);
        assert!(lab.in_centralizer(&img), "{mono:?}");
        assert!(img.degree() <= mono.degree());
    }
}

#[test]
fn first_level_is_e_plus_scalar() {
    let conv = BlockConvention::new(2, 2);
    let lab: Centralizer<Rational> = Centralizer::new(conv, 1);
    for i in 1..=2 {
        for j in 1..=2 {
            let rest = lab.psi(1, i, j).sub(&envelope::gen(i, j));
            assert!(rest.degree() == 0 || rest.is_zero());
            if i != j {
                assert!(rest.is_zero());
            }
        }
    }
}

#[test]
fn injectivity_small_cases() {
    assert_eq!(injectivity_rank(1, BlockConvention::new(1, 2)), (3, 3));
    assert_eq!(injectivity_rank(2, BlockConvention::new(1, 4)), (8, 8));
    let (rank, expected) = injectivity_rank(1, BlockConvention::new(2, 2));
    assert_eq!(rank, expected);
}

#[test]
fn ranks_stabilize_by_2m_plus_2() {
    for m in 1..=2 {
        let ns: Vec<usize> = (1..=2 * m + 2).collect();
        let scan = stabilization(m, 1, &ns);
        assert!(scan.windows(2).all(|w| w[0].1 <= w[1].1), "{scan:?}");
        let last = scan.last().unwrap();
        assert_eq!(last.1, last.2, "{scan:?}");
    }
}

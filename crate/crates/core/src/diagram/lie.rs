//! `gl_t = V* (x) V` as an algebra object: product, bracket and the
//! identities they satisfy, checked as exact diagram equalities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, RatFunc};

use super::{BrauerDiagram, Morphism, Signature};

/// Outcome of checking that a composite morphism vanishes.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// The full diagram expansion of the expression that should be zero.
    pub residual: Morphism,
}

impl IdentityCheck {
    pub fn vanishing(name: impl Into<String>, residual: Morphism) -> Self {
        IdentityCheck { name: name.into(), holds: residual.is_zero(), residual }
    }
}

/// `m = ev_23 : (V* V)(V* V) -> V* V`.
pub fn lie_product() -> Morphism {
    let src = Signature::gl().repeat(2);
    let d = BrauerDiagram::from_pairs(src, Signature::gl(), &[(0, 4), (1, 2), (3, 5)]).expect("valid");
    Morphism::from_diagram(d)
}

/// The swap of the two `gl_t` factors.
pub fn gl_swap() -> Morphism {
    Morphism::block_permutation(&Signature::gl(), &[1, 0])
}

/// `c = m - m . P`.
pub fn lie_bracket() -> Morphism {
    let m = lie_product();
    let mp = gl_swap().then(&m).expect("composable");
    m.sub(&mp).expect("same hom space")
}

fn jacobi_sum(c: &Morphism) -> Morphism {
    let g = Morphism::identity(&Signature::gl());
    let nested = c.tensor(&g).then(c).expect("composable");
    // x y z -> y z x and its square
    let sigma = Morphism::block_permutation(&Signature::gl(), &[2, 0, 1]);
    let sigma2 = sigma.then(&sigma).expect("composable");
    let mut acc = nested.clone();
    for s in [sigma, sigma2] {
        acc = acc.add(&s.then(&nested).expect("composable")).expect("same hom space");
    }
    acc
}

fn random_endomorphism(rng: &mut ChaCha8Rng) -> Morphism {
    let sig = Signature::gl();
    let mut acc = Morphism::zero(sig.clone(), sig.clone());
    for d in BrauerDiagram::enumerate(&sig, &sig) {
        let c = RatFunc::from_i64(rng.gen_range(-3..=3));
        acc = acc.add(&Morphism::from_term(d, c)).expect("same hom space");
    }
    acc
}

/// Antisymmetry and Jacobi for the bracket, associativity of the product,
/// and the same identities precomposed with `max_random` random tensor
/// products of endomorphisms of `gl_t`.
pub fn lie_structure_check(max_random: usize, seed: u64) -> Vec<IdentityCheck> {
    let m = lie_product();
    let c = lie_bracket();
    let g = Morphism::identity(&Signature::gl());
    let p = gl_swap();

    let antisym = p.then(&c).unwrap().add(&c).unwrap();
    let jacobi = jacobi_sum(&c);
    let assoc = m.tensor(&g).then(&m).unwrap().sub(&g.tensor(&m).then(&m).unwrap()).unwrap();

    let mut out = vec![
        IdentityCheck::vanishing("antisymmetry c.P + c", antisym.clone()),
        IdentityCheck::vanishing("jacobi", jacobi.clone()),
        IdentityCheck::vanishing("associativity of m", assoc),
    ];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..max_random {
        let (a, b, d) = (random_endomorphism(&mut rng), random_endomorphism(&mut rng), random_endomorphism(&mut rng));
        let two = a.tensor(&b);
        out.push(IdentityCheck::vanishing(
            format!("antisymmetry on random inputs #{trial}"),
            two.then(&antisym).unwrap(),
        ));
        out.push(IdentityCheck::vanishing(
            format!("jacobi on random inputs #{trial}"),
            two.tensor(&d).then(&jacobi).unwrap(),
        ));
    }
    out
}

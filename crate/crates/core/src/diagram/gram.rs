use crate::field::{RatFunc, Rational};
use crate::linalg::{rank, rank_over_ratfunc};

use super::{BrauerDiagram, Signature};

/// Where to evaluate the pairing: at generic `t` or at a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GramPoint {
    Symbolic,
    At(Rational),
}

/// Diagram basis of `End(sig)` and the trace pairing
/// `<d_i, d_j> = tr(d_i . mirror(d_j)) = t^loops`.
pub fn gram_matrix(sig: &Signature) -> (Vec<BrauerDiagram>, Vec<Vec<RatFunc>>) {
    let basis = BrauerDiagram::enumerate(sig, sig);
    let mirrored: Vec<BrauerDiagram> = basis.iter().map(BrauerDiagram::mirror).collect();
    let rows = basis
        .iter()
        .map(|di| {
            mirrored
                .iter()
                .map(|dj| {
                    let (closed, loops) = dj.compose(di).expect("endomorphisms compose");
                    RatFunc::t_pow(loops + closed.trace_loops().expect("endomorphism"))
                })
                .collect()
        })
        .collect();
    (basis, rows)
}

/// Rank of the trace pairing on `End(sig)`.
pub fn gram_rank(sig: &Signature, point: &GramPoint) -> usize {
    let (_, g) = gram_matrix(sig);
    match point {
        GramPoint::Symbolic => rank_over_ratfunc(&g),
        GramPoint::At(t0) => {
            let numeric: Vec<Vec<Rational>> = g
                .iter()
                .map(|r| r.iter().map(|x| x.evaluate(t0).expect("Gram entries are polynomials")).collect())
                .collect();
            rank(&numeric)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ratio, Field, Poly};
    use crate::linalg::determinant;

    #[test]
    fn one_one_pairing() {
        let (_, g) = gram_matrix(&Signature::kl(1, 1));
        let det = determinant(&g);
        // t^2 (t^2 - 1): the identity pairs with itself through two loops
        assert_eq!(det, RatFunc::from_poly(Poly::from_ints(&[0, 0, -1, 0, 1])));
        assert_eq!(gram_rank(&Signature::kl(1, 1), &GramPoint::Symbolic), 2);
        assert_eq!(gram_rank(&Signature::kl(1, 1), &GramPoint::At(Rational::one())), 1);
    }

    #[test]
    fn generic_rank_of_small_algebras() {
        assert_eq!(gram_rank(&Signature::kl(2, 1), &GramPoint::At(ratio(7, 2))), 6);
        let (_, g) = gram_matrix(&Signature::kl(2, 1));
        assert_eq!(crate::linalg::rank(&g), 6);
        assert_eq!(gram_rank(&Signature::kl(2, 1), &GramPoint::Symbolic), 6);
    }

    #[test]
    fn pairing_is_symmetric() {
        let (_, g) = gram_matrix(&"VV*V".parse().unwrap());
        for i in 0..g.len() {
            for j in 0..g.len() {
                assert_eq!(g[i][j], g[j][i]);
            }
        }
    }
}

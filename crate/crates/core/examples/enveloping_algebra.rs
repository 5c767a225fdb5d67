// PBW normal forms in U(gl_M) and the Gelfand invariants tr(E^k).

use deligne_yangian::algebra::NcElement;
use deligne_yangian::envelope::{centralizer_membership, e, gelfand, straighten, UElement};
use deligne_yangian::field::Rational;

type U = UElement<Rational>;

fn main() {
    let x: U = straighten(&[e(2, 1), e(1, 2)]);
    println!("E[2,1] E[1,2] = {x}");
    let y: U = NcElement::parse("1*E[2,2]E[1,1] + -3*E[1,2]").unwrap();
    println!("parsed and straightened: {y}");

    let g2: U = gelfand(2, 2);
    println!("tr(E^2) in U(gl_2) = {g2}");
    println!("central in gl_2: {}", centralizer_membership(&g2, &[1, 2]));

    let g3: U = gelfand(3, 3);
    println!("tr(E^3) in U(gl_3) has {} terms; commutes with tr(E^2): {}", g3.terms().len(), g3.commutator(&gelfand(2, 3)).is_zero());
}

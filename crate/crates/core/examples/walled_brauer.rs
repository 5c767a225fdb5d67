// Diagrams in the walled Brauer category: composition with loop factor t,
// hom dimensions and the rank of the trace pairing.

use deligne_yangian::diagram::{gram_rank, hom_dim, BrauerDiagram, GramPoint, Morphism, Signature};
use deligne_yangian::field::ratio;

fn main() {
    let sig = Signature::kl(1, 1);
    for d in BrauerDiagram::enumerate(&sig, &sig) {
        println!("End(VV*) basis element: {d}");
    }

    let e = Morphism::ev().then(&Morphism::coev()).unwrap();
    println!("e = coev . ev = {e}");
    println!("e . e = {}", e.then(&e).unwrap());
    println!("ev . coev = {}", Morphism::coev().then(&Morphism::ev()).unwrap());

    let d: BrauerDiagram = "src=VV*;tgt=VV*;pairs=(1,3)(2,4)".parse().unwrap();
    let (dd, loops) = d.compose(&d).unwrap();
    println!("{d} composed with itself: {dd}, {loops} loop(s)");

    for (k, l) in [(2, 0), (1, 1), (2, 1), (2, 2)] {
        let s = Signature::kl(k, l);
        println!(
            "End({s}): dim {}, Gram rank {} generic, {} at t = 1, {} at t = 7/2",
            hom_dim(&s, &s),
            gram_rank(&s, &GramPoint::Symbolic),
            gram_rank(&s, &GramPoint::At(ratio(1, 1))),
            gram_rank(&s, &GramPoint::At(ratio(7, 2))),
        );
    }
}

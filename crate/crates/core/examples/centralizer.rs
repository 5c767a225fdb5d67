// The map from Y(gl_n) and the Gelfand generators into the centralizer of
// gl_N in U(gl_{n+N}), and the injectivity rank in low degree.

use deligne_yangian::centralizer::{injectivity_rank, stabilization, BlockConvention, Centralizer};
use deligne_yangian::field::Rational;

fn main() {
    let conv = BlockConvention::new(1, 3);
    let mut lab: Centralizer<Rational> = Centralizer::new(conv, 3);
    for r in 1..=2 {
        let img = lab.psi(r, 1, 1);
        println!("psi(t[{r};1,1]) = {img}");
        println!("  commutes with gl_3: {}", lab.in_centralizer(&img));
    }
    println!("Z(2) = {}", lab.zed(2));
    println!("relations failing up to level 1: {:?}", lab.homomorphism_failures(1));

    let (rank, expected) = injectivity_rank(2, BlockConvention::new(1, 4));
    println!("degree 2, N = 4: rank {rank} of {expected}");
    for (big_n, rank, expected) in stabilization(2, 1, &[1, 2, 3, 4]) {
        println!("  N = {big_n}: {rank}/{expected}");
    }
}

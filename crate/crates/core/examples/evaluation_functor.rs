// Specializing t = N and realizing diagrams as matrices on tensor powers of Q^N.

use deligne_yangian::diagram::{Morphism, Signature};
use deligne_yangian::tensor::{faithfulness_rank, functoriality_check, random_morphism, realize};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let e = Morphism::ev().then(&Morphism::coev()).unwrap();
    let m = realize(&e, 2).unwrap();
    println!("coev . ev at N = 2:");
    for row in m.to_rows() {
        println!("  {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (x, y) = (Signature::kl(2, 1), Signature::kl(1, 0));
    let f = random_morphism(&x, &y, &mut rng);
    let g = random_morphism(&y, &x, &mut rng);
    for n in 1..=3 {
        println!("functoriality at N = {n}: {}", functoriality_check(&f, &g, n).unwrap());
    }

    let sig = Signature::kl(2, 1);
    for n in 1..=4 {
        println!("rank of End(VVV*) realized at N = {n}: {}", faithfulness_rank(&sig, n).unwrap());
    }
}

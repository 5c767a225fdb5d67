// Commutation relations of Y(gl_n) extracted from the RTT equation and the
// truncated PBW count.

use deligne_yangian::field::{Fp, Rational};
use deligne_yangian::yangian::{pbw_count, t, y_relations, YElement};

fn main() {
    for (r, s) in [(1, 1), (1, 2), (2, 2)] {
        let c: YElement<Rational> = y_relations(r, 1, 2, s, 2, 1);
        println!("[t[{r};1,2], t[{s};2,1]] = {c}");
    }
    let w = YElement::<Rational>::word(&[t(2, 2, 1), t(1, 1, 2)]);
    println!("t[2;2,1] t[1;1,2] = {w}");

    for (n, m) in [(1, 4), (2, 2), (2, 3)] {
        let q = pbw_count::<Rational>(n, m);
        let p = pbw_count::<Fp<5>>(n, m);
        println!("n = {n}, m = {m}: over Q {q:?}; over F5 quotient {}", p.quotient_dim);
    }
}

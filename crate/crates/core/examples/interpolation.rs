// A structure coefficient of the centralizer map, computed at several
// integer N and interpolated to a polynomial in t.

use deligne_yangian::centralizer::{interp_structure, MixedMonomial, StructureCoefficient};
use deligne_yangian::envelope::e;
use deligne_yangian::yangian::t;

fn main() {
    let zed = StructureCoefficient { expr: MixedMonomial { y: vec![], x: vec![2] }, word: vec![e(1, 1)] };
    for big_n in 2..=5 {
        println!("N = {big_n}: {}", zed.evaluate(1, big_n));
    }
    println!("interpolant: {}", interp_structure(&zed, 1, &[2, 3, 4, 5], 1).unwrap());

    let psi = StructureCoefficient { expr: MixedMonomial { y: vec![t(2, 1, 1)], x: vec![] }, word: vec![e(1, 1)] };
    match interp_structure(&psi, 1, &[2, 3, 4, 5], 2) {
        Ok(p) => println!("psi(t[2;1,1]) coefficient of E[1,1]: {p}"),
        Err(err) => println!("psi(t[2;1,1]): {err}"),
    }
}

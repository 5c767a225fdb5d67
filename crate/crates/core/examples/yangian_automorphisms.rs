// Maps of the series T(u): shift, u -> -u, inversion and their composite,
// checked on every defining relation up to a degree.

use deligne_yangian::field::{rat, Rational};
use deligne_yangian::yangian::{automorphism_check, t, SeriesMap, Substitution};

fn main() {
    for map in [SeriesMap::Shift(rat(2)), SeriesMap::NegateU, SeriesMap::Invert, SeriesMap::Omega(rat(3))] {
        let rep = automorphism_check::<Rational>(&map, 2, 3).unwrap();
        println!("{:<10} {} relations, {} failures", rep.map, rep.relations_checked, rep.failures.len());
    }
    let sub = Substitution::<Rational>::new(&SeriesMap::Invert, 2, 2).unwrap();
    println!("invert: t[2;1,2] -> {}", sub.image(&t(2, 1, 2)));
}

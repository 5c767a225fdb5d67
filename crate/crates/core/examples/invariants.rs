// Pair strings, their chain and cycle decomposition, and three ways of
// counting invariants of each degree.

use deligne_yangian::centralizer::BlockConvention;
use deligne_yangian::invariants::{decompose, dim_match_check, expand_types, string_invariant, PairString};

fn main() {
    let conv = BlockConvention::new(1, 4);
    for s in PairString::enumerate(2, 1).into_iter().take(6) {
        let types = decompose(&s);
        let same = expand_types(&types, conv) == string_invariant(&s, conv);
        println!("{s:<30} -> {types:?} (expands back: {same})");
    }
    for (m, n, big_n) in [(1, 1, 3), (2, 1, 4), (3, 1, 6), (1, 2, 3), (2, 2, 5)] {
        let d = dim_match_check(m, n, big_n);
        println!("m = {m}, n = {n}, N = {big_n}: {d:?}");
    }
}

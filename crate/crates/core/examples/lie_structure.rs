// The Lie algebra object gl_t = V* V: its bracket, the identities it
// satisfies, and the degree-one RTT identity drawn as diagrams.

use deligne_yangian::diagram::{lie_bracket, lie_structure_check, rtt_degree1_check};

fn main() {
    println!("bracket c = m - m.P = {}", lie_bracket());
    for check in lie_structure_check(2, 5) {
        println!("{:<40} {}", check.name, if check.holds { "holds" } else { "FAILS" });
    }
    let rtt = rtt_degree1_check();
    println!("degree-one RTT identity: difference vanishes = {}", rtt.difference.is_zero());
    println!("P a1 term matches the drawing = {}", rtt.p_a1_matches_drawing);
    println!("dropping the P terms breaks it = {}", rtt.negative_control_nonzero);
}

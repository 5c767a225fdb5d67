// Running a suite from code and printing its JSON report.

use deligne_yangian::harness::{run_suite, RunConfig, Suite};

fn main() {
    let cfg = RunConfig { m: 3, ..RunConfig::default() };
    let report = run_suite(Suite::Invariants, &cfg).unwrap();
    eprint!("{}", report.table());
    print!("{}", report.render());
}

// Batch verification of the compositional identity and the invariant suites.

use dyck_tower::verify::{run_suite, verify_shuffle, JobConfig, Mode, Suite};

pub fn run_example() {
    let rep = verify_shuffle(&JobConfig::new(2, 3, 1)).unwrap();
    assert!(rep.passed);
    println!("(2,3,1): {} composition(s) agree in {} ms", rep.cases.len(), rep.millis);

    let mut cfg = JobConfig::new(1, 1, 3);
    cfg.mode = Mode::Fast;
    cfg.jobs = 2;
    let rep = verify_shuffle(&cfg).unwrap();
    assert!(rep.passed);
    for c in &rep.cases {
        println!("alpha {:?}: {:?}", c.alpha, c.status);
    }

    let suite = run_suite(Suite::Braid, Mode::Exact).unwrap();
    assert!(suite.passed());
    println!("{} suite: {} cases, {} failures", suite.suite, suite.cases, suite.failures.len());
    assert!("everything".parse::<Suite>().is_err());
}

fn main() {
    run_example();
}

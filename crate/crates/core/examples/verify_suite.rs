//! Runs a verification suite and prints the failing rows, if any.

use twisted_conj::verify::{run, Suite, VerifyConfig};

fn main() {
    let suite = std::env::args().nth(1).and_then(|s| Suite::parse(&s)).unwrap_or(Suite::Lemmas);
    let rep = run(suite, &VerifyConfig::default());
    for c in &rep.checks {
        println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
    }
    println!("{} of {} checks passed", rep.checks.iter().filter(|c| c.pass).count(), rep.checks.len());
}

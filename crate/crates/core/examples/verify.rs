//! Runs the verification suite up to n = 5 and prints a summary per check.

use std::collections::BTreeMap;

use symrep::oracle::{run_suite, CheckStatus};
use symrep::Limits;

fn main() {
    let reports = run_suite(5, &Limits::current());
    let mut summary: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let entry = summary.entry(&r.check_id).or_default();
        entry.0 += 1;
        if r.status == CheckStatus::Fail {
            entry.1 += 1;
            println!("FAIL {} n={}: {}", r.check_id, r.n, r.detail);
        }
    }
    for (id, (runs, failed)) in &summary {
        println!("{id:<30} {runs} sizes, {failed} failed");
    }
}

//! Runs every check and prints the findings, discrepancies included.

use f4label::report::verify;

fn main() {
    let f = verify();
    for c in &f.checks {
        println!(
            "[{}] {:<18} {}",
            if c.passed { "ok" } else { "FAIL" },
            c.id,
            c.detail
        );
    }
    for d in &f.discrepancies {
        println!(
            "{:?} {}: claimed {}, computed {} ({:?})",
            d.case, d.claim.subject, d.claim.claimed, d.claim.computed, d.claim.status
        );
    }
    for n in &f.notes {
        println!("note: {n}");
    }
    std::process::exit(if f.all_passed() { 0 } else { 2 });
}

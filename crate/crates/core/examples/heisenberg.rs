//! Rebuilds position and momentum from the TD ladder operators and checks
//! the deformed Heisenberg relations exactly on monomials.
//!
//! Run with `cargo run --release --example heisenberg`.

use qsusy::scalar::rat;
use qsusy::susy::heisenberg_suite;

fn main() {
    let qs = [rat(1, 2), rat(3, 5), rat(5, 3), rat(2, 1)];
    let report = heisenberg_suite(&qs, 50);
    for c in &report.checks {
        println!(
            "{:<20} {:?}  {}",
            c.id,
            c.status,
            c.detail.as_deref().unwrap_or("")
        );
        if let Some(r) = &c.residual {
            println!("    residual: {r}");
        }
    }
    let s = report.summary();
    println!("\n{} passed, {} failed", s.passed, s.failed);
}

//! Product and bracket identities of the Spiridonov and TD superoscillators,
//! including the known discrepancies in the general-superpotential formulas.
//!
//! Run with `cargo run --example superoscillator`.

use qsusy::susy::{superoscillator_identity_suite, ModelKind};
use qsusy::Status;

fn main() {
    for kind in [ModelKind::Spiridonov, ModelKind::Td] {
        println!("== {kind} ==");
        let report = superoscillator_identity_suite(kind, None, None);
        for c in &report.checks {
            println!("{:<40} {:?}", c.id, c.status);
            if c.status != Status::Pass {
                if let Some(d) = &c.detail {
                    println!("    {d}");
                }
                if let Some(r) = &c.residual {
                    println!("    residual: {r}");
                }
            }
        }
        println!();
    }
}

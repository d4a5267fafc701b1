//! The supersymmetry algebra and intertwining relations for the undeformed,
//! Spiridonov and TD models, for a few polynomial superpotentials.
//!
//! Run with `cargo run --release --example susy_algebra`.

use qsusy::scalar::rat;
use qsusy::susy::{
    build_model, degeneration_checks, verify_intertwining, verify_susy_algebra, CrossCheck,
    ModelKind, Superpotential,
};

fn main() {
    let cross = CrossCheck::new(vec![rat(3, 5), rat(2, 1)], 16);
    for w in ["-x", "x", "x^3-x"] {
        let w: Superpotential = w.parse().unwrap();
        println!("== W = {w} ==");
        for kind in ModelKind::ALL {
            let m = build_model(kind, &w);
            let mut r = verify_susy_algebra(&m, Some(&cross));
            r.extend(verify_intertwining(&m, Some(&cross)));
            for c in &r.checks {
                println!("  {:<36} {:?}", c.id, c.status);
            }
        }
        for c in &degeneration_checks(&w).checks {
            println!("  {:<36} {:?}", c.id, c.status);
        }
    }
    let td = build_model(ModelKind::Td, &Superpotential::x());
    println!("\nTD lowering operator for W = x: B = {}", td.lower);
}

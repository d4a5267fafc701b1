//! Accidental degeneracies E_n(q) = E_m(q) of the TD oscillator, found by
//! bisection and certified by residual.
//!
//! Run with `cargo run --release --example degeneracy`.

use qsusy::spectra::{cleared_difference, find_degeneracy, scan_degeneracies};

fn main() {
    println!(
        "(E_1 - E_3) cleared, ascending: {:?}",
        cleared_difference(1, 3)
    );
    let d = find_degeneracy(1, 3, (0.0, 1.0))
        .unwrap()
        .expect("one root on (0,1)");
    println!(
        "E_1 = E_3 at q = {} (residual {:e})",
        d.q_root_string(),
        d.residual
    );

    for interval in [(0.0, 1.0), (1.0, 3.0)] {
        let s = scan_degeneracies(8, interval).unwrap();
        println!(
            "\npairs n < m <= 8 on {interval:?}: {} roots, {} unverified, {} triple",
            s.roots.len(),
            s.unverified.len(),
            s.triple.len()
        );
        for d in s.roots.iter().filter(|d| d.m <= 5) {
            println!("  E_{} = E_{} at q = {}", d.n, d.m, d.q_root_string());
        }
    }
}

//! The TD oscillator in its Fock realization: ladder relations, the
//! Hamiltonian diagonal, and the energy levels E_n(q).
//!
//! Run with `cargo run --release --example spectrum`.

use qsusy::scalar::rat;
use qsusy::spectra::{energy_checks, td_energy, td_energy_f64, verify_fock_algebra};

fn main() {
    for q0 in [rat(1, 2), rat(2, 1)] {
        let r = verify_fock_algebra(32, &q0).unwrap();
        println!("Fock relations at q = {q0}, dim 32:");
        for c in &r.checks {
            println!("  {:<26} {:?}", c.id, c.status);
        }
    }
    for c in &energy_checks(8).checks {
        println!("{:<26} {:?}", c.id, c.status);
    }
    println!("\n n  E_n(q)                      q = 1/2     q = 1   q = 2");
    for n in 0..6 {
        let e = td_energy(n);
        println!(
            "{n:>2}  {:<26}  {:<10}  {:<6}  {}",
            e.to_string(),
            e.eval(&rat(1, 2)).unwrap().to_string(),
            td_energy_f64(n, 1.0),
            td_energy_f64(n, 2.0)
        );
    }
}

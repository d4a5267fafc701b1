//! The zero mode of the TD lowering operator: recurrence, closed form,
//! TD-exponent form, and whether the coefficients decay like a Gaussian.
//!
//! Run with `cargo run --release --example ground_state`.

use qsusy::ground_state::{
    classify_normalizability, solve_zero_mode, td_gaussian, verify_annihilation, Branch,
};
use qsusy::scalar::rat;
use qsusy::susy::Superpotential;

fn main() {
    let f = solve_zero_mode(Branch::F, 10);
    println!("f, C_k / C_0 through x^10:");
    for (k, c) in f.coeffs.coeffs().iter().enumerate() {
        println!("  C_{k:<2} = {c}");
    }
    println!(
        "same as the TD-exponent form: {}",
        f.coeffs == td_gaussian(10)
    );
    let check = verify_annihilation(&f, &Superpotential::x());
    println!("B f = 0: {:?}", check.status);

    let at_one: Vec<String> = f
        .at(&rat(1, 1))
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("at q = 1: {}", at_one.join(", "));

    for branch in Branch::ALL {
        let sol = solve_zero_mode(branch, 80);
        for q0 in [rat(3, 2), rat(1, 1)] {
            let c = classify_normalizability(&sol, &q0).unwrap();
            println!(
                "{branch} at q = {q0}: {} (beta = {:.3}, factorial rate = {:.3})",
                c.class, c.beta_limit, c.factorial_rate
            );
        }
    }
}

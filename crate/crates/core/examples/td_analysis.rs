//! TD numbers, factorials, the TD-derivative and the TD-exponent, plus the
//! (p,q)-numbers they come from.
//!
//! Run with `cargo run --example td_analysis`.

use qsusy::scalar::rat;
use qsusy::special::{
    pq_factorial, pq_number, td_derivative, td_exp, td_exp_f64, td_factorial, td_factorial_product,
    td_number,
};
use qsusy::{QLaurent, Ring};

fn main() {
    for n in 0..6 {
        println!(
            "(n]_q for n = {n}: {}   (n]_q! = {}",
            td_number(n),
            td_factorial(n)
        );
    }
    println!(
        "product form agrees through n = 20: {}",
        (0..=20).all(|n| td_factorial(n) == td_factorial_product(n))
    );

    // The TD-exponent is an eigenfunction of the TD-derivative.
    let e = td_exp(&QLaurent::one(), 1, 12);
    let de = td_derivative(&e);
    println!(
        "D_TD exp_TD(z) == exp_TD(z) through z^11: {}",
        de.agrees_with(&e)
    );

    // (p,q)-numbers reduce to TD numbers at p = q.
    for n in 1..5 {
        println!(
            "[{n}]_(p,q) = {}  ->  {}",
            pq_number(n),
            pq_number(n).at_p_equals_q()
        );
    }
    println!("[3]_(p,q)! = {}", pq_factorial(3));

    // For q > 1 the float sum converges; for q < 1 it is only asymptotic.
    for (q, z) in [(2.0, 1.0), (1.0, 1.0), (0.9, 0.5)] {
        match td_exp_f64(q, z, 1e-14, 400) {
            Ok((v, k)) => println!("exp_TD at q = {q}, z = {z}: {v} ({k} terms)"),
            Err(err) => println!("exp_TD at q = {q}, z = {z}: {err}"),
        }
    }
    println!(
        "(3]_q at q = 1/2: {}",
        td_number(3).eval(&rat(1, 2)).unwrap()
    );
}

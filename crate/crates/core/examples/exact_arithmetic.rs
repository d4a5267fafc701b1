//! Exact scalars in Q(i, √2), Laurent polynomials in q, and truncated
//! series. Nothing here touches a float.
//!
//! Run with `cargo run --example exact_arithmetic`.

use qsusy::scalar::{parse_rational, rat};
use qsusy::{ExactScalar, Field, QLaurent, Ring, Series};

fn main() {
    // (1 + i√2)(1 - i√2) = 3
    let a = &ExactScalar::one() + &(&ExactScalar::i() * &ExactScalar::sqrt2());
    let b = a.conj();
    println!("a = {a}, conj(a) = {b}, a * conj(a) = {}", &a * &b);
    println!("1/a = {}", a.inv().expect("a is nonzero"));
    println!(
        "(1/√2)^2 = {}",
        &ExactScalar::inv_sqrt2() * &ExactScalar::inv_sqrt2()
    );

    // Rationals come from "num/den" strings; decimals are refused.
    println!("parse 3/5 -> {}", parse_rational("3/5").unwrap());
    println!("parse 0.6 -> {}", parse_rational("0.6").unwrap_err());

    // E_2(q) = (2q + 3q^2)/2 as a Laurent polynomial, evaluated exactly.
    let e2 = QLaurent::from_terms([(1, ExactScalar::int(1)), (2, ExactScalar::frac(3, 2))]);
    println!(
        "E_2 = {e2}, E_2(1/2) = {}, E_2(1) = {}",
        e2.eval(&rat(1, 2)).unwrap(),
        e2.at_one()
    );
    println!(
        "q^-3 at q = 0 -> {}",
        QLaurent::q_pow(-3).eval(&rat(0, 1)).unwrap_err()
    );

    // Truncated series: the order records which coefficients are known.
    let geo = Series::new((0..6).map(|_| ExactScalar::one()).collect(), 5);
    let one_minus_x = Series::new(vec![ExactScalar::one(), ExactScalar::int(-1)], 5);
    let prod = geo.mul(&one_minus_x);
    println!("(1 + x + ... + x^5)(1 - x) = {prod}");
}

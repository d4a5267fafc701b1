//! Twin-basic Pochhammer symbols and hypergeometric series, exactly and in
//! floating point, and the limits that connect them to the TD-exponent.
//!
//! Run with `cargo run --example hypergeometric`.

use qsusy::special::{
    pq_exp_as_phi, pq_exp_f64, td_exp_as_bibasic, td_exp_f64, twin_pochhammer, Mode, Normalizer,
};
use qsusy::ExactScalar;

fn main() {
    let s = |n, d| ExactScalar::frac(n, d);
    let v = twin_pochhammer(&s(3, 1), &s(1, 2), &s(2, 1), &s(1, 3), 3);
    println!("((3, 1/2); (2, 1/3))_3 = {v}");

    // exp_{p,q} as a 1Φ1 series: exact partial sums and the float value.
    let phi = pq_exp_as_phi(s(2, 1), s(1, 1), s(1, 10));
    for n in [2, 4, 8] {
        let e = phi.eval(Mode::ExactPartial { n_terms: n }).unwrap();
        println!("partial sum of {n} terms: {}", e.value);
    }
    let float = pq_exp_as_phi(2.0, 1.0, 0.1)
        .eval(Mode::float_default())
        .unwrap();
    let direct = pq_exp_f64(2.0, 1.0, 0.1, 1e-15, 1000).unwrap().0;
    println!(
        "float: {} ({} terms), direct sum: {direct}",
        float.value, float.terms_used
    );

    // The bibasic series tends to the TD-exponent as p -> 1, with the (p;p)_n
    // normalizer. With (q;q)_n it does not.
    let (q, z) = (2.0, 0.5);
    let target = td_exp_f64(q, z, 1e-15, 1000).unwrap().0;
    for norm in [Normalizer::P, Normalizer::Q] {
        let b = td_exp_as_bibasic(1.0 - 1e-6, q, z, norm).unwrap();
        let v = b.eval(Mode::float_default()).unwrap().value;
        println!("{norm:?} normalizer: {v:.9} vs exp_TD = {target:.9}");
    }
}

//! Normal ordering of words in X, D = d/dx and the dilation T f(x) = f(qx),
//! and the two ways of comparing operators: exact canonical form, and
//! action on monomials at rational q.
//!
//! Run with `cargo run --example normal_ordering`.

use qsusy::operator::{
    normal_form, numeric_equal, q_bracket, BracketKind, Expr, Generator, Operator, Tier2Operator,
    Word,
};
use qsusy::scalar::rat;
use qsusy::QLaurent;

fn main() {
    use Generator::*;
    // D X = X D + 1 and T X = q X T.
    for letters in [vec![D, X], vec![T, X], vec![T, D, X, TInv]] {
        let w = Word::letters(&letters);
        println!("{w}  =  {}", normal_form(&Expr::word(w.clone())));
    }

    // The q-commutator of D and X with weights (1, q): D X - q X D.
    let lhs = q_bracket(
        &Operator::d(),
        &Operator::x(),
        &BracketKind::Skew(QLaurent::q()),
    );
    println!("D X - q X D = {lhs}");

    // X D T x^m = m q^m x^m.
    let xdt = Operator::x()
        .compose(&Operator::d())
        .compose(&Operator::t(1));
    for m in 0..4 {
        println!("X D T x^{m} = {:?}", xdt.act_on_monomial(m));
    }

    // Numeric comparison at q = 3/5 on x^0..x^20 agrees with the exact one.
    let a = Operator::t(1).compose(&Operator::x());
    let b = Operator::x().compose(&Operator::t(1)).scale(&QLaurent::q());
    let eq = numeric_equal(
        &Tier2Operator::from(&a),
        &Tier2Operator::from(&b),
        20,
        &[rat(3, 5)],
    )
    .unwrap();
    println!("T X == q X T: symbolic {}, numeric {}", a == b, eq.equal);
}

//! Composition algebras and the (q-)brackets built on top of them.

use crate::laurent::QLaurent;
use crate::operator::algebra::Operator;
use crate::ring::Ring;

/// An associative algebra over `Q(i,√2)[q, q^{-1}]` whose product is
/// operator composition.
pub trait OpAlgebra: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn compose(&self, o: &Self) -> Self;
    fn scale(&self, c: &QLaurent) -> Self;

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&QLaurent::from(-1)))
    }
}

impl OpAlgebra for Operator {
    fn zero() -> Self {
        Operator::zero()
    }
    fn one() -> Self {
        Operator::identity()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn compose(&self, o: &Self) -> Self {
        Operator::compose(self, o)
    }
    fn scale(&self, c: &QLaurent) -> Self {
        Operator::scale(self, c)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BracketKind {
    /// `q ab - q^{-1} ba`
    CommQ,
    /// `q ab + q^{-1} ba`
    AnticommQ,
    /// `ab - ba`
    Comm,
    /// `ab + ba`
    Anticomm,
    /// `ab - λ ba`, the asymmetric convention `[A,B]_λ = AB - λBA`.
    Skew(QLaurent),
    /// `μ ab - ν ba` for arbitrary weights.
    Weighted(QLaurent, QLaurent),
}

impl BracketKind {
    fn weights(&self) -> (QLaurent, QLaurent) {
        match self {
            BracketKind::CommQ => (QLaurent::q(), -QLaurent::q_pow(-1)),
            BracketKind::AnticommQ => (QLaurent::q(), QLaurent::q_pow(-1)),
            BracketKind::Comm => (QLaurent::one(), QLaurent::from(-1)),
            BracketKind::Anticomm => (QLaurent::one(), QLaurent::one()),
            BracketKind::Skew(l) => (QLaurent::one(), -l),
            BracketKind::Weighted(m, n) => (m.clone(), -n),
        }
    }
}

/// `w_ab * a∘b + w_ba * b∘a` according to `kind`.
pub fn q_bracket<A: OpAlgebra>(a: &A, b: &A, kind: &BracketKind) -> A {
    let (wab, wba) = kind.weights();
    a.compose(b).scale(&wab).plus(&b.compose(a).scale(&wba))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::algebra::MonomialKey;

    #[test]
    fn d_x_commutator() {
        let c = q_bracket(&Operator::d(), &Operator::x(), &BracketKind::Comm);
        assert_eq!(c, Operator::identity());
    }

    #[test]
    fn x_x_q_commutator() {
        let c = q_bracket(&Operator::x(), &Operator::x(), &BracketKind::CommQ);
        let coeff = &QLaurent::q() - &QLaurent::q_pow(-1);
        assert_eq!(c, Operator::monomial(MonomialKey::new(2, 0, 0), coeff));
    }

    #[test]
    fn swapped_bracket_identity() {
        // [Y,X]_q = -[X,Y]_{q^{-1}}, written with explicit weights for q^{-1}.
        let x = Operator::x().compose(&Operator::t(1));
        let y = Operator::d().add(&Operator::x());
        let lhs = q_bracket(&y, &x, &BracketKind::CommQ);
        let inv = BracketKind::Weighted(QLaurent::q_pow(-1), QLaurent::q());
        let rhs = q_bracket(&x, &y, &inv).neg();
        assert_eq!(lhs, rhs);
    }
}

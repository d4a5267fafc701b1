use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::operator::{Block2, BlockOp2, OpAlgebra, Operator};
use crate::ring::Rational;
use crate::scalar::ExactScalar;
use crate::susy::Superpotential;
use num_traits::One;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Undeformed,
    /// `A = (p - iW) T_q / √2`.
    Spiridonov,
    /// `B = (T_q p - iW) / √2`.
    Td,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [ModelKind::Undeformed, ModelKind::Spiridonov, ModelKind::Td];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Undeformed => "undeformed",
            ModelKind::Spiridonov => "spiridonov",
            ModelKind::Td => "td",
        }
    }

    pub fn is_deformed(self) -> bool {
        self != ModelKind::Undeformed
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown model kind {s:?}")))
    }
}

/// Factorization operators and the super-structure built from them.
#[derive(Clone, Debug, PartialEq)]
pub struct SusyModel {
    pub kind: ModelKind,
    pub w: Superpotential,
    /// `A` or `B`.
    pub lower: Operator,
    /// `A†` or `B†`.
    pub raise: Operator,
    pub h: BlockOp2,
    pub q: BlockOp2,
    pub qdag: BlockOp2,
}

/// Block structure shared by every kind, generic so that the same formulas
/// can be rebuilt in any composition algebra.
pub fn super_structure<A: OpAlgebra>(
    kind: ModelKind,
    lower: &A,
    raise: &A,
) -> (Block2<A>, Block2<A>, Block2<A>) {
    let (up, down) = (lower.compose(raise), raise.compose(lower));
    let h = if kind.is_deformed() {
        Block2::diag(up.scale(&QLaurent::q()), down.scale(&QLaurent::q_pow(-1)))
    } else {
        Block2::diag(up, down)
    };
    (
        h,
        Block2::lower(raise.clone()),
        Block2::upper(lower.clone()),
    )
}

fn half_sqrt2() -> QLaurent {
    QLaurent::constant(ExactScalar::inv_sqrt2())
}

fn i_op(op: &Operator) -> Operator {
    op.scale_scalar(&ExactScalar::i())
}

/// Builds the model with `q` symbolic.
pub fn build_model(kind: ModelKind, w: &Superpotential) -> SusyModel {
    let p = Operator::p();
    let wop = w.op(0);
    let s = half_sqrt2();
    let (lower, raise) = match kind {
        ModelKind::Undeformed => (p.sub(&i_op(&wop)).scale(&s), p.add(&i_op(&wop)).scale(&s)),
        ModelKind::Spiridonov => (
            p.sub(&i_op(&wop)).compose(&Operator::t(1)).scale(&s),
            Operator::t(-1)
                .compose(&p.add(&i_op(&wop)))
                .scale(&(&s * &QLaurent::q_pow(-1))),
        ),
        ModelKind::Td => (
            Operator::t(1).compose(&p).sub(&i_op(&wop)).scale(&s),
            p.compose(&Operator::t(-1))
                .scale(&QLaurent::q_pow(-1))
                .add(&i_op(&wop))
                .scale(&s),
        ),
    };
    let (h, q, qdag) = super_structure(kind, &lower, &raise);
    SusyModel {
        kind,
        w: w.clone(),
        lower,
        raise,
        h,
        q,
        qdag,
    }
}

impl SusyModel {
    pub fn h_plus(&self) -> &Operator {
        self.h.get(0, 0)
    }

    pub fn h_minus(&self) -> &Operator {
        self.h.get(1, 1)
    }

    /// Every operator with `q = q0` substituted; at `q0 = 1` the scaling
    /// operator collapses to the identity.
    pub fn specialize(&self, q0: &Rational) -> SusyModel {
        SusyModel {
            kind: self.kind,
            w: self.w.clone(),
            lower: self.lower.at_q(q0),
            raise: self.raise.at_q(q0),
            h: self.h.map(|e| e.at_q(q0)),
            q: self.q.map(|e| e.at_q(q0)),
            qdag: self.qdag.map(|e| e.at_q(q0)),
        }
    }

    pub fn at_one(&self) -> SusyModel {
        self.specialize(&Rational::one())
    }

    /// Same operators, compared ignoring the kind label.
    pub fn same_operators(&self, o: &SusyModel) -> bool {
        self.lower == o.lower
            && self.raise == o.raise
            && self.h == o.h
            && self.q == o.q
            && self.qdag == o.qdag
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qmono;

    #[test]
    fn raise_is_adjoint_of_lower() {
        let w: Superpotential = "x^3 - 2x^2 + 1/2".parse().unwrap();
        for kind in ModelKind::ALL {
            let m = build_model(kind, &w);
            assert_eq!(m.lower.adjoint(), m.raise, "{kind}");
        }
    }

    #[test]
    fn td_lower_for_plus_x_is_tp_minus_ix() {
        let m = build_model(ModelKind::Td, &Superpotential::x());
        let expect = Operator::t(1)
            .compose(&Operator::p())
            .sub(&i_op(&Operator::x()))
            .scale(&half_sqrt2());
        assert_eq!(m.lower, expect);
    }

    #[test]
    fn spiridonov_at_one_is_undeformed() {
        let w: Superpotential = "x^2 - x".parse().unwrap();
        let sp = build_model(ModelKind::Spiridonov, &w).at_one();
        let un = build_model(ModelKind::Undeformed, &w);
        assert!(sp.same_operators(&un));
    }

    #[test]
    fn spiridonov_oscillator_product() {
        // q·AA† for W = -x is (p² + x² - 1)/2 with no q left over.
        let m = build_model(ModelKind::Spiridonov, &Superpotential::minus_x());
        let p2 = Operator::p().pow(2);
        let expect = p2
            .add(&Operator::x().pow(2))
            .sub(&Operator::identity())
            .scale(&qmono(1, 2, 0));
        assert_eq!(m.h_plus(), &expect);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ModelKind::ALL {
            assert_eq!(k.name().parse::<ModelKind>().unwrap(), k);
        }
        assert!("tdx".parse::<ModelKind>().is_err());
    }
}

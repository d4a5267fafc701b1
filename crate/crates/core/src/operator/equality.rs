//! Operator equality: symbolic for normal-ordered operators, monomial
//! action at rational `q` for pipelines.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::laurent::QLaurent;
use crate::operator::algebra::Operator;
use crate::operator::tier2::{check_q, Tier2Operator};
use crate::ring::{Rational, Ring};

/// Either side of an equality check.
#[derive(Clone, Debug)]
pub enum Operand {
    Symbolic(Operator),
    Pipeline(Tier2Operator),
}

impl From<Operator> for Operand {
    fn from(op: Operator) -> Self {
        Operand::Symbolic(op)
    }
}

impl From<Tier2Operator> for Operand {
    fn from(op: Tier2Operator) -> Self {
        Operand::Pipeline(op)
    }
}

impl Operand {
    fn to_tier2(&self) -> Tier2Operator {
        match self {
            Operand::Symbolic(op) => op.into(),
            Operand::Pipeline(p) => p.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Symbolic,
    MonomialAction,
}

/// First place where two operators disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    /// Input monomial `x^m`, if the disagreement was located on one.
    pub m: Option<usize>,
    /// `None` for a symbolic disagreement.
    pub q: Option<String>,
    pub degree: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualityReport {
    pub equal: bool,
    pub method: Method,
    pub degree_bound: usize,
    pub q_values: Vec<String>,
    pub discrepancy: Option<Discrepancy>,
}

/// Compares two operators. Two symbolic operands are compared by canonical
/// form, which proves the identity for all `q`; otherwise both sides are
/// applied to `x^0..=x^degree_bound` at each rational `q` in `q_values`.
pub fn op_equal(
    a: &Operand,
    b: &Operand,
    degree_bound: usize,
    q_values: &[Rational],
) -> Result<EqualityReport> {
    if let (Operand::Symbolic(x), Operand::Symbolic(y)) = (a, b) {
        return Ok(symbolic_equal(x, y, degree_bound));
    }
    numeric_equal(&a.to_tier2(), &b.to_tier2(), degree_bound, q_values)
}

pub fn symbolic_equal(a: &Operator, b: &Operator, degree_bound: usize) -> EqualityReport {
    let equal = a == b;
    let discrepancy = if equal {
        None
    } else {
        Some(locate_symbolic(a, b, degree_bound))
    };
    EqualityReport {
        equal,
        method: Method::Symbolic,
        degree_bound,
        q_values: Vec::new(),
        discrepancy,
    }
}

fn locate_symbolic(a: &Operator, b: &Operator, degree_bound: usize) -> Discrepancy {
    for m in 0..=degree_bound {
        let (x, y) = (a.act_on_monomial(m), b.act_on_monomial(m));
        if x != y {
            let degree = first_diff(&x, &y);
            let get = |p: &BTreeMap<usize, QLaurent>| p.get(&degree).cloned().unwrap_or_default();
            return Discrepancy {
                m: Some(m),
                q: None,
                degree: Some(degree),
                lhs: get(&x).to_string(),
                rhs: get(&y).to_string(),
            };
        }
    }
    Discrepancy {
        m: None,
        q: None,
        degree: None,
        lhs: a.to_string(),
        rhs: b.to_string(),
    }
}

fn first_diff<V: PartialEq + Default>(x: &BTreeMap<usize, V>, y: &BTreeMap<usize, V>) -> usize {
    x.keys()
        .chain(y.keys())
        .copied()
        .filter(|k| x.get(k) != y.get(k))
        .min()
        .unwrap_or(0)
}

pub fn numeric_equal(
    a: &Tier2Operator,
    b: &Tier2Operator,
    degree_bound: usize,
    q_values: &[Rational],
) -> Result<EqualityReport> {
    for q in q_values {
        check_q(q)?;
    }
    let per_q: Vec<Result<Option<Discrepancy>>> = q_values
        .par_iter()
        .map(|q0| {
            let (a, b) = (a.compile(q0), b.compile(q0));
            for m in 0..=degree_bound {
                let x = a.act_on_monomial(m)?;
                let y = b.act_on_monomial(m)?;
                if x != y {
                    let degree = first_diff(&x, &y);
                    let get = |p: &crate::operator::tier2::SparsePoly| {
                        p.get(&degree).cloned().unwrap_or_else(Ring::zero)
                    };
                    return Ok(Some(Discrepancy {
                        m: Some(m),
                        q: Some(q0.to_string()),
                        degree: Some(degree),
                        lhs: get(&x).to_string(),
                        rhs: get(&y).to_string(),
                    }));
                }
            }
            Ok(None)
        })
        .collect();
    let mut discrepancy = None;
    for r in per_q {
        if let Some(d) = r? {
            discrepancy = Some(d);
            break;
        }
    }
    Ok(EqualityReport {
        equal: discrepancy.is_none(),
        method: Method::MonomialAction,
        degree_bound,
        q_values: q_values.iter().map(ToString::to_string).collect(),
        discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::bracket::OpAlgebra;
    use crate::operator::tier2::DiagRational;
    use crate::scalar::rat;

    #[test]
    fn dx_equals_xd_plus_one() {
        let lhs = Operator::d().compose(&Operator::x());
        let rhs = Operator::x()
            .compose(&Operator::d())
            .add(&Operator::identity());
        let r = op_equal(&lhs.into(), &rhs.into(), 10, &[]).unwrap();
        assert!(r.equal);
        assert_eq!(r.method, Method::Symbolic);
    }

    #[test]
    fn symbolic_mismatch_is_located() {
        let lhs = Operator::d().compose(&Operator::x());
        let rhs = Operator::x().compose(&Operator::d());
        let r = op_equal(&lhs.into(), &rhs.into(), 10, &[]).unwrap();
        assert!(!r.equal);
        let d = r.discrepancy.unwrap();
        assert_eq!(d.m, Some(0));
        assert_eq!(d.lhs, "1");
        assert_eq!(d.rhs, "0");
    }

    #[test]
    fn numeric_mismatch_names_q_and_m() {
        let inv = Tier2Operator::diag(DiagRational::one_over_one_plus_t(2));
        let half = Tier2Operator::from(Operator::scalar(QLaurent::from(1)))
            .scale(&QLaurent::constant(crate::ExactScalar::frac(1, 2)));
        let r = op_equal(&inv.into(), &half.into(), 5, &[rat(1, 2)]).unwrap();
        assert!(!r.equal);
        let d = r.discrepancy.unwrap();
        assert_eq!(d.m, Some(1));
        assert_eq!(d.q.as_deref(), Some("1/2"));
    }
}

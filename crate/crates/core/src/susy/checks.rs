use crate::error::Result;
use crate::laurent::QLaurent;
use crate::operator::{
    numeric_equal, q_bracket, Block2, BracketKind, OpAlgebra, Operator, Tier2Operator,
};
use crate::report::{Check, Report};
use crate::ring::Rational;
use crate::susy::model::{build_model, super_structure, ModelKind, SusyModel};
use crate::susy::Superpotential;

/// Numeric re-verification through tier-2 pipelines, which compose by
/// concatenation and so never touch the normal-ordering code.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub q_values: Vec<Rational>,
    pub degree_bound: usize,
}

impl CrossCheck {
    pub fn new(q_values: Vec<Rational>, degree_bound: usize) -> Self {
        CrossCheck {
            q_values,
            degree_bound,
        }
    }

    pub(crate) fn describe(&self) -> String {
        let qs: Vec<String> = self.q_values.iter().map(ToString::to_string).collect();
        format!(
            "cross-checked at q in {{{}}} on x^0..x^{}",
            qs.join(", "),
            self.degree_bound
        )
    }
}

type Relation<A> = (&'static str, Block2<A>, Block2<A>);

fn susy_relations<A: OpAlgebra>(
    kind: ModelKind,
    (h, q, qd): (Block2<A>, Block2<A>, Block2<A>),
) -> Vec<Relation<A>> {
    let zero = <Block2<A> as OpAlgebra>::zero();
    if kind.is_deformed() {
        vec![
            (
                "anticomm_qdag_q",
                q_bracket(&qd, &q, &BracketKind::AnticommQ),
                h.clone(),
            ),
            (
                "anticomm_q_q",
                q_bracket(&q, &q, &BracketKind::AnticommQ),
                zero.clone(),
            ),
            (
                "anticomm_qdag_qdag",
                q_bracket(&qd, &qd, &BracketKind::AnticommQ),
                zero.clone(),
            ),
            (
                "comm_h_q",
                q_bracket(&h, &q, &BracketKind::CommQ),
                zero.clone(),
            ),
            ("comm_qdag_h", q_bracket(&qd, &h, &BracketKind::CommQ), zero),
        ]
    } else {
        vec![
            (
                "anticomm_q_qdag",
                q_bracket(&q, &qd, &BracketKind::Anticomm),
                h.clone(),
            ),
            ("q_squared", q.compose(&q), zero.clone()),
            ("qdag_squared", qd.compose(&qd), zero.clone()),
            (
                "comm_h_q",
                q_bracket(&h, &q, &BracketKind::Comm),
                zero.clone(),
            ),
            ("comm_qdag_h", q_bracket(&qd, &h, &BracketKind::Comm), zero),
        ]
    }
}

fn intertwining_relations<A: OpAlgebra>(
    kind: ModelKind,
    lower: &A,
    raise: &A,
    h: &Block2<A>,
) -> Vec<Relation<A>> {
    let (hp, hm) = (&h.entries[0][0], &h.entries[1][1]);
    let q2 = if kind.is_deformed() {
        QLaurent::q_pow(2)
    } else {
        QLaurent::from(1)
    };
    // Embedded as 1x1 blocks so both suites share the comparison code.
    let one = |a: A| Block2::diag(a, A::zero());
    vec![
        (
            "raise_hplus",
            one(raise.compose(hp)),
            one(hm.compose(raise).scale(&q2)),
        ),
        (
            "hplus_lower",
            one(hp.compose(lower)),
            one(lower.compose(hm).scale(&q2)),
        ),
    ]
}

fn block_residual(lhs: &Block2<Operator>, rhs: &Block2<Operator>) -> String {
    lhs.minus(rhs).to_string()
}

fn numeric_block_equal(
    lhs: &Block2<Tier2Operator>,
    rhs: &Block2<Tier2Operator>,
    cc: &CrossCheck,
) -> Result<Option<String>> {
    for i in 0..2 {
        for j in 0..2 {
            let r = numeric_equal(lhs.get(i, j), rhs.get(i, j), cc.degree_bound, &cc.q_values)?;
            if let Some(d) = r.discrepancy {
                return Ok(Some(format!(
                    "entry ({i},{j}) on x^{} at q={}: degree {} has {} vs {}",
                    d.m.unwrap_or(0),
                    d.q.unwrap_or_default(),
                    d.degree.unwrap_or(0),
                    d.lhs,
                    d.rhs
                )));
            }
        }
    }
    Ok(None)
}

/// The supersymmetry algebra for the blocks stored in `m`: five relations,
/// exact in `q`. The numeric cross-check rebuilds the blocks from `lower`
/// and `raise` as pipelines.
pub fn verify_susy_algebra(m: &SusyModel, cross: Option<&CrossCheck>) -> Report {
    let prefix = format!("susy.{}", m.kind);
    let symbolic = susy_relations(m.kind, (m.h.clone(), m.q.clone(), m.qdag.clone()));
    let numeric = cross.map(|_| {
        let (l, r) = (Tier2Operator::from(&m.lower), Tier2Operator::from(&m.raise));
        susy_relations(m.kind, super_structure(m.kind, &l, &r))
    });
    finish(&prefix, symbolic, numeric, cross)
}

/// Intertwining of the superpartner Hamiltonians (`q^2` scaling when
/// deformed, plain intertwining otherwise).
pub fn verify_intertwining(m: &SusyModel, cross: Option<&CrossCheck>) -> Report {
    let prefix = format!("intertwine.{}", m.kind);
    let symbolic = intertwining_relations(m.kind, &m.lower, &m.raise, &m.h);
    let numeric = cross.map(|_| {
        let (l, r) = (Tier2Operator::from(&m.lower), Tier2Operator::from(&m.raise));
        let (h, _, _) = super_structure(m.kind, &l, &r);
        intertwining_relations(m.kind, &l, &r, &h)
    });
    finish(&prefix, symbolic, numeric, cross)
}

fn finish(
    prefix: &str,
    symbolic: Vec<Relation<Operator>>,
    numeric: Option<Vec<Relation<Tier2Operator>>>,
    cross: Option<&CrossCheck>,
) -> Report {
    let mut report = Report::new();
    let mut numeric = numeric.map(Vec::into_iter);
    for (name, lhs, rhs) in symbolic {
        let id = format!("{prefix}.{name}");
        let mut check = Check::from_outcome(&id, lhs == rhs, || block_residual(&lhs, &rhs));
        let mut detail = String::from("exact symbolic identity in q");
        if let (Some(it), Some(cc)) = (numeric.as_mut(), cross) {
            let (_, nl, nr) = it.next().expect("numeric relations mirror symbolic ones");
            match numeric_block_equal(&nl, &nr, cc) {
                Ok(None) => detail = format!("{detail}; {}", cc.describe()),
                Ok(Some(d)) => {
                    check = Check::fail(&id, format!("numeric cross-check disagrees: {d}"));
                    detail = check.detail.clone().unwrap_or_default();
                }
                Err(e) => {
                    check = Check::fail(&id, e.to_string());
                    detail = e.to_string();
                }
            }
        }
        check.detail = Some(detail);
        report.push(check);
    }
    report
}

/// `q -> 1` of each deformed model is the undeformed model.
pub fn degeneration_checks(w: &Superpotential) -> Report {
    let un = build_model(ModelKind::Undeformed, w);
    [ModelKind::Spiridonov, ModelKind::Td]
        .into_iter()
        .map(|kind| {
            let m = build_model(kind, w).at_one();
            Check::from_outcome(
                &format!("limit.{kind}.model"),
                m.same_operators(&un),
                || format!("lower at q=1: {}; undeformed: {}", m.lower, un.lower),
            )
            .with_detail(format!("W = {w}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::scalar::rat;

    fn ws() -> Vec<Superpotential> {
        ["-x", "x", "x^3 - x"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    }

    #[test]
    fn all_kinds_satisfy_susy_algebra() {
        for w in ws() {
            for kind in ModelKind::ALL {
                let r = verify_susy_algebra(&build_model(kind, &w), None);
                assert_eq!(r.checks.len(), 5);
                assert!(r.ok(), "{kind} {w}: {:?}", r.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn numeric_cross_check_agrees() {
        let cc = CrossCheck::new(vec![rat(3, 5)], 12);
        let m = build_model(ModelKind::Spiridonov, &Superpotential::minus_x());
        let r = verify_susy_algebra(&m, Some(&cc));
        assert!(r.checks.iter().all(|c| c.status == Status::Pass));
        assert!(r.checks[0].detail.as_deref().unwrap().contains("3/5"));
    }

    #[test]
    fn tampered_hamiltonian_is_caught() {
        let mut m = build_model(ModelKind::Td, &Superpotential::minus_x());
        m.h = m.h.map(|e| e.add(&Operator::x()));
        let r = verify_susy_algebra(&m, None);
        let c = r.get("susy.td.anticomm_qdag_q").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert!(c.residual.as_deref().unwrap().contains("X"));
        assert!(!verify_intertwining(&m, None).ok());
    }

    #[test]
    fn intertwining_holds() {
        for w in ws() {
            for kind in ModelKind::ALL {
                let r = verify_intertwining(&build_model(kind, &w), None);
                assert!(r.ok(), "{kind} {w}");
            }
        }
    }

    #[test]
    fn models_degenerate_at_q_one() {
        for w in ws() {
            assert!(degeneration_checks(&w).ok());
        }
    }
}

//! Position and momentum rebuilt from the TD oscillator ladder operators,
//! with the inverses of `T_q` polynomials kept as diagonal pipeline stages.

use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::operator::{
    op_equal, q_bracket, BracketKind, DiagRational, OpAlgebra, Operand, Operator, Tier2Operator,
};
use crate::report::{Check, Report};
use crate::ring::{Rational, Ring};
use crate::scalar::ExactScalar;
use crate::susy::model::{build_model, ModelKind};
use crate::susy::Superpotential;

type T2 = Tier2Operator;

fn t2(op: &Operator) -> T2 {
    T2::from(op)
}

fn diag(r: DiagRational) -> T2 {
    T2::diag(r)
}

/// `1/c(q)` for a non-monomial `c`.
fn reciprocal(c: QLaurent) -> T2 {
    diag(DiagRational::reciprocal_scalar(c))
}

fn skew(a: &Operator, b: &Operator, lambda: QLaurent) -> Operator {
    q_bracket(a, b, &BracketKind::Skew(lambda))
}

/// Reconstructed operators, all in pipeline form.
pub struct Reconstruction {
    pub b: Operator,
    pub bdag: Operator,
    /// Momentum, split form.
    pub p_split: T2,
    /// Momentum, `q√2 (B + B†) / (T + T^{-1})`.
    pub p_sum: T2,
    pub x_split: T2,
    /// Position, `i√2 (B T^{-1} - B† T) / (T + T^{-1})`.
    pub x_sum: T2,
}

impl Reconstruction {
    pub fn new() -> Self {
        let m = build_model(ModelKind::Td, &Superpotential::x());
        let (b, bd) = (t2(&m.lower), t2(&m.raise));
        let (t, tinv) = (t2(&Operator::t(1)), t2(&Operator::t(-1)));
        let q_sqrt2 = QLaurent::monomial(ExactScalar::sqrt2(), 1);
        let i_sqrt2 = QLaurent::constant(&ExactScalar::i() * &ExactScalar::sqrt2());
        let inv_sum = diag(DiagRational::one_over_t_plus_tinv());
        let inv_plus = diag(DiagRational::one_over_one_plus_t(2));
        let inv_minus = diag(DiagRational::one_over_one_plus_t(-2));

        let p_split = b
            .compose(&t)
            .compose(&inv_plus)
            .plus(&bd.compose(&tinv).compose(&inv_minus))
            .scale(&q_sqrt2);
        let p_sum = b.plus(&bd).compose(&inv_sum).scale(&q_sqrt2);
        let x_split = b
            .compose(&inv_plus)
            .minus(&bd.compose(&inv_minus))
            .scale(&i_sqrt2);
        let x_sum = b
            .compose(&tinv)
            .minus(&bd.compose(&t))
            .compose(&inv_sum)
            .scale(&i_sqrt2);
        Reconstruction {
            b: m.lower,
            bdag: m.raise,
            p_split,
            p_sum,
            x_split,
            x_sum,
        }
    }
}

impl Default for Reconstruction {
    fn default() -> Self {
        Reconstruction::new()
    }
}

fn compare(id: &str, a: Operand, b: Operand, m_max: usize, q0: &Rational) -> Check {
    match op_equal(&a, &b, m_max, std::slice::from_ref(q0)) {
        Ok(r) if r.equal => {
            let how = match r.method {
                crate::operator::Method::Symbolic => "exact symbolic identity in q".to_string(),
                crate::operator::Method::MonomialAction => {
                    format!("exact on x^0..x^{m_max} at q = {q0}")
                }
            };
            Check::new(id, crate::report::Status::Pass).with_detail(how)
        }
        Ok(r) => {
            let mut c = Check::fail(id, format!("differs at q = {q0}"));
            c.residual = r.discrepancy.map(|d| {
                format!(
                    "x^{:?} -> degree {:?}: {} vs {}",
                    d.m, d.degree, d.lhs, d.rhs
                )
            });
            c
        }
        Err(e) => Check::fail(id, e.to_string()),
    }
}

/// The two bracket identities implied by `[X, P] = i`, with
/// `[A, B]_λ = AB - λBA`.
pub fn bracket_identities(b: &Operator) -> (Operator, Operator, Operator, Operator) {
    let (t, tinv) = (Operator::t(1), Operator::t(-1));
    let (q, qinv) = (QLaurent::q(), QLaurent::q_pow(-1));
    let first = tinv
        .compose(&skew(&t, b, q.clone()))
        .compose(&skew(b, &tinv, qinv.clone()))
        .sub(
            &t.compose(&skew(b, &tinv, qinv))
                .compose(&skew(b, &tinv, q.clone())),
        );
    let second = t
        .compose(&skew(&tinv, b, q.clone()))
        .compose(&skew(b, &tinv, q.clone()))
        .sub(
            &tinv
                .compose(&skew(&t, b, q.clone()))
                .compose(&skew(&tinv, b, q)),
        );
    let q_minus = QLaurent::from_terms([(1, ExactScalar::one()), (-1, -ExactScalar::one())]);
    let half = QLaurent::constant(ExactScalar::frac(1, 2));
    let rhs_first = Operator::scalar(&(&q_minus * &q_minus) * &half);
    let rhs_second = rhs_first.scale(&QLaurent::q());
    (first, rhs_first, second, rhs_second)
}

/// Verifies the reconstruction on `x^0..x^{m_max}` at `q = q0`.
pub fn heisenberg_reconstruction(q0: &Rational, m_max: usize) -> Result<Report> {
    if q0.is_one() {
        return Err(Error::Precondition(
            "reconstruction divides by q - 1/q; q = 1 excluded".into(),
        ));
    }
    crate::operator::check_q(q0)?;
    let rc = Reconstruction::new();
    let p = Operator::p();
    let x = Operator::x();
    let (t, tinv) = (Operator::t(1), Operator::t(-1));
    let i = ExactScalar::i();
    let sym = |o: &Operator| Operand::Symbolic(o.clone());
    let pipe = |o: &T2| Operand::Pipeline(o.clone());
    let mut r = Report::new();

    r.push(compare(
        "heis.p_split",
        pipe(&rc.p_split),
        sym(&p),
        m_max,
        q0,
    ));
    r.push(compare("heis.p_sum", pipe(&rc.p_sum), sym(&p), m_max, q0));
    r.push(compare(
        "heis.x_split",
        pipe(&rc.x_split),
        sym(&x),
        m_max,
        q0,
    ));
    r.push(compare("heis.x_sum", pipe(&rc.x_sum), sym(&x), m_max, q0));

    // X = (√2/2i)(B† - B) + (q^{-1}/2i) P (T - T^{-1})
    let half_over_i = -&(&ExactScalar::frac(1, 2) * &i);
    let x_alt = rc
        .bdag
        .sub(&rc.b)
        .scale_scalar(&(&half_over_i * &ExactScalar::sqrt2()))
        .add(
            &p.compose(&t.sub(&tinv))
                .scale(&QLaurent::monomial(half_over_i, -1)),
        );
    r.push(compare("heis.x_alt", sym(&x_alt), sym(&x), m_max, q0));

    let (xr, pr) = (&rc.x_sum, &rc.p_sum);
    let comm = xr.compose(pr).minus(&pr.compose(xr));
    r.push(compare(
        "heis.xp_comm",
        pipe(&comm),
        sym(&Operator::scalar(QLaurent::constant(i.clone()))),
        m_max,
        q0,
    ));

    let (first, rhs1, second, rhs2) = bracket_identities(&rc.b);
    r.push(compare(
        "heis.unnumbered_1",
        sym(&first),
        sym(&rhs1),
        m_max,
        q0,
    ));
    r.push(compare(
        "heis.unnumbered_2",
        sym(&second),
        sym(&rhs2),
        m_max,
        q0,
    ));

    // P̃ = T P = q^{-1} P T
    let ptilde_sym = t.compose(&p);
    r.push(compare(
        "heis.ptilde_forms",
        sym(&ptilde_sym),
        sym(&p.compose(&t).scale(&QLaurent::q_pow(-1))),
        m_max,
        q0,
    ));
    let ptilde = t2(&t).compose(pr);
    let i_t = t.scale_scalar(&i);
    // [X, P̃] = q^{-1}(iT + (1 - q) P̃ X)
    let lhs23 = xr.compose(&ptilde).minus(&ptilde.compose(xr));
    let one_minus_q = QLaurent::from_terms([(0, ExactScalar::one()), (1, -ExactScalar::one())]);
    let rhs23 = t2(&i_t)
        .plus(&ptilde.compose(xr).scale(&one_minus_q))
        .scale(&QLaurent::q_pow(-1));
    r.push(compare(
        "heis.deformed_comm",
        pipe(&lhs23),
        pipe(&rhs23),
        m_max,
        q0,
    ));
    // X P̃ - q^{-1} P̃ X = (i/q) T
    let lhs24 = xr
        .compose(&ptilde)
        .minus(&ptilde.compose(xr).scale(&QLaurent::q_pow(-1)));
    let rhs24 = i_t.scale(&QLaurent::q_pow(-1));
    r.push(compare("heis.q_comm", pipe(&lhs24), sym(&rhs24), m_max, q0));
    let limit = rhs24.at_one();
    r.push(Check::from_outcome(
        "heis.q_comm_limit",
        limit == Operator::scalar(QLaurent::constant(i.clone())),
        || limit.to_string(),
    ));

    // Momentum and position as brackets of B with T^{±1}.
    let sqrt2 = QLaurent::constant(ExactScalar::sqrt2());
    let i_sqrt2 = QLaurent::constant(&i * &ExactScalar::sqrt2());
    let qinv_minus_q = QLaurent::from_terms([(-1, ExactScalar::one()), (1, -ExactScalar::one())]);
    let q_minus_qinv = -&qinv_minus_q;
    let one_minus_q2 = QLaurent::from_terms([(0, ExactScalar::one()), (2, -ExactScalar::one())]);
    let (q, qinv) = (QLaurent::q(), QLaurent::q_pow(-1));
    let b = &rc.b;
    let p_br = reciprocal(qinv_minus_q).compose(&t2(&skew(b, &tinv, q.clone()).scale(&sqrt2)));
    r.push(compare("heis.p_qcomm", pipe(&p_br), sym(&p), m_max, q0));
    let x_forms = [
        (
            "heis.x_qcomm_a",
            q_minus_qinv.clone(),
            t.compose(&skew(b, &tinv, qinv.clone())),
        ),
        (
            "heis.x_qcomm_b",
            q_minus_qinv,
            skew(&t, b, qinv).compose(&tinv),
        ),
        (
            "heis.x_qcomm_c",
            one_minus_q2.clone(),
            t.compose(&skew(&tinv, b, q.clone())),
        ),
        (
            "heis.x_qcomm_d",
            one_minus_q2,
            skew(b, &t, q).compose(&tinv),
        ),
    ];
    for (id, den, body) in x_forms {
        let lhs = reciprocal(den).compose(&t2(&body.scale(&i_sqrt2)));
        r.push(compare(id, pipe(&lhs), sym(&x), m_max, q0));
    }
    Ok(r)
}

/// Runs [`heisenberg_reconstruction`] over several `q` values, prefixing each
/// check's detail with its `q`.
pub fn heisenberg_suite(q_values: &[Rational], m_max: usize) -> Report {
    use rayon::prelude::*;
    let parts: Vec<Report> = q_values
        .par_iter()
        .map(|q0| match heisenberg_reconstruction(q0, m_max) {
            Ok(r) => r
                .checks
                .into_iter()
                .map(|mut c| {
                    c.detail = Some(match c.detail {
                        Some(d) => format!("q = {q0}: {d}"),
                        None => format!("q = {q0}"),
                    });
                    c
                })
                .collect(),
            Err(e) => Report::from_iter([Check::fail("heis.setup", format!("q = {q0}: {e}"))]),
        })
        .collect();
    let mut out = Report::new();
    for p in parts {
        out.extend(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::series::Series;

    #[test]
    fn momentum_kills_constants() {
        let rc = Reconstruction::new();
        let one = Series::new(vec![ExactScalar::one()], 4);
        let out = rc.p_sum.apply_at(&one, &rat(1, 2)).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn q_equal_one_is_rejected() {
        assert!(matches!(
            heisenberg_reconstruction(&rat(1, 1), 5),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reconstruction_at_three_fifths() {
        let r = heisenberg_reconstruction(&rat(3, 5), 20).unwrap();
        assert!(r.ok(), "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn first_bracket_identity_symbolic() {
        let rc = Reconstruction::new();
        let (first, rhs1, _, _) = bracket_identities(&rc.b);
        assert_eq!(first, rhs1);
    }
}

//! Displayed product and bracket identities of the two superoscillators,
//! encoded as right-hand sides and compared with products derived from the
//! factorization operators.

use crate::laurent::QLaurent;
use crate::operator::{numeric_equal, q_bracket, BracketKind, OpAlgebra, Operator, Tier2Operator};
use crate::report::{Check, Report};
use crate::ring::Ring;
use crate::scalar::ExactScalar;
use crate::susy::checks::CrossCheck;
use crate::susy::model::{build_model, ModelKind, SusyModel};
use crate::susy::Superpotential;

/// Sign of the linear superpotential `W = ±x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn superpotential(self) -> Superpotential {
        match self {
            Sign::Plus => Superpotential::x(),
            Sign::Minus => Superpotential::minus_x(),
        }
    }
}

/// `sum c_k q^k` from `(num, den, k)` triples.
fn ql(terms: &[(i64, i64, i64)]) -> QLaurent {
    QLaurent::from_terms(terms.iter().map(|&(n, d, k)| (k, ExactScalar::frac(n, d))))
}

fn lin(terms: &[(QLaurent, &Operator)]) -> Operator {
    terms
        .iter()
        .fold(Operator::zero(), |acc, (c, op)| acc.add(&op.scale(c)))
}

struct Basis {
    one: Operator,
    x2: Operator,
    p2: Operator,
    /// `i X p`
    ixp: Operator,
    t: Operator,
    tinv: Operator,
}

impl Basis {
    fn new() -> Self {
        let p = Operator::p();
        Basis {
            one: Operator::identity(),
            x2: Operator::x().pow(2),
            p2: p.pow(2),
            ixp: Operator::x().compose(&p).scale_scalar(&ExactScalar::i()),
            t: Operator::t(1),
            tinv: Operator::t(-1),
        }
    }
}

/// `mu * lower∘raise - nu * raise∘lower` against a displayed right side.
struct BracketIdentity {
    id: &'static str,
    mu: QLaurent,
    nu: QLaurent,
    rhs: Operator,
}

impl BracketIdentity {
    fn kind(&self) -> BracketKind {
        BracketKind::Weighted(self.mu.clone(), self.nu.clone())
    }

    fn lhs<A: OpAlgebra>(&self, lower: &A, raise: &A) -> A {
        q_bracket(lower, raise, &self.kind())
    }
}

fn spiridonov_list() -> Vec<BracketIdentity> {
    let b = Basis::new();
    let q = |k: i64| QLaurent::q_pow(k);
    let zero = QLaurent::zero();
    let one = QLaurent::one();
    vec![
        BracketIdentity {
            id: "superosc.sp.a_adag",
            mu: one.clone(),
            nu: zero.clone(),
            rhs: lin(&[
                (one.clone(), &b.p2),
                (one.clone(), &b.x2),
                (ql(&[(-1, 1, 0)]), &b.one),
            ])
            .scale(&ql(&[(1, 2, -1)])),
        },
        BracketIdentity {
            id: "superosc.sp.adag_a",
            mu: zero.clone(),
            nu: -one.clone(),
            rhs: lin(&[(one.clone(), &b.p2), (q(-4), &b.x2), (q(-2), &b.one)])
                .scale(&ql(&[(1, 2, 1)])),
        },
        BracketIdentity {
            id: "superosc.sp.anticomm",
            mu: one.clone(),
            nu: -one.clone(),
            rhs: lin(&[
                (ql(&[(1, 1, 0), (1, 1, 2)]), &b.p2),
                (ql(&[(1, 1, 0), (1, 1, -2)]), &b.x2),
            ])
            .scale(&ql(&[(1, 2, -1)])),
        },
        BracketIdentity {
            id: "superosc.sp.comm",
            mu: one.clone(),
            nu: one.clone(),
            rhs: lin(&[
                (ql(&[(1, 1, 0), (-1, 1, 2)]), &b.p2),
                (ql(&[(1, 1, 0), (-1, 1, -2)]), &b.x2),
                (ql(&[(-2, 1, 0)]), &b.one),
            ])
            .scale(&ql(&[(1, 2, -1)])),
        },
        BracketIdentity {
            id: "superosc.sp.skew_1_q",
            mu: one.clone(),
            nu: q(1),
            rhs: lin(&[
                (ql(&[(1, 1, -1), (-1, 1, 2)]), &b.p2),
                (ql(&[(1, 1, -1), (-1, 1, -2)]), &b.x2),
                (ql(&[(-1, 1, -1), (-1, 1, 0)]), &b.one),
            ])
            .scale(&ql(&[(1, 2, 0)])),
        },
        BracketIdentity {
            id: "superosc.sp.skew_q_1",
            mu: q(1),
            nu: one.clone(),
            rhs: lin(&[
                (ql(&[(1, 1, 0), (-1, 1, 1)]), &b.p2),
                (ql(&[(1, 1, 0), (-1, 1, -3)]), &b.x2),
                (ql(&[(-1, 1, -1), (-1, 1, 0)]), &b.one),
            ])
            .scale(&ql(&[(1, 2, 0)])),
        },
        BracketIdentity {
            id: "superosc.sp.comm_q",
            mu: q(1),
            nu: q(-1),
            rhs: lin(&[
                (ql(&[(1, 1, 0), (-1, 1, -2)]), &b.x2),
                (ql(&[(-1, 1, 0)]), &b.one),
            ])
            .scale(&ql(&[(1, 2, 0), (1, 2, -2)])),
        },
        BracketIdentity {
            id: "superosc.sp.comm_qinv",
            mu: q(-1),
            nu: q(1),
            rhs: lin(&[
                (ql(&[(1, 1, -2), (-1, 1, 2)]), &b.p2),
                (ql(&[(-1, 1, -2), (-1, 1, 0)]), &b.one),
            ])
            .scale(&ql(&[(1, 2, 0)])),
        },
    ]
}

fn td_list() -> Vec<BracketIdentity> {
    let b = Basis::new();
    let q = |k: i64| QLaurent::q_pow(k);
    let zero = QLaurent::zero();
    let one = QLaurent::one();
    let half_q = ql(&[(1, 2, -1)]);
    // qT - T^{-1}
    let qt_minus_tinv = lin(&[(q(1), &b.t), (ql(&[(-1, 1, 0)]), &b.tinv)]);
    let ixp_qt = b.ixp.compose(&qt_minus_tinv);
    let ixp_t = b
        .ixp
        .compose(&lin(&[(one.clone(), &b.t), (ql(&[(-1, 1, -1)]), &b.tinv)]));
    vec![
        BracketIdentity {
            id: "superosc.td.b_bdag",
            mu: one.clone(),
            nu: zero.clone(),
            rhs: lin(&[
                (q(-2), &b.p2),
                (q(1), &b.x2),
                (q(1), &b.t),
                (one.clone(), &ixp_qt),
            ])
            .scale(&half_q),
        },
        BracketIdentity {
            id: "superosc.td.bdag_b",
            mu: zero.clone(),
            nu: -one.clone(),
            rhs: lin(&[
                (one.clone(), &b.p2),
                (q(1), &b.x2),
                (ql(&[(-1, 1, -1)]), &b.tinv),
                (one.clone(), &ixp_t),
            ])
            .scale(&half_q),
        },
        BracketIdentity {
            id: "superosc.td.comm",
            mu: one.clone(),
            nu: one.clone(),
            rhs: lin(&[
                (ql(&[(1, 1, -2), (-1, 1, 0)]), &b.p2),
                (ql(&[(1, 1, 0), (-1, 1, -1)]), &ixp_qt),
                (q(1), &b.t),
                (q(-1), &b.tinv),
            ])
            .scale(&half_q),
        },
        BracketIdentity {
            id: "superosc.td.comm_q",
            mu: q(1),
            nu: q(-1),
            rhs: lin(&[
                (ql(&[(1, 1, 2), (-1, 1, 0)]), &b.x2),
                (ql(&[(1, 1, 1), (-1, 1, -2)]), &ixp_qt),
                (q(2), &b.t),
                (q(-2), &b.tinv),
            ])
            .scale(&half_q),
        },
        BracketIdentity {
            id: "superosc.td.skew_1_q",
            mu: one.clone(),
            nu: q(1),
            rhs: lin(&[
                (ql(&[(1, 1, 1), (-1, 1, 2)]), &b.x2),
                (ql(&[(1, 1, -2), (-1, 1, 1)]), &b.p2),
                (q(1), &b.t),
                (one.clone(), &b.tinv),
            ])
            .scale(&half_q),
        },
        BracketIdentity {
            id: "superosc.td.skew_q_1",
            mu: q(1),
            nu: one.clone(),
            rhs: lin(&[
                (ql(&[(1, 1, -1), (-1, 1, 0)]), &b.p2),
                (ql(&[(1, 1, 2), (-1, 1, 1)]), &b.x2),
                (ql(&[(1, 1, 1), (-1, 1, -1)]), &ixp_qt),
                (q(2), &b.t),
                (q(-1), &b.tinv),
            ])
            .scale(&half_q),
        },
    ]
}

fn cross_check(
    lower: &Tier2Operator,
    raise: &Tier2Operator,
    ident: &BracketIdentity,
    cc: &CrossCheck,
) -> std::result::Result<(), String> {
    let lhs = ident.lhs(lower, raise);
    let rhs = Tier2Operator::from(&ident.rhs);
    match numeric_equal(&lhs, &rhs, cc.degree_bound, &cc.q_values) {
        Ok(r) if r.equal => Ok(()),
        Ok(r) => Err(format!(
            "numeric cross-check disagrees: {:?}",
            r.discrepancy
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn run_list(m: &SusyModel, list: &[BracketIdentity], cross: Option<&CrossCheck>) -> Report {
    let (tl, tr) = (Tier2Operator::from(&m.lower), Tier2Operator::from(&m.raise));
    list.iter()
        .map(|ident| {
            let lhs = ident.lhs(&m.lower, &m.raise);
            let mut c = Check::from_outcome(ident.id, lhs == ident.rhs, || {
                lhs.sub(&ident.rhs).to_string()
            });
            c.detail = Some(format!("W = {}", m.w));
            if let Some(cc) = cross {
                match cross_check(&tl, &tr, ident, cc) {
                    Ok(()) => c.detail = Some(format!("W = {}; {}", m.w, cc.describe())),
                    Err(e) => c = Check::fail(ident.id, e),
                }
            }
            c
        })
        .collect()
}

/// `q -> 1` of every bracket left side equals the undeformed bracket.
fn limit_check(id: &str, m: &SusyModel, list: &[BracketIdentity]) -> Check {
    let un = build_model(ModelKind::Undeformed, &m.w);
    let mut bad = Vec::new();
    for ident in list {
        let deformed = ident.lhs(&m.lower, &m.raise).at_one();
        let mu1 = QLaurent::constant(ident.mu.at_one());
        let nu1 = QLaurent::constant(ident.nu.at_one());
        let classical = q_bracket(&un.lower, &un.raise, &BracketKind::Weighted(mu1, nu1));
        if deformed != classical {
            bad.push(ident.id);
        }
    }
    Check::from_outcome(id, bad.is_empty(), || {
        format!("no classical limit for {bad:?}")
    })
    .with_detail(format!(
        "{} identities reduce to their undeformed counterparts",
        list.len()
    ))
}

/// The generic superpotential used for the general-`W` product formulas.
pub fn generic_superpotential() -> Superpotential {
    "x^3 - 2x^2 - x + 1/2".parse().expect("literal parses")
}

fn spiridonov_general(w: &Superpotential) -> Report {
    let m = build_model(ModelKind::Spiridonov, w);
    let p2 = Operator::p().pow(2);
    let w0 = w.op(0);
    let wm = w.op(-1);
    let mut r = Report::new();

    let aad = m.lower.compose(&m.raise);
    let rhs = p2
        .add(&w0.compose(&w0))
        .add(&w.deriv_op(0))
        .scale(&ql(&[(1, 2, -1)]));
    r.push(
        Check::from_outcome("superosc.sp.a_adag_general", aad == rhs, || {
            aad.sub(&rhs).to_string()
        })
        .with_detail(format!("W = {w}")),
    );

    let ada = m.raise.compose(&m.lower);
    let displayed = |wprime: Operator| {
        p2.add(&wm.compose(&wm).scale(&QLaurent::q_pow(-2)))
            .sub(&wprime.scale(&QLaurent::q_pow(-1)))
            .scale(&ql(&[(1, 2, 1)]))
    };
    let literal = displayed(w.deriv_op(-1));
    let composite = displayed(w.chain_deriv_op(-1));
    let derived = p2
        .add(&wm.compose(&wm).scale(&QLaurent::q_pow(-2)))
        .sub(&w.deriv_op(-1).scale(&QLaurent::q_pow(-2)))
        .scale(&ql(&[(1, 2, 1)]));
    r.push(Check::informational(
        "superosc.sp.adag_a_general.literal",
        (ada != literal).then(|| ada.sub(&literal).to_string()),
        format!(
            "with W'(x/q) read as the derivative evaluated at x/q the displayed form {}; derived: A†A = (q/2)(p² + q^-2 W(x/q)² - q^-2 W'(x/q)) = {derived}",
            if ada == literal { "holds" } else { "does not hold" }
        ),
    ));
    r.push(
        Check::from_outcome(
            "superosc.sp.adag_a_general.composite",
            ada == composite,
            || ada.sub(&composite).to_string(),
        )
        .with_detail(format!("W'(x/q) read as d/dx[W(x/q)]; W = {w}")),
    );
    r
}

fn td_general(w: &Superpotential) -> Report {
    let m = build_model(ModelKind::Td, w);
    let p = Operator::p();
    let p2 = p.pow(2);
    let (t, tinv) = (Operator::t(1), Operator::t(-1));
    let i = ExactScalar::i();
    let w0 = w.op(0);
    let half_q = ql(&[(1, 2, -1)]);
    let mut r = Report::new();

    let bbd = m.lower.compose(&m.raise);
    let bbd_form = |wprime: Operator| {
        p2.scale(&QLaurent::q_pow(-2))
            .add(&w0.compose(&w0).scale(&QLaurent::q()))
            .add(&wprime.compose(&t))
            .add(&w.op(1).compose(&p).compose(&t).scale_scalar(&i))
            .sub(&w0.compose(&p).compose(&tinv).scale_scalar(&i))
            .scale(&half_q)
    };
    let bdb = m.raise.compose(&m.lower);
    let bdb_form = |wprime: Operator| {
        p2.add(&w0.compose(&w0).scale(&QLaurent::q()))
            .sub(&wprime.compose(&tinv))
            .add(&w0.compose(&p).compose(&t).scale_scalar(&i))
            .sub(&w.op(-1).compose(&p).compose(&tinv).scale_scalar(&i))
            .scale(&half_q)
    };
    let cases = [
        (
            "superosc.td.b_bdag_general",
            &bbd,
            bbd_form(w.deriv_op(1)),
            bbd_form(w.chain_deriv_op(1)),
            "qx",
        ),
        (
            "superosc.td.bdag_b_general",
            &bdb,
            bdb_form(w.deriv_op(-1)),
            bdb_form(w.chain_deriv_op(-1)),
            "x/q",
        ),
    ];
    for (id, lhs, literal, composite, arg) in cases {
        r.push(Check::informational(
            &format!("{id}.literal"),
            (*lhs != literal).then(|| lhs.sub(&literal).to_string()),
            format!(
                "with W'({arg}) read as the derivative evaluated at {arg} the displayed form {}; derived normal form: {lhs}",
                if *lhs == literal { "holds" } else { "does not hold" }
            ),
        ));
        r.push(
            Check::from_outcome(&format!("{id}.composite"), *lhs == composite, || {
                lhs.sub(&composite).to_string()
            })
            .with_detail(format!("W'({arg}) read as d/dx[W({arg})]; W = {w}")),
        );
    }
    r
}

fn hamiltonian_checks() -> Report {
    let mut r = Report::new();
    let res_plus = hamiltonian_residual(Sign::Plus);
    r.push(
        Check::from_outcome("superosc.sp.hamiltonian", res_plus.is_none(), || {
            res_plus.clone().unwrap_or_default()
        })
        .with_detail("holds for W = x; see superosc.sp.hamiltonian_minus_x for W = -x"),
    );
    let res_minus_displayed = hamiltonian_residual_displayed_minus();
    let res_minus = hamiltonian_residual(Sign::Minus);
    r.push(Check::informational(
        "superosc.sp.hamiltonian_minus_x",
        res_minus_displayed,
        format!(
            "for W = -x the displayed decomposition holds with both constant terms negated: 4H = [2p² + (1+q^-4)x² - 1 + q^-2]I₂ + [(1-q^-4)x² - 1 - q^-2]σ₃ ({})",
            if res_minus.is_none() { "verified" } else { "NOT verified" }
        ),
    ));
    r
}

/// Residual of `4H - (a I₂ + s σ₃)` for the decomposition matching `sign`.
fn hamiltonian_residual(sign: Sign) -> Option<String> {
    decomposition_residual(sign, sign)
}

fn hamiltonian_residual_displayed_minus() -> Option<String> {
    decomposition_residual(Sign::Minus, Sign::Plus)
}

/// `model_sign` picks W = ±x; `form_sign` picks the constant terms of the
/// decomposition (`Plus` is the displayed form).
fn decomposition_residual(model_sign: Sign, form_sign: Sign) -> Option<String> {
    let m = build_model(ModelKind::Spiridonov, &model_sign.superpotential());
    let b = Basis::new();
    let c = match form_sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let id_part = lin(&[
        (QLaurent::from(2), &b.p2),
        (ql(&[(1, 1, 0), (1, 1, -4)]), &b.x2),
        (ql(&[(c, 1, 0), (-c, 1, -2)]), &b.one),
    ]);
    let s3_part = lin(&[
        (ql(&[(1, 1, 0), (-1, 1, -4)]), &b.x2),
        (ql(&[(c, 1, 0), (c, 1, -2)]), &b.one),
    ]);
    let four = QLaurent::from(4);
    let expect = crate::operator::Block2::diag(id_part.add(&s3_part), id_part.sub(&s3_part));
    let lhs = m.h.scale(&four);
    (lhs != expect).then(|| lhs.minus(&expect).to_string())
}

/// Cancellation observations on the TD oscillator brackets.
fn td_observations(m: &SusyModel) -> Report {
    use crate::operator::MonomialKey;
    let br =
        |mu: QLaurent, nu: QLaurent| q_bracket(&m.lower, &m.raise, &BracketKind::Weighted(mu, nu));
    let one = QLaurent::one();
    let q = QLaurent::q();
    let comm = br(one.clone(), one.clone());
    let comm_q = br(q.clone(), QLaurent::q_pow(-1));
    let skew = br(one, q);
    let mut r = Report::new();

    let x2 = comm.coeff(MonomialKey::new(2, 0, 0));
    r.push(Check::from_outcome(
        "superosc.td.obs_x2_drops",
        x2.is_zero(),
        || format!("X² coefficient {x2}"),
    ));

    let d2: Vec<_> = comm_q
        .terms()
        .filter(|(k, _)| k.d_pow == 2)
        .map(|(k, c)| format!("{c}·D²T^{}", k.t_exp))
        .collect();
    r.push(Check::from_outcome(
        "superosc.td.obs_p2_drops",
        d2.is_empty(),
        || d2.join(" + "),
    ));

    let xd: Vec<_> = skew
        .terms()
        .filter(|(k, _)| k.x_pow == 1 && k.d_pow == 1)
        .map(|(k, c)| format!("{c}·XD T^{}", k.t_exp))
        .collect();
    r.push(Check::from_outcome(
        "superosc.td.obs_ixp_cancels",
        xd.is_empty(),
        || xd.join(" + "),
    ));
    r
}

/// `q -> 1` of each TD bracket variant is `[B, B†] = 1`.
fn td_boson_limit(m: &SusyModel, list: &[BracketIdentity]) -> Check {
    let bad: Vec<_> = list
        .iter()
        .filter(|i| !i.mu.is_zero() && !i.nu.is_zero())
        .filter(|i| i.lhs(&m.lower, &m.raise).at_one() != Operator::identity())
        .map(|i| i.id)
        .collect();
    Check::from_outcome("superosc.td.q1_boson", bad.is_empty(), || {
        format!("{bad:?} do not reduce to 1")
    })
}

/// Runs the full identity list for `kind`. `sign` overrides the sign of the
/// linear superpotential; by default each list uses the sign under which
/// its displayed formulas are stated (`W = -x` for the Spiridonov list,
/// `B = (T p - iX)/√2`, i.e. `W = x`, for the TD list).
pub fn superoscillator_identity_suite(
    kind: ModelKind,
    sign: Option<Sign>,
    cross: Option<&CrossCheck>,
) -> Report {
    let mut r = Report::new();
    match kind {
        ModelKind::Spiridonov | ModelKind::Undeformed => {
            let m = build_model(
                ModelKind::Spiridonov,
                &sign.unwrap_or(Sign::Minus).superpotential(),
            );
            let list = spiridonov_list();
            r.extend(run_list(&m, &list, cross));
            r.extend(hamiltonian_checks());
            r.extend(spiridonov_general(&generic_superpotential()));
            r.push(limit_check("superosc.sp.q1", &m, &list));
        }
        ModelKind::Td => {
            let m = build_model(ModelKind::Td, &sign.unwrap_or(Sign::Plus).superpotential());
            let list = td_list();
            r.extend(run_list(&m, &list, cross));
            r.extend(td_observations(&m));
            r.push(td_boson_limit(&m, &list));
            r.push(limit_check("superosc.td.q1", &m, &list));
            r.extend(td_general(&generic_superpotential()));
            r.push(td_sign_note());
        }
    }
    r
}

fn td_sign_note() -> Check {
    let plus = build_model(ModelKind::Td, &Superpotential::x());
    let b = Basis::new();
    let displayed =
        b.t.compose(&Operator::p())
            .sub(&Operator::x().scale_scalar(&ExactScalar::i()))
            .scale_scalar(&ExactScalar::inv_sqrt2());
    let matches_plus = plus.lower == displayed;
    Check::informational(
        "superosc.td.sign_convention",
        None,
        format!(
            "the displayed oscillator B = (T p - iX)/√2 is the general B with W = {}; the TD list is checked for that B",
            if matches_plus { "+x" } else { "-x" }
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::scalar::rat;

    fn statuses(r: &Report) -> Vec<(String, Status)> {
        r.checks.iter().map(|c| (c.id.clone(), c.status)).collect()
    }

    #[test]
    fn spiridonov_list_holds() {
        let r = superoscillator_identity_suite(ModelKind::Spiridonov, None, None);
        assert!(r.ok(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert_eq!(
            r.get("superosc.sp.adag_a_general.literal").unwrap().status,
            Status::Informational
        );
    }

    #[test]
    fn td_list_holds() {
        let r = superoscillator_identity_suite(ModelKind::Td, None, None);
        assert!(r.ok(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert!(statuses(&r).len() >= 14);
    }

    #[test]
    fn wrong_sign_fails_visibly() {
        let r = superoscillator_identity_suite(ModelKind::Td, Some(Sign::Minus), None);
        assert_eq!(r.get("superosc.td.b_bdag").unwrap().status, Status::Fail);
        assert!(r.get("superosc.td.b_bdag").unwrap().residual.is_some());
    }

    #[test]
    fn cross_check_path() {
        let cc = CrossCheck::new(vec![rat(1, 2), rat(5, 3)], 10);
        let r = superoscillator_identity_suite(ModelKind::Td, None, Some(&cc));
        assert!(r.ok());
    }

    #[test]
    fn observations_hold_symbolically() {
        let m = build_model(ModelKind::Td, &Superpotential::x());
        assert!(td_observations(&m).ok());
    }
}

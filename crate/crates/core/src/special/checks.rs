//! Identity suite for the TD-analysis and hypergeometric layer.

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};

use crate::laurent::{qmono, QLaurent};
use crate::report::{Check, Report};
use crate::ring::{Field, Rational, Ring};
use crate::scalar::ExactScalar;
use crate::series::Series;
use crate::special::hypergeom::{
    pq_exp_as_phi, td_exp_as_bibasic, twin_pochhammer, Mode, Normalizer,
};
use crate::special::pq::{pq_exp_f64, pq_factorial_at, pq_number, pq_number_at};
use crate::special::td::{
    factorial, td_derivative, td_exp, td_exp_coeff, td_exp_f64, td_factorial, td_factorial_product,
    td_number,
};

/// Relative offset used for the `p -> q` and `p -> 1` limits.
pub const LIMIT_OFFSET: f64 = 1e-6;
/// Acceptance for limit checks, relative.
pub const LIMIT_TOL: f64 = 1e-5;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn within(id: &str, got: f64, want: f64, tol: f64) -> Check {
    let r = rel(got, want);
    Check::from_outcome(id, r <= tol, || {
        format!("{got:.17e} vs {want:.17e}, relative {r:.3e}")
    })
    .with_detail(format!("relative difference {r:.3e} <= {tol:e}"))
}

fn td_checks(r: &mut Report) {
    let ok = (0..=20).all(|n| {
        td_number(n) == qmono(n as i64, 1, n as i64 - 1)
            && pq_number(n as u32).at_p_equals_q() == td_number(n)
    });
    let at_one = (0..=20).all(|n| td_number(n).at_one() == ExactScalar::int(n as i64));
    r.push(Check::from_outcome(
        "special.td_number",
        ok && at_one,
        || "mismatch for some n <= 20".into(),
    ));

    let fact = (0..=20).all(|n| td_factorial(n) == td_factorial_product(n));
    let base = td_factorial(0) == QLaurent::one() && td_factorial(1) == QLaurent::one();
    r.push(Check::from_outcome(
        "special.td_factorial",
        fact && base,
        || "product and closed form differ".into(),
    ));

    let deriv = (0..=20usize).all(|n| {
        let mut c = vec![QLaurent::zero(); n + 1];
        c[n] = QLaurent::one();
        let d = td_derivative(&Series::new(c, n as i64));
        (n == 0 || d.coeff(n - 1) == Some(&td_number(n as u64)))
            && d.coeffs()
                .iter()
                .enumerate()
                .all(|(k, v)| k + 1 == n || v.is_zero())
    });
    r.push(Check::from_outcome("special.td_derivative", deriv, || {
        "monomial action differs".into()
    }));

    let coeff = (0..=20u64).all(|n| {
        let want = QLaurent::monomial(
            ExactScalar::rational(Rational::new(One::one(), factorial(n))),
            -((n * n.saturating_sub(1) / 2) as i64),
        );
        td_exp_coeff(&QLaurent::one(), 1, n) == want
            && td_factorial(n) * want.clone() == QLaurent::one()
    });
    r.push(Check::from_outcome("special.td_exp", coeff, || {
        "coefficient form differs".into()
    }));

    // symbolic alpha, symbolic q
    let alpha = &qmono(2, 1, 1) + &qmono(-1, 3, -2);
    let order = 24;
    let e = td_exp(&alpha, 1, order);
    let res = td_derivative(&e).sub(&e.scale(&alpha).truncate(order as i64 - 1));
    r.push(
        Check::from_outcome("special.td_exp_eigen", res.is_zero(), || res.to_string()).with_detail(
            format!("residual is the zero series through z^{}", order - 1),
        ),
    );

    let one = td_exp(&QLaurent::one(), 1, 15);
    let exp_ok = one.coeffs().iter().enumerate().all(|(n, c)| {
        c.at_one() == ExactScalar::rational(Rational::new(One::one(), factorial(n as u64)))
    });
    let d_ok = (1..15u64).all(|n| td_number(n).at_one() == ExactScalar::int(n as i64));
    r.push(Check::from_outcome("special.td_q1", exp_ok && d_ok, || {
        "q = 1 does not give exp / d/dz".into()
    }));
}

fn pq_limit_check(r: &mut Report) {
    let (q, z) = (0.9, 0.1);
    let p = q + LIMIT_OFFSET;
    let (got, _) =
        pq_exp_f64(p, q, z, 1e-14, 10_000).expect("(p,q)-exponent converges for |z| < 1");
    let (want, _) = td_exp_f64(q, z, 1e-14, 10_000).expect("TD exponent terms decay at z = 0.1");
    r.push(within("special.pq_exp_limit", got, want, LIMIT_TOL));
}

fn sample(rng: &mut StdRng) -> ExactScalar {
    let mut n = rng.gen_range(-9i64..=9);
    if n == 0 {
        n = 1;
    }
    ExactScalar::frac(n, rng.gen_range(1i64..=7))
}

/// Special-case laws of the twin Pochhammer symbol over random rational
/// parameters, exactly.
fn pochhammer_checks(r: &mut Report, samples: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    let zero = ExactScalar::zero();
    let mut fails: [Option<String>; 6] = Default::default();
    let mut literal43 = Vec::new();
    let mut displayed44 = Vec::new();
    let mut n0_42 = None;
    for _ in 0..samples {
        let (a, b, p, q) = (
            sample(&mut rng),
            sample(&mut rng),
            sample(&mut rng),
            sample(&mut rng),
        );
        for n in 0..=10u32 {
            let tri = n * n.saturating_sub(1) / 2;
            let note = |s: &str| format!("{s} at a={a}, b={b}, p={p}, q={q}, n={n}");
            let laws = [
                twin_pochhammer(&zero, &b, &p, &q, n) == (-b.clone()).pow(n) * q.pow(tri),
                twin_pochhammer(&a, &zero, &p, &q, n) == a.pow(n) * p.pow(tri),
                twin_pochhammer(&a, &b, &q, &q, n) == (a.clone() - b.clone()).pow(n) * q.pow(tri),
                n == 0 || twin_pochhammer(&a, &a, &p, &q, n).is_zero(),
                twin_pochhammer(&p, &q, &p, &q, n)
                    == (p.clone() - q.clone()).pow(n) * pq_factorial_at(n, &p, &q),
                {
                    let qi = q.inv().expect("samples are nonzero");
                    twin_pochhammer(&qi, &q, &qi, &q, n)
                        == (qi.clone() - q.clone()).pow(n) * pq_factorial_at(n, &qi, &q)
                },
            ];
            for (slot, ok) in fails.iter_mut().zip(laws) {
                if !ok && slot.is_none() {
                    *slot = Some(note("fails"));
                }
            }
            if n == 0 && n0_42.is_none() {
                n0_42 = Some(twin_pochhammer(&a, &a, &p, &q, 0).to_string());
            }
            let lit = (p.clone() - q.clone()).pow(n) * pq_number_at(n, &p, &q);
            if twin_pochhammer(&p, &q, &p, &q, n) != lit {
                literal43.push(n);
            }
            let qi = q.inv().expect("samples are nonzero");
            let disp = (q.clone() - qi.clone()).pow(n) * pq_factorial_at(n, &qi, &q);
            if twin_pochhammer(&qi, &q, &qi, &q, n) != disp {
                displayed44.push(n);
            }
        }
    }
    let ids = [
        "special.pochhammer.zero_a",
        "special.pochhammer.zero_b",
        "special.pochhammer.equal_bases",
        "special.pochhammer.equal_args",
        "special.pochhammer.pq_factorial",
        "special.pochhammer.q_inverse",
    ];
    let details = [
        "((0,b);(p,q))_n = (-b)^n q^{n(n-1)/2}",
        "((a,0);(p,q))_n = a^n p^{n(n-1)/2}",
        "((a,b);(q,q))_n = (a-b)^n q^{n(n-1)/2}",
        "((a,a);(p,q))_n = 0 for n >= 1; the empty product at n = 0 is 1",
        "((p,q);(p,q))_n = (p-q)^n [n]_{p,q}!",
        "((1/q,q);(1/q,q))_n = (1/q - q)^n [n]_{1/q,q}!",
    ];
    for ((id, fail), detail) in ids.iter().zip(fails).zip(details) {
        let c = match fail {
            None => Check::new(id, crate::report::Status::Pass),
            Some(f) => Check::fail(id, f),
        };
        r.push(c.with_detail(format!(
            "{detail}; {samples} random rational samples, n <= 10, exact"
        )));
    }
    r.push(Check::informational(
        "special.pochhammer.equal_args_n0",
        n0_42,
        "at n = 0 the product is empty and equals 1, so the vanishing law needs n >= 1",
    ));
    literal43.sort_unstable();
    literal43.dedup();
    r.push(Check::informational(
        "special.pochhammer.pq_literal",
        Some(format!("(p-q)^n [n]_(p,q) differs for n in {literal43:?}")),
        "the form without factorial agrees only for n = 1, 2; the factorial form holds for all n",
    ));
    displayed44.sort_unstable();
    displayed44.dedup();
    r.push(Check::informational(
        "special.pochhammer.q_inverse_displayed",
        Some(format!("(q - 1/q)^n [n]! differs for n in {displayed44:?}")),
        "the displayed prefactor (q - 1/q)^n is off by (-1)^n; (1/q - q)^n holds",
    ));
}

fn twin_phi_checks(r: &mut Report) {
    let phi = pq_exp_as_phi(2.0, 1.0, 0.1).eval(Mode::float_default());
    let (want, _) = pq_exp_f64(2.0, 1.0, 0.1, 1e-16, 10_000).expect("converges");
    r.push(match phi {
        Ok(v) => within("special.phi_pq_exp", v.value, want, 1e-12),
        Err(e) => Check::fail("special.phi_pq_exp", e.to_string()),
    });

    // exact: the n-th term is z^n/[n]_{p,q}!
    let (p, q, z) = (
        ExactScalar::frac(7, 2),
        ExactScalar::frac(-2, 3),
        ExactScalar::frac(3, 5),
    );
    let phi = pq_exp_as_phi(p.clone(), q.clone(), z.clone());
    let exact = (0..=10).all(|n| phi.term(n).ok() == z.pow(n).div(&pq_factorial_at(n, &p, &q)));
    let partial = phi
        .eval(Mode::ExactPartial { n_terms: 11 })
        .map(|e| e.value)
        .ok();
    let direct = (0..=10)
        .map(|n| phi.term(n).unwrap_or_else(|_| ExactScalar::zero()))
        .fold(ExactScalar::zero(), |a, t| a + t);
    r.push(Check::from_outcome(
        "special.phi_exact_terms",
        exact && partial == Some(direct),
        || "term products and ratio recurrence disagree".into(),
    ));

    // exp_q with the symmetric q-number written as (q^n - q^-n)/(q - q^-1)
    let q = 0.9f64;
    let mut worst: f64 = 0.0;
    let mut err = None;
    for z in [0.05, 0.1, 0.2] {
        let mut term = 1.0;
        let mut want = 1.0;
        for n in 1..200 {
            term *= z * (q - 1.0 / q) / (q.powi(n) - q.powi(-n));
            want += term;
        }
        match pq_exp_as_phi(1.0 / q, q, z).eval(Mode::float_default()) {
            Ok(v) => worst = worst.max(rel(v.value, want)),
            Err(e) => err = Some(e.to_string()),
        }
    }
    r.push(match err {
        Some(e) => Check::fail("special.phi_q_exp", e),
        None => Check::from_outcome("special.phi_q_exp", worst <= 1e-12, || {
            format!("relative {worst:.3e}")
        })
        .with_detail(format!(
            "q = 0.9, z in {{0.05, 0.1, 0.2}}, worst relative difference {worst:.3e}"
        )),
    });

    let (q, z) = (0.9, 0.05);
    let p = q * (1.0 + LIMIT_OFFSET);
    let (want, _) = td_exp_f64(q, z, 1e-14, 10_000).expect("TD exponent terms decay at z = 0.05");
    r.push(match pq_exp_as_phi(p, q, z).eval(Mode::float_default()) {
        Ok(v) => within("special.phi_td_limit", v.value, want, LIMIT_TOL),
        Err(e) => Check::fail("special.phi_td_limit", e.to_string()),
    });
}

fn bibasic_checks(r: &mut Report) {
    let (q, z) = (0.8, 0.1);
    let p = 1.0 - LIMIT_OFFSET;
    let (want, _) = td_exp_f64(q, z, 1e-14, 10_000).expect("TD exponent terms decay at z = 0.1");
    let f = td_exp_as_bibasic(p, q, z, Normalizer::P).expect("q != 0");
    r.push(match f.eval(Mode::float_default()) {
        Ok(v) => within("special.bibasic_td_limit", v.value, want, LIMIT_TOL),
        Err(e) => Check::fail("special.bibasic_td_limit", e.to_string()),
    });
    let lit = td_exp_as_bibasic(p, q, z, Normalizer::Q)
        .expect("q != 0")
        .eval(Mode::float_default());
    r.push(Check::informational(
        "special.bibasic_literal_normalizer",
        Some(match lit {
            Ok(v) => format!("{:.12} vs TD exponent {want:.12}", v.value),
            Err(e) => e.to_string(),
        }),
        "with the (q;q)_n normalizer in base 1/q the p -> 1 limit collapses to 1; (p;p)_n is required",
    ));
    let pp = crate::special::q_pochhammer(&p, &p, 5) / (1.0 - p).powi(5);
    r.push(within("special.pp_factorial_limit", pp, 120.0, 1e-4));
}

/// Every identity of the TD-analysis and hypergeometric layer.
pub fn special_function_suite(samples: usize, seed: u64) -> Report {
    let mut r = Report::new();
    td_checks(&mut r);
    pq_limit_check(&mut r);
    let zero = twin_pochhammer(
        &ExactScalar::frac(3, 2),
        &ExactScalar::frac(1, 5),
        &ExactScalar::int(2),
        &ExactScalar::int(3),
        0,
    );
    r.push(Check::from_outcome(
        "special.pochhammer.empty",
        zero == ExactScalar::one(),
        || zero.to_string(),
    ));
    pochhammer_checks(&mut r, samples, seed);
    twin_phi_checks(&mut r);
    bibasic_checks(&mut r);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = special_function_suite(20, 7);
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
        assert_eq!(r.summary().informational, 4);
    }
}

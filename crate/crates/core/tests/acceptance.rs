//! Acceptance criteria 1-9. Each test prints one line:
//! `criterion N [PASS|FAIL] <title> (<elapsed>, limit <limit>)`.
//! Tolerances are pinned here; exact criteria use zero tolerance.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};

use qsusy::ground_state::{
    annihilation_residual, closed_form, ground_state_suite, solve_zero_mode, td_gaussian, Branch,
};
use qsusy::scalar::rat;
use qsusy::special::{
    pq_exp_as_phi, pq_exp_f64, special_function_suite, td_derivative, td_exp, td_exp_as_bibasic,
    td_exp_f64, td_factorial, td_factorial_product, td_number, Mode, Normalizer,
};
use qsusy::spectra::{
    energy_checks, find_degeneracies, scan_degeneracies, td_energy, verify_fock_algebra,
};
use qsusy::susy::{
    build_model, degeneration_checks, heisenberg_suite, superoscillator_identity_suite,
    verify_intertwining, verify_susy_algebra, ModelKind, Superpotential,
};
use qsusy::{ExactScalar, QLaurent, Rational, Report, Status};

const SEED: u64 = 20_26;
const LIMIT_REL_TOL: f64 = 1e-5;
const DIRECT_REL_TOL: f64 = 1e-12;
const ROOT_RESIDUAL_TOL: f64 = 1e-10;

type Outcome = Result<String, String>;

fn criterion(n: u32, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let slow = limit.is_some_and(|l| elapsed > l);
    let ok = outcome.is_ok() && !slow;
    let limit_s = limit
        .map(|l| format!("{:.0} s", l.as_secs_f64()))
        .unwrap_or_else(|| "none".into());
    let note = match &outcome {
        Ok(s) | Err(s) => s.clone(),
    };
    println!(
        "criterion {n} [{}] {title} ({:.2} s, limit {limit_s}){}{note}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if note.is_empty() { "" } else { ": " },
    );
    assert!(outcome.is_ok(), "criterion {n} failed: {note}");
    assert!(
        !slow,
        "criterion {n} exceeded its runtime limit: {:.2} s",
        elapsed.as_secs_f64()
    );
}

fn all_pass(r: &Report) -> Outcome {
    let bad: Vec<String> = r
        .failures()
        .map(|c| {
            format!(
                "{} {}",
                c.id,
                c.residual.as_deref().or(c.detail.as_deref()).unwrap_or("")
            )
        })
        .collect();
    if bad.is_empty() {
        let s = r.summary();
        Ok(format!(
            "{} pass, {} informational",
            s.passed, s.informational
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn superpotentials() -> Vec<Superpotential> {
    ["-x", "x", "x^3-x"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

#[test]
fn criterion_1_susy_algebra() {
    criterion(
        1,
        "SUSY algebra, 3 kinds x 3 superpotentials",
        Some(Duration::from_secs(10)),
        || {
            let mut r = Report::new();
            for w in superpotentials() {
                for kind in ModelKind::ALL {
                    let rep = verify_susy_algebra(&build_model(kind, &w), None);
                    ensure(rep.checks.len() == 5, || {
                        format!("{kind}: expected 5 relations")
                    })?;
                    r.extend(rep);
                }
            }
            ensure(r.checks.len() == 45, || "expected 45 checks".into())?;
            all_pass(&r)
        },
    );
}

fn random_superpotential(rng: &mut StdRng) -> Superpotential {
    let degree = rng.gen_range(1..=4);
    let coeffs = (0..=degree)
        .map(|k| {
            let mut n = rng.gen_range(-5i64..=5);
            if k == degree && n == 0 {
                n = 1;
            }
            ExactScalar::frac(n, rng.gen_range(1i64..=4))
        })
        .collect();
    Superpotential::new(coeffs)
}

#[test]
fn criterion_2_intertwining() {
    criterion(2, "intertwining, 20 random W of degree <= 4", None, || {
        let mut rng = StdRng::seed_from_u64(SEED);
        let mut r = Report::new();
        for _ in 0..20 {
            let w = random_superpotential(&mut rng);
            for kind in ModelKind::ALL {
                r.extend(verify_intertwining(&build_model(kind, &w), None));
            }
        }
        all_pass(&r)
    });
}

#[test]
fn criterion_3_superoscillator_lists() {
    criterion(3, "superoscillator identity lists", None, || {
        let sp = superoscillator_identity_suite(ModelKind::Spiridonov, None, None);
        let td = superoscillator_identity_suite(ModelKind::Td, None, None);
        for id in [
            "superosc.sp.hamiltonian",
            "superosc.td.obs_x2_drops",
            "superosc.td.obs_p2_drops",
            "superosc.td.obs_ixp_cancels",
        ] {
            let c = sp
                .get(id)
                .or_else(|| td.get(id))
                .ok_or_else(|| format!("{id} missing"))?;
            ensure(c.status == Status::Pass, || {
                format!("{id} is {:?}", c.status)
            })?;
        }
        let lit = sp
            .get("superosc.sp.adag_a_general.literal")
            .ok_or("literal general-W entry missing")?;
        ensure(
            lit.status == Status::Informational && lit.detail.is_some(),
            || "literal form not informational".into(),
        )?;
        let comp = sp
            .get("superosc.sp.adag_a_general.composite")
            .ok_or("engine-derived general-W entry missing")?;
        ensure(comp.status == Status::Pass, || {
            "engine-derived form fails".into()
        })?;
        let mut r = sp;
        r.extend(td);
        all_pass(&r)
    });
}

#[test]
fn criterion_4_heisenberg() {
    criterion(
        4,
        "Heisenberg reconstruction on x^0..x^50",
        Some(Duration::from_secs(30)),
        || {
            let r = heisenberg_suite(&[rat(1, 2), rat(3, 5), rat(5, 3), rat(2, 1)], 50);
            ensure(r.checks.len() >= 4, || "no checks ran".into())?;
            all_pass(&r)
        },
    );
}

/// `C_{2k} = q^{-k^2} (-1/2)^k / k!`, built independently of the library's
/// closed form.
fn oracle_f(order: usize) -> Vec<QLaurent> {
    let mut out = vec![QLaurent::default(); order + 1];
    let mut fact = BigInt::one();
    for k in 0..=order / 2 {
        if k > 0 {
            fact *= k;
        }
        let mut c = Rational::new(BigInt::one(), fact.clone());
        if k % 2 == 1 {
            c = -c;
        }
        c /= Rational::from_integer(BigInt::from(2).pow(k as u32));
        out[2 * k] = QLaurent::monomial(ExactScalar::rational(c), -((k * k) as i64));
    }
    out
}

#[test]
fn criterion_5_ground_state() {
    criterion(5, "ground state through degree 80", None, || {
        let order = 80;
        let sol = solve_zero_mode(Branch::F, order);
        let oracle = oracle_f(order);
        for (k, (got, want)) in sol.coeffs.coeffs().iter().zip(&oracle).enumerate() {
            ensure(got == want, || {
                format!("recurrence C_{k} = {got}, oracle {want}")
            })?;
        }
        ensure(sol.coeffs.coeffs().len() == order + 1, || {
            "wrong length".into()
        })?;
        ensure(closed_form(Branch::F, order) == sol.coeffs, || {
            "closed form differs".into()
        })?;
        ensure(td_gaussian(order) == sol.coeffs, || {
            "TD-Gaussian differs".into()
        })?;
        let res = annihilation_residual(&sol, &Superpotential::x());
        ensure(res.is_zero(), || format!("B f = {res}"))?;
        let at_one = sol.at(&rat(1, 1)).map_err(|e| e.to_string())?;
        let mut fact = BigInt::one();
        for k in 0..=order / 2 {
            if k > 0 {
                fact *= k;
            }
            let want = Rational::new(
                if k % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                },
                fact.clone() << k,
            );
            ensure(at_one[2 * k] == ExactScalar::rational(want.clone()), || {
                format!("q = 1: C_{} != {want}", 2 * k)
            })?;
            if 2 * k < order {
                ensure(
                    at_one[2 * k + 1] == ExactScalar::rational(Rational::zero()),
                    || "odd coefficient".into(),
                )?;
            }
        }
        all_pass(&ground_state_suite(order))
    });
}

#[test]
fn criterion_6_td_analysis() {
    criterion(6, "TD analysis and Pochhammer identities", None, || {
        let e = td_exp(
            &QLaurent::constant(ExactScalar::rational(Rational::one())),
            1,
            41,
        );
        let de = td_derivative(&e);
        ensure(
            de.order() >= 40 && de.agrees_with(&e.truncate(de.order())),
            || "eigenproperty fails".into(),
        )?;
        for n in 0..=20u64 {
            ensure(td_factorial(n) == td_factorial_product(n), || {
                format!("factorial n = {n}")
            })?;
            // (n]_q! = n! q^{n(n-1)/2}
            let mut f = BigInt::one();
            for j in 1..=n {
                f *= j;
            }
            let want = QLaurent::monomial(
                ExactScalar::rational(Rational::from_integer(f)),
                (n * n.saturating_sub(1) / 2) as i64,
            );
            ensure(td_factorial(n) == want, || format!("closed form n = {n}"))?;
        }
        let r = special_function_suite(100, SEED);
        for id in [
            "special.pochhammer.pq_factorial",
            "special.pochhammer.pq_literal",
        ] {
            ensure(r.get(id).is_some(), || format!("{id} not logged"))?;
        }
        all_pass(&r)
    });
}

#[test]
fn criterion_7_hypergeometric() {
    criterion(
        7,
        "hypergeometric identities and limits",
        Some(Duration::from_secs(5)),
        || {
            for z in [0.05, 0.1] {
                let phi = pq_exp_as_phi(2.0, 1.0, z)
                    .eval(Mode::float_default())
                    .map_err(|e| e.to_string())?
                    .value;
                let direct = pq_exp_f64(2.0, 1.0, z, 1e-16, 1000)
                    .map_err(|e| e.to_string())?
                    .0;
                let err = rel_err(phi, direct);
                ensure(err < DIRECT_REL_TOL, || {
                    format!("1Φ1 vs exp_(2,1) at z = {z}: {err:e}")
                })?;
            }
            let (q, z) = (2.0, 0.5);
            let target = td_exp_f64(q, z, 1e-16, 1000).map_err(|e| e.to_string())?.0;
            let b = td_exp_as_bibasic(1.0 - 1e-6, q, z, Normalizer::P).ok_or("pole")?;
            let v = b
                .eval(Mode::float_default())
                .map_err(|e| e.to_string())?
                .value;
            ensure(rel_err(v, target) < LIMIT_REL_TOL, || {
                format!("bibasic p -> 1: {v} vs {target}")
            })?;
            let r = special_function_suite(20, SEED);
            let ids = [
                "special.phi_pq_exp",
                "special.phi_q_exp",
                "special.phi_td_limit",
                "special.bibasic_td_limit",
            ];
            let sub: Report = r
                .checks
                .into_iter()
                .filter(|c| ids.contains(&c.id.as_str()))
                .collect();
            ensure(sub.checks.len() == ids.len(), || {
                "missing hypergeometric checks".into()
            })?;
            all_pass(&sub)
        },
    );
}

/// Bisection on `4q^3 + 3q^2 - 2q - 1`, the cleared `E_1 - E_3`.
fn oracle_root_1_3() -> f64 {
    let f = |q: f64| ((4.0 * q + 3.0) * q - 2.0) * q - 1.0;
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn criterion_8_spectra() {
    criterion(
        8,
        "Fock relations, energies, degeneracies",
        Some(Duration::from_secs(10)),
        || {
            let mut r = Report::new();
            for q0 in [rat(1, 2), rat(2, 1)] {
                r.extend(verify_fock_algebra(32, &q0).map_err(|e| e.to_string())?);
            }
            r.extend(energy_checks(31));
            let roots = find_degeneracies(1, 3, (0.0, 1.0)).map_err(|e| e.to_string())?;
            ensure(roots.len() == 1, || {
                format!("{} roots for (1,3)", roots.len())
            })?;
            let d = &roots[0];
            ensure(d.residual < ROOT_RESIDUAL_TOL, || {
                format!("residual {:e}", d.residual)
            })?;
            let oracle = oracle_root_1_3();
            ensure((d.q_root - oracle).abs() < 1e-10, || {
                format!("root {} vs oracle {oracle}", d.q_root)
            })?;
            let scan = scan_degeneracies(5, (0.0, 1.0)).map_err(|e| e.to_string())?;
            ensure(
                !scan.roots.is_empty() && scan.unverified.is_empty() && scan.triple.is_empty(),
                || {
                    format!(
                        "scan: {} roots, {:?} unverified, {:?} triple",
                        scan.roots.len(),
                        scan.unverified,
                        scan.triple
                    )
                },
            )?;
            all_pass(&r).map(|s| format!("{s}; E_1 = E_3 at q = {}", d.q_root_string()))
        },
    );
}

#[test]
fn criterion_9_q_to_one() {
    criterion(9, "q -> 1 degeneration", None, || {
        let mut r = Report::new();
        for w in superpotentials() {
            r.extend(degeneration_checks(&w));
        }
        let mut wanted = vec!["superosc.sp.q1", "superosc.td.q1", "superosc.td.q1_boson"];
        r.extend(superoscillator_identity_suite(
            ModelKind::Spiridonov,
            None,
            None,
        ));
        r.extend(superoscillator_identity_suite(ModelKind::Td, None, None));
        r.extend(ground_state_suite(40));
        wanted.extend([
            "ground.q1_gaussian",
            "ground.q1_annihilation",
            "ground.q1_class",
        ]);
        r.extend(special_function_suite(10, SEED));
        wanted.push("special.td_q1");
        r.extend(verify_fock_algebra(16, &rat(1, 2)).map_err(|e| e.to_string())?);
        r.extend(energy_checks(16));
        wanted.extend(["spectra.fock.q1_boson", "spectra.energy_q1"]);
        let sub: Report = r
            .checks
            .into_iter()
            .filter(|c| c.id.starts_with("limit.") || wanted.contains(&c.id.as_str()))
            .collect();
        ensure(sub.checks.len() == 6 + wanted.len(), || {
            format!("{} limit checks", sub.checks.len())
        })?;
        for n in 0..30u64 {
            let one = |k: i64| ExactScalar::rational(Rational::new(BigInt::from(k), BigInt::one()));
            ensure(td_number(n).at_one() == one(n as i64), || {
                format!("(n]_1 for n = {n}")
            })?;
            ensure(
                td_energy(n).at_one() == ExactScalar::rational(rat(2 * n as i64 + 1, 2)),
                || format!("E_{n}(1)"),
            )?;
        }
        all_pass(&sub)
    });
}

//! Algebraic invariants as property tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use qsusy::operator::{MonomialKey, Operator, Tier2Operator};
use qsusy::scalar::{parse_rational, rat};
use qsusy::special::{pq_number, td_factorial, td_factorial_product, td_number, twin_pochhammer};
use qsusy::spectra::td_energy;
use qsusy::{ExactScalar, Field, QLaurent, Rational, Ring};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn positive_rat() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c, d)| ExactScalar::new(a, b, c, d))
}

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-3i64..=3, small_rat()), 0..4).prop_map(|ts| {
        QLaurent::from_terms(ts.into_iter().map(|(k, c)| (k, ExactScalar::rational(c))))
    })
}

fn operator() -> impl Strategy<Value = Operator> {
    prop::collection::vec((0u32..3, 0u32..3, -2i64..=2, laurent()), 1..4).prop_map(|ts| {
        ts.into_iter().fold(Operator::zero(), |acc, (x, d, t, c)| {
            acc.add(&Operator::monomial(MonomialKey::new(x, d, t), c))
        })
    })
}

fn eval_poly(p: &BTreeMap<usize, QLaurent>, q0: &Rational) -> BTreeMap<usize, ExactScalar> {
    p.iter()
        .map(|(k, c)| (*k, c.eval(q0).unwrap()))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), ExactScalar::one());
        }
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn laurent_eval_is_a_ring_map(a in laurent(), b in laurent(), q in positive_rat()) {
        let (ea, eb) = (a.eval(&q).unwrap(), b.eval(&q).unwrap());
        prop_assert_eq!((&a * &b).eval(&q).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&q).unwrap(), &ea + &eb);
    }

    #[test]
    fn composition_is_action_composition(a in operator(), b in operator(), m in 0usize..6) {
        // (a b) x^m = a (b x^m)
        let ab = a.compose(&b).act_on_monomial(m);
        let mut want: BTreeMap<usize, QLaurent> = BTreeMap::new();
        for (k, c) in b.act_on_monomial(m) {
            for (j, e) in a.act_on_monomial(k) {
                let slot = want.entry(j).or_default();
                *slot = &*slot + &(&c * &e);
            }
        }
        want.retain(|_, v| !v.is_zero());
        prop_assert_eq!(ab, want);
    }

    #[test]
    fn composition_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn adjoint_is_an_anti_involution(a in operator(), b in operator()) {
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!(a.compose(&b).adjoint(), b.adjoint().compose(&a.adjoint()));
    }

    #[test]
    fn pipelines_match_symbolic_action(a in operator(), q in positive_rat(), m in 0usize..8) {
        let numeric = Tier2Operator::from(&a).act_on_monomial_at(m, &q).unwrap();
        prop_assert_eq!(numeric, eval_poly(&a.act_on_monomial(m), &q));
    }

    #[test]
    fn specializing_then_applying_commutes(a in operator(), q in positive_rat(), m in 0usize..8) {
        let direct = a.act_on_monomial_at(m, &q);
        prop_assert_eq!(a.at_q(&q).act_on_monomial_at(m, &q), direct);
    }

    #[test]
    fn td_factorial_forms_agree(n in 0u64..30) {
        prop_assert_eq!(td_factorial(n), td_factorial_product(n));
        prop_assert_eq!(pq_number(n as u32).at_p_equals_q(), td_number(n));
    }

    #[test]
    fn pochhammer_degenerate_arguments(a in small_rat(), p in positive_rat(), q in positive_rat(), n in 0u32..8) {
        let s = |r: &Rational| ExactScalar::rational(r.clone());
        let zero = ExactScalar::zero();
        // ((a,0);(p,q))_n = a^n p^{n(n-1)/2}
        let want = &s(&a).pow(n) * &s(&p).pow(n * n.saturating_sub(1) / 2);
        prop_assert_eq!(twin_pochhammer(&s(&a), &zero, &s(&p), &s(&q), n), want);
        // equal arguments vanish for n >= 1
        if n >= 1 {
            prop_assert!(twin_pochhammer(&s(&a), &s(&a), &s(&p), &s(&q), n).is_zero());
        }
    }

    #[test]
    fn energy_matches_formula(n in 0u64..40, q in positive_rat()) {
        let qn = |k: u64| ExactScalar::rational(q.pow(k as i32));
        let nf = |k: u64| ExactScalar::rational(Rational::from_integer(BigInt::from(k)));
        let mut want = &nf(n + 1) * &qn(n);
        if n > 0 {
            want = &want + &(&nf(n) * &qn(n - 1));
        }
        want = &want * &ExactScalar::frac(1, 2);
        prop_assert_eq!(td_energy(n).eval(&q).unwrap(), want);
    }

    #[test]
    fn rationals_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
}

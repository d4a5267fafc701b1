//! Twin-basic and bibasic hypergeometric series.
//!
//! Every series is summed through its term ratio, so one routine serves
//! exact partial sums over `ℚ(i,√2)` and double-precision evaluation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};
use crate::scalar::ExactScalar;

/// A field with a magnitude, used for stopping rules and region checks.
pub trait Numeric: Field {
    fn magnitude(&self) -> f64;
}

impl Numeric for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Numeric for ExactScalar {
    fn magnitude(&self) -> f64 {
        self.abs_f64()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Mode {
    /// Sum of the first `n_terms` terms.
    ExactPartial { n_terms: usize },
    /// Stop once `|term| <= tol * |partial sum|`.
    Float { tol: f64, max_terms: usize },
}

impl Mode {
    pub fn float_default() -> Self {
        Mode::Float {
            tol: 1e-14,
            max_terms: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation<F> {
    pub value: F,
    pub terms_used: usize,
    /// Whether the float stopping rule fired; always false for partial sums.
    pub converged: bool,
    pub last_term: f64,
}

/// `((a,b);(p,q))_n = (a - b)(ap - bq)...(ap^{n-1} - bq^{n-1})`.
pub fn twin_pochhammer<F: Ring>(a: &F, b: &F, p: &F, q: &F, n: u32) -> F {
    (0..n).fold(F::one(), |acc, j| {
        acc * (a.clone() * p.pow(j) - b.clone() * q.pow(j))
    })
}

/// `(a;q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1})`, the finite product.
pub fn q_pochhammer<F: Ring>(a: &F, q: &F, n: u32) -> F {
    (0..n).fold(F::one(), |acc, j| acc * (F::one() - a.clone() * q.pow(j)))
}

fn powi<F: Field>(x: &F, e: i64) -> Option<F> {
    if e >= 0 {
        Some(x.pow(e as u32))
    } else {
        x.inv().map(|i| i.pow((-e) as u32))
    }
}

fn sum_by_ratio<F: Numeric>(
    mode: Mode,
    mut ratio: impl FnMut(u32) -> Result<F>,
) -> Result<Evaluation<F>> {
    let mut term = F::one();
    let mut sum = F::one();
    let (limit, tol) = match mode {
        Mode::ExactPartial { n_terms } => {
            if n_terms == 0 {
                return Ok(Evaluation {
                    value: F::zero(),
                    terms_used: 0,
                    converged: false,
                    last_term: 0.0,
                });
            }
            (n_terms, None)
        }
        Mode::Float { tol, max_terms } => (max_terms, Some(tol)),
    };
    for n in 1..limit {
        term = term * ratio(n as u32 - 1)?;
        sum = sum + term.clone();
        if let Some(tol) = tol {
            if term.magnitude() <= tol * sum.magnitude() {
                return Ok(Evaluation {
                    value: sum,
                    terms_used: n + 1,
                    converged: true,
                    last_term: term.magnitude(),
                });
            }
        }
    }
    match tol {
        Some(_) => Err(Error::NonConvergence {
            terms: limit,
            last_term: term.magnitude(),
        }),
        None => Ok(Evaluation {
            value: sum,
            terms_used: limit,
            converged: false,
            last_term: term.magnitude(),
        }),
    }
}

/// Parameters of `rΦs({a,b};{c,d};(p,q);z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwinPhi<F> {
    pub numer: Vec<(F, F)>,
    pub denom: Vec<(F, F)>,
    pub p: F,
    pub q: F,
    pub z: F,
}

impl<F: Numeric> TwinPhi<F> {
    fn sign_power(&self) -> i64 {
        1 + self.denom.len() as i64 - self.numer.len() as i64
    }

    /// `term_{n+1} / term_n`.
    fn ratio(&self, n: u32) -> Result<F> {
        let (p, q) = (&self.p, &self.q);
        let (pn, qn) = (p.pow(n), q.pow(n));
        let mut num = self.z.clone();
        for (a, b) in &self.numer {
            num = num * (a.clone() * pn.clone() - b.clone() * qn.clone());
        }
        let mut den = p.pow(n + 1) - q.pow(n + 1);
        for (c, d) in &self.denom {
            den = den * (c.clone() * pn.clone() - d.clone() * qn.clone());
        }
        let base = -(q
            .div(p)
            .ok_or_else(|| Error::ZeroDenominator("p = 0".into()))?
            .pow(n));
        let sign = powi(&base, self.sign_power()).ok_or_else(|| {
            Error::ZeroDenominator(format!("(-(q/p)^{n})^{} at n = {n}", self.sign_power()))
        })?;
        num.div(&den).map(|r| r * sign).ok_or_else(|| {
            Error::ZeroDenominator(format!("denominator factor vanishes at n = {n}"))
        })
    }

    /// The `n`-th term from its defining products, independent of the ratio.
    pub fn term(&self, n: u32) -> Result<F> {
        let (p, q) = (&self.p, &self.q);
        let num = self
            .numer
            .iter()
            .fold(F::one(), |acc, (a, b)| acc * twin_pochhammer(a, b, p, q, n));
        let den = self
            .denom
            .iter()
            .fold(twin_pochhammer(p, q, p, q, n), |acc, (c, d)| {
                acc * twin_pochhammer(c, d, p, q, n)
            });
        let tri = n * n.saturating_sub(1) / 2;
        let sign_base = if n.is_multiple_of(2) {
            F::one()
        } else {
            -F::one()
        };
        let qp = q
            .div(p)
            .ok_or_else(|| Error::ZeroDenominator("p = 0".into()))?;
        let factor = powi(&(sign_base * qp.pow(tri)), self.sign_power())
            .ok_or_else(|| Error::ZeroDenominator(format!("sign factor vanishes at n = {n}")))?;
        num.div(&den)
            .map(|r| r * factor * self.z.pow(n))
            .ok_or_else(|| Error::ZeroDenominator(format!("denominator vanishes at n = {n}")))
    }

    pub fn eval(&self, mode: Mode) -> Result<Evaluation<F>> {
        if let Mode::Float { .. } = mode {
            let qp = self
                .q
                .div(&self.p)
                .map(|r| r.magnitude())
                .unwrap_or(f64::INFINITY);
            if qp >= 1.0 || self.z.magnitude() >= 1.0 {
                return Err(Error::OutsideConvergenceRegion(format!(
                    "|q/p| = {qp}, |z| = {}; need both < 1",
                    self.z.magnitude()
                )));
            }
        }
        sum_by_ratio(mode, |n| self.ratio(n))
    }
}

/// Base of the `(x;x)_n` normalizer in the bibasic series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalizer {
    /// `(p;p)_n`, the reading under which the TD-exponent limit holds.
    P,
    /// `(q;q)_n`, as the general definition is written.
    Q,
}

/// Parameters of `_{r,r'}F_{s,s'}(a, c; b, d; (p,q); z)`: `a`, `b` use base
/// `p`; `c`, `d` use base `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bibasic<F> {
    pub a: Vec<F>,
    pub c: Vec<F>,
    pub b: Vec<F>,
    pub d: Vec<F>,
    pub p: F,
    pub q: F,
    pub z: F,
    pub normalizer: Normalizer,
}

impl<F: Numeric> Bibasic<F> {
    fn exponents(&self) -> (i64, i64) {
        (
            1 + self.b.len() as i64 - self.a.len() as i64,
            self.d.len() as i64 - self.c.len() as i64,
        )
    }

    fn ratio(&self, n: u32) -> Result<F> {
        let (p, q) = (&self.p, &self.q);
        let (pn, qn) = (p.pow(n), q.pow(n));
        let one = F::one();
        let fac = |xs: &[F], base: &F| {
            xs.iter().fold(F::one(), |acc, x| {
                acc * (one.clone() - x.clone() * base.clone())
            })
        };
        let num = fac(&self.a, &pn) * fac(&self.c, &qn) * self.z.clone();
        let norm = match self.normalizer {
            Normalizer::P => one.clone() - p.pow(n + 1),
            Normalizer::Q => one.clone() - q.pow(n + 1),
        };
        let den = fac(&self.b, &pn) * fac(&self.d, &qn) * norm;
        let (ep, eq) = self.exponents();
        let sp = powi(&-pn, ep)
            .ok_or_else(|| Error::ZeroDenominator(format!("p-power factor at n = {n}")))?;
        let sq = powi(&-qn, eq)
            .ok_or_else(|| Error::ZeroDenominator(format!("q-power factor at n = {n}")))?;
        num.div(&den).map(|r| r * sp * sq).ok_or_else(|| {
            Error::ZeroDenominator(format!("denominator factor vanishes at n = {n}"))
        })
    }

    /// The `n`-th term from its defining products.
    pub fn term(&self, n: u32) -> Result<F> {
        let (p, q) = (&self.p, &self.q);
        let prod = |xs: &[F], base: &F| {
            xs.iter()
                .fold(F::one(), |acc, x| acc * q_pochhammer(x, base, n))
        };
        let norm = match self.normalizer {
            Normalizer::P => q_pochhammer(p, p, n),
            Normalizer::Q => q_pochhammer(q, q, n),
        };
        let num = prod(&self.a, p) * prod(&self.c, q);
        let den = prod(&self.b, p) * prod(&self.d, q) * norm;
        let tri = n * n.saturating_sub(1) / 2;
        let sgn = if n.is_multiple_of(2) {
            F::one()
        } else {
            -F::one()
        };
        let (ep, eq) = self.exponents();
        let fp = powi(&(sgn.clone() * p.pow(tri)), ep)
            .ok_or_else(|| Error::ZeroDenominator("p-power factor".into()))?;
        let fq = powi(&(sgn * q.pow(tri)), eq)
            .ok_or_else(|| Error::ZeroDenominator("q-power factor".into()))?;
        num.div(&den)
            .map(|r| r * fp * fq * self.z.pow(n))
            .ok_or_else(|| Error::ZeroDenominator(format!("denominator vanishes at n = {n}")))
    }

    pub fn eval(&self, mode: Mode) -> Result<Evaluation<F>> {
        sum_by_ratio(mode, |n| self.ratio(n))
    }
}

/// `exp_{p,q}(z)` as `1Φ1((1,0);(0,1);(p,q);(p-q)z)`.
pub fn pq_exp_as_phi<F: Numeric>(p: F, q: F, z: F) -> TwinPhi<F> {
    let w = (p.clone() - q.clone()) * z;
    TwinPhi {
        numer: vec![(F::one(), F::zero())],
        denom: vec![(F::zero(), F::one())],
        p,
        q,
        z: w,
    }
}

/// `_{0,0}F_{0,1}(-,-;-,0;p,q^{-1};(1-p)z)`, whose `p -> 1` limit is the
/// TD-exponent in base `q`.
pub fn td_exp_as_bibasic<F: Numeric>(
    p: F,
    q: F,
    z: F,
    normalizer: Normalizer,
) -> Option<Bibasic<F>> {
    let qinv = q.inv()?;
    let w = (F::one() - p.clone()) * z;
    Some(Bibasic {
        a: vec![],
        c: vec![],
        b: vec![],
        d: vec![F::zero()],
        p,
        q: qinv,
        z: w,
        normalizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::special::pq::{pq_exp_f64, pq_factorial_at};

    fn x(n: i64, d: i64) -> ExactScalar {
        ExactScalar::rational(rat(n, d))
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(
            twin_pochhammer(&x(3, 1), &x(2, 1), &x(5, 1), &x(7, 1), 0),
            ExactScalar::one()
        );
        assert!(twin_pochhammer(&x(3, 1), &x(3, 1), &x(5, 1), &x(7, 1), 2).is_zero());
        // ((0,b);(p,q))_3 = (-b)^3 q^3
        let (b, p, q) = (x(2, 3), x(5, 2), x(-1, 4));
        let want = (-b.clone()).pow(3) * q.pow(3);
        assert_eq!(twin_pochhammer(&ExactScalar::zero(), &b, &p, &q, 3), want);
    }

    #[test]
    fn pp_pochhammer_at_two() {
        // ((p,q);(p,q))_2 = (p - q)(p^2 - q^2) = (p - q)^2 (p + q)
        let (p, q) = (x(4, 3), x(1, 5));
        let lhs = twin_pochhammer(&p, &q, &p, &q, 2);
        let d = p.clone() - q.clone();
        assert_eq!(lhs, d.pow(2) * (p + q));
    }

    #[test]
    fn ratio_matches_products() {
        let phi = TwinPhi {
            numer: vec![(x(2, 1), x(1, 3)), (x(1, 1), x(5, 7))],
            denom: vec![(x(3, 2), x(1, 1))],
            p: x(3, 1),
            q: x(2, 5),
            z: x(1, 7),
        };
        let partial = phi.eval(Mode::ExactPartial { n_terms: 8 }).unwrap();
        let direct = (0..8)
            .map(|n| phi.term(n).unwrap())
            .fold(ExactScalar::zero(), |a, t| a + t);
        assert_eq!(partial.value, direct);
    }

    #[test]
    fn bibasic_ratio_matches_products() {
        for normalizer in [Normalizer::P, Normalizer::Q] {
            let f = Bibasic {
                a: vec![x(1, 2)],
                c: vec![x(2, 3), x(1, 5)],
                b: vec![x(3, 7)],
                d: vec![x(0, 1)],
                p: x(2, 3),
                q: x(3, 4),
                z: x(1, 3),
                normalizer,
            };
            let partial = f.eval(Mode::ExactPartial { n_terms: 7 }).unwrap();
            let direct = (0..7)
                .map(|n| f.term(n).unwrap())
                .fold(ExactScalar::zero(), |a, t| a + t);
            assert_eq!(partial.value, direct);
        }
    }

    #[test]
    fn empty_lists_at_zero_is_one() {
        let f = Bibasic::<f64> {
            a: vec![],
            c: vec![],
            b: vec![],
            d: vec![],
            p: 0.5,
            q: 0.3,
            z: 0.0,
            normalizer: Normalizer::P,
        };
        assert_eq!(f.eval(Mode::float_default()).unwrap().value, 1.0);
        let phi = pq_exp_as_phi(2.0, 1.0, 0.0);
        assert_eq!(phi.eval(Mode::float_default()).unwrap().value, 1.0);
    }

    #[test]
    fn phi_is_pq_exponent() {
        let phi = pq_exp_as_phi(2.0, 1.0, 0.1)
            .eval(Mode::float_default())
            .unwrap();
        let (e, _) = pq_exp_f64(2.0, 1.0, 0.1, 1e-16, 1000).unwrap();
        assert!((phi.value - e).abs() < 1e-12 * e.abs());
        assert!(phi.converged);
    }

    #[test]
    fn exact_terms_are_inverse_factorials() {
        let (p, q, z) = (x(5, 2), x(1, 3), x(2, 1));
        let phi = pq_exp_as_phi(p.clone(), q.clone(), z.clone());
        for n in 0..6 {
            let want = z.pow(n).div(&pq_factorial_at(n, &p, &q)).unwrap();
            assert_eq!(phi.term(n).unwrap(), want);
        }
    }

    #[test]
    fn region_and_poles() {
        let phi = pq_exp_as_phi(1.0, 2.0, 0.1);
        assert!(matches!(
            phi.eval(Mode::float_default()),
            Err(Error::OutsideConvergenceRegion(_))
        ));
        let bad = TwinPhi {
            numer: vec![],
            denom: vec![(1.0, 1.0)],
            p: 2.0,
            q: 1.0,
            z: 0.1,
        };
        assert!(matches!(
            bad.eval(Mode::float_default()),
            Err(Error::ZeroDenominator(_))
        ));
    }

    #[test]
    fn nonconvergence_is_reported() {
        let phi = pq_exp_as_phi(0.9, 0.8999, 0.9);
        let r = phi.eval(Mode::Float {
            tol: 1e-300,
            max_terms: 5,
        });
        assert!(matches!(r, Err(Error::NonConvergence { terms: 5, .. })));
    }
}

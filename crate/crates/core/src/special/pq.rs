//! `(p,q)`-numbers, factorials and the `(p,q)`-exponent.

use std::collections::BTreeMap;
use std::fmt;

use crate::laurent::QLaurent;
use crate::ring::{Field, Ring};
use crate::scalar::ExactScalar;

/// Polynomial in two commuting symbols `p`, `q` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PqPoly {
    /// `(p exponent, q exponent) -> coefficient`, zeros never stored.
    terms: BTreeMap<(u32, u32), ExactScalar>,
}

impl PqPoly {
    pub fn one() -> Self {
        PqPoly::monomial(ExactScalar::one(), 0, 0)
    }

    pub fn monomial(c: ExactScalar, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        PqPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &ExactScalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn mul(&self, o: &PqPoly) -> PqPoly {
        let mut terms: BTreeMap<(u32, u32), ExactScalar> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &o.terms {
                let e = terms.entry((a + x, b + y)).or_default();
                *e = &*e + &(c * d);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PqPoly { terms }
    }

    /// The `p -> q` limit, a polynomial in `q`.
    pub fn at_p_equals_q(&self) -> QLaurent {
        QLaurent::from_terms(
            self.terms
                .iter()
                .map(|((i, j), c)| ((i + j) as i64, c.clone())),
        )
    }

    pub fn eval<F: Field>(&self, p: &F, q: &F, lift: impl Fn(&ExactScalar) -> F) -> F {
        self.terms.iter().fold(F::zero(), |acc, ((i, j), c)| {
            acc + lift(c) * p.pow(*i) * q.pow(*j)
        })
    }
}

impl fmt::Display for PqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mono = |s: &str, e: u32| match e {
            0 => String::new(),
            1 => s.to_string(),
            _ => format!("{s}^{e}"),
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let vars = [mono("p", *i), mono("q", *j)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>();
                match (c.to_string().as_str(), vars.is_empty()) {
                    (cs, true) => cs.to_string(),
                    ("1", false) => vars.join(""),
                    (cs, false) => format!("{cs}*{}", vars.join("")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `[n]_{p,q} = (p^n - q^n)/(p - q) = sum_{j<n} p^{n-1-j} q^j`.
pub fn pq_number(n: u32) -> PqPoly {
    let terms = (0..n)
        .map(|j| ((n - 1 - j, j), ExactScalar::one()))
        .collect();
    PqPoly { terms }
}

pub fn pq_factorial(n: u32) -> PqPoly {
    (1..=n).fold(PqPoly::one(), |acc, k| acc.mul(&pq_number(k)))
}

/// `[n]_{p,q}` at numeric `p`, `q`. Valid at `p = q` as well, where it is
/// `n q^{n-1}`.
pub fn pq_number_at<F: Field>(n: u32, p: &F, q: &F) -> F {
    (0..n).fold(F::zero(), |acc, j| acc + p.pow(n - 1 - j) * q.pow(j))
}

pub fn pq_factorial_at<F: Field>(n: u32, p: &F, q: &F) -> F {
    (1..=n).fold(F::one(), |acc, k| acc * pq_number_at(k, p, q))
}

/// `exp_{p,q}(z)` summed with term ratio `z/[n]_{p,q}` in double precision.
pub fn pq_exp_f64(
    p: f64,
    q: f64,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> crate::Result<(f64, usize)> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..max_terms {
        let num = pq_number_at(n as u32, &p, &q);
        if num == 0.0 {
            return Err(crate::Error::Precondition(format!("[{n}]_(p,q) vanishes")));
        }
        term *= z / num;
        sum += term;
        if term.abs() <= tol * sum.abs() {
            return Ok((sum, n + 1));
        }
    }
    Err(crate::Error::NonConvergence {
        terms: max_terms,
        last_term: term.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::special::td::td_number;

    #[test]
    fn three_is_p2_pq_q2() {
        assert_eq!(pq_number(3).to_string(), "p^2 + pq + q^2");
        assert_eq!(pq_number(3).at_p_equals_q(), td_number(3));
    }

    #[test]
    fn unit_bases_give_integers() {
        for n in 0..8 {
            assert_eq!(pq_number_at(n, &1.0, &1.0), n as f64);
        }
    }

    #[test]
    fn number_times_difference_is_power_difference() {
        let (p, q) = (
            ExactScalar::rational(rat(7, 3)),
            ExactScalar::rational(rat(-2, 5)),
        );
        for n in 0..10 {
            let lhs = pq_number_at(n, &p, &q) * (p.clone() - q.clone());
            assert_eq!(lhs, p.pow(n) - q.pow(n));
        }
    }

    #[test]
    fn symbolic_and_numeric_factorials_agree() {
        let (p, q) = (
            ExactScalar::rational(rat(3, 2)),
            ExactScalar::rational(rat(1, 3)),
        );
        for n in 0..7 {
            let sym = pq_factorial(n).eval(&p, &q, |c| c.clone());
            assert_eq!(sym, pq_factorial_at(n, &p, &q));
        }
    }

    #[test]
    fn exponent_at_unit_bases_is_exp() {
        let (v, _) = pq_exp_f64(1.0, 1.0, 0.4, 1e-16, 200).unwrap();
        assert!((v - 0.4f64.exp()).abs() < 1e-15);
    }
}

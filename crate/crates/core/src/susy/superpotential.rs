use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::operator::Operator;
use crate::ring::{Rational, Ring};
use crate::scalar::{parse_rational, ExactScalar};

/// Polynomial superpotential `W(x) = sum_k w_k x^k`; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Superpotential {
    coeffs: Vec<ExactScalar>,
}

impl Superpotential {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Superpotential { coeffs }
    }

    /// `W = x`.
    pub fn x() -> Self {
        Superpotential::new(vec![ExactScalar::zero(), ExactScalar::one()])
    }

    /// `W = -x`, the superoscillator.
    pub fn minus_x() -> Self {
        Superpotential::new(vec![ExactScalar::zero(), ExactScalar::int(-1)])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Superpotential::new(c.iter().map(|&n| ExactScalar::int(n)).collect())
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Superpotential {
        Superpotential::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &ExactScalar::int(k as i64))
                .collect(),
        )
    }

    pub fn neg(&self) -> Superpotential {
        Superpotential::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Coefficients of `W(q^j x)`.
    pub fn scaled_coeffs(&self, j: i64) -> Vec<QLaurent> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| QLaurent::monomial(c.clone(), j * k as i64))
            .collect()
    }

    /// Multiplication by `W(q^j x)`.
    pub fn op(&self, j: i64) -> Operator {
        Operator::multiplication(&self.scaled_coeffs(j))
    }

    /// Multiplication by `W'(q^j x)`.
    pub fn deriv_op(&self, j: i64) -> Operator {
        self.derivative().op(j)
    }

    /// Multiplication by `d/dx [W(q^j x)] = q^j W'(q^j x)`.
    pub fn chain_deriv_op(&self, j: i64) -> Operator {
        self.deriv_op(j).scale(&QLaurent::q_pow(j))
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl FromStr for Superpotential {
    type Err = Error;

    /// Accepts sums of terms such as `-x`, `x^3-x`, `2x^2+1/2`, `3/4*x`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidPolynomial(format!("{s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut coeffs: Vec<ExactScalar> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            if term.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (c, k) = parse_term(term).map_err(|e| bad(&e))?;
            let c = if negative { -c } else { c };
            if coeffs.len() <= k {
                coeffs.resize(k + 1, ExactScalar::zero());
            }
            coeffs[k] = &coeffs[k] + &ExactScalar::rational(c);
            rest = tail;
        }
        Ok(Superpotential::new(coeffs))
    }
}

fn parse_term(term: &str) -> std::result::Result<(Rational, usize), String> {
    let (coef, var) = match term.find('x') {
        Some(i) => (&term[..i], Some(&term[i + 1..])),
        None => (term, None),
    };
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = if coef.is_empty() {
        if var.is_none() {
            return Err("empty term".into());
        }
        Rational::one()
    } else {
        parse_rational(coef).map_err(|e| e.to_string())?
    };
    let k = match var {
        None => 0,
        Some("") => 1,
        Some(p) => {
            let e = p
                .strip_prefix('^')
                .ok_or_else(|| format!("unexpected {p:?} after x"))?;
            e.parse::<usize>()
                .map_err(|_| format!("bad exponent {e:?}"))?
        }
    };
    Ok((c, k))
}

impl fmt::Display for Superpotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, ExactScalar::rational(-r)),
                _ => (false, c.clone()),
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag.as_rational().is_some_and(One::is_one);
            let cs = mag.to_string();
            let cs = if cs.contains(' ') {
                format!("({cs})")
            } else {
                cs
            };
            match k {
                0 => write!(f, "{cs}")?,
                _ if unit => {}
                _ => write!(f, "{cs}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_forms() {
        assert_eq!(
            "-x".parse::<Superpotential>().unwrap(),
            Superpotential::minus_x()
        );
        assert_eq!(
            "x^3 - x".parse::<Superpotential>().unwrap(),
            Superpotential::from_ints(&[0, -1, 0, 1])
        );
        let w: Superpotential = "2x^2+1/2".parse().unwrap();
        assert_eq!(w.coeffs()[0], ExactScalar::frac(1, 2));
        assert_eq!(w.coeffs()[2], ExactScalar::int(2));
        assert_eq!(
            "3/4*x".parse::<Superpotential>().unwrap().coeffs()[1],
            ExactScalar::frac(3, 4)
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x^", "y", "1.5x", "x+-", "2x^a"] {
            assert!(s.parse::<Superpotential>().is_err(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^3 - x", "-x", "2x^2 + 1/2", "0"] {
            let w: Superpotential = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
        }
    }

    #[test]
    fn chain_rule_on_scaled_argument() {
        // d/dx (q x)^3 = 3 q^3 x^2
        let w = Superpotential::from_ints(&[0, 0, 0, 1]);
        let expect = Operator::x()
            .pow(2)
            .scale(&QLaurent::monomial(ExactScalar::int(3), 3));
        assert_eq!(w.chain_deriv_op(1), expect);
    }

    #[test]
    fn horner_eval() {
        let w = Superpotential::from_ints(&[1, -1, 0, 1]);
        assert_eq!(w.eval(&ExactScalar::int(2)), ExactScalar::int(7));
    }
}

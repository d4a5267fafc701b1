//! Laurent polynomials in the deformation parameter `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::ring::{Field, Rational, Ring};
use crate::scalar::ExactScalar;

/// `sum_k c_k q^k` with `k` ranging over the integers. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, ExactScalar>,
}

impl QLaurent {
    /// The monomial `c q^k`.
    pub fn monomial(c: ExactScalar, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        QLaurent { terms }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(ExactScalar::one(), k)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, ExactScalar)>>(it: I) -> Self {
        let mut p = QLaurent::default();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExactScalar)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> ExactScalar {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: i64, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Returns `(c, k)` if this is a single monomial `c q^k`.
    pub fn as_monomial(&self) -> Option<(&ExactScalar, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    /// Constant value if no power of `q` other than `q^0` occurs.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return QLaurent::default();
        }
        QLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Coefficientwise complex conjugation (`q` is real).
    pub fn conj(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect(),
        }
    }

    /// Substitutes `q -> q^m` (used for base changes such as `q -> q^2`).
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m != 0, "substitution q -> q^0 is not injective");
        QLaurent {
            terms: self.terms.iter().map(|(k, v)| (k * m, v.clone())).collect(),
        }
    }

    /// Inverse of a monomial; `None` for anything else.
    pub fn inv_monomial(&self) -> Option<Self> {
        let (c, k) = self.as_monomial()?;
        Some(QLaurent::monomial(c.inv()?, -k))
    }

    /// Integer power, negative exponents allowed for monomials only.
    pub fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(Ring::pow(self, e as u32))
        } else {
            self.inv_monomial().map(|m| Ring::pow(&m, (-e) as u32))
        }
    }

    /// Exact substitution `q = q0`.
    pub fn eval(&self, q0: &Rational) -> Result<ExactScalar> {
        if !q0.is_positive() {
            return Err(Error::NonPositiveQ(q0.to_string()));
        }
        Ok(self.eval_unchecked(q0))
    }

    pub(crate) fn eval_unchecked(&self, q0: &Rational) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for (k, c) in &self.terms {
            let p = rational_powi(q0, *k);
            acc = &acc + &c.scale(&p);
        }
        acc
    }

    /// The `q -> 1` limit, which is just the sum of the coefficients.
    pub fn at_one(&self) -> ExactScalar {
        self.terms.values().fold(ExactScalar::zero(), |a, c| &a + c)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

/// `q0^k` for any integer `k`; `q0` must be nonzero when `k < 0`.
pub fn rational_powi(q0: &Rational, k: i64) -> Rational {
    let p = num_traits::pow(q0.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

/// Entry point matching the evaluation operation: exact substitution of a
/// positive rational for `q`.
pub fn qlaurent_eval(p: &QLaurent, q0: &Rational) -> Result<ExactScalar> {
    p.eval(q0)
}

impl Ring for QLaurent {
    fn zero() -> Self {
        QLaurent::default()
    }
    fn one() -> Self {
        QLaurent::constant(ExactScalar::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: &Rational) -> Self {
        QLaurent::constant(ExactScalar::rational(r.clone()))
    }
}

impl From<ExactScalar> for QLaurent {
    fn from(c: ExactScalar) -> Self {
        QLaurent::constant(c)
    }
}

impl From<i64> for QLaurent {
    fn from(n: i64) -> Self {
        QLaurent::constant(ExactScalar::int(n))
    }
}

impl<'a> Add<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn add(self, o: &QLaurent) -> QLaurent {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c);
        }
        r
    }
}

impl<'a> Sub<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn sub(self, o: &QLaurent) -> QLaurent {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, &-c);
        }
        r
    }
}

impl<'a> Mul<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn mul(self, o: &QLaurent) -> QLaurent {
        let mut r = QLaurent::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                r.add_term(k1 + k2, &(c1 * c2));
            }
        }
        r
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, o: QLaurent) -> QLaurent {
        &self + &o
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, o: QLaurent) -> QLaurent {
        &self - &o
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, o: QLaurent) -> QLaurent {
        &self * &o
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -self.clone()
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = c.to_string();
            let compound = coeff.contains(' ');
            match (*k, c.is_one(), compound) {
                (0, _, _) => write!(f, "{}", coeff)?,
                (_, true, _) => {}
                (_, false, true) => write!(f, "({})", coeff)?,
                (_, false, false) => write!(f, "{}", coeff)?,
            }
            match *k {
                0 => {}
                1 => f.write_str("q")?,
                k => write!(f, "q^{}", k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({})", self)
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for ExactScalar {
    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }
}

/// Convenience: `c q^k` with rational `c = n/d`.
pub fn qmono(n: i64, d: i64, k: i64) -> QLaurent {
    QLaurent::monomial(ExactScalar::frac(n, d), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn eval_examples() {
        let p = &QLaurent::q_pow(-1) + &QLaurent::q();
        assert_eq!(p.eval(&rat(2, 1)).unwrap(), ExactScalar::frac(5, 2));

        let n = 3i64;
        let p = QLaurent::q_pow(n * (n - 1) / 2);
        assert_eq!(p.eval(&rat(1, 1)).unwrap(), ExactScalar::one());

        let d = &QLaurent::q() - &QLaurent::q_pow(-1);
        let sq = &d * &d;
        assert_eq!(sq.eval(&rat(3, 5)).unwrap(), ExactScalar::frac(256, 225));
    }

    #[test]
    fn nonpositive_q_rejected() {
        assert!(QLaurent::q().eval(&rat(0, 1)).is_err());
        assert!(QLaurent::q().eval(&rat(-1, 2)).is_err());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = &QLaurent::q() - &QLaurent::q();
        assert!(p.is_zero());
        assert_eq!(p, QLaurent::zero());
    }

    #[test]
    fn at_one_matches_eval() {
        let p = &qmono(3, 2, -4) + &qmono(-7, 1, 5);
        assert_eq!(p.at_one(), p.eval(&rat(1, 1)).unwrap());
    }

    #[test]
    fn display_reads_naturally() {
        let p = &qmono(1, 2, -1) + &QLaurent::q_pow(2);
        assert_eq!(p.to_string(), "q^2 + 1/2q^-1");
    }

    #[test]
    fn powi_of_monomial() {
        let p = qmono(2, 1, 1);
        assert_eq!(p.powi(-2).unwrap(), qmono(1, 4, -2));
        assert!((&p + &QLaurent::one()).powi(-1).is_none());
    }
}

//! Normal-ordered operators in the algebra generated by `X = x·`,
//! `D = d/dx` and `T = T_q^{±1}`.
//!
//! Every [`Operator`] is stored as a sum of monomials `c X^a D^b T^c` in the
//! fixed order X-powers left, D middle, T right. Composition uses the
//! closed-form reordering
//!
//! ```text
//! T^c X^a = q^{ca} X^a T^c,   T^c D^b = q^{-cb} D^b T^c,
//! D^b X^a = sum_k C(b,k) a!/(a-k)! X^{a-k} D^{b-k}
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::{rational_powi, QLaurent};
use crate::ring::{Rational, Ring};
use crate::scalar::ExactScalar;
use crate::series::Series;

/// Exponents `(x_pow, d_pow, t_exp)` of a normal-ordered monomial. The
/// derived ordering is the canonical term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialKey {
    pub x_pow: u32,
    pub d_pow: u32,
    pub t_exp: i64,
}

impl MonomialKey {
    pub const ONE: MonomialKey = MonomialKey {
        x_pow: 0,
        d_pow: 0,
        t_exp: 0,
    };

    pub fn new(x_pow: u32, d_pow: u32, t_exp: i64) -> Self {
        MonomialKey {
            x_pow,
            d_pow,
            t_exp,
        }
    }

    /// Net change of degree when acting on `x^m`.
    pub fn degree_shift(&self) -> i64 {
        self.x_pow as i64 - self.d_pow as i64
    }
}

/// A single term `coeff X^a D^b T^c` with nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMonomial {
    pub key: MonomialKey,
    pub coeff: QLaurent,
}

#[derive(Clone, PartialEq, Default)]
pub struct Operator {
    terms: BTreeMap<MonomialKey, QLaurent>,
}

pub(crate) fn falling(m: u64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k as u64 {
        if j >= m {
            return BigInt::from(0);
        }
        acc *= m - j;
    }
    acc
}

fn binomial(n: u32, k: u32) -> BigInt {
    falling(n as u64, k) / falling(k as u64, k)
}

impl Operator {
    pub fn zero() -> Self {
        Operator::default()
    }

    pub fn identity() -> Self {
        Operator::scalar(QLaurent::one())
    }

    pub fn scalar(c: QLaurent) -> Self {
        Operator::monomial(MonomialKey::ONE, c)
    }

    pub fn monomial(key: MonomialKey, c: QLaurent) -> Self {
        let mut op = Operator::zero();
        op.add_term(key, &c);
        op
    }

    /// Multiplication by `x`.
    pub fn x() -> Self {
        Operator::monomial(MonomialKey::new(1, 0, 0), QLaurent::one())
    }

    /// `d/dx`.
    pub fn d() -> Self {
        Operator::monomial(MonomialKey::new(0, 1, 0), QLaurent::one())
    }

    /// `T_q^k`, i.e. `f(x) -> f(q^k x)`.
    pub fn t(k: i64) -> Self {
        Operator::monomial(MonomialKey::new(0, 0, k), QLaurent::one())
    }

    /// Momentum `p = -i d/dx`.
    pub fn p() -> Self {
        Operator::d().scale(&QLaurent::constant(-ExactScalar::i()))
    }

    /// Multiplication by the polynomial `sum_k c_k x^k`.
    pub fn multiplication(coeffs: &[QLaurent]) -> Self {
        let mut op = Operator::zero();
        for (k, c) in coeffs.iter().enumerate() {
            op.add_term(MonomialKey::new(k as u32, 0, 0), c);
        }
        op
    }

    pub fn from_monomials<I: IntoIterator<Item = OpMonomial>>(it: I) -> Self {
        let mut op = Operator::zero();
        for m in it {
            op.add_term(m.key, &m.coeff);
        }
        op
    }

    pub(crate) fn add_term(&mut self, key: MonomialKey, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&MonomialKey, &QLaurent)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> Vec<OpMonomial> {
        self.terms
            .iter()
            .map(|(k, c)| OpMonomial {
                key: *k,
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn coeff(&self, key: MonomialKey) -> QLaurent {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Operator) -> Operator {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c);
        }
        r
    }

    pub fn sub(&self, o: &Operator) -> Operator {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, &-c);
        }
        r
    }

    pub fn neg(&self) -> Operator {
        self.scale(&QLaurent::from(-1))
    }

    pub fn scale(&self, c: &QLaurent) -> Operator {
        let mut r = Operator::zero();
        for (k, v) in &self.terms {
            r.add_term(*k, &(v * c));
        }
        r
    }

    pub fn scale_scalar(&self, c: &ExactScalar) -> Operator {
        self.scale(&QLaurent::constant(c.clone()))
    }

    /// Operator composition `self ∘ o`.
    pub fn compose(&self, o: &Operator) -> Operator {
        let mut r = Operator::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let base = c1 * c2;
                let q_exp = k1.t_exp * (k2.x_pow as i64 - k2.d_pow as i64);
                let base = base.shift(q_exp);
                for k in 0..=k1.d_pow.min(k2.x_pow) {
                    let mult = binomial(k1.d_pow, k) * falling(k2.x_pow as u64, k);
                    let c = base.scale(&ExactScalar::rational(Rational::from_integer(mult)));
                    let key = MonomialKey::new(
                        k1.x_pow + k2.x_pow - k,
                        k1.d_pow - k + k2.d_pow,
                        k1.t_exp + k2.t_exp,
                    );
                    r.add_term(key, &c);
                }
            }
        }
        r
    }

    /// Repeated composition.
    pub fn pow(&self, n: u32) -> Operator {
        (0..n).fold(Operator::identity(), |acc, _| acc.compose(self))
    }

    /// Formal adjoint: antilinear, reverses products, with `X† = X`,
    /// `D† = -D` and `T_q† = q^{-1} T_q^{-1}`.
    pub fn adjoint(&self) -> Operator {
        let mut r = Operator::zero();
        for (k, c) in &self.terms {
            let sign = if k.d_pow % 2 == 0 { 1 } else { -1 };
            let coeff = c.conj().shift(-k.t_exp).scale(&ExactScalar::int(sign));
            let reordered = Operator::t(-k.t_exp)
                .compose(&Operator::d().pow(k.d_pow))
                .compose(&Operator::x().pow(k.x_pow));
            r = r.add(&reordered.scale(&coeff));
        }
        r
    }

    /// Substitutes `q = q0` in every coefficient. At `q0 = 1` the scaling
    /// operator is the identity, so T-exponents are collapsed as well.
    pub fn at_q(&self, q0: &Rational) -> Operator {
        let collapse = q0.is_one();
        let mut r = Operator::zero();
        for (k, c) in &self.terms {
            let key = if collapse {
                MonomialKey::new(k.x_pow, k.d_pow, 0)
            } else {
                *k
            };
            r.add_term(key, &QLaurent::constant(c.eval_unchecked(q0)));
        }
        r
    }

    /// The `q -> 1` specialization.
    pub fn at_one(&self) -> Operator {
        self.at_q(&Rational::one())
    }

    /// Smallest degree shift over all terms (`None` for the zero operator).
    pub fn min_degree_shift(&self) -> Option<i64> {
        self.terms.keys().map(MonomialKey::degree_shift).min()
    }

    /// Symbolic action on `x^m`: returns `(degree, coefficient)` pairs.
    pub fn act_on_monomial(&self, m: usize) -> BTreeMap<usize, QLaurent> {
        let mut out: BTreeMap<usize, QLaurent> = BTreeMap::new();
        for (k, c) in &self.terms {
            if (k.d_pow as usize) > m {
                continue;
            }
            let f = falling(m as u64, k.d_pow);
            let coeff = c
                .shift(k.t_exp * m as i64)
                .scale(&ExactScalar::rational(Rational::from_integer(f)));
            let deg = m - k.d_pow as usize + k.x_pow as usize;
            let e = out.entry(deg).or_default();
            *e = &*e + &coeff;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Numeric action on `x^m` at `q = q0`.
    pub fn act_on_monomial_at(&self, m: usize, q0: &Rational) -> BTreeMap<usize, ExactScalar> {
        let mut out: BTreeMap<usize, ExactScalar> = BTreeMap::new();
        for (k, c) in &self.terms {
            if (k.d_pow as usize) > m {
                continue;
            }
            let f = Rational::from_integer(falling(m as u64, k.d_pow));
            let scale = if k.t_exp == 0 {
                f
            } else {
                f * rational_powi(q0, k.t_exp * m as i64)
            };
            let value = c.as_constant().unwrap_or_else(|| c.eval_unchecked(q0));
            let coeff = value.scale(&scale);
            let deg = m - k.d_pow as usize + k.x_pow as usize;
            let e = out.entry(deg).or_default();
            *e = &*e + &coeff;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Symbolic application to a series with `q`-dependent coefficients.
    pub fn apply(&self, s: &Series<QLaurent>) -> Series<QLaurent> {
        let order = s.order() + self.min_degree_shift().unwrap_or(0).min(0);
        let len = (order + 1).max(0) as usize;
        let mut out = vec![QLaurent::zero(); len];
        for (m, c) in s.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (deg, v) in self.act_on_monomial(m) {
                if deg < len {
                    out[deg] = &out[deg] + &(&v * c);
                }
            }
        }
        Series::new(out, order)
    }

    /// Numeric application at `q = q0` to a series with exact coefficients.
    pub fn apply_at(&self, s: &Series<ExactScalar>, q0: &Rational) -> Series<ExactScalar> {
        let order = s.order() + self.min_degree_shift().unwrap_or(0).min(0);
        let len = (order + 1).max(0) as usize;
        let mut out = vec![ExactScalar::zero(); len];
        for (m, c) in s.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (deg, v) in self.act_on_monomial_at(m, q0) {
                if deg < len {
                    out[deg] = &out[deg] + &(&v * c);
                }
            }
        }
        Series::new(out, order)
    }
}

/// Applies the dilation `f(x) -> f(c x)` for an arbitrary rational factor
/// `c`, i.e. `T_c` with a numeric base.
pub fn dilate(s: &Series<ExactScalar>, c: &Rational) -> Series<ExactScalar> {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, a)| a.scale(&rational_powi(c, m as i64)))
        .collect();
    Series::new(coeffs, s.order())
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{}]", c)?;
            if k.x_pow == 1 {
                f.write_str("·X")?;
            } else if k.x_pow > 1 {
                write!(f, "·X^{}", k.x_pow)?;
            }
            if k.d_pow == 1 {
                f.write_str("·D")?;
            } else if k.d_pow > 1 {
                write!(f, "·D^{}", k.d_pow)?;
            }
            if k.t_exp == 1 {
                f.write_str("·T")?;
            } else if k.t_exp != 0 {
                write!(f, "·T^{}", k.t_exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qmono;
    use crate::scalar::rat;

    #[test]
    fn heisenberg() {
        let dx = Operator::d().compose(&Operator::x());
        let expect = Operator::x()
            .compose(&Operator::d())
            .add(&Operator::identity());
        assert_eq!(dx, expect);
    }

    #[test]
    fn t_moves_past_x_and_d() {
        let tx = Operator::t(1).compose(&Operator::x());
        assert_eq!(
            tx,
            Operator::monomial(MonomialKey::new(1, 0, 1), QLaurent::q())
        );
        let td = Operator::t(1).compose(&Operator::d());
        assert_eq!(
            td,
            Operator::monomial(MonomialKey::new(0, 1, 1), QLaurent::q_pow(-1))
        );
        assert_eq!(
            Operator::t(1).compose(&Operator::t(-1)),
            Operator::identity()
        );
    }

    #[test]
    fn adjoint_of_generators() {
        assert_eq!(Operator::x().adjoint(), Operator::x());
        assert_eq!(Operator::d().adjoint(), Operator::d().neg());
        assert_eq!(
            Operator::t(1).adjoint(),
            Operator::monomial(MonomialKey::new(0, 0, -1), QLaurent::q_pow(-1))
        );
        assert_eq!(Operator::p().adjoint(), Operator::p());
    }

    #[test]
    fn sqrt_q_t_is_unitary_in_squared_form() {
        // (sqrt q T)(sqrt q T)^† = q T T^† = 1
        let t = Operator::t(1);
        let lhs = t.compose(&t.adjoint()).scale(&QLaurent::q());
        assert_eq!(lhs, Operator::identity());
        let lhs = t.adjoint().compose(&t).scale(&QLaurent::q());
        assert_eq!(lhs, Operator::identity());
    }

    #[test]
    fn t_on_cubic() {
        let s = Series::monomial(QLaurent::one(), 3, 5);
        let out = Operator::t(1).apply(&s);
        assert_eq!(out, Series::monomial(QLaurent::q_pow(3), 3, 5));
    }

    #[test]
    fn t_at_one_is_identity() {
        let op = Operator::t(1).add(&Operator::x().compose(&Operator::t(-2)));
        let expect = Operator::identity().add(&Operator::x());
        assert_eq!(op.at_one(), expect);
    }

    #[test]
    fn derivative_lowers_order() {
        let s = Series::new(vec![QLaurent::one(); 6], 5);
        let out = Operator::d().apply(&s);
        assert_eq!(out.order(), 4);
        assert_eq!(out.coeff(4), Some(&QLaurent::from(5)));
    }

    #[test]
    fn t_p_composition_matches_dilation() {
        let s = Series::new((0..8).map(|k| ExactScalar::int(k + 1)).collect(), 7);
        let q0 = rat(3, 5);
        let p0 = rat(7, 2);
        let twice = dilate(&dilate(&s, &p0), &q0);
        let once = dilate(&s, &(&q0 * &p0));
        assert_eq!(twice, once);
        assert_eq!(Operator::t(1).apply_at(&s, &q0), dilate(&s, &q0));
    }

    #[test]
    fn numeric_action_agrees_with_symbolic() {
        let op = Operator::d()
            .compose(&Operator::t(1))
            .add(&Operator::x().scale(&qmono(2, 3, -2)));
        let q0 = rat(5, 3);
        for m in 0..6 {
            let sym = op.act_on_monomial(m);
            let num = op.act_on_monomial_at(m, &q0);
            let sym_eval: BTreeMap<usize, ExactScalar> = sym
                .iter()
                .map(|(k, v)| (*k, v.eval(&q0).unwrap()))
                .collect();
            assert_eq!(sym_eval, num);
        }
    }
}

//! Truncated formal power series in `x`.
//!
//! A [`Series`] knows its coefficients through degree `order`; everything
//! above is *unknown*, not zero. Arithmetic never produces coefficients past
//! the point where both inputs are known.

use std::fmt;

use crate::ring::Ring;

#[derive(Clone, PartialEq)]
pub struct Series<S> {
    coeffs: Vec<S>,
    order: i64,
}

impl<S: Ring> Series<S> {
    /// Series known through degree `order`. Missing entries are zero, extra
    /// entries beyond `order` are discarded.
    pub fn new(mut coeffs: Vec<S>, order: i64) -> Self {
        let len = (order + 1).max(0) as usize;
        coeffs.truncate(len);
        coeffs.resize(len, S::zero());
        Series { coeffs, order }
    }

    pub fn zero(order: i64) -> Self {
        Series::new(Vec::new(), order)
    }

    /// `c x^k` known through `order`.
    pub fn monomial(c: S, k: usize, order: i64) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Series::new(v, order)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `x^k`, or `None` if `k` is beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn truncate(&self, order: i64) -> Self {
        Series::new(self.coeffs.clone(), order.min(self.order))
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.clone() - b.clone())
    }

    fn zip(&self, o: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let order = self.order.min(o.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Series::new(coeffs, order)
    }

    /// Cauchy product, valid through `min(order_a, order_b)`.
    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let n = (order + 1).max(0) as usize;
        let mut out = vec![S::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Series::new(out, order)
    }

    pub fn scale(&self, c: &S) -> Self {
        Series::new(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            self.order,
        )
    }

    pub fn neg(&self) -> Self {
        Series::new(self.coeffs.iter().map(|a| -a.clone()).collect(), self.order)
    }

    /// Maps every coefficient, e.g. to specialize `q`.
    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Series<T> {
        Series::new(self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Substitutes `x -> c x^k` (`k >= 1`). The result is known through
    /// `k * order + (k - 1)`, since no degree strictly between multiples of
    /// `k` can receive a contribution.
    pub fn substitute_monomial(&self, c: &S, k: usize) -> Self {
        assert!(k >= 1);
        if self.order < 0 {
            return Series::zero(self.order);
        }
        let order = self.order * k as i64 + (k as i64 - 1);
        let mut out = vec![S::zero(); (order + 1) as usize];
        let mut cp = S::one();
        for (n, a) in self.coeffs.iter().enumerate() {
            out[n * k] = a.clone() * cp.clone();
            cp = cp * c.clone();
        }
        Series::new(out, order)
    }

    /// `true` if every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// First degree (within the common window) where the two series differ.
    pub fn first_mismatch(&self, o: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&o.coeffs).position(|(a, b)| a != b)
    }

    /// Equality up to the smaller truncation order.
    pub fn agrees_with(&self, o: &Self) -> bool {
        self.first_mismatch(o).is_none()
    }
}

impl<S: Ring> fmt::Display for Series<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})x^{}", c, k)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

impl<S: Ring> fmt::Debug for Series<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}]", self)
    }
}

/// Arithmetic selector mirroring the series operation surface.
#[derive(Clone, Debug)]
pub enum SeriesOp<S> {
    Add,
    Sub,
    Mul,
    Scale(S),
}

/// Applies `op`; for `Scale` the second operand is ignored.
pub fn series_arith<S: Ring>(a: &Series<S>, b: &Series<S>, op: SeriesOp<S>) -> Series<S> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Scale(c) => a.scale(&c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;

    fn r(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    #[test]
    fn one_plus_x_times_one_minus_x() {
        let a = Series::new(vec![r(1), r(1)], 5);
        let b = Series::new(vec![r(1), r(-1)], 5);
        let p = series_arith(&a, &b, SeriesOp::Mul);
        assert_eq!(p, Series::new(vec![r(1), r(0), r(-1)], 5));
        assert_eq!(p.order(), 5);
    }

    #[test]
    fn product_beyond_window_is_unknown() {
        let a = Series::monomial(r(1), 2, 4);
        let b = Series::monomial(r(1), 3, 4);
        let p = a.mul(&b);
        assert_eq!(p.order(), 4);
        assert!(p.is_zero());
        assert!(p.coeff(5).is_none());
    }

    #[test]
    fn exp_squared_is_exp_of_two_x() {
        // Oracle: Cauchy product of 1/k! with itself gives 2^k/k!.
        let fact = |k: i64| (1..=k).product::<i64>();
        let e: Vec<ExactScalar> = (0..=4).map(|k| ExactScalar::frac(1, fact(k))).collect();
        let s = Series::new(e, 4);
        let sq = s.mul(&s);
        let expect: Vec<ExactScalar> = (0..=4)
            .map(|k| ExactScalar::frac(1 << k, fact(k)))
            .collect();
        assert_eq!(sq, Series::new(expect, 4));
    }

    #[test]
    fn add_uses_min_order() {
        let a = Series::new(vec![r(1); 10], 9);
        let b = Series::new(vec![r(2); 4], 3);
        assert_eq!(a.add(&b).order(), 3);
        assert!(a
            .truncate(3)
            .add(&b)
            .agrees_with(&Series::new(vec![r(3); 4], 3)));
    }

    #[test]
    fn substitution_into_square() {
        let a = Series::new(vec![r(1), r(1), r(1)], 2);
        let s = a.substitute_monomial(&r(-2), 2);
        assert_eq!(s.order(), 5);
        assert_eq!(s.coeffs(), &[r(1), r(0), r(-2), r(0), r(4), r(0)]);
    }
}

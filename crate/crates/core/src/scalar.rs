//! Exact scalars in the field Q(i, sqrt 2).
//!
//! An [`ExactScalar`] is `re + im*i + re_s2*sqrt2 + im_s2*i*sqrt2` with
//! rational components. Every constant that appears in the factorization
//! operators (`i`, `sqrt 2`, `1/sqrt 2`) lives here, so identity checks
//! never round.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::ring::{Field, Rational, Ring};

/// Builds `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"num/den"` or `"num"`. Decimal notation is rejected so that no
/// float ever enters the exact pipeline.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Float projection of a rational, robust to huge numerators/denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    match r.to_f64() {
        Some(v) if v.is_finite() && (v != 0.0 || r.is_zero()) => v,
        _ => {
            let s = if r.is_negative() { -1.0 } else { 1.0 };
            s * ln_abs_rational(r).exp()
        }
    }
}

/// `ln |r|` without overflow; `-inf` for zero.
pub fn ln_abs_rational(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_bigint(&r.numer().abs()) - ln_bigint(&r.denom().abs())
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map(f64::ln).unwrap_or(f64::NAN);
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Element of Q(i, sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    pub re: Rational,
    pub im: Rational,
    pub re_s2: Rational,
    pub im_s2: Rational,
}

impl ExactScalar {
    pub fn new(re: Rational, im: Rational, re_s2: Rational, im_s2: Rational) -> Self {
        ExactScalar {
            re,
            im,
            re_s2,
            im_s2,
        }
    }

    pub fn rational(r: Rational) -> Self {
        ExactScalar {
            re: r,
            ..Default::default()
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(rat(n, d))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ExactScalar {
            im: Rational::one(),
            ..Default::default()
        }
    }

    pub fn sqrt2() -> Self {
        ExactScalar {
            re_s2: Rational::one(),
            ..Default::default()
        }
    }

    /// `1/sqrt 2 = sqrt2 / 2`.
    pub fn inv_sqrt2() -> Self {
        ExactScalar {
            re_s2: rat(1, 2),
            ..Default::default()
        }
    }

    /// Complex conjugation: negates the `i` and `i*sqrt2` components.
    pub fn conj(&self) -> Self {
        ExactScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
            re_s2: self.re_s2.clone(),
            im_s2: -self.im_s2.clone(),
        }
    }

    /// Returns the rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.im.is_zero() && self.re_s2.is_zero() && self.im_s2.is_zero() {
            Some(&self.re)
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero() && self.im_s2.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ExactScalar {
            re: &self.re * r,
            im: &self.im * r,
            re_s2: &self.re_s2 * r,
            im_s2: &self.im_s2 * r,
        }
    }

    /// Float projection `(real, imaginary)`, for reporting only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let s2 = std::f64::consts::SQRT_2;
        (
            rational_to_f64(&self.re) + s2 * rational_to_f64(&self.re_s2),
            rational_to_f64(&self.im) + s2 * rational_to_f64(&self.im_s2),
        )
    }

    /// Modulus of the float projection.
    pub fn abs_f64(&self) -> f64 {
        let (a, b) = self.to_complex_f64();
        a.hypot(b)
    }

    fn parts(&self) -> [&Rational; 4] {
        [&self.re, &self.im, &self.re_s2, &self.im_s2]
    }

    fn mul_ref(&self, o: &Self) -> Self {
        // Basis 1, i, √2, i√2: e_a e_b = MUL[a][b].1 * e_{MUL[a][b].0}.
        const MUL: [[(usize, i64); 4]; 4] = [
            [(0, 1), (1, 1), (2, 1), (3, 1)],
            [(1, 1), (0, -1), (3, 1), (2, -1)],
            [(2, 1), (3, 1), (0, 2), (1, 2)],
            [(3, 1), (2, -1), (1, 2), (0, -2)],
        ];
        let mut out: [Rational; 4] = Default::default();
        for (a, x) in self.parts().into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.parts().into_iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (c, k) = MUL[a][b];
                let prod = x * y;
                match k {
                    1 => out[c] += prod,
                    -1 => out[c] -= prod,
                    k => out[c] += prod * Rational::from_integer(k.into()),
                }
            }
        }
        let [re, im, re_s2, im_s2] = out;
        ExactScalar {
            re,
            im,
            re_s2,
            im_s2,
        }
    }

    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(ExactScalar::rational(r.recip()));
        }
        // x = u + v*sqrt2 with u, v in Q(i); x * (u - v*sqrt2) = u^2 - 2 v^2.
        let (a, b, c, d) = (&self.re, &self.im, &self.re_s2, &self.im_s2);
        let two = rat(2, 1);
        let n_re = a * a - b * b - &two * (c * c - d * d);
        let n_im = &two * (a * b) - &two * &two * (c * d);
        let modulus = &n_re * &n_re + &n_im * &n_im;
        // 1/N = conj(N)/|N|^2
        let inv_re = &n_re / &modulus;
        let inv_im = -(&n_im / &modulus);
        let conj_sqrt2 = ExactScalar {
            re: a.clone(),
            im: b.clone(),
            re_s2: -c.clone(),
            im_s2: -d.clone(),
        };
        let n_inv = ExactScalar::new(inv_re, inv_im, Rational::zero(), Rational::zero());
        Some(conj_sqrt2.mul_ref(&n_inv))
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::default()
    }
    fn one() -> Self {
        ExactScalar::int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero() && self.re_s2.is_zero() && self.im_s2.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        ExactScalar::rational(r.clone())
    }
}

impl Field for ExactScalar {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::rational(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::int(n)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
            re_s2: &self.re_s2 + &o.re_s2,
            im_s2: &self.im_s2 + &o.im_s2,
        }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
            re_s2: &self.re_s2 - &o.re_s2,
            im_s2: &self.im_s2 - &o.im_s2,
        }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        self.mul_ref(o)
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: ExactScalar) -> ExactScalar {
        &self + &o
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: ExactScalar) -> ExactScalar {
        &self - &o
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: ExactScalar) -> ExactScalar {
        self.mul_ref(&o)
    }
}

impl Div for ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero; use [`Field::div`] for the checked form.
    fn div(self, o: ExactScalar) -> ExactScalar {
        Field::div(&self, &o).expect("division by zero in ExactScalar")
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            re: -self.re,
            im: -self.im,
            re_s2: -self.re_s2,
            im_s2: -self.im_s2,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -self.clone()
    }
}

/// Checked field operation selector, mirroring the arithmetic surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Conj,
}

/// Applies `op` to `a` and `b` (`b` is ignored for `Conj`).
pub fn field_arith(a: &ExactScalar, b: &ExactScalar, op: FieldOp) -> Result<ExactScalar, Error> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => Field::div(a, b).ok_or(Error::DivisionByZero)?,
        FieldOp::Conj => a.conj(),
    })
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (&self.re, ""),
            (&self.im, "i"),
            (&self.re_s2, "√2"),
            (&self.im_s2, "i√2"),
        ];
        let mut wrote = false;
        for (c, unit) in parts {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if unit.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                f.write_str(unit)?;
            } else {
                write!(f, "{}{}", mag, unit)?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({})", self)
    }
}

//! Tamm-Dankoff numbers, factorials, derivative and exponent.

use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::QLaurent;
use crate::ring::{Rational, Ring};
use crate::scalar::ExactScalar;
use crate::series::Series;

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn inv_factorial(n: u64) -> ExactScalar {
    ExactScalar::rational(Rational::new(BigInt::one(), factorial(n)))
}

/// `(n]_q = n q^{n-1}`.
pub fn td_number(n: u64) -> QLaurent {
    QLaurent::monomial(ExactScalar::int(n as i64), n as i64 - 1)
}

/// `(n]_q! = q^{n(n-1)/2} n!`, by the closed form.
pub fn td_factorial(n: u64) -> QLaurent {
    let e = (n * n.saturating_sub(1) / 2) as i64;
    QLaurent::monomial(
        ExactScalar::rational(Rational::from_integer(factorial(n))),
        e,
    )
}

/// `(1]_q (2]_q ... (n]_q` multiplied out.
pub fn td_factorial_product(n: u64) -> QLaurent {
    (1..=n).fold(QLaurent::one(), |acc, k| &acc * &td_number(k))
}

/// `z^n -> (n]_q z^{n-1}`. The result is known one degree less.
pub fn td_derivative(s: &Series<QLaurent>) -> Series<QLaurent> {
    let out = s
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * &td_number(n as u64))
        .collect();
    Series::new(out, s.order() - 1)
}

/// Coefficient of `z^n` in `exp^{TD}_{q^k}(alpha z)`:
/// `q^{-k n(n-1)/2} alpha^n / n!`.
pub fn td_exp_coeff(alpha: &QLaurent, base_power: i64, n: u64) -> QLaurent {
    let e = -base_power * (n * n.saturating_sub(1) / 2) as i64;
    alpha.pow(n as u32).shift(e).scale(&inv_factorial(n))
}

/// `exp^{TD}_{q^k}(alpha z)` through `z^order`.
pub fn td_exp(alpha: &QLaurent, base_power: i64, order: usize) -> Series<QLaurent> {
    let c = (0..=order as u64)
        .map(|n| td_exp_coeff(alpha, base_power, n))
        .collect();
    Series::new(c, order as i64)
}

/// `exp^{TD}_q(z)` in double precision. The terms `q^{-n(n-1)/2} z^n/n!`
/// eventually grow when `q < 1`, so the sum stops at the first term below
/// `tol` relative to the partial sum, which for `q < 1` is the optimal
/// truncation of an asymptotic series rather than a convergent limit.
pub fn td_exp_f64(q: f64, z: f64, tol: f64, max_terms: usize) -> crate::Result<(f64, usize)> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..max_terms {
        // t_n / t_{n-1} = z q^{-(n-1)} / n
        term *= z * q.powi(-(n as i32 - 1)) / n as f64;
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
    use crate::laurent::qmono;

    #[test]
    fn numbers_and_factorials() {
        assert_eq!(td_number(3), qmono(3, 1, 2));
        assert!(td_number(0).is_zero());
        assert_eq!(td_factorial(3), qmono(6, 1, 3));
        assert_eq!(td_factorial(0), QLaurent::one());
        assert_eq!(td_factorial(1), QLaurent::one());
        for n in 0..=20 {
            assert_eq!(td_factorial(n), td_factorial_product(n), "n = {n}");
        }
    }

    #[test]
    fn derivative_of_cube() {
        let s = Series::new(
            vec![
                QLaurent::zero(),
                QLaurent::zero(),
                QLaurent::zero(),
                QLaurent::one(),
            ],
            3,
        );
        let d = td_derivative(&s);
        assert_eq!(d.coeff(2), Some(&qmono(3, 1, 2)));
        assert_eq!(d.order(), 2);
    }

    #[test]
    fn exponent_is_an_eigenfunction() {
        let alpha = &qmono(2, 3, 1) + &qmono(-1, 1, -2);
        let e = td_exp(&alpha, 1, 14);
        let lhs = td_derivative(&e);
        let rhs = e.scale(&alpha).truncate(13);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_coefficient() {
        assert_eq!(td_exp_coeff(&QLaurent::one(), 1, 2), qmono(1, 2, -1));
    }

    #[test]
    fn float_exponent_at_one_is_exp() {
        let (v, _) = td_exp_f64(1.0, 0.3, 1e-16, 100).unwrap();
        assert!((v - 0.3f64.exp()).abs() < 1e-15);
    }
}

//! Truncated power series in `λ²` and the sine-ratio expansion
//! `(sin(dλ/2)/(λ/2))^e` used by the multicover transform.

use num_traits::Zero;

use crate::rational::{factorial, pow_i64, rat_int, Rat};

/// Series in even powers of the genus parameter: `c_0 + c_1 λ² + c_2 λ⁴ + ...`,
/// truncated at a fixed even order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenLambdaSeries {
    /// `coeffs[i]` is the coefficient of `λ^{2i}`; length `order/2 + 1`.
    coeffs: Vec<Rat>,
    /// Largest retained `λ` exponent (even, >= 0).
    order: usize,
}

impl EvenLambdaSeries {
    pub fn new(order: usize) -> Self {
        assert!(order % 2 == 0, "order must be even");
        EvenLambdaSeries {
            coeffs: vec![Rat::zero(); order / 2 + 1],
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::new(order);
        s.coeffs[0] = rat_int(1);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `λ^exp`; zero for odd exponents. Panics if `exp`
    /// exceeds the truncation order.
    pub fn coeff(&self, exp: usize) -> Rat {
        assert!(exp <= self.order, "λ exponent {exp} beyond order {}", self.order);
        if exp % 2 == 1 {
            return Rat::zero();
        }
        self.coeffs[exp / 2].clone()
    }

    pub fn set_coeff(&mut self, exp: usize, value: Rat) {
        assert!(exp <= self.order && exp % 2 == 0);
        self.coeffs[exp / 2] = value;
    }

    pub fn mul(&self, other: &EvenLambdaSeries) -> EvenLambdaSeries {
        assert_eq!(self.order, other.order, "mismatched truncation orders");
        let n = self.coeffs.len();
        let mut out = EvenLambdaSeries::new(self.order);
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] += prod;
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> EvenLambdaSeries {
        let c0 = &self.coeffs[0];
        assert!(!c0.is_zero(), "cannot invert a series with zero constant term");
        let inv0 = c0.recip();
        let mut out = EvenLambdaSeries::new(self.order);
        out.coeffs[0] = inv0.clone();
        for n in 1..self.coeffs.len() {
            let mut sum = Rat::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                sum += &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = -sum * &inv0;
        }
        out
    }

    /// Integer power, negative exponents via the reciprocal. Exact
    /// throughout; uses binary powering.
    pub fn powi(&self, e: i64) -> EvenLambdaSeries {
        if e == 0 {
            return EvenLambdaSeries::one(self.order);
        }
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = EvenLambdaSeries::one(self.order);
        let mut pow = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&pow);
            }
            exp >>= 1;
            if exp > 0 {
                pow = pow.mul(&pow);
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> EvenLambdaSeries {
        EvenLambdaSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }
}

/// Expansion of `(sin(dλ/2)/(λ/2))^e = d^e · (sin(dλ/2)/(dλ/2))^e` as a
/// series in `λ²` truncated at the given even order. Negative exponents are
/// legal because `sin(x)/x` is a unit power series; they are computed by
/// exact reciprocal followed by a positive power.
pub fn sin_ratio_power(d: u64, e: i64, order: usize) -> EvenLambdaSeries {
    assert!(d >= 1, "cover degree must be positive");
    assert!(order % 2 == 0, "order must be even");
    // sin(dλ/2)/(dλ/2) = sum_j (-1)^j (d/2)^{2j} λ^{2j} / (2j+1)!
    let mut unit = EvenLambdaSeries::new(order);
    let half_d = Rat::new(d.into(), 2.into());
    let mut pow = rat_int(1);
    for j in 0..=order / 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        unit.coeffs[j] = rat_int(sign) * &pow / factorial(2 * j as u64 + 1);
        pow *= &half_d * &half_d;
    }
    unit.powi(e).scale(&pow_i64(&rat_int(d as i64), e))
}

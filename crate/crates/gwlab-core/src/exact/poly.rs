//! Dense univariate polynomials over the rationals.
//!
//! These are the coefficient polynomials `c(m)` attached to operator term
//! families indexed by `m`. Keeping them symbolic lets bracket
//! verification reduce to exact polynomial identities instead of truncated
//! numeric checks.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{pow_i64, rat_int, render, Rat};

/// Polynomial in one variable `m`, coefficients low degree first, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    coeffs: Vec<Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The polynomial `m + c`.
    pub fn linear(c: Rat) -> Self {
        let mut p = MPoly {
            coeffs: vec![c, rat_int(1)],
        };
        p.normalize();
        p
    }

    /// The bare variable `m`.
    pub fn var() -> Self {
        Self::linear(Rat::zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Substitute `m -> m + shift`.
    pub fn shift_var(&self, shift: i64) -> Self {
        if shift == 0 || self.coeffs.is_empty() {
            return self.clone();
        }
        // (m + s)^n expanded by repeated multiplication keeps this simple;
        // degrees stay tiny here.
        let mut acc = MPoly::zero();
        let base = MPoly::linear(rat_int(shift));
        let mut pow = MPoly::one();
        for c in &self.coeffs {
            acc += pow.scale(c);
            pow = &pow * &base;
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, m: i64) -> Rat {
        self.eval(&rat_int(m))
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(rat_int(1))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += rhs;
        self
    }
}

impl AddAssign for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            self.coeffs[i] += c;
        }
        self.normalize();
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return MPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = MPoly { coeffs: out };
        p.normalize();
        p
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", render(c))?,
                1 => write!(f, "({})m", render(c))?,
                _ => write!(f, "({})m^{}", render(c), i)?,
            }
        }
        Ok(())
    }
}

/// Interpolation helper used by tests: evaluates at `points` and recovers
/// the unique polynomial of matching degree (Lagrange form).
pub fn interpolate(points: &[(Rat, Rat)]) -> MPoly {
    let mut acc = MPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut num = MPoly::constant(yi.clone());
        let mut den = rat_int(1);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = &num * &MPoly::linear(-xj.clone());
            den *= xi - xj;
        }
        acc += num.scale(&den.recip());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn arithmetic() {
        let p = MPoly::linear(rat_int(1)); // m + 1
        let q = &p * &p; // m^2 + 2m + 1
        assert_eq!(q.eval_int(3), rat_int(16));
        assert_eq!((q.clone() - q).eval_int(5), rat_int(0));
    }

    #[test]
    fn shift_var_matches_eval() {
        let p = &MPoly::linear(rat(1, 2)) * &MPoly::linear(rat(3, 2)); // (m+1/2)(m+3/2)
        let s = p.shift_var(4);
        for m in -3..6 {
            assert_eq!(s.eval_int(m), p.eval_int(m + 4));
        }
    }

    #[test]
    fn interpolation_recovers() {
        let p = &MPoly::linear(rat(-7, 3)) * &MPoly::var();
        let pts: Vec<_> = (0..3).map(|i| (rat_int(i), p.eval_int(i))).collect();
        assert_eq!(interpolate(&pts), p);
    }

    #[test]
    fn pow_helper() {
        assert_eq!(pow_i64(&rat_int(3), 2), rat_int(9));
    }
}

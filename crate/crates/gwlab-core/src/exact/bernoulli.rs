//! Bernoulli numbers and the Hodge integral they compute.

use std::sync::{LazyLock, Mutex};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, rat, rat_int, Rat};

/// Cache of B_0, B_2, B_4, ... (odd ones past B_1 vanish).
static EVEN_CACHE: LazyLock<Mutex<Vec<Rat>>> = LazyLock::new(|| Mutex::new(vec![rat_int(1)]));

/// The `n`th Bernoulli number in the convention `B_0 = 1`, `B_1 = -1/2`,
/// `B_2 = 1/6`, computed from the defining recurrence
/// `sum_{j=0}^{n} C(n+1, j) B_j = 0` with memoization.
pub fn bernoulli(n: usize) -> Rat {
    match n {
        0 => return rat_int(1),
        1 => return rat(-1, 2),
        n if n % 2 == 1 => return Rat::zero(),
        _ => {}
    }
    let half = n / 2;
    let mut cache = EVEN_CACHE.lock().unwrap();
    while cache.len() <= half {
        let m = 2 * cache.len(); // next even index to fill
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j; odd j > 1 contribute 0.
        let mut sum = binomial(m as u64 + 1, 1) * rat(-1, 2);
        for (j_half, b) in cache.iter().enumerate() {
            sum += binomial(m as u64 + 1, 2 * j_half as u64) * b;
        }
        let b_m = -sum / rat_int(m as i64 + 1);
        cache.push(b_m);
    }
    cache[half].clone()
}

/// The integral of `λ_{g-1}^3` over the moduli of genus-`g` curves:
/// `|B_{2g}|/2g · |B_{2g-2}|/(2g-2) · 1/(2g-2)!`, exact. Defined for g ≥ 2.
pub fn hodge_lambda_cubed(g: usize) -> Result<Rat> {
    if g < 2 {
        return Err(Error::malformed(format!(
            "hodge_lambda_cubed requires genus >= 2, got {g}"
        )));
    }
    let b2g = bernoulli(2 * g);
    let b2g2 = bernoulli(2 * g - 2);
    let mut v = b2g / rat_int(2 * g as i64);
    v *= b2g2 / rat_int(2 * g as i64 - 2);
    v /= factorial(2 * g as u64 - 2);
    Ok(num_traits::Signed::abs(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn base_cases() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for k in 1..=20 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{} != 0", 2 * k + 1);
        }
    }

    /// The defining recurrence, checked as an independent identity through n = 50.
    #[test]
    fn recurrence_holds() {
        for n in 1..=50usize {
            let mut sum = Rat::zero();
            for j in 0..=n {
                sum += binomial(n as u64 + 1, j as u64) * bernoulli(j);
            }
            assert!(sum.is_zero(), "recurrence fails at n = {n}: {sum}");
        }
    }

    #[test]
    fn hodge_values() {
        assert_eq!(hodge_lambda_cubed(2).unwrap(), rat(1, 2880));
        assert_eq!(hodge_lambda_cubed(3).unwrap(), rat(1, 725760));
        // g = 4 against the formula assembled by hand: |B_8|/8 * |B_6|/6 * 1/6!
        let expect = rat(1, 30 * 8) * rat(1, 42 * 6) / factorial(6);
        assert_eq!(hodge_lambda_cubed(4).unwrap(), expect);
        assert!(hodge_lambda_cubed(1).is_err());
        assert!(hodge_lambda_cubed(0).is_err());
    }
}

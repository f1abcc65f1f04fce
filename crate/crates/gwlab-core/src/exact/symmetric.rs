//! Elementary symmetric polynomials and the bracket factors
//! `[x]^k_i = e_{k+1-i}(x, x+1, ..., x+k)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::MPoly;
use crate::rational::{rat_int, Rat};

/// The `k`th elementary symmetric function of `values`, with `e_0 = 1` and
/// `e_k = 0` for `k > len`. Generic over the coefficient ring so the same
/// routine serves rational values and coefficient polynomials.
pub fn elem_symmetric<T>(k: usize, values: &[T]) -> T
where
    T: Clone + Zero + One,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    if k > values.len() {
        return T::zero();
    }
    // e[j] after processing v: e[j] += e[j-1] * v
    let mut e: Vec<T> = Vec::with_capacity(k + 1);
    e.push(T::one());
    for _ in 0..k {
        e.push(T::zero());
    }
    for v in values {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * v;
            let cur = std::mem::replace(&mut e[j], T::zero());
            e[j] = cur + add;
        }
    }
    e.pop().unwrap()
}

/// The bracket factor `[x]^k_i = e_{k+1-i}(x, x+1, ..., x+k)` for `k >= -1`
/// and `0 <= i <= k+1`. For `k = -1` the progression is empty and the only
/// legal value is `[x]^{-1}_0 = e_0 = 1`.
pub fn bracket_factor(x: &Rat, k: i64, i: i64) -> Result<Rat> {
    let vals = progression_values(x, k, i)?;
    Ok(elem_symmetric((k + 1 - i) as usize, &vals))
}

/// The same factor with the argument `x` itself a polynomial in the family
/// index `m` (e.g. `b_a + m` or `b_a - m - 1`).
pub fn bracket_factor_poly(x: &MPoly, k: i64, i: i64) -> Result<MPoly> {
    check_range(k, i)?;
    let vals: Vec<MPoly> = (0..=k)
        .map(|j| x.clone() + MPoly::constant(rat_int(j)))
        .collect();
    Ok(elem_symmetric((k + 1 - i) as usize, &vals))
}

fn check_range(k: i64, i: i64) -> Result<()> {
    if k < -1 {
        return Err(Error::malformed(format!("bracket factor needs k >= -1, got {k}")));
    }
    if i < 0 || i > k + 1 {
        return Err(Error::malformed(format!(
            "bracket factor index i = {i} outside [0, {}]",
            k + 1
        )));
    }
    Ok(())
}

fn progression_values(x: &Rat, k: i64, i: i64) -> Result<Vec<Rat>> {
    check_range(k, i)?;
    Ok((0..=k).map(|j| x + rat_int(j)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::interpolate;
    use crate::rational::rat;

    #[test]
    fn elementary_cases() {
        let vals = [rat_int(5), rat_int(7)];
        assert_eq!(elem_symmetric(0, &vals), rat_int(1));
        let vals = [rat_int(2), rat_int(3)];
        assert_eq!(elem_symmetric(2, &vals), rat_int(6));
        assert_eq!(elem_symmetric(1, &vals), rat_int(5));
        assert_eq!(elem_symmetric(3, &vals), rat_int(0));
    }

    #[test]
    fn bracket_cases() {
        // e_2(1/2, 3/2) = 3/4
        assert_eq!(bracket_factor(&rat(1, 2), 1, 0).unwrap(), rat(3, 4));
        // e_0 of a singleton
        assert_eq!(bracket_factor(&rat(99, 7), 0, 1).unwrap(), rat_int(1));
        // e_1 of a singleton
        assert_eq!(bracket_factor(&rat(1, 2), 0, 0).unwrap(), rat(1, 2));
        // empty progression
        assert_eq!(bracket_factor(&rat(1, 2), -1, 0).unwrap(), rat_int(1));
        assert!(bracket_factor(&rat(1, 2), 1, 3).is_err());
        assert!(bracket_factor(&rat(1, 2), 1, -1).is_err());
    }

    /// `[x]^k_i` is a polynomial of degree `k+1-i` in `x`; recover it by
    /// interpolation at `k+2` points and compare against the symbolic form.
    #[test]
    fn bracket_factor_is_polynomial() {
        for k in -1..=4i64 {
            for i in 0..=(k + 1) {
                let sym = bracket_factor_poly(&MPoly::var(), k, i).unwrap();
                let pts: Vec<_> = (0..(k + 2))
                    .map(|m| {
                        let x = rat_int(m);
                        (x.clone(), bracket_factor(&x, k, i).unwrap())
                    })
                    .collect();
                let interp = interpolate(&pts);
                assert_eq!(interp, sym, "k={k} i={i}");
                let expected_deg = (k + 1 - i) as usize;
                if expected_deg == 0 {
                    assert!(sym.degree() <= Some(0));
                } else {
                    assert_eq!(sym.degree(), Some(expected_deg), "k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn poly_argument_matches_values() {
        // x = b - m - 1 with b = 1/2: compare symbolic vs pointwise
        let arg = MPoly::constant(rat(-1, 2)) - MPoly::var();
        let p = bracket_factor_poly(&arg, 1, 0).unwrap();
        for m in 0..5 {
            let x = rat(-1, 2) - rat_int(m);
            assert_eq!(p.eval_int(m), bracket_factor(&x, 1, 0).unwrap());
        }
    }
}

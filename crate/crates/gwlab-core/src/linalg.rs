//! Small exact matrices over the rationals: products, inverses, rank, and
//! kernel vectors via Gaussian elimination. Everything is exact; pivots are
//! chosen deterministically (first nonzero), so results are reproducible.

use num_traits::Zero;

use crate::rational::{rat_int, Rat};

pub type Mat = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat_int(1) } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn zero_mat(rows: usize, cols: usize) -> Mat {
    vec![vec![Rat::zero(); cols]; rows]
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (n, k) = (a.len(), b.len());
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = zero_mat(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if b[l][j].is_zero() {
                    continue;
                }
                let p = &a[i][l] * &b[l][j];
                out[i][j] += p;
            }
        }
    }
    out
}

pub fn mat_pow(a: &Mat, e: usize) -> Mat {
    let mut acc = identity(a.len());
    for _ in 0..e {
        acc = mat_mul(&acc, a);
    }
    acc
}

pub fn transpose(a: &Mat) -> Mat {
    if a.is_empty() {
        return Vec::new();
    }
    let (n, m) = (a.len(), a[0].len());
    let mut out = zero_mat(m, n);
    for i in 0..n {
        for j in 0..m {
            out[j][i] = a[i][j].clone();
        }
    }
    out
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut work: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { rat_int(1) } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let inv = work[col][col].recip();
        for x in work[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in 0..2 * n {
                let sub = &factor * &work[col][c];
                work[r][c] -= sub;
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row-reduces a copy of `a`, returning `(rank, rref)`.
pub fn row_reduce(a: &Mat) -> (usize, Mat) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..cols {
                let sub = &factor * &m[rank][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, m)
}

pub fn rank(a: &Mat) -> usize {
    row_reduce(a).0
}

/// A nonzero vector `v` with `a · v = 0`, when the columns are dependent.
pub fn kernel_vector(a: &Mat) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if cols == 0 {
        return None;
    }
    let (_, rref) = row_reduce(a);
    // locate pivot columns
    let mut pivot_col_of_row = Vec::new();
    for row in rref.iter() {
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            pivot_col_of_row.push(c);
        }
    }
    let free_col = (0..cols).find(|c| !pivot_col_of_row.contains(c))?;
    let mut v = vec![Rat::zero(); cols];
    v[free_col] = rat_int(1);
    for (row, &pc) in rref.iter().zip(pivot_col_of_row.iter()) {
        v[pc] = -row[free_col].clone();
    }
    Some(v)
}

/// `a · v` for a column vector.
pub fn mat_vec(a: &Mat, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| {
            let mut acc = Rat::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn inverse_roundtrip() {
        let a = vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(mat_mul(&inv, &a), identity(2));
    }

    #[test]
    fn singular_detected() {
        let a = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert!(inverse(&a).is_none());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
        ];
        let v = kernel_vector(&a).unwrap();
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(mat_vec(&a, &v).iter().all(Rat::is_zero));
    }

    #[test]
    fn full_rank_has_no_kernel() {
        let a = vec![
            vec![rat_int(1), rat(1, 2)],
            vec![rat_int(0), rat_int(1)],
        ];
        assert!(kernel_vector(&a).is_none());
    }
}

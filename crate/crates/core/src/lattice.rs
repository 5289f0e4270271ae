//! Integer lattice normal forms with overflow-checked `i64` arithmetic.

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

#[inline]
fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// `row[target] -= q * row[source]`, entrywise.
fn row_axpy(m: &mut Matrix, target: usize, source: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for j in 0..m[target].len() {
        let v = sub(m[target][j], mul(q, m[source][j])?)?;
        m[target][j] = v;
    }
    Ok(())
}

fn col_axpy(m: &mut Matrix, target: usize, source: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        row[target] = sub(row[target], mul(q, row[source])?)?;
    }
    Ok(())
}

/// Diagonal of the Smith normal form of a square matrix: non-negative,
/// each dividing the next.
pub fn smith_diagonal(matrix: &Matrix) -> Result<Vec<i64>> {
    let mut m = matrix.clone();
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let rank_bound = n.min(cols);
    let mut diag = Vec::with_capacity(rank_bound);

    for t in 0..rank_bound {
        loop {
            // Pivot: entry of least nonzero absolute value in the trailing block.
            let mut pivot = None;
            for i in t..n {
                for j in t..cols {
                    let a = m[i][j];
                    if a != 0 && pivot.is_none_or(|(_, _, p): (usize, usize, i64)| a.abs() < p) {
                        pivot = Some((i, j, a.abs()));
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                diag.extend(std::iter::repeat_n(0, rank_bound - t));
                return Ok(diag);
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }

            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = m[i][t] / p;
                row_axpy(&mut m, i, t, q)?;
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                col_axpy(&mut m, j, t, q)?;
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any entry not divisible by the pivot into row t.
            let bad_row = (t + 1..n).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad_row {
                Some(i) => {
                    for j in 0..cols {
                        m[t][j] = m[t][j].checked_add(m[i][j]).ok_or(Error::Overflow)?;
                    }
                }
                None => {
                    diag.push(p.abs());
                    break;
                }
            }
        }
    }
    Ok(diag)
}

/// Row-style Hermite normal form of a nonsingular square matrix: an upper
/// triangular basis of the row lattice with positive diagonal and entries
/// above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(matrix: &Matrix) -> Result<Matrix> {
    let mut m = matrix.clone();
    let n = m.len();
    for j in 0..n {
        loop {
            let nonzero: Vec<usize> = (j..n).filter(|&i| m[i][j] != 0).collect();
            let Some(&best) = nonzero.iter().min_by_key(|&&i| m[i][j].abs()) else {
                return Err(Error::InvalidArgument("matrix is singular".into()));
            };
            m.swap(j, best);
            let mut done = true;
            for i in j + 1..n {
                let q = m[i][j].div_euclid(m[j][j]);
                row_axpy(&mut m, i, j, q)?;
                done &= m[i][j] == 0;
            }
            if done {
                break;
            }
        }
        if m[j][j] < 0 {
            for x in m[j].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..j {
            let q = m[i][j].div_euclid(m[j][j]);
            row_axpy(&mut m, i, j, q)?;
        }
    }
    Ok(m)
}

/// Reduces `v` modulo the row lattice of an upper triangular `basis`, giving
/// the unique representative with `0 <= v[i] < basis[i][i]`.
pub fn reduce_mod_hermite(basis: &Matrix, v: &[i64]) -> Result<Vec<i64>> {
    let mut out = v.to_vec();
    for (i, row) in basis.iter().enumerate() {
        let q = out[i].div_euclid(row[i]);
        if q != 0 {
            for (x, &b) in out.iter_mut().zip(row) {
                *x = sub(*x, mul(q, b)?)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_small_matrices() {
        assert_eq!(smith_diagonal(&vec![vec![3]]).unwrap(), vec![3]);
        assert_eq!(smith_diagonal(&vec![vec![2, 0], vec![0, 3]]).unwrap(), vec![1, 6]);
        assert_eq!(smith_diagonal(&vec![vec![2, 4], vec![4, 8]]).unwrap(), vec![2, 0]);
        // Reduced Laplacian of the 4-cycle.
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(smith_diagonal(&m).unwrap(), vec![1, 1, 4]);
        assert!(smith_diagonal(&vec![]).unwrap().is_empty());
    }

    #[test]
    fn hermite_and_reduction() {
        let h = hermite_rows(&vec![vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(h, vec![vec![1, 2], vec![0, 3]]);
        assert_eq!(reduce_mod_hermite(&h, &[3, 0]).unwrap(), vec![0, 0]);
        assert_eq!(reduce_mod_hermite(&h, &[0, 4]).unwrap(), vec![0, 1]);
        assert!(hermite_rows(&vec![vec![1, 1], vec![2, 2]]).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, 3], vec![big - 1, big]];
        assert_eq!(smith_diagonal(&m), Err(Error::Overflow));
    }
}

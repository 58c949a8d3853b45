//! Dense Gaussian elimination over an exact field.

use crate::scalar::Field;

/// Reduced row echelon form in place, pivoting only within the first `ncols`
/// columns (extra columns are carried along); returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let delta = factor.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : rows · x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of a square system, or `None` when singular.
pub fn solve<F: Field>(matrix: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<F>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    fn q(v: i64) -> Rational64 {
        Rational64::from_integer(v)
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![q(1), q(-1), q(-1), q(1)]];
        assert_eq!(rank(&rows, 4), 1);
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 3);
        for v in &ns {
            assert_eq!(crate::scalar::dot(&rows[0], v), q(0));
        }
    }

    #[test]
    fn solve_two_by_two() {
        let m = vec![vec![q(1), q(0)], vec![q(1), q(1)]];
        assert_eq!(solve(&m, &[q(0), q(-1)]), Some(vec![q(0), q(-1)]));
        let singular = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(&singular, &[q(1), q(1)]), None);
    }

    #[test]
    fn big_and_small_carriers_agree() {
        let small = vec![vec![q(2), q(3), q(5)], vec![q(4), q(6), q(10)], vec![q(1), q(0), q(1)]];
        let big: Vec<Vec<BigRational>> = small
            .iter()
            .map(|r| r.iter().map(|v| BigRational::from_i64(*v.numer())).collect())
            .collect();
        assert_eq!(rank(&small, 3), rank(&big, 3));
        assert_eq!(nullspace(&small, 3).len(), nullspace(&big, 3).len());
    }
}

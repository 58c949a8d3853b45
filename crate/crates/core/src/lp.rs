//! Exact simplex for linear programs whose origin is feasible.
//!
//! Every program solved in this crate has the shape
//! `maximize c·z subject to rows·z ≤ rhs` with free variables and `rhs ≥ 0`,
//! so the slack basis at `z = 0` is a feasible start and no phase one is
//! needed. Pivoting follows Bland's rule.

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution<F> {
    pub value: F,
    pub point: Vec<F>,
}

/// Solve `max objective·z` subject to `row·z ≤ rhs` for every `(row, rhs)`.
///
/// Panics if some `rhs` is negative.
pub fn maximize<F: Field>(objective: &[F], constraints: &[(Vec<F>, F)]) -> Result<LpSolution<F>> {
    let k = objective.len();
    let m = constraints.len();
    assert!(constraints.iter().all(|(_, b)| !b.is_negative()), "origin must be feasible");

    // Columns: z+ (k), z- (k), slacks (m), rhs.
    let width = 2 * k + m;
    let mut tab: Vec<Vec<F>> = Vec::with_capacity(m);
    for (i, (row, b)) in constraints.iter().enumerate() {
        debug_assert_eq!(row.len(), k);
        let mut t = vec![F::zero(); width + 1];
        for j in 0..k {
            t[j] = row[j].clone();
            t[k + j] = -row[j].clone();
        }
        t[2 * k + i] = F::one();
        t[width] = b.clone();
        tab.push(t);
    }
    let mut cost = vec![F::zero(); width + 1];
    for j in 0..k {
        cost[j] = -objective[j].clone();
        cost[k + j] = objective[j].clone();
    }
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * k + i).collect();

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, F)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = tab[i][width].clone() / tab[i][enter].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::Unbounded);
        };
        pivot(&mut tab, &mut cost, row, enter);
        basis[row] = enter;
    }

    let mut values = vec![F::zero(); width];
    for (i, &b) in basis.iter().enumerate() {
        values[b] = tab[i][width].clone();
    }
    let point = (0..k).map(|j| values[j].clone() - values[k + j].clone()).collect();
    Ok(LpSolution { value: cost[width].clone(), point })
}

fn pivot<F: Field>(tab: &mut [Vec<F>], cost: &mut [F], row: usize, col: usize) {
    let inv = F::one() / tab[row][col].clone();
    for v in tab[row].iter_mut() {
        *v = v.clone() * inv.clone();
    }
    let pivot_row = tab[row].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (v, p) in r.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v = v.clone() - f.clone() * p.clone();
            }
        }
    }
}

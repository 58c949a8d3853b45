//! Dimension and relative interior of `{x : E x = 0, G x ≥ 0}`.

use crate::error::Result;
use crate::linalg::{nullspace, rank};
use crate::lp::maximize;
use crate::scalar::{dot, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeAnalysis<F> {
    /// Dimension of the cone's linear span.
    pub dim: usize,
    /// For each inequality: true when it holds with equality on the whole cone.
    pub implicit: Vec<bool>,
    /// A point at which every non-implicit inequality is strict.
    pub interior_point: Vec<F>,
}

pub fn analyze_cone<F: Field>(
    ambient: usize,
    equalities: &[Vec<F>],
    inequalities: &[Vec<F>],
) -> Result<ConeAnalysis<F>> {
    let basis = nullspace(equalities, ambient);
    let k = basis.len();
    let lift = |y: &[F]| -> Vec<F> {
        let mut x = vec![F::zero(); ambient];
        for (coef, b) in y.iter().zip(&basis) {
            if !coef.is_zero() {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi = xi.clone() + coef.clone() * bi.clone();
                }
            }
        }
        x
    };
    // inequalities restricted to the equality subspace
    let reduced: Vec<Vec<F>> = inequalities
        .iter()
        .map(|g| basis.iter().map(|b| dot(g, b)).collect())
        .collect();

    let m = inequalities.len();
    let mut strict = vec![false; m];
    let mut implicit = vec![false; m];
    for (j, g) in reduced.iter().enumerate() {
        if g.iter().all(|v| v.is_zero()) {
            implicit[j] = true;
        }
    }

    let mut witness_sum = vec![F::zero(); k];
    let open: Vec<usize> = (0..m).filter(|&j| !implicit[j]).collect();
    if !open.is_empty() {
        // max t subject to g_j·y ≥ t for every open row, t ≤ 1
        let mut rows: Vec<(Vec<F>, F)> = open
            .iter()
            .map(|&j| {
                let mut r: Vec<F> = reduced[j].iter().map(|v| -v.clone()).collect();
                r.push(F::one());
                (r, F::zero())
            })
            .collect();
        let mut bound = vec![F::zero(); k + 1];
        bound[k] = F::one();
        rows.push((bound, F::one()));
        let sol = maximize(&bound_objective(k), &rows)?;
        if sol.value.is_positive() {
            witness_sum = sol.point[..k].to_vec();
            for &j in &open {
                strict[j] = true;
            }
        } else {
            let cone_rows: Vec<(Vec<F>, F)> = reduced
                .iter()
                .map(|g| (g.iter().map(|v| -v.clone()).collect(), F::zero()))
                .collect();
            for &j in &open {
                if strict[j] {
                    continue;
                }
                let mut rows = cone_rows.clone();
                rows.push((reduced[j].clone(), F::one()));
                let sol = maximize(&reduced[j], &rows)?;
                if sol.value.is_positive() {
                    for (i, g) in reduced.iter().enumerate() {
                        if dot(g, &sol.point).is_positive() {
                            strict[i] = true;
                        }
                    }
                    for (s, w) in witness_sum.iter_mut().zip(&sol.point) {
                        *s = s.clone() + w.clone();
                    }
                } else {
                    implicit[j] = true;
                }
            }
        }
    }

    let mut span_rows: Vec<Vec<F>> = equalities.to_vec();
    span_rows.extend(
        inequalities
            .iter()
            .zip(&implicit)
            .filter(|(_, &imp)| imp)
            .map(|(g, _)| g.clone()),
    );
    let dim = ambient - rank(&span_rows, ambient);
    Ok(ConeAnalysis { dim, implicit, interior_point: lift(&witness_sum) })
}

fn bound_objective<F: Field>(k: usize) -> Vec<F> {
    let mut c = vec![F::zero(); k + 1];
    c[k] = F::one();
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn v(xs: &[i64]) -> Vec<Rational64> {
        xs.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn full_orthant() {
        let a = analyze_cone(2, &[], &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(a.dim, 2);
        assert_eq!(a.implicit, vec![false, false]);
        assert!(a.interior_point.iter().all(|x| *x > Rational64::from_integer(0)));
    }

    #[test]
    fn implicit_equalities_are_detected() {
        // x >= 0, -x >= 0, y >= 0 in R^3 -> {x = 0, y >= 0}, dim 2
        let a = analyze_cone(3, &[], &[v(&[1, 0, 0]), v(&[-1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(a.dim, 2);
        assert_eq!(a.implicit, vec![true, true, false]);
        assert!(a.interior_point[1] > Rational64::from_integer(0));
    }

    #[test]
    fn equalities_reduce_dimension() {
        let a = analyze_cone(3, &[v(&[1, 1, 1])], &[v(&[1, 0, 0])]).unwrap();
        assert_eq!(a.dim, 2);
        let zero = analyze_cone(2, &[v(&[1, 0]), v(&[0, 1])], &[v(&[1, 1])]).unwrap();
        assert_eq!(zero.dim, 0);
        assert_eq!(zero.implicit, vec![true]);
    }
}

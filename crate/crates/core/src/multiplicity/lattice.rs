//! Integer lattices: Hermite and Smith normal forms over `BigInt`.
//!
//! Pivots are always the entry of smallest magnitude, and reduction is plain
//! Euclidean division, so every step is a unimodular row or column operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type Matrix = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// `rows[dst] -= k * rows[src]`
fn axpy(rows: &mut Matrix, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    let src_row = rows[src].clone();
    for (d, s) in rows[dst].iter_mut().zip(&src_row) {
        *d -= k * s;
    }
}

/// Row-reduces `rows` to Hermite normal form in place: pivots positive and
/// strictly increasing in column, entries above a pivot reduced into
/// `[0, pivot)`, zero rows last. Applies the same operations to `transform`.
/// Returns the rank.
fn hermite_in_place(rows: &mut Matrix, transform: &mut Matrix) -> usize {
    let m = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            transform.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if rows[i][c].is_zero() {
                    continue;
                }
                let k = rows[i][c].div_floor(&rows[r][c]);
                axpy(rows, i, r, &k);
                axpy(transform, i, r, &k);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for v in rows[r].iter_mut().chain(transform[r].iter_mut()) {
                *v = -v.clone();
            }
        }
        for i in 0..r {
            let k = rows[i][c].div_floor(&rows[r][c]);
            axpy(rows, i, r, &k);
            axpy(transform, i, r, &k);
        }
        r += 1;
    }
    r
}

/// Hermite normal form of the row lattice, zero rows dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Matrix {
    let mut h = rows.to_vec();
    let mut t = identity(rows.len());
    let r = hermite_in_place(&mut h, &mut t);
    h.truncate(r);
    h
}

/// A basis of `{x ∈ Z^n : M x = 0}`. The result is saturated.
pub fn integer_kernel(rows: &[Vec<BigInt>], ncols: usize) -> Matrix {
    let mut transposed: Matrix = (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    if rows.is_empty() {
        return identity(ncols);
    }
    let mut u = identity(ncols);
    let r = hermite_in_place(&mut transposed, &mut u);
    u.split_off(r)
}

/// Non-zero invariant factors of the integer matrix, each positive and
/// dividing the next.
pub fn smith_diagonal(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { return finish(out) };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..m {
                let k = a[i][t].div_floor(&a[t][t]);
                axpy(&mut a, i, t, &k);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let k = a[t][j].div_floor(&a[t][t]);
                if !k.is_zero() {
                    for i in 0..m {
                        let v = a[i][t].clone();
                        a[i][j] -= &k * v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce divisibility by folding an offending row into row t
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (d, s) in a[t].iter_mut().zip(&row) {
                        *d += s;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    finish(out)
}

fn finish(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.retain(|v| !v.is_zero());
    d
}

/// Order of the torsion subgroup of `Z^n / rowspan(rows)`.
pub fn torsion_order(rows: &[Vec<BigInt>]) -> BigInt {
    smith_diagonal(rows).into_iter().fold(BigInt::one(), |acc, d| acc * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_normal_form(&mat(&[&[2, 4], &[1, 3]])), mat(&[&[1, 1], &[0, 2]]));
        assert_eq!(hermite_normal_form(&mat(&[&[2, 4], &[1, 2]])), mat(&[&[1, 2]]));
        assert_eq!(hermite_normal_form(&mat(&[&[0, 0]])), Matrix::new());
    }

    #[test]
    fn kernel_examples() {
        let k = integer_kernel(&mat(&[&[1, 1, 1]]), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!((v[0].clone() + &v[1] + &v[2]).is_zero());
        }
        assert_eq!(hermite_normal_form(&k), mat(&[&[1, 0, -1], &[0, 1, -1]]));
        assert_eq!(integer_kernel(&mat(&[&[2, 4]]), 2).len(), 1);
        assert_eq!(hermite_normal_form(&integer_kernel(&mat(&[&[2, 4]]), 2)), mat(&[&[2, -1]]));
        assert_eq!(integer_kernel(&[], 2), mat(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn smith_examples() {
        let d = smith_diagonal(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(torsion_order(&mat(&[&[1, 1], &[1, -1]])), BigInt::from(2));
        assert_eq!(torsion_order(&mat(&[&[2, 0, 0]])), BigInt::from(2));
        assert_eq!(smith_diagonal(&mat(&[&[0, 0], &[0, 0]])), Vec::<BigInt>::new());
    }
}

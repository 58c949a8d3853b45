//! Test-only oracles, independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rand::Rng;
use secfan::geometry::{convex_hull, lattice_points};
use secfan::subdivision::HeightFunction;
use secfan::{Field, LatticePoint, MarkedPolygon, Rational};

pub fn p(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_fraction(n, d)
}

pub fn polygon(pts: &[(i64, i64)]) -> MarkedPolygon {
    let pts: Vec<LatticePoint> = pts.iter().map(|&(x, y)| p(x, y)).collect();
    MarkedPolygon::from_points(&pts).unwrap()
}

pub fn unit_square() -> MarkedPolygon {
    polygon(&[(0, 0), (1, 0), (1, 1), (0, 1)])
}

pub fn rectangle_2x1() -> MarkedPolygon {
    polygon(&[(0, 0), (2, 0), (2, 1), (0, 1)])
}

pub fn triangle_2() -> MarkedPolygon {
    polygon(&[(0, 0), (2, 0), (0, 2)])
}

pub fn heights(base: &MarkedPolygon, vals: &[(i64, i64)]) -> HeightFunction<Rational> {
    HeightFunction::new(base.clone(), vals.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
}

pub fn int_heights(base: &MarkedPolygon, vals: &[i64]) -> HeightFunction<Rational> {
    HeightFunction::new(base.clone(), vals.iter().map(|&v| q(v, 1)).collect()).unwrap()
}

/// Random non-degenerate polygon with at most `max_points` lattice points.
pub fn random_polygon<R: Rng>(rng: &mut R, max_points: usize) -> MarkedPolygon {
    loop {
        let k = rng.gen_range(3..=5);
        let pts: Vec<LatticePoint> = (0..k).map(|_| p(rng.gen_range(0..=3), rng.gen_range(0..=3))).collect();
        let Ok(hull) = convex_hull(&pts) else { continue };
        if lattice_points(&hull).len() <= max_points {
            return MarkedPolygon::from_points(&hull).unwrap();
        }
    }
}

pub fn random_heights<R: Rng>(rng: &mut R, base: &MarkedPolygon) -> HeightFunction<Rational> {
    let vals = (0..base.num_marks())
        .map(|_| q(rng.gen_range(-12..=12), rng.gen_range(1..=4)))
        .collect();
    HeightFunction::new(base.clone(), vals).unwrap()
}

/// Upper-hull cells by brute force: every plane through three lifted marks
/// that dominates all lifted marks supports an upper facet, whose contact
/// set is the cell's mark set. Returns sorted `(polygon, marks)` pairs with
/// the polygon as a sorted vertex set.
pub fn oracle_cells(psi: &HeightFunction<Rational>) -> Vec<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let marks = psi.base().marks();
    let h = psi.values();
    let n = marks.len();
    let mut faces: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (marks[i], marks[j], marks[k]);
                // plane z = alpha x + beta y + gamma via Cramer's rule
                let det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
                if det == 0 {
                    continue;
                }
                let detq = q(det, 1);
                let (dz1, dz2) = (h[j].clone() - h[i].clone(), h[k].clone() - h[i].clone());
                let alpha = (dz1.clone() * q(c.y - a.y, 1) - dz2.clone() * q(b.y - a.y, 1)) / detq.clone();
                let beta = (dz2 * q(b.x - a.x, 1) - dz1 * q(c.x - a.x, 1)) / detq;
                let plane = |t: LatticePoint| {
                    h[i].clone() + alpha.clone() * q(t.x - a.x, 1) + beta.clone() * q(t.y - a.y, 1)
                };
                let excess: Vec<Rational> = (0..n).map(|t| plane(marks[t]) - h[t].clone()).collect();
                if excess.iter().any(|e| e.is_negative()) {
                    continue;
                }
                let contact: Vec<LatticePoint> = (0..n).filter(|&t| excess[t].is_zero()).map(|t| marks[t]).collect();
                faces.insert(contact);
            }
        }
    }
    let mut out: Vec<(Vec<LatticePoint>, Vec<LatticePoint>)> = faces
        .into_iter()
        .map(|contact| {
            let mut verts = convex_hull(&contact).unwrap();
            verts.sort();
            (verts, contact)
        })
        .collect();
    out.sort();
    out
}

pub fn library_cells(sub: &secfan::Subdivision) -> Vec<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let mut out: Vec<_> = sub
        .cells()
        .iter()
        .map(|c| {
            let mut v = c.polygon().to_vec();
            v.sort();
            (v, c.marks().to_vec())
        })
        .collect();
    out.sort();
    out
}

/// Dimension modulo constants of the set of height functions refined by
/// `sub`, from a parametrisation independent of the H-representation: each
/// cell carries its own affine function `(c, gx, gy)`, every mark of a cell
/// must lie on it, and marks not used by any cell are free.
pub fn oracle_cone_dim(sub: &secfan::Subdivision) -> usize {
    let base = sub.base();
    let marks = base.marks();
    let used: Vec<bool> = marks.iter().map(|m| sub.cells().iter().any(|c| c.is_marked(*m))).collect();
    let n = marks.len();
    let cols = n + 3 * sub.cells().len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (ci, cell) in sub.cells().iter().enumerate() {
        for m in cell.marks() {
            let mut row = vec![Rational::zero(); cols];
            row[base.mark_index(*m).unwrap()] = q(1, 1);
            row[n + 3 * ci] = q(-1, 1);
            row[n + 3 * ci + 1] = q(-m.x, 1);
            row[n + 3 * ci + 2] = q(-m.y, 1);
            rows.push(row);
        }
    }
    // the cell parameters are determined by psi, and unused marks are free
    // columns, so the nullity is the dimension of the span
    debug_assert!(used.iter().any(|u| *u));
    cols - secfan::linalg::rank(&rows, cols) - 1
}

/// `|det|` of an integer basis of `Z^n`-sublattice by counting integer points
/// in the half-open fundamental parallelepiped `{Σ t_i b_i : t ∈ [0,1)^n}`,
/// i.e. enumerating the cosets of the lattice.
pub fn parallelepiped_count(basis: &[Vec<i64>]) -> u64 {
    let n = basis.len();
    let det = int_det(basis);
    assert!(det != 0);
    // t = x · B⁻¹ = x · adj(B) / det
    let adj: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| (0..n).filter(|&c| c != i).map(|c| basis[r][c]).collect())
                        .collect();
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * int_det(&minor)
                })
                .collect()
        })
        .collect();
    let lo: Vec<i64> = (0..n).map(|c| basis.iter().map(|b| b[c].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..n).map(|c| basis.iter().map(|b| b[c].max(0)).sum()).collect();
    let mut count = 0;
    let mut x = lo.clone();
    loop {
        let inside = (0..n).all(|j| {
            // column j of adj gives t_j · det
            let s: i64 = (0..n).map(|i| x[i] * adj[i][j]).sum();
            if det > 0 {
                0 <= s && s < det
            } else {
                det < s && s <= 0
            }
        });
        if inside {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            x[k] += 1;
            if x[k] <= hi[k] {
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

pub fn int_det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| (0..n).filter(|&c| c != j).map(|c| r[c]).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * int_det(&minor)
            })
            .sum(),
    }
}

/// gcd of the maximal minors of a `k × n` integer matrix; a basis generates
/// a saturated lattice exactly when this is 1.
pub fn maximal_minor_gcd(rows: &[Vec<i64>]) -> i64 {
    let (k, n) = (rows.len(), rows.first().map_or(0, Vec::len));
    let mut g = 0i64;
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let minor: Vec<Vec<i64>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        g = num_integer::gcd(g, int_det(&minor));
        // next k-combination of 0..n
        let mut i = k;
        while i > 0 && cols[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return g.abs();
        }
        cols[i - 1] += 1;
        for j in i..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Two random complementary rational subspaces of `Q^n`, basis entries of
/// magnitude at most 5.
pub fn random_complementary_pair<R: Rng>(rng: &mut R, n: usize) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    loop {
        let k = rng.gen_range(1..n);
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                let den = rng.gen_range(1..=3);
                (0..n).map(|_| q(rng.gen_range(-5..=5), den)).collect()
            })
            .collect();
        if secfan::linalg::rank(&rows, n) == n {
            let (a, b) = rows.split_at(k);
            return (a.to_vec(), b.to_vec());
        }
    }
}

pub fn to_i64_rows(rows: &[Vec<secfan::Integer>]) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    rows.iter().map(|r| r.iter().map(|v| v.to_i64().unwrap()).collect()).collect()
}

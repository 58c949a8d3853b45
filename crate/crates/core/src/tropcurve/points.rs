use rand::Rng;

use crate::error::{Error, Result};
use crate::fan::secondary_cone;
use crate::geometry::{LatticePoint, Segment};
use crate::linalg::rank;
use crate::polyhedral::analyze_cone;
use crate::scalar::Field;
use crate::subdivision::{HeightFunction, Subdivision};

use super::curve::on_curve;

/// A point of `Q²`, the valuation image of a point condition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointCondition<F> {
    pub q: (F, F),
}

impl<F: Field> PointCondition<F> {
    pub fn new(x: F, y: F) -> Self {
        Self { q: (x, y) }
    }
}

/// Whether `ψ` lies on the tropical hyperplane `H_q`, i.e. `τ_ψ` passes
/// through `q`.
pub fn point_hyperplane_contains<F: Field>(cond: &PointCondition<F>, psi: &HeightFunction<F>) -> bool {
    on_curve(psi, &cond.q)
}

/// `coeffs · ψ = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCondition<F> {
    pub coeffs: Vec<F>,
    pub rhs: F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConditionSystem<F> {
    pub equations: Vec<LinearCondition<F>>,
    pub rank: usize,
    pub independent: bool,
}

fn lattice_dot<F: Field>(v: (i64, i64), q: &(F, F)) -> F {
    F::from_i64(v.0) * q.0.clone() + F::from_i64(v.1) * q.1.clone()
}

/// `ψ(a) − ψ(a′) = (a′ − a)·q` for each edge `[a, a′]` and its point `q`.
pub fn point_condition_system<F: Field>(
    sub: &Subdivision,
    assignment: &[(Segment, (F, F))],
) -> Result<PointConditionSystem<F>> {
    let base = sub.base();
    let n = base.num_marks();
    let mut equations = Vec::with_capacity(assignment.len());
    for (seg, q) in assignment {
        if !sub.has_edge(seg) {
            return Err(Error::EdgeNotInSubdivision(seg.to_string()));
        }
        let (a, b) = (seg.start(), seg.end());
        let mut coeffs = vec![F::zero(); n];
        coeffs[base.mark_index(a).expect("edge endpoints are marks")] = F::one();
        coeffs[base.mark_index(b).expect("edge endpoints are marks")] = -F::one();
        equations.push(LinearCondition { coeffs, rhs: lattice_dot(b.sub(a), q) });
    }
    let rows: Vec<Vec<F>> = equations.iter().map(|e| e.coeffs.clone()).collect();
    let r = rank(&rows, n);
    Ok(PointConditionSystem { independent: r == equations.len(), rank: r, equations })
}

/// Whether `points` are in `S`-general position: for every way of putting
/// each point on an edge of `τ_ψ`, the height functions in `C(S)` doing so
/// either miss the relative interior of `C(S)` or form a polyhedron of
/// codimension `|points|` in it. Repeated points are never general.
pub fn s_general_position<F: Field>(sub: &Subdivision, points: &[(F, F)]) -> Result<bool> {
    if !sub.is_effective() {
        return Err(Error::PreconditionViolated("subdivision is not effective".into()));
    }
    for i in 0..points.len() {
        if points[i + 1..].contains(&points[i]) {
            return Ok(false);
        }
    }
    if points.is_empty() {
        return Ok(true);
    }
    let cone = secondary_cone::<F>(sub)?;
    let cone_dim = cone.dim()? + 1;
    let cone_implicit = cone.implicit_mask()?;
    let marks = sub.base().marks();
    let n = marks.len();
    let edges: Vec<Segment> = sub.edges().into_iter().map(|e| e.segment).collect();
    let idx = |p: LatticePoint| sub.base().mark_index(p).expect("edge endpoints are marks");

    // variables (ψ, s); the affine conditions are homogenized by s
    let lift = |f: &Vec<F>| {
        let mut r = f.clone();
        r.push(F::zero());
        r
    };
    let mut choice = vec![0usize; points.len()];
    loop {
        let mut eqs: Vec<Vec<F>> = cone.equalities().iter().map(lift).collect();
        let mut ineqs: Vec<Vec<F>> = cone.inequalities().iter().map(lift).collect();
        for (q, &c) in points.iter().zip(&choice) {
            let (a, b) = (edges[c].start(), edges[c].end());
            let mut row = vec![F::zero(); n + 1];
            row[idx(a)] = F::one();
            row[idx(b)] = -F::one();
            row[n] = -lattice_dot(b.sub(a), q);
            eqs.push(row);
            // a attains max_m (m·q + ψ(m)) at q
            for (t, &m) in marks.iter().enumerate() {
                if m == a {
                    continue;
                }
                let mut row = vec![F::zero(); n + 1];
                row[idx(a)] = F::one();
                row[t] = row[t].clone() - F::one();
                row[n] = lattice_dot(a.sub(m), q);
                ineqs.push(row);
            }
        }
        let mut s_row = vec![F::zero(); n + 1];
        s_row[n] = F::one();
        ineqs.push(s_row);

        let h = analyze_cone(n + 1, &eqs, &ineqs)?;
        let m = cone.inequalities().len();
        let meets_interior = !h.implicit[ineqs.len() - 1] && (0..m).all(|j| cone_implicit[j] || !h.implicit[j]);
        if meets_interior && cone_dim - (h.dim - 1) != points.len() {
            return Ok(false);
        }

        // next assignment
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(true);
            }
            choice[k] += 1;
            if choice[k] < edges.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Random rational points, with denominators up to `max_den` and numerators
/// in `±max_num`, retried until they are `S`-general for every `S` given.
pub fn sample_general_points<F: Field, R: Rng>(
    rng: &mut R,
    subdivisions: &[Subdivision],
    count: usize,
    max_num: i64,
    max_den: i64,
    attempts: usize,
) -> Result<Vec<(F, F)>> {
    for _ in 0..attempts {
        let mut draw = || F::from_fraction(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den));
        let points: Vec<(F, F)> = (0..count).map(|_| (draw(), draw())).collect();
        let mut ok = true;
        for s in subdivisions {
            if !s_general_position(s, &points)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(points);
        }
    }
    Err(Error::BudgetExceeded(format!("no general configuration in {attempts} attempts")))
}

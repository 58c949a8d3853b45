use std::collections::BTreeSet;

use crate::geometry::{det2, LatticePoint, Segment};
use crate::scalar::Field;
use crate::subdivision::{cell_plane, concave_hull_values, regular_subdivision, HeightFunction, Subdivision};

/// `(max_a a·x + ψ(a), argmax)`, with the argmax sorted.
pub fn eval_tropical<F: Field>(psi: &HeightFunction<F>, x: &(F, F)) -> (F, Vec<LatticePoint>) {
    let mut best: Option<F> = None;
    let mut argmax = Vec::new();
    for (a, h) in psi.base().marks().iter().zip(psi.values()) {
        let v = F::from_i64(a.x) * x.0.clone() + F::from_i64(a.y) * x.1.clone() + h.clone();
        match &best {
            Some(b) if v < *b => {}
            Some(b) if v == *b => argmax.push(*a),
            _ => {
                best = Some(v);
                argmax = vec![*a];
            }
        }
    }
    (best.expect("polygons have marks"), argmax)
}

/// Whether `x` lies on the corner locus `τ_ψ`.
pub fn on_curve<F: Field>(psi: &HeightFunction<F>, x: &(F, F)) -> bool {
    eval_tropical(psi, x).1.len() >= 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveEdge {
    pub vertices: [usize; 2],
    pub weight: u64,
    pub dual: Segment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRay {
    pub vertex: usize,
    /// Primitive integer direction.
    pub direction: (i64, i64),
    pub weight: u64,
    pub dual: Segment,
}

/// `τ_ψ` with its duality data: vertex `i` is dual to cell `i` of
/// `subdivision`, which is the effective subdivision `Δ_cc(ψ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalCurve<F> {
    pub vertices: Vec<(F, F)>,
    pub bounded_edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
    pub subdivision: Subdivision,
}

/// Outward normal of a counterclockwise cell side, scaled to be primitive.
fn outward_normal(side: &Segment) -> (i64, i64) {
    let (dx, dy) = side.primitive_vector();
    (dy, -dx)
}

fn sub2<F: Field>(a: &(F, F), b: &(F, F)) -> (F, F) {
    (a.0.clone() - b.0.clone(), a.1.clone() - b.1.clone())
}

pub fn dual_curve<F: Field>(psi: &HeightFunction<F>) -> TropicalCurve<F> {
    let cc = concave_hull_values(psi);
    let sub = regular_subdivision(&cc);
    let vertices: Vec<(F, F)> = sub
        .cells()
        .iter()
        .map(|cell| {
            // a·v + ℓ(a) is constant on the cell exactly when v = −∇ℓ
            let (gx, gy) = cell_plane(cell, &cc).gradient();
            let v = (-gx, -gy);
            debug_assert_eq!(eval_tropical(&cc, &v).1, cell.marks());
            v
        })
        .collect();
    let mut bounded_edges = Vec::new();
    let mut rays = Vec::new();
    for edge in sub.edges() {
        let weight = edge.segment.lattice_length();
        match edge.cells[..] {
            [i, j] => bounded_edges.push(CurveEdge { vertices: [i, j], weight, dual: edge.segment }),
            [i] => {
                let side = oriented_side(&sub, i, &edge.segment);
                rays.push(CurveRay { vertex: i, direction: outward_normal(&side), weight, dual: edge.segment });
            }
            _ => unreachable!("an edge borders one or two cells"),
        }
    }
    TropicalCurve { vertices, bounded_edges, rays, subdivision: sub }
}

/// The side of cell `i` along `seg`, in the cell's counterclockwise order.
fn oriented_side(sub: &Subdivision, i: usize, seg: &Segment) -> Segment {
    sub.cells()[i]
        .sides()
        .into_iter()
        .find(|s| Segment::undirected(s.start(), s.end()).ok().as_ref() == Some(seg))
        .expect("edge is a side of its cell")
}

impl<F: Field> TropicalCurve<F> {
    /// Primitive outgoing direction of `edge` at vertex `from`, derived from
    /// the vertex coordinates. `None` if the edge is not a positive multiple
    /// of the outward normal of its dual side.
    fn outgoing(&self, edge: &CurveEdge, from: usize) -> Option<(i64, i64)> {
        let to = if edge.vertices[0] == from { edge.vertices[1] } else { edge.vertices[0] };
        let side = oriented_side(&self.subdivision, from, &edge.dual);
        let n = outward_normal(&side);
        let d = sub2(&self.vertices[to], &self.vertices[from]);
        let cross = d.0.clone() * F::from_i64(n.1) - d.1.clone() * F::from_i64(n.0);
        let along = d.0 * F::from_i64(n.0) + d.1 * F::from_i64(n.1);
        (cross.is_zero() && along.is_positive()).then_some(n)
    }

    /// Bounded edges are orthogonal to their dual edges and point from each
    /// vertex into the neighbouring region; rays are orthogonal too.
    pub fn is_orthogonal(&self) -> bool {
        let edges_ok = self.bounded_edges.iter().all(|e| {
            let d = sub2(&self.vertices[e.vertices[1]], &self.vertices[e.vertices[0]]);
            let (sx, sy) = e.dual.vector();
            (d.0 * F::from_i64(sx) + d.1 * F::from_i64(sy)).is_zero()
                && self.outgoing(e, e.vertices[0]).is_some()
                && self.outgoing(e, e.vertices[1]).is_some()
        });
        let rays_ok = self.rays.iter().all(|r| {
            let (sx, sy) = r.dual.vector();
            i128::from(r.direction.0) * i128::from(sx) + i128::from(r.direction.1) * i128::from(sy) == 0
        });
        edges_ok && rays_ok
    }

    /// Per vertex, `Σ weight · primitive outgoing direction`; `None` when some
    /// edge direction is inconsistent with the geometry.
    pub fn balancing_sums(&self) -> Option<Vec<(i128, i128)>> {
        let mut sums = vec![(0i128, 0i128); self.vertices.len()];
        for e in &self.bounded_edges {
            for &v in &e.vertices {
                let d = self.outgoing(e, v)?;
                sums[v].0 += i128::from(e.weight) * i128::from(d.0);
                sums[v].1 += i128::from(e.weight) * i128::from(d.1);
            }
        }
        for r in &self.rays {
            sums[r.vertex].0 += i128::from(r.weight) * i128::from(r.direction.0);
            sums[r.vertex].1 += i128::from(r.weight) * i128::from(r.direction.1);
        }
        Some(sums)
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_sums().is_some_and(|s| s.iter().all(|&v| v == (0, 0)))
    }

    pub fn weights_match(&self) -> bool {
        self.bounded_edges.iter().all(|e| e.weight == e.dual.lattice_length())
            && self.rays.iter().all(|r| r.weight == r.dual.lattice_length())
    }

    /// Bounding box `((min_x, min_y), (max_x, max_y))` of the vertices.
    pub fn bounding_box(&self) -> ((F, F), (F, F)) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            lo = (lo.0.min(v.0.clone()), lo.1.min(v.1.clone()));
            hi = (hi.0.max(v.0.clone()), hi.1.max(v.1.clone()));
        }
        (lo, hi)
    }
}

/// Marks that win the maximum on some region of `R² \ τ_ψ`, found by sampling
/// a grid two units beyond the vertex bounding box, plus one probe inside
/// each angular sector at every vertex.
pub fn region_labels<F: Field>(psi: &HeightFunction<F>, curve: &TropicalCurve<F>, grid_steps: usize) -> BTreeSet<LatticePoint> {
    let mut labels = BTreeSet::new();
    let mut probe = |x: &(F, F)| {
        let (_, arg) = eval_tropical(psi, x);
        if arg.len() == 1 {
            labels.insert(arg[0]);
        }
    };
    let ((x0, y0), (x1, y1)) = curve.bounding_box();
    let two = F::from_i64(2);
    let (x0, y0, x1, y1) = (x0 - two.clone(), y0 - two.clone(), x1 + two.clone(), y1 + two);
    let steps = grid_steps.max(1) as i64;
    for i in 0..=steps {
        for j in 0..=steps {
            let x = x0.clone() + (x1.clone() - x0.clone()) * F::from_fraction(i, steps);
            let y = y0.clone() + (y1.clone() - y0.clone()) * F::from_fraction(j, steps);
            probe(&(x, y));
        }
    }
    for (v, cell) in curve.vertices.iter().zip(curve.subdivision.cells()) {
        // consecutive outward normals of a convex cell span a sector of
        // angle below π, so their sum points into it
        let normals: Vec<(i64, i64)> = cell.sides().iter().map(outward_normal).collect();
        for k in 0..normals.len() {
            let (a, b) = (normals[k], normals[(k + 1) % normals.len()]);
            debug_assert!(det2(a, b) > 0);
            let dir = (F::from_i64(a.0 + b.0), F::from_i64(a.1 + b.1));
            let mut r = F::one();
            for _ in 0..64 {
                let x = (v.0.clone() + r.clone() * dir.0.clone(), v.1.clone() + r.clone() * dir.1.clone());
                let (_, arg) = eval_tropical(psi, &x);
                if arg.len() == 1 && cell.is_marked(arg[0]) {
                    probe(&x);
                    break;
                }
                r = r / F::from_i64(2);
            }
        }
    }
    labels
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub cells: usize,
    pub vertices: usize,
    pub interior_edges: usize,
    pub bounded_edges: usize,
    pub boundary_edges: usize,
    pub rays: usize,
    pub subdivision_vertices: usize,
    pub regions: usize,
    pub balanced: bool,
    pub orthogonal: bool,
    pub weights_match: bool,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.cells == self.vertices
            && self.interior_edges == self.bounded_edges
            && self.boundary_edges == self.rays
            && self.subdivision_vertices == self.regions
            && self.balanced
            && self.orthogonal
            && self.weights_match
    }
}

/// Recomputes the bijections between `Δ_cc(ψ)` and `τ_ψ` from scratch.
pub fn verify_duality<F: Field>(psi: &HeightFunction<F>, grid_steps: usize) -> DualityReport {
    let curve = dual_curve(psi);
    let sub = &curve.subdivision;
    let edges = sub.edges();
    let interior = edges.iter().filter(|e| e.is_interior()).count();
    let labels = region_labels(psi, &curve, grid_steps);
    DualityReport {
        cells: sub.cells().len(),
        vertices: curve.vertices.len(),
        interior_edges: interior,
        bounded_edges: curve.bounded_edges.len(),
        boundary_edges: edges.len() - interior,
        rays: curve.rays.len(),
        subdivision_vertices: sub.vertices().len(),
        regions: labels.len(),
        balanced: curve.is_balanced(),
        orthogonal: curve.is_orthogonal(),
        weights_match: curve.weights_match(),
    }
}

//! Regular subdivisions from height functions.
//!
//! The marks are lifted to `(a, ψ(a))` and the upper hull is traced facet by
//! facet: from a directed edge with the unexplored side on its left, the next
//! facet is the plane through the edge that is highest over that side. All
//! lifted points on a facet's plane are marked in the resulting cell, so
//! coplanar triangles are merged automatically.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::geometry::{canonical_cycle, convex_hull, orient, LatticePoint, MarkedPolygon, Segment};
use crate::scalar::Field;

use super::cell::{MarkedCell, Subdivision};
use super::heights::HeightFunction;

/// Affine function on the plane fixed by its values at three non-collinear
/// lattice points.
#[derive(Debug, Clone)]
pub struct AffinePlane<F> {
    anchors: [LatticePoint; 3],
    heights: [F; 3],
    det: i128,
}

impl<F: Field> AffinePlane<F> {
    /// `None` when the anchors are collinear.
    pub fn through(anchors: [LatticePoint; 3], heights: [F; 3]) -> Option<Self> {
        let det = orient(anchors[0], anchors[1], anchors[2]);
        (det != 0).then_some(Self { anchors, heights, det })
    }

    /// Barycentric coordinates of `p` with respect to the anchors.
    pub fn barycentric(&self, p: LatticePoint) -> [F; 3] {
        let [u, v, w] = self.anchors;
        let d = F::from_i128(self.det);
        [
            F::from_i128(orient(p, v, w)) / d.clone(),
            F::from_i128(orient(u, p, w)) / d.clone(),
            F::from_i128(orient(u, v, p)) / d,
        ]
    }

    pub fn eval(&self, p: LatticePoint) -> F {
        let [u, v, w] = self.anchors;
        let num = F::from_i128(orient(p, v, w)) * self.heights[0].clone()
            + F::from_i128(orient(u, p, w)) * self.heights[1].clone()
            + F::from_i128(orient(u, v, p)) * self.heights[2].clone();
        num / F::from_i128(self.det)
    }

    /// The rational gradient `(∂x, ∂y)`.
    pub fn gradient(&self) -> (F, F) {
        let o = self.anchors[0];
        let ex = LatticePoint::new(o.x + 1, o.y);
        let ey = LatticePoint::new(o.x, o.y + 1);
        let base = self.eval(o);
        (self.eval(ex) - base.clone(), self.eval(ey) - base)
    }
}

/// Three non-collinear points among `points`, preferring the first ones.
pub(crate) fn spanning_triple(points: &[LatticePoint]) -> Option<[LatticePoint; 3]> {
    let a = *points.first()?;
    let b = *points.iter().find(|p| **p != a)?;
    let c = *points.iter().find(|p| orient(a, b, **p) != 0)?;
    Some([a, b, c])
}

/// Affine function of a cell that agrees with `psi` on three of its marks.
pub(crate) fn cell_plane<F: Field>(cell: &MarkedCell, psi: &HeightFunction<F>) -> AffinePlane<F> {
    let triple = spanning_triple(cell.polygon()).expect("cells are non-degenerate");
    let h = triple.map(|p| psi.value(p).expect("cell vertices are marks").clone());
    AffinePlane::through(triple, h).expect("spanning triple is non-collinear")
}

/// The regular subdivision induced by `psi`.
pub fn regular_subdivision<F: Field>(psi: &HeightFunction<F>) -> Subdivision {
    let base = psi.base();
    let marks = base.marks();
    let heights = psi.values();

    let mut queue: VecDeque<(LatticePoint, LatticePoint)> = VecDeque::new();
    queue.push_back(first_boundary_edge(base, heights));
    let mut seen_edges: BTreeSet<(LatticePoint, LatticePoint)> = BTreeSet::new();
    let mut cells: BTreeMap<Vec<LatticePoint>, MarkedCell> = BTreeMap::new();

    while let Some((u, v)) = queue.pop_front() {
        if !seen_edges.insert((u, v)) {
            continue;
        }
        let hu = psi.value(u).expect("edge endpoints are marks").clone();
        let hv = psi.value(v).expect("edge endpoints are marks").clone();
        let mut best: Option<AffinePlane<F>> = None;
        for (i, &w) in marks.iter().enumerate() {
            if orient(u, v, w) <= 0 {
                continue;
            }
            let replace = match &best {
                None => true,
                Some(plane) => heights[i] > plane.eval(w),
            };
            if replace {
                best = AffinePlane::through([u, v, w], [hu.clone(), hv.clone(), heights[i].clone()]);
            }
        }
        let plane = best.expect("an edge with interior on its left has a point there");
        let face: Vec<LatticePoint> = marks
            .iter()
            .zip(heights)
            .filter(|(p, h)| plane.eval(**p) == **h)
            .map(|(p, _)| *p)
            .collect();
        let polygon = canonical_cycle(convex_hull(&face).expect("upper facets are two-dimensional"));
        for side in crate::geometry::polygon_edges(&polygon) {
            seen_edges.insert((side.start(), side.end()));
            if !base.is_boundary_segment(&side) {
                queue.push_back((side.end(), side.start()));
            }
        }
        let cell = MarkedCell::new(&polygon, &face).expect("facet cell is valid");
        cells.entry(polygon).or_insert(cell);
    }
    Subdivision::from_canonical_cells(base.clone(), cells.into_values().collect())
}

/// Starting edge on the boundary of the polygon, oriented counterclockwise
/// so the polygon lies on its left. Its far endpoint is the last mark on the
/// upper chain of the first polygon side.
fn first_boundary_edge<F: Field>(base: &MarkedPolygon, heights: &[F]) -> (LatticePoint, LatticePoint) {
    let v0 = base.vertices()[0];
    let v1 = base.vertices()[1];
    let side = Segment::new(v0, v1).expect("polygon vertices are distinct");
    let h0 = heights[base.mark_index(v0).expect("vertices are marked")].clone();
    let step = side.primitive_vector();
    let mut best: Option<(F, i64, LatticePoint)> = None;
    for (i, &p) in base.marks().iter().enumerate() {
        if p == v0 || !side.contains(p) {
            continue;
        }
        let (dx, dy) = p.sub(v0);
        let t = if step.0 != 0 { dx / step.0 } else { dy / step.1 };
        let slope = (heights[i].clone() - h0.clone()) / F::from_i64(t);
        let better = match &best {
            None => true,
            Some((s, bt, _)) => slope > *s || (slope == *s && t > *bt),
        };
        if better {
            best = Some((slope, t, p));
        }
    }
    (v0, best.expect("v1 is a mark on the side").2)
}

/// `cc(ψ)` restricted to the marks: the value of the concave hull at each mark.
pub fn concave_hull_values<F: Field>(psi: &HeightFunction<F>) -> HeightFunction<F> {
    let sub = regular_subdivision(psi);
    let planes: Vec<(&MarkedCell, AffinePlane<F>)> = sub.cells().iter().map(|c| (c, cell_plane(c, psi))).collect();
    HeightFunction::from_fn(psi.base().clone(), |p| {
        let (_, plane) = planes
            .iter()
            .find(|(c, _)| c.contains(p))
            .expect("cells cover the polygon");
        plane.eval(p)
    })
}

pub fn is_effective<F: Field>(psi: &HeightFunction<F>) -> bool {
    concave_hull_values(psi).values() == psi.values()
}

pub fn is_effective_subdivision(sub: &Subdivision) -> bool {
    sub.is_effective()
}


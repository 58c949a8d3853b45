//! Exact planar lattice geometry.
//!
//! Coordinates are `i64`; every determinant is evaluated in `i128`, so the
//! predicates here are exact for any coordinates below 2^62 in magnitude.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn sub(self, other: Self) -> (i64, i64) {
        (self.x - other.x, self.y - other.y)
    }

    pub fn offset(self, d: (i64, i64)) -> Self {
        Self::new(self.x + d.0, self.y + d.1)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// `det(b - a, c - a)`: positive when `a, b, c` turn counterclockwise.
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    let (ux, uy) = (i128::from(b.x - a.x), i128::from(b.y - a.y));
    let (vx, vy) = (i128::from(c.x - a.x), i128::from(c.y - a.y));
    ux * vy - uy * vx
}

pub fn det2(u: (i64, i64), v: (i64, i64)) -> i128 {
    i128::from(u.0) * i128::from(v.1) - i128::from(u.1) * i128::from(v.0)
}

pub fn twice_area(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> u128 {
    orient(a, b, c).unsigned_abs()
}

/// Twice the area of a simple polygon given by its vertex cycle.
pub fn twice_polygon_area(vertices: &[LatticePoint]) -> u128 {
    if vertices.len() < 3 {
        return 0;
    }
    let base = vertices[0];
    let signed: i128 = vertices
        .windows(2)
        .skip(1)
        .map(|w| orient(base, w[0], w[1]))
        .sum();
    signed.unsigned_abs()
}

/// Lattice segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    start: LatticePoint,
    end: LatticePoint,
}

impl Segment {
    pub fn new(start: LatticePoint, end: LatticePoint) -> Result<Self> {
        if start == end {
            return Err(Error::DegenerateInput(format!("segment endpoints coincide at {start}")));
        }
        Ok(Self { start, end })
    }

    /// Segment with lexicographically ordered endpoints, used as an
    /// orientation-free edge key.
    pub fn undirected(a: LatticePoint, b: LatticePoint) -> Result<Self> {
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn start(&self) -> LatticePoint {
        self.start
    }

    pub fn end(&self) -> LatticePoint {
        self.end
    }

    pub fn vector(&self) -> (i64, i64) {
        self.end.sub(self.start)
    }

    pub fn lattice_length(&self) -> u64 {
        let (dx, dy) = self.vector();
        dx.unsigned_abs().gcd(&dy.unsigned_abs())
    }

    pub fn primitive_vector(&self) -> (i64, i64) {
        let (dx, dy) = self.vector();
        let g = self.lattice_length() as i64;
        (dx / g, dy / g)
    }

    pub fn reversed(&self) -> Self {
        Self { start: self.end, end: self.start }
    }

    /// Lattice points on the closed segment, from `start` to `end`.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let step = self.primitive_vector();
        let n = self.lattice_length() as i64;
        (0..=n)
            .map(|k| self.start.offset((step.0 * k, step.1 * k)))
            .collect()
    }

    /// Whether `p` lies on the closed segment.
    pub fn contains(&self, p: LatticePoint) -> bool {
        orient(self.start, self.end, p) == 0
            && p.x >= self.start.x.min(self.end.x)
            && p.x <= self.start.x.max(self.end.x)
            && p.y >= self.start.y.min(self.end.y)
            && p.y <= self.start.y.max(self.end.y)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.start, self.end)
    }
}

pub fn lattice_length(seg: &Segment) -> u64 {
    seg.lattice_length()
}

pub fn primitive_vector(seg: &Segment) -> (i64, i64) {
    seg.primitive_vector()
}

/// Strict convex hull, counterclockwise, starting at the lexicographically
/// smallest point. Points lying on hull edges are dropped.
pub fn convex_hull(points: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput("fewer than three distinct points".into()));
    }

    // Andrew's monotone chain.
    let mut lower: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("all points are collinear".into()));
    }
    Ok(lower)
}

/// Closed containment in a ccw convex polygon.
pub fn polygon_contains(vertices: &[LatticePoint], p: LatticePoint) -> bool {
    let n = vertices.len();
    (0..n).all(|i| orient(vertices[i], vertices[(i + 1) % n], p) >= 0)
}

/// Whether `p` lies on the boundary of a ccw convex polygon.
pub fn on_polygon_boundary(vertices: &[LatticePoint], p: LatticePoint) -> bool {
    polygon_edges(vertices).iter().any(|s| s.contains(p))
}

/// Directed boundary edges of a ccw vertex cycle.
pub fn polygon_edges(vertices: &[LatticePoint]) -> Vec<Segment> {
    let n = vertices.len();
    (0..n)
        .map(|i| Segment { start: vertices[i], end: vertices[(i + 1) % n] })
        .collect()
}

/// All lattice points of a ccw convex polygon, sorted lexicographically.
pub fn lattice_points(vertices: &[LatticePoint]) -> Vec<LatticePoint> {
    if vertices.is_empty() {
        return Vec::new();
    }
    let (xmin, xmax) = vertices.iter().fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v.x), hi.max(v.x)));
    let (ymin, ymax) = vertices.iter().fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v.y), hi.max(v.y)));
    let mut out = Vec::new();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let p = LatticePoint::new(x, y);
            if polygon_contains(vertices, p) {
                out.push(p);
            }
        }
    }
    out
}

/// Rotate a vertex cycle so that it starts at its lexicographic minimum.
pub fn canonical_cycle(mut vertices: Vec<LatticePoint>) -> Vec<LatticePoint> {
    if let Some((idx, _)) = vertices.iter().enumerate().min_by_key(|(_, p)| **p) {
        vertices.rotate_left(idx);
    }
    vertices
}

/// Non-degenerate convex lattice polygon with a set of marked lattice points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPolygon {
    vertices: Vec<LatticePoint>,
    marks: Vec<LatticePoint>,
}

impl MarkedPolygon {
    /// Polygon spanned by `points`, with every lattice point marked.
    pub fn from_points(points: &[LatticePoint]) -> Result<Self> {
        let vertices = convex_hull(points)?;
        let marks = lattice_points(&vertices);
        Ok(Self { vertices, marks })
    }

    /// Polygon with an explicit mark set. The marks must contain every vertex
    /// and lie inside the polygon.
    pub fn with_marks(points: &[LatticePoint], marks: &[LatticePoint]) -> Result<Self> {
        let vertices = convex_hull(points)?;
        let mut marks = marks.to_vec();
        marks.sort_unstable();
        marks.dedup();
        if let Some(p) = marks.iter().find(|p| !polygon_contains(&vertices, **p)) {
            return Err(Error::InvalidPolygon(format!("mark {p} lies outside the polygon")));
        }
        if let Some(v) = vertices.iter().find(|v| marks.binary_search(v).is_err()) {
            return Err(Error::InvalidPolygon(format!("vertex {v} is not marked")));
        }
        Ok(Self { vertices, marks })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// The mark set `A`, sorted lexicographically. Height vectors are indexed
    /// in this order.
    pub fn marks(&self) -> &[LatticePoint] {
        &self.marks
    }

    pub fn num_marks(&self) -> usize {
        self.marks.len()
    }

    pub fn mark_index(&self, p: LatticePoint) -> Option<usize> {
        self.marks.binary_search(&p).ok()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        polygon_contains(&self.vertices, p)
    }

    pub fn twice_area(&self) -> u128 {
        twice_polygon_area(&self.vertices)
    }

    pub fn boundary_lattice_points(&self) -> Vec<LatticePoint> {
        lattice_points(&self.vertices)
            .into_iter()
            .filter(|p| on_polygon_boundary(&self.vertices, *p))
            .collect()
    }

    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        lattice_points(&self.vertices)
            .into_iter()
            .filter(|p| !on_polygon_boundary(&self.vertices, *p))
            .collect()
    }

    /// Whether `seg` lies on the boundary of the polygon.
    pub fn is_boundary_segment(&self, seg: &Segment) -> bool {
        polygon_edges(&self.vertices)
            .iter()
            .any(|e| e.contains(seg.start()) && e.contains(seg.end()))
    }
}

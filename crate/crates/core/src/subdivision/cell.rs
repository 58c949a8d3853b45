use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{
    canonical_cycle, convex_hull, lattice_points, orient, polygon_contains, polygon_edges, twice_polygon_area,
    LatticePoint, MarkedPolygon, Segment,
};

/// One polygon of a subdivision together with its marked points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedCell {
    polygon: Vec<LatticePoint>,
    marks: Vec<LatticePoint>,
}

impl MarkedCell {
    /// `points` may be any point set whose convex hull is the cell.
    pub fn new(points: &[LatticePoint], marks: &[LatticePoint]) -> Result<Self> {
        let polygon = canonical_cycle(
            convex_hull(points).map_err(|e| Error::InvalidSubdivision(format!("degenerate cell: {e}")))?,
        );
        let mut marks = marks.to_vec();
        marks.sort_unstable();
        marks.dedup();
        if let Some(p) = marks.iter().find(|p| !polygon_contains(&polygon, **p)) {
            return Err(Error::InvalidSubdivision(format!("mark {p} lies outside its cell")));
        }
        if let Some(v) = polygon.iter().find(|v| marks.binary_search(v).is_err()) {
            return Err(Error::InvalidSubdivision(format!("cell vertex {v} is not marked")));
        }
        Ok(Self { polygon, marks })
    }

    /// Cell whose marks are all of its lattice points.
    pub fn fully_marked(points: &[LatticePoint]) -> Result<Self> {
        let hull = convex_hull(points).map_err(|e| Error::InvalidSubdivision(format!("degenerate cell: {e}")))?;
        let marks = lattice_points(&hull);
        Self::new(&hull, &marks)
    }

    /// Counterclockwise vertex cycle starting at the lexicographic minimum.
    pub fn polygon(&self) -> &[LatticePoint] {
        &self.polygon
    }

    pub fn marks(&self) -> &[LatticePoint] {
        &self.marks
    }

    pub fn is_marked(&self, p: LatticePoint) -> bool {
        self.marks.binary_search(&p).is_ok()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        polygon_contains(&self.polygon, p)
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        lattice_points(&self.polygon)
    }

    pub fn twice_area(&self) -> u128 {
        twice_polygon_area(&self.polygon)
    }

    /// Directed sides, counterclockwise.
    pub fn sides(&self) -> Vec<Segment> {
        polygon_edges(&self.polygon)
    }

    pub fn is_triangle(&self) -> bool {
        self.polygon.len() == 3
    }

    /// Four vertices with opposite sides equal as vectors.
    pub fn is_parallelogram(&self) -> bool {
        let p = &self.polygon;
        p.len() == 4 && p[1].sub(p[0]) == p[2].sub(p[3])
    }

    /// Whether every lattice point of the cell is marked.
    pub fn is_fully_marked(&self) -> bool {
        self.lattice_points() == self.marks
    }
}

/// Edge of a subdivision with the cells on either side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubdivisionEdge {
    pub segment: Segment,
    pub cells: Vec<usize>,
}

impl SubdivisionEdge {
    pub fn is_interior(&self) -> bool {
        self.cells.len() == 2
    }
}

/// A marked subdivision of a marked polygon. Cells are kept in canonical
/// (sorted) order, so two subdivisions compare equal iff they have the same
/// cells and marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subdivision {
    base: MarkedPolygon,
    cells: Vec<MarkedCell>,
}

impl Subdivision {
    /// Validates the subdivision axioms: marks inside the base mark set,
    /// cells meeting in common faces with matching marks, and cells covering
    /// the polygon.
    pub fn new(base: MarkedPolygon, mut cells: Vec<MarkedCell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidSubdivision("no cells".into()));
        }
        cells.sort();
        cells.dedup();
        for cell in &cells {
            if let Some(p) = cell.marks().iter().find(|p| base.mark_index(**p).is_none()) {
                return Err(Error::InvalidSubdivision(format!("cell mark {p} is not a mark of the base")));
            }
            if let Some(v) = cell.polygon().iter().find(|v| !base.contains(**v)) {
                return Err(Error::InvalidSubdivision(format!("cell vertex {v} lies outside the base")));
            }
        }
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                check_face_fitting(&cells[i], &cells[j])
                    .map_err(|why| Error::InvalidSubdivision(format!("cells {i} and {j}: {why}")))?;
            }
        }
        let covered: u128 = cells.iter().map(MarkedCell::twice_area).sum();
        if covered != base.twice_area() {
            return Err(Error::InvalidSubdivision("cells do not cover the polygon".into()));
        }
        Ok(Self { base, cells })
    }

    pub(crate) fn from_canonical_cells(base: MarkedPolygon, mut cells: Vec<MarkedCell>) -> Self {
        cells.sort();
        cells.dedup();
        Self { base, cells }
    }

    /// The one-cell subdivision with every base mark marked.
    pub fn trivial(base: MarkedPolygon) -> Self {
        let cell = MarkedCell { polygon: base.vertices().to_vec(), marks: base.marks().to_vec() };
        Self { base, cells: vec![cell] }
    }

    pub fn base(&self) -> &MarkedPolygon {
        &self.base
    }

    pub fn cells(&self) -> &[MarkedCell] {
        &self.cells
    }

    /// All edges, sorted by their undirected segment.
    pub fn edges(&self) -> Vec<SubdivisionEdge> {
        let mut map: BTreeMap<Segment, Vec<usize>> = BTreeMap::new();
        for (i, cell) in self.cells.iter().enumerate() {
            for side in cell.sides() {
                let key = Segment::undirected(side.start(), side.end()).expect("cell sides are non-degenerate");
                map.entry(key).or_default().push(i);
            }
        }
        map.into_iter()
            .map(|(segment, cells)| SubdivisionEdge { segment, cells })
            .collect()
    }

    pub fn has_edge(&self, seg: &Segment) -> bool {
        let Ok(key) = Segment::undirected(seg.start(), seg.end()) else {
            return false;
        };
        self.cells.iter().any(|c| {
            c.sides()
                .iter()
                .any(|s| Segment::undirected(s.start(), s.end()).ok() == Some(key))
        })
    }

    /// Lattice points that are a vertex of at least one cell, sorted.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut v: Vec<LatticePoint> = self.cells.iter().flat_map(|c| c.polygon().iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Every cell marks all of the base marks it contains.
    pub fn is_effective(&self) -> bool {
        self.cells.iter().all(|c| {
            let expected: Vec<LatticePoint> = self.base.marks().iter().copied().filter(|p| c.contains(*p)).collect();
            expected == c.marks
        })
    }

    /// Stable textual key used for deduplication and diffing.
    pub fn canonical_key(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            out.push('[');
            for v in cell.polygon() {
                out.push_str(&format!("{v}"));
            }
            out.push('|');
            for m in cell.marks() {
                out.push_str(&format!("{m}"));
            }
            out.push(']');
        }
        out
    }

    /// Whether `self` refines `coarser`: the cells of `self` inside each cell
    /// of `coarser` form a subdivision of that marked cell.
    pub fn refines(&self, coarser: &Subdivision) -> Result<bool> {
        if self.base != coarser.base {
            return Err(Error::BaseMismatch);
        }
        let mut used = vec![false; self.cells.len()];
        for big in &coarser.cells {
            let mut area = 0u128;
            for (i, small) in self.cells.iter().enumerate() {
                if small.polygon().iter().all(|v| big.contains(*v)) {
                    if small.marks().iter().any(|m| !big.is_marked(*m)) {
                        return Ok(false);
                    }
                    area += small.twice_area();
                    used[i] = true;
                }
            }
            if area != big.twice_area() {
                return Ok(false);
            }
        }
        Ok(used.into_iter().all(|u| u))
    }
}

pub fn refines(fine: &Subdivision, coarse: &Subdivision) -> Result<bool> {
    fine.refines(coarse)
}

/// Position of `p` along a line with direction `dir`.
fn along(dir: (i64, i64), p: LatticePoint) -> i128 {
    i128::from(dir.0) * i128::from(p.x) + i128::from(dir.1) * i128::from(p.y)
}

fn check_face_fitting(a: &MarkedCell, b: &MarkedCell) -> std::result::Result<(), String> {
    separated_fit(a, b)
        .or_else(|| separated_fit(b, a))
        .unwrap_or_else(|| Err("interiors overlap".into()))
}

/// Looks for a side of `first` whose line weakly separates the two cells and,
/// if found, checks that the common part is a face of both with equal marks.
fn separated_fit(first: &MarkedCell, second: &MarkedCell) -> Option<std::result::Result<(), String>> {
    let side = first
        .sides()
        .into_iter()
        .find(|s| second.polygon().iter().all(|v| orient(s.start(), s.end(), *v) <= 0))?;
    let dir = side.vector();
    let on_line: Vec<LatticePoint> = second
        .polygon()
        .iter()
        .copied()
        .filter(|v| orient(side.start(), side.end(), *v) == 0)
        .collect();
    if on_line.is_empty() {
        return Some(Ok(()));
    }
    let (a_lo, a_hi) = (along(dir, side.start()), along(dir, side.end()));
    let b_pos: Vec<i128> = on_line.iter().map(|p| along(dir, *p)).collect();
    let (b_lo, b_hi) = (*b_pos.iter().min().unwrap(), *b_pos.iter().max().unwrap());
    let (lo, hi) = (a_lo.max(b_lo), a_hi.min(b_hi));
    if lo > hi {
        return Some(Ok(()));
    }
    // the common part must be empty, a vertex, or a whole side of each cell
    let is_face = |f_lo: i128, f_hi: i128| lo == hi && (lo == f_lo || lo == f_hi) || (lo == f_lo && hi == f_hi);
    if !is_face(a_lo, a_hi) || !is_face(b_lo, b_hi) {
        return Some(Err(format!("cells meet in a segment of {side} that is not a common face")));
    }
    let in_common = |p: &LatticePoint| {
        orient(side.start(), side.end(), *p) == 0 && (lo..=hi).contains(&along(dir, *p))
    };
    let ma: Vec<_> = first.marks().iter().filter(|p| in_common(p)).collect();
    let mb: Vec<_> = second.marks().iter().filter(|p| in_common(p)).collect();
    if ma != mb {
        return Some(Err(format!("marks disagree on the common face along {side}")));
    }
    Some(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn square() -> MarkedPolygon {
        MarkedPolygon::from_points(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap()
    }

    fn diag(main: bool) -> Subdivision {
        let cells = if main {
            vec![
                MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1)]).unwrap(),
                MarkedCell::fully_marked(&[p(0, 0), p(0, 1), p(1, 1)]).unwrap(),
            ]
        } else {
            vec![
                MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(0, 1)]).unwrap(),
                MarkedCell::fully_marked(&[p(1, 0), p(1, 1), p(0, 1)]).unwrap(),
            ]
        };
        Subdivision::new(square(), cells).unwrap()
    }

    #[test]
    fn refinement_examples() {
        let t = Subdivision::trivial(square());
        assert!(t.refines(&t).unwrap());
        assert!(diag(true).refines(&t).unwrap());
        assert!(!t.refines(&diag(true)).unwrap());
        assert!(!diag(true).refines(&diag(false)).unwrap());
        assert!(!diag(false).refines(&diag(true)).unwrap());
        let other = Subdivision::trivial(MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(0, 2)]).unwrap());
        assert_eq!(t.refines(&other), Err(Error::BaseMismatch));
    }

    #[test]
    fn rejects_overlaps_and_gaps() {
        let overlap = vec![
            MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1)]).unwrap(),
            MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(0, 1)]).unwrap(),
        ];
        assert!(Subdivision::new(square(), overlap).is_err());
        let gap = vec![MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1)]).unwrap()];
        assert!(Subdivision::new(square(), gap).is_err());
    }

    #[test]
    fn accepts_valid_non_effective_cells() {
        let tri2 = MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(0, 2)]).unwrap();
        let vertices_only = vec![MarkedCell::new(&[p(0, 0), p(2, 0), p(0, 2)], &[p(0, 0), p(2, 0), p(0, 2)]).unwrap()];
        let s = Subdivision::new(tri2.clone(), vertices_only).unwrap();
        assert!(!s.is_effective());

        let unit = vec![
            MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(0, 1)]).unwrap(),
            MarkedCell::fully_marked(&[p(1, 0), p(2, 0), p(1, 1)]).unwrap(),
            MarkedCell::fully_marked(&[p(0, 1), p(1, 1), p(0, 2)]).unwrap(),
            MarkedCell::fully_marked(&[p(1, 0), p(1, 1), p(0, 1)]).unwrap(),
        ];
        let s = Subdivision::new(tri2, unit).unwrap();
        assert!(s.is_effective());
        assert_eq!(s.edges().len(), 9);
        assert_eq!(s.edges().iter().filter(|e| e.is_interior()).count(), 3);
    }

    #[test]
    fn rejects_partial_faces() {
        let big = MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        let t_shape = vec![
            MarkedCell::fully_marked(&[p(0, 0), p(2, 0), p(2, 1), p(0, 1)]).unwrap(),
            MarkedCell::fully_marked(&[p(0, 1), p(1, 1), p(1, 2), p(0, 2)]).unwrap(),
            MarkedCell::fully_marked(&[p(1, 1), p(2, 1), p(2, 2), p(1, 2)]).unwrap(),
        ];
        assert!(matches!(Subdivision::new(big, t_shape), Err(Error::InvalidSubdivision(_))));
    }

    #[test]
    fn rejects_mark_mismatch_on_shared_edge() {
        let big = MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        let left = MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 2), p(0, 2)]).unwrap();
        let right_pts = [p(1, 0), p(2, 0), p(2, 2), p(1, 2)];
        let right = MarkedCell::new(&right_pts, &[p(1, 0), p(2, 0), p(2, 2), p(1, 2), p(2, 1)]).unwrap();
        assert!(matches!(
            Subdivision::new(big.clone(), vec![left.clone(), right]),
            Err(Error::InvalidSubdivision(_))
        ));
        let right = MarkedCell::new(&right_pts, &[p(1, 0), p(2, 0), p(2, 2), p(1, 2), p(2, 1), p(1, 1)]).unwrap();
        assert!(Subdivision::new(big, vec![left, right]).is_ok());
    }
}

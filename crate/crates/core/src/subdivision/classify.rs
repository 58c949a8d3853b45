use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{det2, LatticePoint, Segment};

use super::cell::{MarkedCell, Subdivision};

/// Lattice points of a parallelogram cell outside the sublattice spanned,
/// from a corner, by the primitive vectors of its sides.
pub fn special_points(cell: &MarkedCell) -> Result<Vec<LatticePoint>> {
    if !cell.is_parallelogram() {
        return Err(Error::NotParallelogram);
    }
    let poly = cell.polygon();
    let corner = poly[0];
    let u = Segment::new(corner, poly[1])?.primitive_vector();
    let v = Segment::new(corner, poly[3])?.primitive_vector();
    let det = det2(u, v);
    Ok(cell
        .lattice_points()
        .into_iter()
        .filter(|&p| {
            let d = p.sub(corner);
            // d = s·u + t·v with s = det(d, v)/det, t = det(u, d)/det
            det2(d, v) % det != 0 || det2(u, d) % det != 0
        })
        .collect())
}

/// Union-find closure of "opposite sides of a parallelogram cell".
/// Classes are sorted, and so are the segments inside each class.
pub fn edge_equivalence_classes(sub: &Subdivision) -> Vec<Vec<Segment>> {
    let edges: Vec<Segment> = sub.edges().into_iter().map(|e| e.segment).collect();
    let index = |s: &Segment| {
        let key = Segment::undirected(s.start(), s.end()).expect("non-degenerate side");
        edges.binary_search(&key).expect("cell side is an edge")
    };
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for cell in sub.cells().iter().filter(|c| c.is_parallelogram()) {
        let sides = cell.sides();
        for (a, b) in [(0, 2), (1, 3)] {
            let (ra, rb) = (find(&mut parent, index(&sides[a])), find(&mut parent, index(&sides[b])));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<Segment>> = BTreeMap::new();
    for i in 0..edges.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(edges[i]);
    }
    let mut out: Vec<Vec<Segment>> = classes.into_values().collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_effective: bool,
    pub is_simple: bool,
    pub is_nodal: bool,
    /// Special points per parallelogram cell, keyed by cell index. Cells that
    /// are not parallelograms never appear.
    pub special_points: BTreeMap<usize, Vec<LatticePoint>>,
    pub edge_classes: Vec<Vec<Segment>>,
}

impl ClassificationReport {
    pub fn has_special_points(&self) -> bool {
        self.special_points.values().any(|v| !v.is_empty())
    }
}

/// Every boundary lattice point of the polygon is a vertex of some cell.
pub fn is_simple(sub: &Subdivision) -> bool {
    let vertices = sub.vertices();
    sub.base()
        .boundary_lattice_points()
        .iter()
        .all(|p| vertices.binary_search(p).is_ok())
}

/// Every cell is a triangle or a parallelogram.
pub fn is_nodal(sub: &Subdivision) -> bool {
    sub.cells().iter().all(|c| c.is_triangle() || c.is_parallelogram())
}

pub fn classify(sub: &Subdivision) -> ClassificationReport {
    let special_points = sub
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_parallelogram())
        .map(|(i, c)| (i, special_points(c).expect("cell is a parallelogram")))
        .collect();
    ClassificationReport {
        is_effective: sub.is_effective(),
        is_simple: is_simple(sub),
        is_nodal: is_nodal(sub),
        special_points,
        edge_classes: edge_equivalence_classes(sub),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::MarkedPolygon;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn seg(a: LatticePoint, b: LatticePoint) -> Segment {
        Segment::undirected(a, b).unwrap()
    }

    fn two_squares() -> Subdivision {
        let base = MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(2, 1), p(0, 1)]).unwrap();
        Subdivision::new(
            base,
            vec![
                MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap(),
                MarkedCell::fully_marked(&[p(1, 0), p(2, 0), p(2, 1), p(1, 1)]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn special_point_examples() {
        let unit = MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        assert!(special_points(&unit).unwrap().is_empty());
        let diamond = MarkedCell::fully_marked(&[p(0, 0), p(1, 1), p(2, 0), p(1, -1)]).unwrap();
        assert_eq!(special_points(&diamond).unwrap(), vec![p(1, 0)]);
        let rect = MarkedCell::fully_marked(&[p(0, 0), p(2, 0), p(2, 1), p(0, 1)]).unwrap();
        assert!(special_points(&rect).unwrap().is_empty());
        let tri = MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(0, 1)]).unwrap();
        assert_eq!(special_points(&tri), Err(Error::NotParallelogram));
        let trapezoid = MarkedCell::fully_marked(&[p(0, 0), p(2, 0), p(1, 1), p(0, 1)]).unwrap();
        assert_eq!(special_points(&trapezoid), Err(Error::NotParallelogram));
    }

    #[test]
    fn classify_examples() {
        let square = MarkedPolygon::from_points(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        let diag = Subdivision::new(
            square,
            vec![
                MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1)]).unwrap(),
                MarkedCell::fully_marked(&[p(0, 0), p(0, 1), p(1, 1)]).unwrap(),
            ],
        )
        .unwrap();
        let r = classify(&diag);
        assert!(r.is_simple && r.is_nodal && r.is_effective && !r.has_special_points());
        assert!(r.special_points.is_empty());
        assert_eq!(r.edge_classes.len(), 5);

        let tri2 = Subdivision::trivial(MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(0, 2)]).unwrap());
        let r = classify(&tri2);
        assert!(!r.is_simple);
        assert!(r.is_nodal);

        let r = classify(&two_squares());
        assert!(r.is_simple && r.is_nodal && !r.has_special_points());
        assert_eq!(r.special_points.len(), 2);
    }

    #[test]
    fn edge_classes_chain_through_parallelograms() {
        let classes = edge_equivalence_classes(&two_squares());
        assert_eq!(classes.len(), 3);
        assert!(classes.contains(&vec![seg(p(0, 0), p(0, 1)), seg(p(1, 0), p(1, 1)), seg(p(2, 0), p(2, 1))]));
        assert!(classes.contains(&vec![seg(p(0, 0), p(1, 0)), seg(p(0, 1), p(1, 1))]));
        assert!(classes.contains(&vec![seg(p(1, 0), p(2, 0)), seg(p(1, 1), p(2, 1))]));

        let para = Subdivision::trivial(MarkedPolygon::from_points(&[p(0, 0), p(2, 0), p(3, 1), p(1, 1)]).unwrap());
        let classes = edge_equivalence_classes(&para);
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 2));
    }
}

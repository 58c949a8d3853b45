//! JSON documents. Points are `[x, y]`, rationals are `[numerator,
//! denominator]` integer pairs, and lists are emitted in canonical order.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{CensusEntry, FanCensus, SecondaryCone, SeveriConeCheck, WitnessReport};
use crate::geometry::{LatticePoint, MarkedPolygon, Segment};
use crate::multiplicity::{Mode, MultiplicityReport, Provenance};
use crate::scalar::Field;
use crate::subdivision::{ClassificationReport, HeightFunction, MarkedCell, Subdivision};
use crate::tropcurve::{DualityReport, TropicalCurve};
use crate::Rational;

pub type WirePoint = [i64; 2];
pub type WireRational = [i64; 2];

pub fn point_to_wire(p: LatticePoint) -> WirePoint {
    [p.x, p.y]
}

pub fn point_from_wire(p: WirePoint) -> LatticePoint {
    LatticePoint::new(p[0], p[1])
}

fn points_to_wire(ps: &[LatticePoint]) -> Vec<WirePoint> {
    ps.iter().copied().map(point_to_wire).collect()
}

fn points_from_wire(ps: &[WirePoint]) -> Vec<LatticePoint> {
    ps.iter().copied().map(point_from_wire).collect()
}

pub fn rational_to_wire<F: Field>(v: &F) -> Result<WireRational> {
    let (n, d) = v.to_fraction().ok_or_else(|| Error::Overflow(v.to_string()))?;
    Ok([n, d])
}

pub fn rational_from_wire<F: Field>(v: WireRational) -> Result<F> {
    if v[1] == 0 {
        return Err(Error::InvalidHeights(format!("zero denominator in [{}, {}]", v[0], v[1])));
    }
    Ok(F::from_fraction(v[0], v[1]))
}

pub fn integer_to_wire(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Overflow(v.to_string()))
}

fn segment_to_wire(s: &Segment) -> [WirePoint; 2] {
    [point_to_wire(s.start()), point_to_wire(s.end())]
}

/// Input document shared by all commands. Which of the optional parts are
/// required depends on the command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub polygon: Vec<WirePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marks: Option<Vec<WirePoint>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heights: Option<Vec<HeightDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subdivision: Option<CellsDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeightDoc {
    pub mark: WirePoint,
    pub value: WireRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub vertices: Vec<WirePoint>,
    pub marks: Vec<WirePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellsDoc {
    pub cells: Vec<CellDoc>,
}

impl InputDoc {
    pub fn base(&self) -> Result<MarkedPolygon> {
        let pts = points_from_wire(&self.polygon);
        let base = match &self.marks {
            None => MarkedPolygon::from_points(&pts),
            Some(m) => MarkedPolygon::with_marks(&pts, &points_from_wire(m)),
        };
        base.map_err(|e| match e {
            Error::DegenerateInput(why) => Error::InvalidPolygon(why),
            other => other,
        })
    }

    pub fn heights(&self, base: &MarkedPolygon) -> Result<Option<HeightFunction<Rational>>> {
        let Some(hs) = &self.heights else { return Ok(None) };
        let pairs = hs
            .iter()
            .map(|h| Ok((point_from_wire(h.mark), rational_from_wire(h.value)?)))
            .collect::<Result<Vec<_>>>()?;
        HeightFunction::from_pairs(base.clone(), pairs).map(Some)
    }

    pub fn subdivision(&self, base: &MarkedPolygon) -> Result<Option<Subdivision>> {
        let Some(doc) = &self.subdivision else { return Ok(None) };
        cells_from_wire(base, doc).map(Some)
    }

    pub fn from_parts(base: &MarkedPolygon, heights: Option<&HeightFunction<Rational>>, sub: Option<&Subdivision>) -> Result<Self> {
        let all_marked = base.marks() == crate::geometry::lattice_points(base.vertices()).as_slice();
        Ok(Self {
            polygon: points_to_wire(base.vertices()),
            marks: (!all_marked).then(|| points_to_wire(base.marks())),
            heights: heights.map(heights_to_wire).transpose()?,
            subdivision: sub.map(cells_to_wire),
        })
    }
}

pub fn heights_to_wire<F: Field>(psi: &HeightFunction<F>) -> Result<Vec<HeightDoc>> {
    psi.base()
        .marks()
        .iter()
        .zip(psi.values())
        .map(|(m, v)| Ok(HeightDoc { mark: point_to_wire(*m), value: rational_to_wire(v)? }))
        .collect()
}

pub fn cells_to_wire(sub: &Subdivision) -> CellsDoc {
    CellsDoc {
        cells: sub
            .cells()
            .iter()
            .map(|c| CellDoc { vertices: points_to_wire(c.polygon()), marks: points_to_wire(c.marks()) })
            .collect(),
    }
}

pub fn cells_from_wire(base: &MarkedPolygon, doc: &CellsDoc) -> Result<Subdivision> {
    let cells = doc
        .cells
        .iter()
        .map(|c| {
            MarkedCell::new(&points_from_wire(&c.vertices), &points_from_wire(&c.marks)).map_err(|e| match e {
                Error::DegenerateInput(why) => Error::InvalidSubdivision(why),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Subdivision::new(base.clone(), cells)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionDoc {
    pub polygon: Vec<WirePoint>,
    pub marks: Vec<WirePoint>,
    pub cells: Vec<CellDoc>,
    pub effective: bool,
}

impl SubdivisionDoc {
    pub fn new(sub: &Subdivision) -> Self {
        Self {
            polygon: points_to_wire(sub.base().vertices()),
            marks: points_to_wire(sub.base().marks()),
            cells: cells_to_wire(sub).cells,
            effective: sub.is_effective(),
        }
    }

    pub fn to_subdivision(&self) -> Result<Subdivision> {
        let base = MarkedPolygon::with_marks(&points_from_wire(&self.polygon), &points_from_wire(&self.marks))?;
        cells_from_wire(&base, &CellsDoc { cells: self.cells.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullDoc {
    pub heights: Vec<HeightDoc>,
    pub concave_hull: Vec<HeightDoc>,
    pub effective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPointsDoc {
    pub cell: usize,
    pub points: Vec<WirePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeveriDoc {
    pub delta: usize,
    pub expected_dim: usize,
    pub cone_dim: usize,
    pub simple: bool,
    pub nodal: bool,
    pub special_point_free: bool,
    pub contained: bool,
}

impl SeveriDoc {
    pub fn new(delta: usize, c: &SeveriConeCheck) -> Self {
        Self {
            delta,
            expected_dim: c.expected_dim,
            cone_dim: c.cone_dim,
            simple: c.simple,
            nodal: c.nodal,
            special_point_free: c.special_point_free,
            contained: c.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub subdivision: SubdivisionDoc,
    pub effective: bool,
    pub simple: bool,
    pub nodal: bool,
    pub special_points: Vec<SpecialPointsDoc>,
    pub edge_classes: Vec<Vec<[WirePoint; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub severi_cone: Option<SeveriDoc>,
}

impl ClassificationDoc {
    pub fn new(sub: &Subdivision, r: &ClassificationReport, severi: Option<SeveriDoc>) -> Self {
        Self {
            subdivision: SubdivisionDoc::new(sub),
            effective: r.is_effective,
            simple: r.is_simple,
            nodal: r.is_nodal,
            special_points: r
                .special_points
                .iter()
                .map(|(&cell, pts)| SpecialPointsDoc { cell, points: points_to_wire(pts) })
                .collect(),
            edge_classes: r.edge_classes.iter().map(|c| c.iter().map(segment_to_wire).collect()).collect(),
            severi_cone: severi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDoc {
    /// Coordinate order of the forms.
    pub coordinates: Vec<WirePoint>,
    pub equalities: Vec<Vec<WireRational>>,
    pub inequalities: Vec<Vec<WireRational>>,
    pub dim: usize,
    pub relative_interior_point: Vec<WireRational>,
}

fn forms_to_wire<F: Field>(forms: &[Vec<F>]) -> Result<Vec<Vec<WireRational>>> {
    forms.iter().map(|f| f.iter().map(rational_to_wire).collect()).collect()
}

impl ConeDoc {
    pub fn new<F: Field>(base: &MarkedPolygon, cone: &SecondaryCone<F>) -> Result<Self> {
        Ok(Self {
            coordinates: points_to_wire(base.marks()),
            equalities: forms_to_wire(cone.equalities())?,
            inequalities: forms_to_wire(cone.inequalities())?,
            dim: cone.dim()?,
            relative_interior_point: cone.relative_interior_point()?.iter().map(rational_to_wire).collect::<Result<_>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDoc {
    pub subdivision: SubdivisionDoc,
    pub cone: ConeDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub vertices: [usize; 2],
    pub weight: u64,
    pub dual: [WirePoint; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayDoc {
    pub vertex: usize,
    pub direction: WirePoint,
    pub weight: u64,
    pub dual: [WirePoint; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub vertices: Vec<[WireRational; 2]>,
    pub bounded_edges: Vec<EdgeDoc>,
    pub rays: Vec<RayDoc>,
    /// The dual subdivision; vertex `i` is dual to cell `i`.
    pub subdivision: SubdivisionDoc,
    pub balanced: bool,
    pub duality_holds: bool,
}

impl CurveDoc {
    pub fn new<F: Field>(curve: &TropicalCurve<F>, duality: &DualityReport) -> Result<Self> {
        Ok(Self {
            vertices: curve
                .vertices
                .iter()
                .map(|(x, y)| Ok([rational_to_wire(x)?, rational_to_wire(y)?]))
                .collect::<Result<_>>()?,
            bounded_edges: curve
                .bounded_edges
                .iter()
                .map(|e| EdgeDoc { vertices: e.vertices, weight: e.weight, dual: segment_to_wire(&e.dual) })
                .collect(),
            rays: curve
                .rays
                .iter()
                .map(|r| RayDoc {
                    vertex: r.vertex,
                    direction: [r.direction.0, r.direction.1],
                    weight: r.weight,
                    dual: segment_to_wire(&r.dual),
                })
                .collect(),
            subdivision: SubdivisionDoc::new(&curve.subdivision),
            balanced: duality.balanced,
            duality_holds: duality.holds(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeDoc {
    Tilde,
    Full,
}

impl From<Mode> for ModeDoc {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Tilde => ModeDoc::Tilde,
            Mode::Full => ModeDoc::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProvenanceDoc {
    Computed,
    Override,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityDoc {
    pub subdivision: SubdivisionDoc,
    pub mode: ModeDoc,
    pub triangle_factor: i64,
    pub parallelogram_factor: i64,
    pub edge_product_full: i64,
    pub edge_product_classes: i64,
    pub l_vs: i64,
    pub l_vs_provenance: ProvenanceDoc,
    pub value: WireRational,
}

impl MultiplicityDoc {
    pub fn new(sub: &Subdivision, r: &MultiplicityReport) -> Result<Self> {
        Ok(Self {
            subdivision: SubdivisionDoc::new(sub),
            mode: r.mode.into(),
            triangle_factor: integer_to_wire(&r.triangle_factor)?,
            parallelogram_factor: integer_to_wire(&r.parallelogram_factor)?,
            edge_product_full: integer_to_wire(&r.edge_product_full)?,
            edge_product_classes: integer_to_wire(&r.edge_product_classes)?,
            l_vs: integer_to_wire(&r.l_vs.value)?,
            l_vs_provenance: match r.l_vs.provenance {
                Provenance::Computed => ProvenanceDoc::Computed,
                Provenance::Override => ProvenanceDoc::Override,
            },
            value: rational_to_wire(&r.value)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntryDoc {
    pub cells: Vec<CellDoc>,
    pub dim: usize,
    pub effective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageDoc {
    pub seed: u64,
    pub samples: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub polygon: Vec<WirePoint>,
    pub marks: Vec<WirePoint>,
    pub total: usize,
    pub effective: usize,
    pub entries: Vec<CensusEntryDoc>,
    pub coverage: CoverageDoc,
}

impl CensusDoc {
    pub fn new<F: Field>(census: &FanCensus<F>) -> Self {
        let entry = |e: &CensusEntry<F>| CensusEntryDoc {
            cells: cells_to_wire(&e.subdivision).cells,
            dim: e.dim,
            effective: e.effective,
        };
        Self {
            polygon: points_to_wire(census.base.vertices()),
            marks: points_to_wire(census.base.marks()),
            total: census.entries.len(),
            effective: census.effective().count(),
            entries: census.entries.iter().map(entry).collect(),
            coverage: CoverageDoc {
                seed: census.coverage.seed,
                samples: census.coverage.samples,
                failures: census.coverage.failures,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub delta: usize,
    pub effective: bool,
    pub rank: usize,
    pub target_rank: usize,
    pub own_cone_dim: usize,
    pub boundary_mechanism: bool,
    pub candidate: bool,
    pub note: String,
}

impl WitnessDoc {
    pub fn new(delta: usize, w: &WitnessReport) -> Self {
        Self {
            delta,
            effective: w.effective,
            rank: w.rank,
            target_rank: w.target_rank,
            own_cone_dim: w.own_cone_dim,
            boundary_mechanism: w.boundary_mechanism,
            candidate: w.candidate,
            note: w.note.to_string(),
        }
    }
}

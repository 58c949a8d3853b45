use std::sync::OnceLock;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::polyhedral::{analyze_cone, ConeAnalysis};
use crate::scalar::{dot, Field};
use crate::subdivision::{concave_hull_values, regular_subdivision, spanning_triple, AffinePlane, HeightFunction, Subdivision};

/// Closed polyhedral cone in `R^A` given by linear forms: `e·ψ = 0` for each
/// equality and `g·ψ ≥ 0` for each inequality. Redundant inequalities are
/// kept; forms are scaled so their first non-zero coefficient is `±1` and
/// exact duplicates are merged.
#[derive(Debug, Clone)]
pub struct SecondaryCone<F> {
    ambient: usize,
    equalities: Vec<Vec<F>>,
    inequalities: Vec<Vec<F>>,
    analysis: OnceLock<ConeAnalysis<F>>,
}

impl<F: Field> PartialEq for SecondaryCone<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.equalities == other.equalities && self.inequalities == other.inequalities
    }
}

impl<F: Field> Eq for SecondaryCone<F> {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Membership {
    Outside,
    Boundary,
    RelativeInterior,
}

impl<F: Field> SecondaryCone<F> {
    pub fn from_forms(ambient: usize, equalities: Vec<Vec<F>>, inequalities: Vec<Vec<F>>) -> Result<Self> {
        if let Some(f) = equalities.iter().chain(&inequalities).find(|f| f.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, got: f.len() });
        }
        let mut eqs: Vec<Vec<F>> = equalities
            .into_iter()
            .filter_map(|f| normalize(f, false))
            .collect();
        eqs.sort();
        eqs.dedup();
        let mut ineqs: Vec<Vec<F>> = inequalities.into_iter().filter_map(|f| normalize(f, true)).collect();
        ineqs.sort();
        ineqs.dedup();
        Ok(Self { ambient, equalities: eqs, inequalities: ineqs, analysis: OnceLock::new() })
    }

    /// Dimension of the ambient space `R^A`.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn equalities(&self) -> &[Vec<F>] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Vec<F>] {
        &self.inequalities
    }

    /// Whether every form vanishes on the all-ones vector, i.e. the cone
    /// contains the constant functions as a lineality line.
    pub fn contains_constants(&self) -> bool {
        self.equalities
            .iter()
            .chain(&self.inequalities)
            .all(|f| f.iter().fold(F::zero(), |acc, v| acc + v.clone()).is_zero())
    }

    fn analysis(&self) -> Result<&ConeAnalysis<F>> {
        if !self.contains_constants() {
            return Err(Error::EmptyCone);
        }
        if let Some(a) = self.analysis.get() {
            return Ok(a);
        }
        let a = analyze_cone(self.ambient, &self.equalities, &self.inequalities)?;
        Ok(self.analysis.get_or_init(|| a))
    }

    /// Dimension modulo the constant functions.
    pub fn dim(&self) -> Result<usize> {
        let a = self.analysis()?;
        a.dim.checked_sub(1).ok_or(Error::EmptyCone)
    }

    pub fn relative_interior_point(&self) -> Result<Vec<F>> {
        Ok(self.analysis()?.interior_point.clone())
    }

    /// Per inequality, whether it holds with equality on the whole cone.
    pub fn implicit_mask(&self) -> Result<Vec<bool>> {
        Ok(self.analysis()?.implicit.clone())
    }

    /// Inequalities that hold with equality on the whole cone.
    pub fn implicit_equalities(&self) -> Result<Vec<&Vec<F>>> {
        let a = self.analysis()?;
        Ok(self
            .inequalities
            .iter()
            .zip(&a.implicit)
            .filter(|(_, imp)| **imp)
            .map(|(f, _)| f)
            .collect())
    }

    /// Inequalities that are strict somewhere on the cone.
    pub fn proper_inequalities(&self) -> Result<Vec<&Vec<F>>> {
        let a = self.analysis()?;
        Ok(self
            .inequalities
            .iter()
            .zip(&a.implicit)
            .filter(|(_, imp)| !**imp)
            .map(|(f, _)| f)
            .collect())
    }

    pub fn membership(&self, psi: &[F]) -> Result<Membership> {
        if psi.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: psi.len() });
        }
        if self.equalities.iter().any(|e| !dot(e, psi).is_zero()) {
            return Ok(Membership::Outside);
        }
        let values: Vec<F> = self.inequalities.iter().map(|g| dot(g, psi)).collect();
        if values.iter().any(Signed::is_negative) {
            return Ok(Membership::Outside);
        }
        let a = self.analysis()?;
        let interior = values.iter().zip(&a.implicit).all(|(v, imp)| *imp || v.is_positive());
        Ok(if interior { Membership::RelativeInterior } else { Membership::Boundary })
    }

    pub fn contains(&self, psi: &[F]) -> Result<bool> {
        Ok(self.membership(psi)? != Membership::Outside)
    }

    /// The face cut out by turning `form` into an equality.
    pub fn face(&self, form: &[F]) -> Result<Self> {
        let mut eqs = self.equalities.clone();
        eqs.push(form.to_vec());
        Self::from_forms(self.ambient, eqs, self.inequalities.clone())
    }

    /// Relative-interior points of the facets, one per distinct facet
    /// inequality.
    pub fn facet_points(&self) -> Result<Vec<Vec<F>>> {
        let dim = self.analysis()?.dim;
        let mut out = Vec::new();
        for g in self.proper_inequalities()? {
            let face = self.face(g)?;
            let fa = face.analysis()?;
            if fa.dim + 1 == dim {
                out.push(fa.interior_point.clone());
            }
        }
        Ok(out)
    }
}

/// Scale so the first non-zero coefficient is `1` (or `±1` keeping the sign
/// of an inequality). Zero forms are dropped.
fn normalize<F: Field>(form: Vec<F>, keep_sign: bool) -> Option<Vec<F>> {
    let lead = form.iter().find(|v| !v.is_zero())?.clone();
    let scale = if keep_sign { lead.abs() } else { lead };
    Some(form.into_iter().map(|v| v / scale.clone()).collect())
}

/// `C(S)`: height functions whose regular subdivision is refined by `sub`.
///
/// Each cell contributes the affine function `ℓ` interpolating three of its
/// marks, written in barycentric coordinates so that it is a linear form in
/// `ψ`. Marks of the cell give equalities `ℓ(a) = ψ(a)`, every other mark of
/// the polygon gives `ℓ(a) ≥ ψ(a)`.
pub fn secondary_cone<F: Field>(sub: &Subdivision) -> Result<SecondaryCone<F>> {
    let base = sub.base();
    let n = base.num_marks();
    let mut equalities = Vec::new();
    let mut inequalities = Vec::new();
    for (ci, cell) in sub.cells().iter().enumerate() {
        let triple = spanning_triple(cell.marks()).ok_or(Error::UnderMarkedCell(ci))?;
        let idx = triple.map(|p| base.mark_index(p).expect("cell marks are base marks"));
        let plane = AffinePlane::<F>::through(triple, [F::one(), F::one(), F::one()]).ok_or(Error::UnderMarkedCell(ci))?;
        for (t, &a) in base.marks().iter().enumerate() {
            if idx.contains(&t) {
                continue;
            }
            let lambda = plane.barycentric(a);
            let mut form = vec![F::zero(); n];
            for (k, l) in idx.iter().zip(lambda) {
                form[*k] = form[*k].clone() + l;
            }
            form[t] = form[t].clone() - F::one();
            if cell.is_marked(a) {
                equalities.push(form);
            } else {
                inequalities.push(form);
            }
        }
    }
    SecondaryCone::from_forms(n, equalities, inequalities)
}

pub fn cone_dim<F: Field>(cone: &SecondaryCone<F>) -> Result<usize> {
    cone.dim()
}

pub fn membership<F: Field>(cone: &SecondaryCone<F>, psi: &HeightFunction<F>) -> Result<Membership> {
    cone.membership(psi.values())
}

/// Dimension (modulo constants) of the secondary cone of the effective
/// subdivision induced by the concave hull of `psi`.
pub fn rank<F: Field>(psi: &HeightFunction<F>) -> Result<usize> {
    let effective = regular_subdivision(&concave_hull_values(psi));
    secondary_cone::<F>(&effective)?.dim()
}

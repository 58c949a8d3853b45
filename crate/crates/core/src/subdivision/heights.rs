use crate::error::{Error, Result};
use crate::geometry::{LatticePoint, MarkedPolygon};
use crate::scalar::Field;

/// A height for every mark of a marked polygon, indexed in mark order.
///
/// Two height functions that differ by a constant induce the same
/// subdivision; [`HeightFunction::normalized`] picks the representative
/// vanishing at the first mark.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightFunction<F> {
    base: MarkedPolygon,
    values: Vec<F>,
}

impl<F: Field> HeightFunction<F> {
    pub fn new(base: MarkedPolygon, values: Vec<F>) -> Result<Self> {
        if values.len() != base.num_marks() {
            return Err(Error::InvalidHeights(format!(
                "expected {} values, got {}",
                base.num_marks(),
                values.len()
            )));
        }
        Ok(Self { base, values })
    }

    pub fn from_fn(base: MarkedPolygon, f: impl Fn(LatticePoint) -> F) -> Self {
        let values = base.marks().iter().map(|&p| f(p)).collect();
        Self { base, values }
    }

    /// Build from `(mark, value)` pairs; every mark must appear exactly once.
    pub fn from_pairs(base: MarkedPolygon, pairs: impl IntoIterator<Item = (LatticePoint, F)>) -> Result<Self> {
        let mut values: Vec<Option<F>> = vec![None; base.num_marks()];
        for (p, v) in pairs {
            let idx = base
                .mark_index(p)
                .ok_or_else(|| Error::InvalidHeights(format!("{p} is not a mark")))?;
            if values[idx].replace(v).is_some() {
                return Err(Error::InvalidHeights(format!("duplicate height for {p}")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::InvalidHeights(format!("missing height for {}", base.marks()[i]))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { base, values })
    }

    pub fn zero(base: MarkedPolygon) -> Self {
        let values = vec![F::zero(); base.num_marks()];
        Self { base, values }
    }

    pub fn base(&self) -> &MarkedPolygon {
        &self.base
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F> {
        self.values
    }

    pub fn value(&self, p: LatticePoint) -> Option<&F> {
        self.base.mark_index(p).map(|i| &self.values[i])
    }

    pub fn normalized(&self) -> Self {
        let shift = self.values.first().cloned().unwrap_or_else(F::zero);
        Self {
            base: self.base.clone(),
            values: self.values.iter().map(|v| v.clone() - shift.clone()).collect(),
        }
    }

    /// Equality modulo adding a constant.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.base == other.base && self.normalized().values == other.normalized().values
    }
}

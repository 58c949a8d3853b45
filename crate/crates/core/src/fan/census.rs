//! Enumeration of the secondary fan of a small marked polygon.
//!
//! Starting from a generic height function, maximal cones are reached by
//! crossing facets: a point just beyond the relative interior of a facet lies
//! in the neighbouring maximal cone. Lower-dimensional cones are the faces of
//! maximal ones and are found from the relative-interior points of facets.

use std::collections::{BTreeMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::MarkedPolygon;
use crate::scalar::Field;
use crate::subdivision::{regular_subdivision, HeightFunction, Subdivision};

use super::cone::{secondary_cone, Membership, SecondaryCone};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusBudget {
    pub max_marks: usize,
    pub max_cones: usize,
    /// Random height functions used for the coverage check.
    pub samples: usize,
    pub seed: u64,
}

impl Default for CensusBudget {
    fn default() -> Self {
        Self { max_marks: 12, max_cones: 10_000, samples: 64, seed: 0 }
    }
}

#[derive(Debug, Clone)]
pub struct CensusEntry<F> {
    pub subdivision: Subdivision,
    pub cone: SecondaryCone<F>,
    /// Cone dimension modulo constants.
    pub dim: usize,
    pub effective: bool,
}

/// Outcome of sampling random height functions against the census: each
/// sample must lie in the relative interior of exactly one entry, and that
/// entry must be its regular subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingRecord {
    pub seed: u64,
    pub samples: usize,
    pub failures: usize,
}

#[derive(Debug, Clone)]
pub struct FanCensus<F> {
    pub base: MarkedPolygon,
    /// Every coherent subdivision, sorted by canonical key.
    pub entries: Vec<CensusEntry<F>>,
    pub coverage: SamplingRecord,
}

impl<F: Field> FanCensus<F> {
    pub fn effective(&self) -> impl Iterator<Item = &CensusEntry<F>> {
        self.entries.iter().filter(|e| e.effective)
    }

    /// Indices of entries whose cone has `psi` in its relative interior.
    pub fn locate(&self, psi: &[F]) -> Result<Vec<usize>> {
        let mut hits = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.cone.membership(psi)? == Membership::RelativeInterior {
                hits.push(i);
            }
        }
        Ok(hits)
    }

    pub fn max_dim(&self) -> usize {
        self.entries.iter().map(|e| e.dim).max().unwrap_or(0)
    }
}

fn random_heights<F: Field>(rng: &mut ChaCha8Rng, base: &MarkedPolygon) -> HeightFunction<F> {
    let values = (0..base.num_marks())
        .map(|_| F::from_fraction(rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(1..=64)))
        .collect();
    HeightFunction::new(base.clone(), values).expect("one value per mark")
}

/// All coherent subdivisions of `base` with their secondary cones. Entries
/// carry an `effective` flag; the non-effective ones are needed so that the
/// cones cover the whole height space.
pub fn enumerate_effective_subdivisions<F: Field>(base: &MarkedPolygon, budget: CensusBudget) -> Result<FanCensus<F>> {
    let n = base.num_marks();
    if n > budget.max_marks {
        return Err(Error::BudgetExceeded(format!("{n} marks exceed the limit of {}", budget.max_marks)));
    }
    let full = n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);

    let mut start = None;
    for _ in 0..100 {
        let s = regular_subdivision(&random_heights::<F>(&mut rng, base));
        if secondary_cone::<F>(&s)?.dim()? == full {
            start = Some(s);
            break;
        }
    }
    let start = start.ok_or_else(|| Error::DegenerateInput("no generic height function found".into()))?;

    let mut found: BTreeMap<String, CensusEntry<F>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let insert = |s: Subdivision, found: &mut BTreeMap<String, CensusEntry<F>>, queue: &mut VecDeque<String>| -> Result<()> {
        let key = s.canonical_key();
        if found.contains_key(&key) {
            return Ok(());
        }
        if found.len() >= budget.max_cones {
            return Err(Error::BudgetExceeded(format!("more than {} cones", budget.max_cones)));
        }
        let cone = secondary_cone::<F>(&s)?;
        let dim = cone.dim()?;
        let effective = s.is_effective();
        found.insert(key.clone(), CensusEntry { subdivision: s, cone, dim, effective });
        queue.push_back(key);
        Ok(())
    };
    insert(start, &mut found, &mut queue)?;

    while let Some(key) = queue.pop_front() {
        let (sub, cone, dim) = {
            let e = &found[&key];
            (e.subdivision.clone(), e.cone.clone(), e.dim)
        };
        let center = cone.relative_interior_point()?;
        for pf in cone.facet_points()? {
            let facet = regular_subdivision(&HeightFunction::new(base.clone(), pf.clone())?);
            insert(facet, &mut found, &mut queue)?;
            if dim == full {
                let next = cross_wall(base, &sub, &center, &pf, full)?;
                insert(next, &mut found, &mut queue)?;
            }
        }
    }

    let mut entries: Vec<CensusEntry<F>> = found.into_values().collect();
    entries.sort_by_key(|e| e.subdivision.canonical_key());
    let mut census = FanCensus {
        base: base.clone(),
        entries,
        coverage: SamplingRecord { seed: budget.seed, samples: budget.samples, failures: 0 },
    };
    for _ in 0..budget.samples {
        let psi = random_heights::<F>(&mut rng, base);
        let hits = census.locate(psi.values())?;
        let ok = hits.len() == 1 && census.entries[hits[0]].subdivision == regular_subdivision(&psi);
        if !ok {
            census.coverage.failures += 1;
        }
    }
    Ok(census)
}

/// The maximal cone on the other side of the facet through `pf`.
fn cross_wall<F: Field>(
    base: &MarkedPolygon,
    current: &Subdivision,
    center: &[F],
    pf: &[F],
    full: usize,
) -> Result<Subdivision> {
    let mut eps = F::one();
    let two = F::from_i64(2);
    for _ in 0..128 {
        let q: Vec<F> = pf
            .iter()
            .zip(center)
            .map(|(p, c)| p.clone() + eps.clone() * (p.clone() - c.clone()))
            .collect();
        let s = regular_subdivision(&HeightFunction::new(base.clone(), q)?);
        if s != *current {
            let cone = secondary_cone::<F>(&s)?;
            if cone.dim()? == full && cone.contains(pf)? {
                return Ok(s);
            }
        }
        eps = eps / two.clone();
    }
    Err(Error::DegenerateInput("wall crossing did not converge".into()))
}

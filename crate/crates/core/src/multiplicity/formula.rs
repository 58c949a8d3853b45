use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{LatticePoint, Segment};
use crate::subdivision::{classify, edge_equivalence_classes, Subdivision};
use crate::Rational;

use super::lattice::torsion_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Computed,
    Override,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCount {
    pub value: BigInt,
    pub provenance: Provenance,
}

/// Gluing constraints on the coefficients of a nodal curve with
/// subdivision `S`, as integer exponent vectors over one variable per
/// subdivision vertex and one per edge class.
///
/// Along an edge of lattice length `m` the truncation is a monomial times an
/// `m`-th power of a binomial, so the end coefficient is the start
/// coefficient times `μ^m`. Opposite sides of a parallelogram share the same
/// binomial factor, hence the same `μ`; this is what the edge classes encode.
pub fn gluing_matrix(sub: &Subdivision) -> Vec<Vec<BigInt>> {
    let vertices = sub.vertices();
    let classes = edge_equivalence_classes(sub);
    let class_of: BTreeMap<Segment, usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.iter().map(move |s| (*s, k)))
        .collect();
    let vidx = |p: LatticePoint| vertices.binary_search(&p).expect("edge endpoints are vertices");
    let cols = vertices.len() + classes.len();
    sub.edges()
        .into_iter()
        .map(|e| {
            let mut row = vec![BigInt::zero(); cols];
            row[vidx(e.segment.end())] += 1;
            row[vidx(e.segment.start())] -= 1;
            row[vertices.len() + class_of[&e.segment]] -= BigInt::from(e.segment.lattice_length());
            row
        })
        .collect()
}

fn check_nodal_simple(sub: &Subdivision) -> Result<()> {
    let report = classify(sub);
    if !report.is_nodal {
        return Err(Error::NotNodal);
    }
    if !report.is_simple {
        return Err(Error::NotSimple);
    }
    if !report.is_effective {
        return Err(Error::PreconditionViolated("subdivision is not effective".into()));
    }
    Ok(())
}

/// `l(V_S)`: the torsion order of the cokernel of [`gluing_matrix`], unless
/// `override_value` is given, in which case it is passed through.
pub fn count_components_vs(sub: &Subdivision, override_value: Option<u64>) -> Result<ComponentCount> {
    check_nodal_simple(sub)?;
    match override_value {
        Some(0) => Err(Error::PreconditionViolated("l(V_S) override must be positive".into())),
        Some(v) => Ok(ComponentCount { value: BigInt::from(v), provenance: Provenance::Override }),
        None => Ok(ComponentCount { value: torsion_order(&gluing_matrix(sub)), provenance: Provenance::Computed }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// One edge per equivalence class in the denominator.
    Tilde,
    /// Parallelogram areas in the numerator, every edge in the denominator.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub mode: Mode,
    /// `∏ 2·area` over triangles.
    pub triangle_factor: BigInt,
    /// `∏ area` over parallelograms.
    pub parallelogram_factor: BigInt,
    /// `∏` lattice length over all edges.
    pub edge_product_full: BigInt,
    /// `∏` lattice length over one edge per class.
    pub edge_product_classes: BigInt,
    pub l_vs: ComponentCount,
    pub value: Rational,
}

pub fn formula_value(
    mode: Mode,
    triangle_factor: &BigInt,
    parallelogram_factor: &BigInt,
    edge_product_full: &BigInt,
    edge_product_classes: &BigInt,
    l_vs: &BigInt,
) -> Rational {
    match mode {
        Mode::Tilde => Rational::new(triangle_factor.clone(), l_vs * edge_product_classes),
        Mode::Full => Rational::new(triangle_factor * parallelogram_factor, l_vs * edge_product_full),
    }
}

pub fn severi_multiplicity(sub: &Subdivision, mode: Mode, l_override: Option<u64>) -> Result<MultiplicityReport> {
    let report = classify(sub);
    if !report.is_effective {
        return Err(Error::PreconditionViolated("subdivision is not effective".into()));
    }
    if !report.is_simple {
        return Err(Error::PreconditionViolated("subdivision is not simple".into()));
    }
    if !report.is_nodal {
        return Err(Error::PreconditionViolated("subdivision is not nodal".into()));
    }
    if mode == Mode::Full && report.has_special_points() {
        return Err(Error::PreconditionViolated("a parallelogram has special points".into()));
    }
    let l_vs = count_components_vs(sub, l_override)?;
    let mut triangle_factor = BigInt::one();
    let mut parallelogram_factor = BigInt::one();
    for c in sub.cells() {
        if c.is_triangle() {
            triangle_factor *= BigInt::from(c.twice_area());
        } else {
            parallelogram_factor *= BigInt::from(c.twice_area() / 2);
        }
    }
    let edge_product_full = sub
        .edges()
        .iter()
        .fold(BigInt::one(), |acc, e| acc * e.segment.lattice_length());
    let edge_product_classes = report
        .edge_classes
        .iter()
        .fold(BigInt::one(), |acc, c| acc * c[0].lattice_length());
    let value = formula_value(
        mode,
        &triangle_factor,
        &parallelogram_factor,
        &edge_product_full,
        &edge_product_classes,
        &l_vs.value,
    );
    Ok(MultiplicityReport {
        mode,
        triangle_factor,
        parallelogram_factor,
        edge_product_full,
        edge_product_classes,
        l_vs,
        value,
    })
}

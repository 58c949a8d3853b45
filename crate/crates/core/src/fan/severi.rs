use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::subdivision::{classify, is_effective, regular_subdivision, HeightFunction, Subdivision};

use super::cone::{rank, secondary_cone};

/// The individual conditions behind [`severi_cone_test`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeveriConeCheck {
    pub expected_dim: usize,
    pub cone_dim: usize,
    pub simple: bool,
    pub nodal: bool,
    pub special_point_free: bool,
}

impl SeveriConeCheck {
    pub fn holds(&self) -> bool {
        self.expected_dim == self.cone_dim && self.simple && self.nodal && self.special_point_free
    }
}

pub fn severi_cone_check<F: Field>(sub: &Subdivision, delta: usize) -> Result<SeveriConeCheck> {
    if !sub.is_effective() {
        return Err(Error::PreconditionViolated("subdivision is not effective".into()));
    }
    let base = sub.base();
    let interior = base.interior_lattice_points().len();
    if delta > interior {
        return Err(Error::PreconditionViolated(format!("δ = {delta} exceeds {interior} interior lattice points")));
    }
    let report = classify(sub);
    Ok(SeveriConeCheck {
        expected_dim: base.num_marks() - 1 - delta,
        cone_dim: secondary_cone::<F>(sub)?.dim()?,
        simple: report.is_simple,
        nodal: report.is_nodal,
        special_point_free: !report.has_special_points(),
    })
}

/// Whether the whole cone `C(S)` lies in the tropicalized Severi variety
/// with `δ` nodes.
pub fn severi_cone_test<F: Field>(sub: &Subdivision, delta: usize) -> Result<bool> {
    Ok(severi_cone_check::<F>(sub, delta)?.holds())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub effective: bool,
    pub rank: usize,
    /// `|A| − 1 − δ`.
    pub target_rank: usize,
    /// Dimension of the cone of `Δ_ψ` itself.
    pub own_cone_dim: usize,
    /// `own_cone_dim > rank`: `ψ` sits in a cone strictly larger than the one
    /// of its concave hull.
    pub boundary_mechanism: bool,
    pub candidate: bool,
    pub note: &'static str,
}

pub const MEMBERSHIP_NOT_DECIDED: &str = "membership of ψ in the tropical Severi variety is not decided";

pub fn subfan_obstruction_witness<F: Field>(psi: &HeightFunction<F>, delta: usize) -> Result<WitnessReport> {
    let n = psi.base().num_marks();
    let target_rank = (n - 1)
        .checked_sub(delta)
        .ok_or_else(|| Error::PreconditionViolated(format!("δ = {delta} exceeds |A| − 1 = {}", n - 1)))?;
    let effective = is_effective(psi);
    let r = rank(psi)?;
    let own_cone_dim = secondary_cone::<F>(&regular_subdivision(psi))?.dim()?;
    let boundary_mechanism = own_cone_dim > r;
    Ok(WitnessReport {
        effective,
        rank: r,
        target_rank,
        own_cone_dim,
        boundary_mechanism,
        candidate: !effective && r == target_rank && boundary_mechanism,
        note: MEMBERSHIP_NOT_DECIDED,
    })
}

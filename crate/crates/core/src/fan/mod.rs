//! Secondary cones, the secondary fan and cone-level Severi checks.

mod census;
mod cone;
mod severi;

pub use census::{enumerate_effective_subdivisions, CensusBudget, CensusEntry, FanCensus, SamplingRecord};
pub use cone::{cone_dim, membership, rank, secondary_cone, Membership, SecondaryCone};
pub use severi::{
    severi_cone_check, severi_cone_test, subfan_obstruction_witness, SeveriConeCheck, WitnessReport,
    MEMBERSHIP_NOT_DECIDED,
};

//! Lattice-index intersection multiplicities and the Severi multiplicity
//! formulas.

mod formula;
pub mod lattice;
mod subspace;

pub use formula::{
    count_components_vs, formula_value, gluing_matrix, severi_multiplicity, ComponentCount, Mode, MultiplicityReport,
    Provenance,
};
pub use subspace::{direction_space, principal_index, saturated_lattice_basis, transversal_multiplicity, RationalSubspace};

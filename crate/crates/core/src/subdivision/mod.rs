//! Regular subdivisions, concave hulls and their combinatorial classification.

mod cell;
mod classify;
mod heights;
mod regular;

pub use cell::{refines, MarkedCell, Subdivision, SubdivisionEdge};
pub use classify::{classify, edge_equivalence_classes, is_nodal, is_simple, special_points, ClassificationReport};
pub use heights::HeightFunction;
pub use regular::{concave_hull_values, is_effective, is_effective_subdivision, regular_subdivision, AffinePlane};

pub(crate) use regular::{cell_plane, spanning_triple};

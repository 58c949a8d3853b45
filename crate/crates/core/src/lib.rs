//! Exact secondary cones, regular subdivisions and dual tropical plane curves
//! of marked lattice polygons.
//!
//! The numeric core is generic over [`scalar::Field`]; [`Rational`]
//! (arbitrary precision) is the default carrier and [`SmallRational`] is a
//! faster `i64`-backed alternative for small inputs.

pub mod cli;
pub mod error;
pub mod fan;
pub mod geometry;
pub mod linalg;
pub mod lp;
pub mod multiplicity;
pub mod polyhedral;
pub mod scalar;
pub mod subdivision;
pub mod tropcurve;

pub use error::{Error, Result};
pub use geometry::{LatticePoint, MarkedPolygon, Segment};
pub use scalar::Field;
pub use subdivision::{MarkedCell, Subdivision};

pub type Rational = num_rational::BigRational;
pub type SmallRational = num_rational::Rational64;
pub type Integer = num_bigint::BigInt;

pub type Heights = subdivision::HeightFunction<Rational>;

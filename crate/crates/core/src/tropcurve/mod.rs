//! Tropical plane curves dual to regular subdivisions, and point conditions.

mod curve;
mod points;

pub use curve::{
    dual_curve, eval_tropical, on_curve, region_labels, verify_duality, CurveEdge, CurveRay, DualityReport,
    TropicalCurve,
};
pub use points::{
    point_condition_system, point_hyperplane_contains, s_general_position, sample_general_points, LinearCondition,
    PointCondition, PointConditionSystem,
};

//! Thurston norm balls of 2-component 2-bridge link exteriors.
//!
//! A link `L_{p/q}` (q even) is modelled by its alternating rational diagram
//! `T(a_1, ..., a_k)`. The norm is computed from four vertex values obtained
//! by cutting the diagram into base-type pieces, cross-checked against a
//! path-length computation in a Farey-type tree, and packaged as an exact
//! planar seminorm that can be evaluated, classified, and composed under
//! satellite operations.

pub mod arith;
pub mod ball;
pub mod base_norms;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod farey;
pub mod geometry;
pub mod satellite;

pub use arith::{
    cf_evaluate, convergents, even_cf, positive_cf, ratio, ContinuedFraction, Fraction,
};
pub use ball::{
    build_ball, classify, classify_diagram, evaluate, face_count, rays_of, sector_formula,
    vertex_norms, vertex_norms_of_diagram, BallClassification, Direction, NormBall, Shape,
};
pub use base_norms::{base_vertex_norms, pm_type, PmType, VertexNorms};
pub use diagram::{
    is_base_type, linking_number, self_crossing_boxes, seifert_circles, split_diagram,
    trace_components, ComponentTrace, RationalDiagram, Split,
};
pub use error::{Error, Result};
pub use farey::{t10_path_length, t10_tree_build, x10_via_farey, FareyTree, FareyVertex};
pub use geometry::{
    convex_hull, minkowski_sum, polar_dual, support_value, ConvexPolygon, PolarBody,
    RationalPoint, Support,
};
pub use satellite::{
    ball_with_face_count, iterated_family, satellite_ball, satellite_ball_minkowski,
    satellite_evaluate, FamilyStep, SatelliteInput,
};

//! Weighted Fermat-Torricelli point of three weighted points in the plane.
//!
//! Given three points and a positive weight for each, the library locates the
//! unique minimizer of the weighted distance sum by several independent
//! routes and classifies whether it floats inside the triangle or is absorbed
//! by a dominant vertex:
//!
//! - [`equilibrium`]: the floating/absorbed classifier and the
//!   weight-determined sight angles at the minimizer.
//! - [`analytic`]: coordinate solution by intersecting the two weighted
//!   Simpson lines built from similar-triangle apexes.
//! - [`angular`]: coordinate-free solution as a polar pair about the first
//!   vertex, from side lengths or from circumcircle central angles.
//! - [`oracle`]: Weiszfeld iteration and a refined grid search, used as
//!   mutually independent ground truth.
//! - [`construction`]: ruler-and-compass style traces for the Simpson-line
//!   and rotation constructions, with SVG rendering.

pub mod analytic;
pub mod angular;
pub mod construction;
pub mod equilibrium;
pub mod error;
pub mod geometry;
pub mod oracle;

pub use analytic::{primed_vertices, simpson_lines, solve_analytic, PrimedVertices};
pub use angular::{
    ddist2_dangle, ddist2_dradial, ddist3_dangle, ddist3_dradial, reconstruct_point,
    solve_angular_circle, solve_angular_sides, AngularSolution, VariationConfig,
};
pub use construction::{
    construct_hofmann, construct_simpson, emit_svg, hofmann_rotation_angle, ConstructionTrace,
    Primitive,
};
pub use equilibrium::{
    classify, equilibrium_angles, equilibrium_residual, Case, Classification, EquilibriumAngles,
};
pub use error::Error;
pub use geometry::{
    distance, CentralAngles, Circle, Line, Point2, RigidMotion, Vec2, WeightedTriple,
};
pub use oracle::{objective, solve_grid_refine, solve_weiszfeld, Method, Solution};

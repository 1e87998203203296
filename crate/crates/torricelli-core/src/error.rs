use thiserror::Error;

use crate::oracle::Solution;

/// Errors shared across the solver and construction modules.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("weight {index} is not strictly positive (got {value})")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("vertices {i} and {j} coincide")]
    CoincidentVertices { i: usize, j: usize },

    #[error("coordinate is not finite")]
    NonFiniteCoordinate,

    #[error("degenerate geometry: vertices are collinear")]
    CollinearVertices,

    #[error("weights violate the strict triangle inequality at index {index}; the minimizer is absorbed")]
    WeightTriangleInequality { index: usize },

    #[error("no floating solution: the minimizer is absorbed at vertex {vertex}")]
    NotFloating { vertex: usize },

    #[error("unit vector undefined: point coincides with vertex {vertex}")]
    PointAtVertex { vertex: usize },

    #[error("iteration did not converge after {iterations} steps (residual {residual:.3e})")]
    Convergence {
        iterations: usize,
        residual: f64,
        /// Best iterate reached before giving up.
        best: Box<Solution>,
    },

    #[error("rotation construction requires the first two weights to be equal (got {w1} and {w2} after normalization)")]
    UnequalRotationWeights { w1: f64, w2: f64 },

    #[error("rotation construction requires the shared weight to exceed 1/4 after normalization (got {0})")]
    RotationWeightTooSmall(f64),

    #[error("rotation construction angle condition failed: vertex angle at A3 is {angle:.6} rad, must exceed {bound:.6} rad")]
    RotationAngleCondition { angle: f64, bound: f64 },
}

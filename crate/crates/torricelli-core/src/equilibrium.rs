//! Floating/absorbed classification and the weight-determined angles at the
//! floating minimizer.
//!
//! The minimizer of the weighted distance sum either lies strictly inside the
//! triangle (floating) or coincides with a vertex whose weight dominates the
//! combined unit-vector pull of the other two (absorbed). In the floating
//! case the three sight angles at the minimizer depend on the weights alone.

use crate::error::Error;
use crate::geometry::{Point2, Vec2, WeightedTriple};

/// Slack on the absorbed test `pull <= weight`: pulls within this distance of
/// the weight still count as absorbed, matching the weak inequality of the
/// vertex criterion.
pub const ABSORBED_EPS: f64 = 1e-12;

/// Which case the instance falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// Minimizer strictly inside the triangle.
    Floating,
    /// Minimizer coincides with the vertex at this index.
    Absorbed(usize),
}

/// Classification outcome together with the per-vertex pull magnitudes
/// `||sum_{j != i} w_j * u(A_i, A_j)||` used to decide it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub case: Case,
    pub pulls: [f64; 3],
}

impl Classification {
    pub fn is_floating(&self) -> bool {
        self.case == Case::Floating
    }

    pub fn absorbed_vertex(&self) -> Option<usize> {
        match self.case {
            Case::Floating => None,
            Case::Absorbed(i) => Some(i),
        }
    }
}

/// Net unit-vector pull at vertex `i`: the weighted sum of unit vectors from
/// `A_i` toward the other two vertices.
pub fn pull_vector(t: &WeightedTriple, i: usize) -> Vec2 {
    let mut sum = Vec2::new(0.0, 0.0);
    for j in 0..3 {
        if j != i {
            let u = (t.vertex(j) - t.vertex(i)).normalized().expect("vertices distinct");
            sum = sum + u.scale(t.weight(j));
        }
    }
    sum
}

/// Decides floating vs. absorbed by the vertex criterion: vertex `i` absorbs
/// the minimizer exactly when its weight is at least the pull of the others.
///
/// Valid for collinear vertices as well (the unit vectors stay defined); the
/// closed-form solvers reject collinear input separately.
pub fn classify(t: &WeightedTriple) -> Classification {
    let mut pulls = [0.0; 3];
    let mut absorbed = None;
    for (i, pull) in pulls.iter_mut().enumerate() {
        *pull = pull_vector(t, i).norm();
        if *pull <= t.weight(i) + ABSORBED_EPS {
            debug_assert!(
                absorbed.is_none(),
                "at most one vertex can satisfy the absorbed inequality"
            );
            absorbed = Some(i);
        }
    }
    Classification {
        case: match absorbed {
            Some(i) => Case::Absorbed(i),
            None => Case::Floating,
        },
        pulls,
    }
}

/// Sight angles at the floating minimizer, determined by the weights alone.
///
/// `opposite[i]` is the angle subtended at the minimizer by the side facing
/// vertex `i` (the angle between the rays toward the other two vertices).
/// The three sum to 2*pi, and `weight[i] / sin(opposite[i])` is the common
/// law-of-sines ratio stored in `ratio`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumAngles {
    pub opposite: [f64; 3],
    pub ratio: f64,
}

/// Computes the sight angles and the law-of-sines ratio from the weights.
///
/// Requires the strict triangle inequality on the weights; outside it the
/// minimizer is absorbed and no floating angles exist.
pub fn equilibrium_angles(weights: [f64; 3]) -> Result<EquilibriumAngles, Error> {
    check_weight_triangle(weights)?;
    let [w1, w2, w3] = weights;
    let cos_opposite = |wk: f64, wi: f64, wj: f64| (wk * wk - wi * wi - wj * wj) / (2.0 * wi * wj);
    let opposite = [
        cos_opposite(w1, w2, w3).clamp(-1.0, 1.0).acos(),
        cos_opposite(w2, w1, w3).clamp(-1.0, 1.0).acos(),
        cos_opposite(w3, w1, w2).clamp(-1.0, 1.0).acos(),
    ];
    let product = (w1 + w2 + w3) * (w2 + w3 - w1) * (w1 + w3 - w2) * (w1 + w2 - w3);
    let ratio = 2.0 * w1 * w2 * w3 / product.sqrt();
    Ok(EquilibriumAngles { opposite, ratio })
}

/// Errors unless `w_i < w_j + w_k` holds strictly for every index.
pub fn check_weight_triangle(weights: [f64; 3]) -> Result<(), Error> {
    for index in 0..3 {
        let others = weights[(index + 1) % 3] + weights[(index + 2) % 3];
        if weights[index] >= others {
            return Err(Error::WeightTriangleInequality { index });
        }
    }
    Ok(())
}

/// Residual of the floating equilibrium condition at `p`: the norm of the
/// weighted unit-vector sum toward the vertices. Zero exactly at the floating
/// minimizer.
pub fn equilibrium_residual(t: &WeightedTriple, p: Point2) -> Result<f64, Error> {
    Ok(residual_vector(t, p)?.norm())
}

/// Weighted unit-vector sum from `p` toward the vertices.
pub fn residual_vector(t: &WeightedTriple, p: Point2) -> Result<Vec2, Error> {
    let mut sum = Vec2::new(0.0, 0.0);
    for i in 0..3 {
        match (t.vertex(i) - p).normalized() {
            Some(u) => sum = sum + u.scale(t.weight(i)),
            None => return Err(Error::PointAtVertex { vertex: i }),
        }
    }
    Ok(sum)
}

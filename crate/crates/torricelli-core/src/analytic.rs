//! Coordinate solution in the canonical frame: erect similar triangles on the
//! two sides through `A1`, sized by weight ratios, and intersect the two
//! weighted Simpson lines they define.
//!
//! The minimizer is the common point of the circles through `(A1, A3', A2)`
//! and `(A1, A2', A3)`; equivalently the intersection of the lines `A2 A2'`
//! and `A3 A3'`, which is what is computed here.

use crate::equilibrium::{classify, equilibrium_angles, Case};
use crate::error::Error;
use crate::geometry::{Line, Point2, WeightedTriple};
use crate::oracle::{Method, Solution};

/// Apexes of the similar triangles erected on the sides through `A1`, in
/// canonical-frame coordinates. `a3_prime` sits below the `A1 A2` axis and is
/// joined to `A3`; `a2_prime` sits past ray `A1 A3` on the far side from `A2`
/// and is joined to `A2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimedVertices {
    pub a2_prime: Point2,
    pub a3_prime: Point2,
}

/// Builds the primed vertices for a canonical-frame floating instance.
///
/// The apex distances follow the sine law in the erected triangles:
/// `|A1 A3'| = a12 * w2 / w3` and `|A1 A2'| = a13 * w3 / w2`.
pub fn primed_vertices(canonical: &WeightedTriple) -> Result<PrimedVertices, Error> {
    debug_assert!(is_canonical(canonical), "input must be in the canonical frame");
    if canonical.is_collinear() {
        return Err(Error::CollinearVertices);
    }
    if let Case::Absorbed(vertex) = classify(canonical).case {
        return Err(Error::NotFloating { vertex });
    }
    let [_, w2, w3] = canonical.weights();
    let angles = equilibrium_angles(canonical.weights())?;
    let alpha_203 = angles.opposite[0];
    let alpha_213 = canonical.vertex_angle(0)?;
    let a12 = canonical.side(0, 1);
    let a13 = canonical.side(0, 2);

    let polar = |r: f64, angle: f64| Point2::new(r * angle.cos(), r * angle.sin());
    let a3_prime = polar(a12 * w2 / w3, -(std::f64::consts::PI - alpha_203));
    let a2_prime = polar(a13 * w3 / w2, alpha_213 + std::f64::consts::PI - alpha_203);
    Ok(PrimedVertices { a2_prime, a3_prime })
}

/// The two weighted Simpson lines, through `A2 A2'` and `A3 A3'`.
pub fn simpson_lines(canonical: &WeightedTriple, pv: &PrimedVertices) -> (Line, Line) {
    let a2 = canonical.vertex(1);
    let a3 = canonical.vertex(2);
    assert!(a2 != pv.a2_prime && a3 != pv.a3_prime, "primed vertex coincides with its partner");
    (Line::through(a2, pv.a2_prime), Line::through(a3, pv.a3_prime))
}

/// Solves via the Simpson-line intersection, reporting the result in the
/// input frame.
///
/// Absorbed instances are not an error: they short-circuit to the absorbed
/// vertex with `Method::Classifier` provenance. Collinear floating input is
/// rejected; the iterative oracle handles those.
pub fn solve_analytic(t: &WeightedTriple) -> Result<Solution, Error> {
    let classification = classify(t);
    if let Case::Absorbed(vertex) = classification.case {
        return Ok(Solution::absorbed(t, classification, vertex));
    }
    if t.is_collinear() {
        return Err(Error::CollinearVertices);
    }
    let (canonical, motion) = t.canonical_frame();
    let pv = primed_vertices(&canonical)?;
    let (l1, l2) = simpson_lines(&canonical, &pv);
    let point = l1
        .intersection(&l2)
        .expect("Simpson lines of a floating instance intersect");
    Ok(Solution::floating(
        t,
        classification,
        motion.apply(point),
        Method::Analytic,
        0,
    ))
}

fn is_canonical(t: &WeightedTriple) -> bool {
    let [a1, a2, a3] = t.vertices();
    let scale = t.diameter();
    a1.distance(Point2::ORIGIN) < 1e-9 * scale
        && a2.y.abs() < 1e-9 * scale
        && a2.x > 0.0
        && a3.y >= 0.0
}

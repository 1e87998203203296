//! Coordinate-free solution: the minimizer located by a polar pair about
//! `A1`, computed either from the three side lengths or from two central
//! angles of the circumscribed circle plus its radius.
//!
//! The derivation eliminates the radial unknown between the two sine-law
//! relations at `A1`, leaving a cotangent equation whose branch is fixed by
//! requiring the point inside the vertex angle. The segment-length derivative
//! identities used to obtain the first-order conditions live here as well.

use crate::equilibrium::{classify, equilibrium_angles, Case};
use crate::error::Error;
use crate::geometry::{Point2, WeightedTriple};

/// Location of the minimizer relative to the triangle's own frame: polar
/// coordinates about `A1`, with the angle measured from ray `A1 -> A3`
/// toward `A2`'s side of that ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularSolution {
    /// Angle between rays `A1 -> minimizer` and `A1 -> A3`, radians.
    pub angle: f64,
    /// Distance from `A1` to the minimizer.
    pub distance: f64,
}

/// Solves from the three side lengths and the weights.
///
/// `a12`, `a13`, `a23` are the side lengths opposite the usual labels. The
/// floating case is verified on a triangle reconstructed from the sides;
/// absorbed instances are rejected.
pub fn solve_angular_sides(
    a12: f64,
    a13: f64,
    a23: f64,
    weights: [f64; 3],
) -> Result<AngularSolution, Error> {
    let t = embed_from_sides(a12, a13, a23, weights)?;
    if let Case::Absorbed(vertex) = classify(&t).case {
        return Err(Error::NotFloating { vertex });
    }
    let alpha_213 = t.vertex_angle(0)?;
    solve_from(alpha_213, a13 / a12, a13, weights)
}

/// Solves from two central angles of the circumscribed circle and its radius.
///
/// `c13` and `c23` subtend sides `A1 A3` and `A2 A3`; the third central angle
/// is their complement to a full turn. Setting `radius = 1` makes the answer
/// depend on five scalars only.
pub fn solve_angular_circle(
    c13: f64,
    c23: f64,
    radius: f64,
    weights: [f64; 3],
) -> Result<AngularSolution, Error> {
    assert!(c13 > 0.0 && c23 > 0.0, "central angles must be positive");
    assert!(c13 + c23 < 2.0 * std::f64::consts::PI, "central angles exceed a full turn");
    assert!(radius > 0.0, "circumradius must be positive");

    // Chord lengths: a_ij = 2 R sin(c_ij / 2); the inscribed angle at A1 is
    // half the central angle over A2 A3.
    let a13 = 2.0 * radius * (c13 / 2.0).sin();
    let a12 = 2.0 * radius * ((c13 + c23) / 2.0).sin(); // sin(c12/2) = sin((c13+c23)/2)
    let a23 = 2.0 * radius * (c23 / 2.0).sin();
    let t = embed_from_sides(a12, a13, a23, weights)?;
    if let Case::Absorbed(vertex) = classify(&t).case {
        return Err(Error::NotFloating { vertex });
    }

    // The vertex angle at A1 is half the central angle over A2 A3, and the
    // side ratio reduces to a sine ratio of half central angles; the chord
    // a13 = 2 R sin(c13 / 2) scales the distance.
    let ratio = (c13 / 2.0).sin() / ((c13 + c23) / 2.0).sin();
    solve_from(c23 / 2.0, ratio, a13, weights)
}

/// Shared cotangent elimination. `alpha_213` is the vertex angle at `A1`,
/// `ratio` is `a13 / a12`, and `a13` scales the returned distance.
fn solve_from(
    alpha_213: f64,
    ratio: f64,
    a13: f64,
    weights: [f64; 3],
) -> Result<AngularSolution, Error> {
    let angles = equilibrium_angles(weights)?;
    let alpha_103 = angles.opposite[1];
    let alpha_102 = angles.opposite[2];
    let cot_102 = alpha_102.cos() / alpha_102.sin();
    let cot_103 = alpha_103.cos() / alpha_103.sin();

    let numerator = alpha_213.sin() - alpha_213.cos() * cot_102 - ratio * cot_103;
    let denominator = -alpha_213.cos() - alpha_213.sin() * cot_102 + ratio;

    // cot(angle) = numerator / denominator with sin(angle) > 0: take the
    // arccot branch in (0, pi) without forming the quotient.
    let mut angle = denominator.atan2(numerator);
    if angle <= 0.0 {
        angle += std::f64::consts::PI;
    }
    assert!(
        angle > 0.0 && angle < alpha_213,
        "solution must fall inside the vertex angle at A1 (got {angle}, vertex angle {alpha_213})"
    );

    let distance = a13 * (angle + alpha_103).sin() / alpha_103.sin();
    // Interior point: its distance from A1 stays below the farther of the
    // two adjacent sides.
    debug_assert!(distance > 0.0 && distance < (a13 / ratio).max(a13) * (1.0 + 1e-9));
    Ok(AngularSolution { angle, distance })
}

/// Places the polar pair back into the plane of `t`: at `distance` from `A1`,
/// rotated by `angle` off ray `A1 -> A3` toward `A2`'s side. The interior
/// requirement forces that rotation sense.
pub fn reconstruct_point(t: &WeightedTriple, s: AngularSolution) -> Point2 {
    let a1 = t.vertex(0);
    let toward_a3 = (t.vertex(2) - a1).normalized().expect("vertices distinct");
    let sense = if toward_a3.cross(t.vertex(1) - a1) >= 0.0 {
        1.0
    } else {
        -1.0
    };
    a1 + toward_a3.rotated(sense * s.angle).scale(s.distance)
}

/// Triangle embedded from side lengths: `A1` at the origin, `A2` on the
/// positive x-axis.
fn embed_from_sides(
    a12: f64,
    a13: f64,
    a23: f64,
    weights: [f64; 3],
) -> Result<WeightedTriple, Error> {
    if !(a12 > 0.0 && a13 > 0.0 && a23 > 0.0)
        || a12 + a13 <= a23
        || a12 + a23 <= a13
        || a13 + a23 <= a12
    {
        return Err(Error::CollinearVertices);
    }
    let cos_at_a1 = ((a12 * a12 + a13 * a13 - a23 * a23) / (2.0 * a12 * a13)).clamp(-1.0, 1.0);
    let alpha_213 = cos_at_a1.acos();
    WeightedTriple::new(
        [
            Point2::ORIGIN,
            Point2::new(a12, 0.0),
            Point2::new(a13 * alpha_213.cos(), a13 * alpha_213.sin()),
        ],
        weights,
    )
}

/// Measurements at an interior point `p` feeding the segment-length
/// derivatives: the distance back to `A1` and the angles at `p` between the
/// ray to `A1` and the rays to `A2` and `A3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationConfig {
    pub dist_to_a1: f64,
    /// Angle at the point between the rays toward `A1` and `A2`.
    pub angle_12: f64,
    /// Angle at the point between the rays toward `A1` and `A3`.
    pub angle_13: f64,
}

impl VariationConfig {
    /// Measures the configuration from an explicit point.
    pub fn measure(t: &WeightedTriple, p: Point2) -> Result<Self, Error> {
        for i in 0..3 {
            if p == t.vertex(i) {
                return Err(Error::PointAtVertex { vertex: i });
            }
        }
        let to_a1 = t.vertex(0) - p;
        Ok(VariationConfig {
            dist_to_a1: to_a1.norm(),
            angle_12: to_a1.angle_to(t.vertex(1) - p),
            angle_13: to_a1.angle_to(t.vertex(2) - p),
        })
    }
}

/// Derivative of the distance to `A2` as the point slides radially away from
/// `A1`: the projection formula gives `cos(angle_12)`.
pub fn ddist2_dradial(config: &VariationConfig) -> f64 {
    config.angle_12.cos()
}

/// Derivative of the distance to `A3` under the same radial slide.
pub fn ddist3_dradial(config: &VariationConfig) -> f64 {
    config.angle_13.cos()
}

/// Derivative of the distance to `A2` as the point rotates about `A1`, with
/// the polar angle growing away from ray `A1 -> A3` (toward `A2`).
pub fn ddist2_dangle(config: &VariationConfig) -> f64 {
    -config.dist_to_a1 * config.angle_12.sin()
}

/// Derivative of the distance to `A3` under the same rotation.
pub fn ddist3_dangle(config: &VariationConfig) -> f64 {
    config.dist_to_a1 * config.angle_13.sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    const SQRT3: f64 = 1.732_050_807_568_877_3;

    fn triple(vertices: [(f64, f64); 3], weights: [f64; 3]) -> WeightedTriple {
        WeightedTriple::new(
            [
                Point2::new(vertices[0].0, vertices[0].1),
                Point2::new(vertices[1].0, vertices[1].1),
                Point2::new(vertices[2].0, vertices[2].1),
            ],
            weights,
        )
        .unwrap()
    }

    #[test]
    fn equilateral_solution_is_the_circumcenter() {
        let s = solve_angular_sides(1.0, 1.0, 1.0, [1.0, 1.0, 1.0]).unwrap();
        assert!((s.angle - std::f64::consts::FRAC_PI_6).abs() < 1e-12);
        assert!((s.distance - 1.0 / SQRT3).abs() < 1e-12);
    }

    #[test]
    fn isosceles_with_matched_weights_bisects() {
        let s = solve_angular_sides(2.0, 2.0, 1.5, [1.5, 1.0, 1.0]).unwrap();
        let vertex_angle = ((2.0f64 * 2.0 + 2.0 * 2.0 - 1.5 * 1.5) / (2.0 * 2.0 * 2.0)).acos();
        assert!((s.angle - vertex_angle / 2.0).abs() < 1e-12);
    }

    #[test]
    fn skew_fixture_matches_oracle_measurements() {
        // Sides of the (0,0), (4,0), (1,3) triangle; polar pair measured at
        // A1 from the independently computed minimizer.
        let s = solve_angular_sides(4.0, 10.0f64.sqrt(), 18.0f64.sqrt(), [2.0, 3.0, 4.0]).unwrap();
        assert!((s.angle - 0.14105286408975315).abs() < 1e-12);
        assert!((s.distance - 2.7099834935275755).abs() < 1e-11);
    }

    #[test]
    fn degenerate_sides_are_rejected() {
        assert!(matches!(
            solve_angular_sides(1.0, 2.0, 3.0, [1.0, 1.0, 1.0]),
            Err(Error::CollinearVertices)
        ));
    }

    #[test]
    fn absorbed_weights_are_rejected() {
        assert!(matches!(
            solve_angular_sides(1.0, 1.0, 1.0, [10.0, 1.0, 1.0]),
            Err(Error::NotFloating { vertex: 0 })
        ));
    }

    #[test]
    fn circle_route_equilateral() {
        let c = 2.0 * std::f64::consts::FRAC_PI_3;
        let s = solve_angular_circle(c, c, 1.0 / SQRT3, [1.0, 1.0, 1.0]).unwrap();
        assert!((s.angle - std::f64::consts::FRAC_PI_6).abs() < 1e-12);
        assert!((s.distance - 1.0 / SQRT3).abs() < 1e-12);
        // Unit radius scales the distance to the circumradius itself.
        let s = solve_angular_circle(c, c, 1.0, [1.0, 1.0, 1.0]).unwrap();
        assert!((s.distance - 1.0).abs() < 1e-12);
    }

    #[test]
    fn circle_route_fixture() {
        // Frozen from the iterative oracle on the chord-reconstructed triangle.
        let s = solve_angular_circle(1.9, 2.6, 1.0, [2.0, 3.0, 4.0]).unwrap();
        assert!((s.angle - 0.27377234956275304).abs() < 1e-10);
        assert!((s.distance - 1.149_836_316_744_202).abs() < 1e-10);
    }

    #[test]
    fn circle_and_sides_routes_agree() {
        let t = triple([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)], [2.0, 3.0, 4.0]);
        let c = t.central_angles().unwrap();
        let r = t.circumcircle().unwrap().radius;
        let from_circle = solve_angular_circle(c.c13, c.c23, r, t.weights()).unwrap();
        let from_sides =
            solve_angular_sides(t.side(0, 1), t.side(0, 2), t.side(1, 2), t.weights()).unwrap();
        assert!((from_circle.angle - from_sides.angle).abs() < 1e-12);
        assert!((from_circle.distance - from_sides.distance).abs() < 1e-12);
    }

    #[test]
    fn reconstruct_equilateral_center() {
        let t = triple([(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2.0)], [1.0, 1.0, 1.0]);
        let p = reconstruct_point(
            &t,
            AngularSolution {
                angle: std::f64::consts::FRAC_PI_6,
                distance: 1.0 / SQRT3,
            },
        );
        assert!(p.distance(Point2::new(0.5, SQRT3 / 6.0)) < 1e-12);
    }

    #[test]
    fn zero_angle_reconstructs_on_the_a3_segment() {
        let t = triple([(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2.0)], [1.0, 1.0, 1.0]);
        let p = reconstruct_point(
            &t,
            AngularSolution {
                angle: 0.0,
                distance: 0.4,
            },
        );
        assert!(p.distance(Point2::new(0.4 * 0.5, 0.4 * SQRT3 / 2.0)) < 1e-12);
    }

    #[test]
    fn reconstruction_matches_the_coordinate_solver() {
        let t = triple([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)], [2.0, 3.0, 4.0]);
        let s = solve_angular_sides(t.side(0, 1), t.side(0, 2), t.side(1, 2), t.weights()).unwrap();
        let p = reconstruct_point(&t, s);
        let analytic = crate::analytic::solve_analytic(&t).unwrap();
        assert!(p.distance(analytic.point) < 1e-7);
    }

    #[test]
    fn reconstruction_handles_clockwise_triangles() {
        // Mirror the fixture so A2 sits clockwise from ray A1 -> A3.
        let t = triple([(0.0, 0.0), (4.0, 0.0), (1.0, -3.0)], [2.0, 3.0, 4.0]);
        let s = solve_angular_sides(t.side(0, 1), t.side(0, 2), t.side(1, 2), t.weights()).unwrap();
        let p = reconstruct_point(&t, s);
        let w = oracle::solve_weiszfeld(&t, 1e-13, 100_000).unwrap();
        assert!(p.distance(w.point) < 1e-8);
    }

    #[test]
    fn radial_derivative_fixtures() {
        let right = VariationConfig {
            dist_to_a1: 1.0,
            angle_12: std::f64::consts::FRAC_PI_2,
            angle_13: 0.0,
        };
        assert_eq!(ddist2_dradial(&right), std::f64::consts::FRAC_PI_2.cos());
        assert!(ddist2_dradial(&right).abs() < 1e-16);
        assert_eq!(ddist3_dradial(&right), 1.0);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let t = triple([(0.2, -0.4), (3.6, 0.8), (1.1, 2.9)], [1.0, 1.0, 1.0]);
        let p = Point2::new(1.4, 1.0);
        let config = VariationConfig::measure(&t, p).unwrap();

        // Polar parametrization about A1 matching the solver's convention.
        let a1 = t.vertex(0);
        let toward_a3 = (t.vertex(2) - a1).normalized().unwrap();
        let sense = if toward_a3.cross(t.vertex(1) - a1) >= 0.0 { 1.0 } else { -1.0 };
        let base_r = (p - a1).norm();
        let base_angle = {
            let to_p = (p - a1).normalized().unwrap();
            toward_a3.angle_to(to_p)
        };
        let place = |r: f64, angle: f64| a1 + toward_a3.rotated(sense * angle).scale(r);
        assert!(place(base_r, base_angle).distance(p) < 1e-12);

        let h = 1e-6;
        let fd = |f: &dyn Fn(f64) -> f64, x: f64| (f(x + h) - f(x - h)) / (2.0 * h);

        let dist2_of_r = |r: f64| place(r, base_angle).distance(t.vertex(1));
        let dist3_of_r = |r: f64| place(r, base_angle).distance(t.vertex(2));
        let dist2_of_angle = |a: f64| place(base_r, a).distance(t.vertex(1));
        let dist3_of_angle = |a: f64| place(base_r, a).distance(t.vertex(2));

        assert!((fd(&dist2_of_r, base_r) - ddist2_dradial(&config)).abs() < 1e-6);
        assert!((fd(&dist3_of_r, base_r) - ddist3_dradial(&config)).abs() < 1e-6);
        assert!((fd(&dist2_of_angle, base_angle) - ddist2_dangle(&config)).abs() < 1e-6);
        assert!((fd(&dist3_of_angle, base_angle) - ddist3_dangle(&config)).abs() < 1e-6);
    }

    #[test]
    fn first_order_conditions_hold_at_the_solution() {
        let t = triple([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)], [2.0, 3.0, 4.0]);
        let s = solve_angular_sides(t.side(0, 1), t.side(0, 2), t.side(1, 2), t.weights()).unwrap();
        let p = reconstruct_point(&t, s);
        let config = VariationConfig::measure(&t, p).unwrap();
        let [w1, w2, w3] = t.weights();
        // Stationarity in the radial and angular directions.
        assert!((w2 * config.angle_12.cos() + w3 * config.angle_13.cos() + w1).abs() < 1e-8);
        assert!((w2 * config.angle_12.sin() - w3 * config.angle_13.sin()).abs() < 1e-8);
    }
}

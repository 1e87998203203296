//! Independent ground truth: direct minimization of the weighted distance
//! sum, used to validate every closed-form solver and construction.
//!
//! Two unrelated schemes are provided so they can cross-check each other: the
//! classical Weiszfeld fixed-point iteration and a recursively refined grid
//! search over the bounding box.

use crate::equilibrium::{classify, equilibrium_residual, pull_vector, Case, Classification};
use crate::error::Error;
use crate::geometry::{Point2, Vec2, WeightedTriple};

/// Default Weiszfeld convergence tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default Weiszfeld iteration cap.
pub const DEFAULT_MAX_ITER: usize = 10_000;

/// How a solution was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Angular,
    Oracle,
    Construction,
    /// Absorbed case resolved by the vertex criterion alone; no solver ran.
    Classifier,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Analytic => "analytic",
            Method::Angular => "angular",
            Method::Oracle => "oracle",
            Method::Construction => "construction",
            Method::Classifier => "classifier",
        })
    }
}

/// A located minimizer with its objective value and equilibrium residual.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub point: Point2,
    /// Weighted distance sum at `point`.
    pub objective: f64,
    pub classification: Classification,
    /// Equilibrium residual at `point`; defined as 0 for absorbed solutions.
    pub residual: f64,
    pub method: Method,
    pub iterations: usize,
}

impl Solution {
    /// Builds the absorbed-case solution: the vertex itself, bitwise.
    pub(crate) fn absorbed(t: &WeightedTriple, classification: Classification, vertex: usize) -> Self {
        let point = t.vertex(vertex);
        Solution {
            point,
            objective: objective(t, point),
            classification,
            residual: 0.0,
            method: Method::Classifier,
            iterations: 0,
        }
    }

    pub(crate) fn floating(
        t: &WeightedTriple,
        classification: Classification,
        point: Point2,
        method: Method,
        iterations: usize,
    ) -> Self {
        Solution {
            point,
            objective: objective(t, point),
            classification,
            residual: equilibrium_residual(t, point).unwrap_or(0.0),
            method,
            iterations,
        }
    }
}

/// Weighted distance sum at `p`.
pub fn objective(t: &WeightedTriple, p: Point2) -> f64 {
    (0..3).map(|i| t.weight(i) * p.distance(t.vertex(i))).sum()
}

/// One step of the Weiszfeld fixed-point map. `p` must not sit on a vertex.
pub fn weiszfeld_step(t: &WeightedTriple, p: Point2) -> Result<Point2, Error> {
    let mut num = Vec2::new(0.0, 0.0);
    let mut den = 0.0;
    for i in 0..3 {
        let v = t.vertex(i);
        let d = p.distance(v);
        if d == 0.0 {
            return Err(Error::PointAtVertex { vertex: i });
        }
        let w = t.weight(i) / d;
        num = num + (v - Point2::ORIGIN).scale(w);
        den += w;
    }
    Ok(Point2::ORIGIN + num.scale(1.0 / den))
}

/// Weiszfeld iteration from the weighted centroid.
///
/// Absorbed instances short-circuit to the vertex after classification.
/// Convergence requires both the step size to drop below `tol * diameter`
/// and the equilibrium residual below `1e3 * tol`; exceeding `max_iter`
/// returns a convergence error carrying the best iterate reached.
pub fn solve_weiszfeld(t: &WeightedTriple, tol: f64, max_iter: usize) -> Result<Solution, Error> {
    assert!(tol > 0.0, "tolerance must be positive");
    let classification = classify(t);
    if let Case::Absorbed(vertex) = classification.case {
        return Ok(Solution::absorbed(t, classification, vertex));
    }

    let diameter = t.diameter();
    let mut p = weighted_centroid(t);
    let mut best = p;
    let mut best_objective = objective(t, p);

    for iteration in 1..=max_iter {
        // The fixed-point map is undefined on a vertex; in the floating case
        // the vertex is never the minimizer, so step off along the pull
        // direction, which is a descent direction there.
        if let Some(i) = (0..3).find(|&i| p.distance(t.vertex(i)) < 1e-13 * diameter.max(1.0)) {
            let pull = pull_vector(t, i);
            if pull.norm() <= t.weight(i) {
                return Ok(Solution::absorbed(t, classification, i));
            }
            let dir = pull.normalized().expect("floating pull is nonzero");
            p = t.vertex(i) + dir.scale(1e-9 * diameter);
        }

        let next = weiszfeld_step(t, p)?;
        let step = next.distance(p);
        let f_next = objective(t, next);
        debug_assert!(
            f_next <= best_objective * (1.0 + 1e-14),
            "Weiszfeld objective must not increase"
        );
        if f_next < best_objective {
            best_objective = f_next;
            best = next;
        }
        p = next;

        if step < tol * diameter {
            let residual = equilibrium_residual(t, p)?;
            if residual < 1e3 * tol {
                return Ok(Solution::floating(
                    t,
                    classification,
                    p,
                    Method::Oracle,
                    iteration,
                ));
            }
        }
    }

    let residual = equilibrium_residual(t, best).unwrap_or(f64::NAN);
    Err(Error::Convergence {
        iterations: max_iter,
        residual,
        best: Box::new(Solution::floating(
            t,
            classification,
            best,
            Method::Oracle,
            max_iter,
        )),
    })
}

/// Weiszfeld with the default tolerance and iteration cap.
pub fn solve(t: &WeightedTriple) -> Result<Solution, Error> {
    solve_weiszfeld(t, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

fn weighted_centroid(t: &WeightedTriple) -> Point2 {
    let mut sum = Vec2::new(0.0, 0.0);
    let mut total = 0.0;
    for i in 0..3 {
        sum = sum + (t.vertex(i) - Point2::ORIGIN).scale(t.weight(i));
        total += t.weight(i);
    }
    Point2::ORIGIN + sum.scale(1.0 / total)
}

/// Exhaustive grid search over the bounding box, recursively refined around
/// the best point. Independent of both the classifier and the fixed-point
/// map, which makes it a de-correlated second oracle.
///
/// Each level shrinks the search window tenfold, so `levels` buys roughly
/// `levels` extra decimal digits of position.
pub fn solve_grid_refine(t: &WeightedTriple, levels: usize) -> Solution {
    assert!(levels >= 1, "need at least one refinement level");
    const SUBDIV: i32 = 30; // grid points per half-axis; window shrinks by 10x

    let xs: Vec<f64> = t.vertices().iter().map(|v| v.x).collect();
    let ys: Vec<f64> = t.vertices().iter().map(|v| v.y).collect();
    let min = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    let mut center = Point2::new((min(&xs) + max(&xs)) / 2.0, (min(&ys) + max(&ys)) / 2.0);
    let mut half = 0.55 * (max(&xs) - min(&xs)).max(max(&ys) - min(&ys)).max(f64::MIN_POSITIVE);
    let mut best = center;
    let mut best_value = objective(t, best);
    let mut evaluations = 0usize;

    for _ in 0..levels {
        let step = half / SUBDIV as f64;
        for i in -SUBDIV..=SUBDIV {
            for j in -SUBDIV..=SUBDIV {
                let p = Point2::new(
                    center.x + i as f64 * step,
                    center.y + j as f64 * step,
                );
                let value = objective(t, p);
                evaluations += 1;
                if value < best_value {
                    best_value = value;
                    best = p;
                }
            }
        }
        center = best;
        half = 3.0 * step; // keep a margin of grid cells around the winner
    }

    let classification = classify(t);
    let at_vertex = (0..3).find(|&i| best == t.vertex(i));
    Solution {
        point: best,
        objective: best_value,
        classification,
        residual: match at_vertex {
            Some(_) => 0.0,
            None => equilibrium_residual(t, best).unwrap_or(0.0),
        },
        method: Method::Oracle,
        iterations: evaluations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn equilateral() -> WeightedTriple {
        triple([(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2.0)], [1.0, 1.0, 1.0])
    }

    fn skew() -> WeightedTriple {
        triple([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)], [2.0, 3.0, 4.0])
    }

    #[test]
    fn objective_fixtures() {
        let t = equilateral();
        // At a vertex: two unit sides remain.
        assert!((objective(&t, Point2::new(0.0, 0.0)) - 2.0).abs() < 1e-12);
        // At the center: three circumradii of 1/sqrt(3).
        let center = Point2::new(0.5, SQRT3 / 6.0);
        assert!((objective(&t, center) - SQRT3).abs() < 1e-12);
    }

    #[test]
    fn weiszfeld_finds_symmetric_center() {
        let s = solve_weiszfeld(&equilateral(), 1e-10, DEFAULT_MAX_ITER).unwrap();
        assert!(s.point.distance(Point2::new(0.5, SQRT3 / 6.0)) < 1e-9);
        assert_eq!(s.method, Method::Oracle);
        assert!(s.residual < 1e-7);
    }

    #[test]
    fn absorbed_short_circuits_to_the_vertex() {
        let t = triple([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)], [10.0, 1.0, 1.0]);
        let s = solve(&t).unwrap();
        assert_eq!(s.point, t.vertex(0)); // bitwise
        assert_eq!(s.iterations, 0);
        assert_eq!(s.method, Method::Classifier);
        assert_eq!(s.residual, 0.0);
    }

    #[test]
    fn weiszfeld_skew_fixture() {
        // Independently computed minimizer of the (2, 3, 4)-weighted instance.
        let s = solve_weiszfeld(&skew(), 1e-13, 100_000).unwrap();
        let expected = Point2::new(1.2098948113071188, 2.4249051694373605);
        assert!(s.point.distance(expected) < 1e-9);
        assert!(s.residual < 1e-10);
        assert!((s.objective - 18.958570633448794).abs() < 1e-11);
    }

    #[test]
    fn objective_never_exceeds_vertex_values() {
        let t = skew();
        let s = solve(&t).unwrap();
        for v in t.vertices() {
            assert!(s.objective <= objective(&t, v) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn grid_refine_agrees_with_weiszfeld() {
        let t = skew();
        let grid = solve_grid_refine(&t, 6);
        let weis = solve_weiszfeld(&t, 1e-13, 100_000).unwrap();
        assert!(grid.point.distance(weis.point) < 1e-5);
        assert!((grid.objective - weis.objective).abs() < 1e-9);
    }

    #[test]
    fn grid_refine_converges_to_absorbed_vertex() {
        let t = triple([(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)], [10.0, 1.0, 1.0]);
        let s = solve_grid_refine(&t, 6);
        assert!(s.point.distance(t.vertex(0)) < 1e-4);
    }

    #[test]
    fn grid_refine_center_fixture() {
        let s = solve_grid_refine(&equilateral(), 5);
        assert!(s.point.distance(Point2::new(0.5, SQRT3 / 6.0)) < 1e-4);
    }

    #[test]
    fn objective_decreases_monotonically() {
        let t = skew();
        let mut p = Point2::new(3.9, 0.1); // deliberately poor start
        let mut f = objective(&t, p);
        for _ in 0..200 {
            p = weiszfeld_step(&t, p).unwrap();
            let f_next = objective(&t, p);
            assert!(f_next <= f * (1.0 + 1e-14));
            f = f_next;
        }
    }

    #[test]
    fn convergence_failure_carries_best_iterate() {
        let err = solve_weiszfeld(&skew(), 1e-13, 3).unwrap_err();
        match err {
            Error::Convergence { iterations, best, .. } => {
                assert_eq!(iterations, 3);
                assert!(best.point.distance(Point2::new(1.2098948113071188, 2.4249051694373605)) < 1.0);
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }
}

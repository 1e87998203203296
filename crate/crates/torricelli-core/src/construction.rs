//! Ruler-and-compass style solutions realized as numeric construction traces,
//! plus SVG rendering.
//!
//! Two constructions are provided. The Simpson-line construction transfers
//! the weight ratios into two auxiliary apexes via similar right triangles
//! and intersects the lines joining each apex to its opposite vertex. The
//! rotation construction (for equal first and second weights) rotates the
//! triangle about `A3` so the weighted path straightens into a line, then
//! intersects that chain line with its preimage.

use std::collections::HashSet;

use crate::equilibrium::{classify, Case};
use crate::error::Error;
use crate::geometry::{circumcircle_of, Circle, Line, Point2, RigidMotion, WeightedTriple};
use crate::oracle::{Method, Solution};

/// Fraction of the shortest triangle side used to draw the weight triangle.
/// Only its angles feed the construction, so the rescale does not affect the
/// mathematics.
const WEIGHT_TRIANGLE_SCALE: f64 = 0.25;

/// A drawable step of a construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Primitive {
    Point { label: String, at: Point2 },
    Segment { label: String, from: Point2, to: Point2 },
    Circle { label: String, circle: Circle },
    Annotation { text: String, anchor: Point2 },
}

/// Ordered list of primitives with the construction's answer.
///
/// Labels are unique within a trace; the result point agrees with the
/// iterative oracle on valid input.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionTrace {
    pub steps: Vec<Primitive>,
    pub result_point: Point2,
}

impl ConstructionTrace {
    /// The solution carried by this trace, re-derived on the instance.
    pub fn solution(&self, t: &WeightedTriple) -> Solution {
        Solution::floating(t, classify(t), self.result_point, Method::Construction, 0)
    }
}

struct TraceBuilder {
    steps: Vec<Primitive>,
    labels: HashSet<String>,
}

impl TraceBuilder {
    fn new() -> Self {
        Self {
            steps: Vec::new(),
            labels: HashSet::new(),
        }
    }

    fn claim(&mut self, label: &str) -> String {
        assert!(
            self.labels.insert(label.to_string()),
            "duplicate construction label {label:?}"
        );
        label.to_string()
    }

    fn point(&mut self, label: &str, at: Point2) {
        let label = self.claim(label);
        self.steps.push(Primitive::Point { label, at });
    }

    fn segment(&mut self, label: &str, from: Point2, to: Point2) {
        let label = self.claim(label);
        self.steps.push(Primitive::Segment { label, from, to });
    }

    fn circle(&mut self, label: &str, circle: Circle) {
        let label = self.claim(label);
        self.steps.push(Primitive::Circle { label, circle });
    }

    fn annotation(&mut self, text: &str, anchor: Point2) {
        self.steps.push(Primitive::Annotation {
            text: text.to_string(),
            anchor,
        });
    }

    fn finish(self, result_point: Point2) -> ConstructionTrace {
        ConstructionTrace {
            steps: self.steps,
            result_point,
        }
    }
}

/// Simpson-line construction.
///
/// The trace records the rescaled weight triangle at `A1` (its apex angle is
/// the supplement of the sight angle opposite `A1`), the two similar-triangle
/// length transfers producing the apex distances, the apexes themselves, the
/// two Simpson lines, and the circles through `(A1, A3', A2)` and
/// `(A1, A2', A3)` that both pass through the result.
pub fn construct_simpson(t: &WeightedTriple) -> Result<ConstructionTrace, Error> {
    if let Case::Absorbed(vertex) = classify(t).case {
        return Err(Error::NotFloating { vertex });
    }
    if t.is_collinear() {
        return Err(Error::CollinearVertices);
    }

    let (canonical, motion) = t.canonical_frame();
    let [a1, a2, a3] = canonical.vertices();
    let [w1, w2, w3] = canonical.weights();
    let a12 = canonical.side(0, 1);
    let a13 = canonical.side(0, 2);
    let shortest = a12.min(a13).min(canonical.side(1, 2));
    let scale = WEIGHT_TRIANGLE_SCALE * shortest / w1.max(w2).max(w3);

    let mut trace = TraceBuilder::new();
    trace.point("A1", a1);
    trace.point("A2", a2);
    trace.point("A3", a3);
    trace.segment("a12", a1, a2);
    trace.segment("a13", a1, a3);
    trace.segment("a23", a2, a3);

    // Weight triangle at A1: |A1 K| = w3 and |A1 L| = w2 along with
    // |K L| = w1 (all rescaled). Intersecting the two compass circles below
    // the axis puts L on the same side as the first apex.
    let k = Point2::new(scale * w3, 0.0);
    let l = {
        let d = scale * w3;
        let r1 = scale * w2;
        let r2 = scale * w1;
        let x = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
        let y_sq = r1 * r1 - x * x;
        assert!(y_sq > 0.0, "weight triangle exists in the floating case");
        Point2::new(x, -y_sq.sqrt())
    };
    trace.point("K", k);
    trace.point("L", l);
    trace.segment("A1L", a1, l);
    trace.segment("KL", k, l);
    // Apex angle of the drawn weight triangle, reused as the erection angle
    // on both sides of A1.
    let erect_angle = (k - a1).angle_to(l - a1);

    // First transfer: right triangles over the A1 A2 axis give
    // |A1 I| = a12 * w2 / w3.
    let g = Point2::new(a12 + scale * w3, 0.0);
    let h = Point2::new(g.x, scale * w2);
    let i = Line::through(a2, h)
        .intersection(&Line::through(a1, Point2::new(0.0, 1.0)))
        .expect("transfer line crosses the perpendicular at A1");
    trace.point("G", g);
    trace.point("H", h);
    trace.point("I", i);
    trace.segment("GH", g, h);
    trace.segment("IH", i, h);
    trace.segment("A1I", a1, i);

    // Second transfer, along side A1 A3: |A1 P| = a13 * w3 / w2.
    let u13 = (a3 - a1).normalized().expect("vertices distinct");
    let toward_a2 = u13.rotated(-std::f64::consts::FRAC_PI_2); // A2 sits clockwise off ray A1 A3
    let q = a1 + u13.scale(a13 + scale * w2);
    let r = q + toward_a2.scale(scale * w3);
    let p = Line::through(a3, r)
        .intersection(&Line::through(a1, a1 + u13.rotated(std::f64::consts::FRAC_PI_2)))
        .expect("transfer line crosses the perpendicular at A1");
    trace.point("Q", q);
    trace.point("R", r);
    trace.point("P", p);
    trace.segment("QR", q, r);
    trace.segment("PR", p, r);
    trace.segment("A1P", a1, p);

    // Apexes: transferred lengths swung onto the erected rays.
    let a3_prime = a1 + (l - a1).normalized().unwrap().scale(a1.distance(i));
    let a2_prime = a1 + u13.rotated(erect_angle).scale(a1.distance(p));
    trace.point("A3'", a3_prime);
    trace.point("A2'", a2_prime);

    trace.circle("c1", circumcircle_of(a1, a3_prime, a2));
    trace.circle("c2", circumcircle_of(a1, a2_prime, a3));

    trace.segment("A2A2'", a2, a2_prime);
    trace.segment("A3A3'", a3, a3_prime);
    let result = Line::through(a2, a2_prime)
        .intersection(&Line::through(a3, a3_prime))
        .expect("Simpson lines of a floating instance intersect");
    trace.point("AF", result);

    let trace = map_trace(trace.finish(result), &motion);
    debug_assert!(
        crate::equilibrium::equilibrium_residual(t, trace.result_point).unwrap_or(f64::INFINITY)
            < 1e-8,
        "construction result must satisfy the equilibrium condition"
    );
    Ok(trace)
}

/// Rotation angle of the generalized rotation construction, radians.
///
/// Requires the first two weights equal (after normalizing to unit sum) and
/// above 1/4. With equal weights throughout this is 60 degrees.
pub fn hofmann_rotation_angle(weights: [f64; 3]) -> Result<f64, Error> {
    let total: f64 = weights.iter().sum();
    let w1 = weights[0] / total;
    let w2 = weights[1] / total;
    if (w1 - w2).abs() > 1e-12 {
        return Err(Error::UnequalRotationWeights { w1, w2 });
    }
    if w1 <= 0.25 {
        return Err(Error::RotationWeightTooSmall(w1));
    }
    // Sight angle over side A1 A2 for the normalized symmetric weights.
    let cos_102 = -1.0 + (1.0 - 2.0 * w1).powi(2) / (2.0 * w1 * w1);
    Ok(std::f64::consts::PI - cos_102.clamp(-1.0, 1.0).acos())
}

/// Generalized rotation construction for `w1 = w2`.
///
/// Rotates the triangle about `A3` through the supplement of the sight angle
/// over `A1 A2`; the weighted path then straightens, so `A2`, the minimizer,
/// its rotated image, and the image of `A1` line up. The result is the
/// intersection of that chain line with its preimage under the rotation.
pub fn construct_hofmann(t: &WeightedTriple) -> Result<ConstructionTrace, Error> {
    let rotation = hofmann_rotation_angle(t.weights())?;
    let gamma3 = t.vertex_angle(2)?;
    if gamma3 <= rotation {
        return Err(Error::RotationAngleCondition {
            angle: gamma3,
            bound: rotation,
        });
    }
    if let Case::Absorbed(vertex) = classify(t).case {
        return Err(Error::NotFloating { vertex });
    }

    let [a1, a2, a3] = t.vertices();
    // Rotate away from A2: against the triangle's orientation.
    let orientation = (a2 - a1).cross(a3 - a1).signum();
    let signed = -orientation * rotation;
    let rotate = |p: Point2, angle: f64| a3 + (p - a3).rotated(angle);

    let a1_image = rotate(a1, signed);
    let a2_image = rotate(a2, signed);
    let a2_preimage = rotate(a2, -signed);

    let chain = Line::through(a2, a1_image);
    let preimage = Line::through(a1, a2_preimage);
    let result = chain
        .intersection(&preimage)
        .expect("chain line and its preimage intersect off the rotation center");
    let result_image = rotate(result, signed);

    let mut trace = TraceBuilder::new();
    trace.point("A1", a1);
    trace.point("A2", a2);
    trace.point("A3", a3);
    trace.segment("a12", a1, a2);
    trace.segment("a13", a1, a3);
    trace.segment("a23", a2, a3);
    trace.point("A1'", a1_image);
    trace.point("A2'", a2_image);
    trace.segment("A3A1'", a3, a1_image);
    trace.segment("A3A2'", a3, a2_image);
    trace.segment("A1'A2'", a1_image, a2_image);
    trace.point("A2''", a2_preimage);
    trace.segment("A2A1'", a2, a1_image);
    trace.segment("A1A2''", a1, a2_preimage);
    trace.point("AF", result);
    trace.point("AF'", result_image);
    trace.annotation(
        &format!("rotation {:.6} deg about A3", rotation.to_degrees()),
        a3,
    );

    debug_assert!(
        (a3.distance(result) - a3.distance(result_image)).abs() < 1e-10 * t.diameter(),
        "rotation preserves the distance to its center"
    );
    debug_assert!(
        crate::equilibrium::equilibrium_residual(t, result).unwrap_or(f64::INFINITY) < 1e-8,
        "construction result must satisfy the equilibrium condition"
    );
    Ok(trace.finish(result))
}

fn map_trace(trace: ConstructionTrace, motion: &RigidMotion) -> ConstructionTrace {
    let steps = trace
        .steps
        .into_iter()
        .map(|step| match step {
            Primitive::Point { label, at } => Primitive::Point {
                label,
                at: motion.apply(at),
            },
            Primitive::Segment { label, from, to } => Primitive::Segment {
                label,
                from: motion.apply(from),
                to: motion.apply(to),
            },
            Primitive::Circle { label, circle } => Primitive::Circle {
                label,
                circle: Circle::new(motion.apply(circle.center), circle.radius),
            },
            Primitive::Annotation { text, anchor } => Primitive::Annotation {
                text,
                anchor: motion.apply(anchor),
            },
        })
        .collect();
    ConstructionTrace {
        steps,
        result_point: motion.apply(trace.result_point),
    }
}

/// Renders a trace as a standalone SVG 1.1 document.
///
/// The viewBox fits every primitive with a 5% margin, the y-axis is flipped
/// so mathematical "up" renders up, and coordinates are written with a fixed
/// six-decimal format so identical traces produce byte-identical output.
pub fn emit_svg(trace: &ConstructionTrace, width_px: u32) -> String {
    assert!(!trace.steps.is_empty(), "cannot render an empty trace");
    assert!(width_px >= 100, "rendering needs at least 100 px of width");

    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut cover = |p: Point2, pad: f64| {
        min_x = min_x.min(p.x - pad);
        min_y = min_y.min(p.y - pad);
        max_x = max_x.max(p.x + pad);
        max_y = max_y.max(p.y + pad);
    };
    for step in &trace.steps {
        match step {
            Primitive::Point { at, .. } => cover(*at, 0.0),
            Primitive::Segment { from, to, .. } => {
                cover(*from, 0.0);
                cover(*to, 0.0);
            }
            Primitive::Circle { circle, .. } => cover(circle.center, circle.radius),
            Primitive::Annotation { anchor, .. } => cover(*anchor, 0.0),
        }
    }

    let extent = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 0.05 * extent;
    let width = max_x - min_x + 2.0 * margin;
    let height = max_y - min_y + 2.0 * margin;
    let scale = width_px as f64 / width;
    let px = |x: f64| (x - min_x + margin) * scale;
    let py = |y: f64| (max_y + margin - y) * scale;
    let height_px = height * scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.6}\" height=\"{:.6}\" viewBox=\"0 0 {:.6} {:.6}\">\n",
        width_px as f64, height_px, width_px as f64, height_px,
    ));

    // Depth order: circles under segments under points and text.
    for step in &trace.steps {
        if let Primitive::Circle { label, circle } = step {
            out.push_str(&format!(
                "  <circle class=\"circle\" id=\"{}\" cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n",
                escape(label),
                px(circle.center.x),
                py(circle.center.y),
                circle.radius * scale,
            ));
        }
    }
    for step in &trace.steps {
        if let Primitive::Segment { label, from, to } = step {
            out.push_str(&format!(
                "  <line class=\"segment\" id=\"{}\" x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"#000000\" stroke-width=\"1\"/>\n",
                escape(label),
                px(from.x),
                py(from.y),
                px(to.x),
                py(to.y),
            ));
        }
    }
    for step in &trace.steps {
        match step {
            Primitive::Point { label, at } => {
                out.push_str(&format!(
                    "  <circle class=\"point\" id=\"{}\" cx=\"{:.6}\" cy=\"{:.6}\" r=\"3\" fill=\"#000000\"/>\n",
                    escape(label),
                    px(at.x),
                    py(at.y),
                ));
                out.push_str(&format!(
                    "  <text class=\"point-label\" x=\"{:.6}\" y=\"{:.6}\" font-size=\"12\">{}</text>\n",
                    px(at.x) + 5.0,
                    py(at.y) - 5.0,
                    escape(label),
                ));
            }
            Primitive::Annotation { text, anchor } => {
                out.push_str(&format!(
                    "  <text class=\"annotation\" x=\"{:.6}\" y=\"{:.6}\" font-size=\"12\">{}</text>\n",
                    px(anchor.x) + 5.0,
                    py(anchor.y) + 15.0,
                    escape(text),
                ));
            }
            _ => {}
        }
    }
    out.push_str("</svg>\n");
    out
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

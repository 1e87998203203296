//! Planar primitives, rigid motions, and triangle measurements shared by the
//! solvers and constructions.
//!
//! All angles are radians. Degeneracy is decided scale-relatively: a triangle
//! counts as collinear when its doubled area falls below
//! [`COLLINEAR_REL_EPS`] times the squared longest side.

use crate::error::Error;

/// Doubled-area threshold, relative to the squared longest side, below which
/// three vertices are treated as collinear.
pub const COLLINEAR_REL_EPS: f64 = 1e-12;

/// A point in the plane. Coordinates are finite by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// A displacement between points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    /// Builds a point, rejecting NaN and infinite coordinates.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite(),
            "point coordinates must be finite (got {x}, {y})"
        );
        Self { x, y }
    }

    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn distance(self, other: Point2) -> f64 {
        (other - self).norm()
    }
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn scale(self, factor: f64) -> Vec2 {
        Vec2::new(self.x * factor, self.y * factor)
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec2> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(self.scale(1.0 / n))
        }
    }

    /// Rotates counterclockwise by `angle` radians.
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (sin, cos) = angle.sin_cos();
        Vec2::new(cos * self.x - sin * self.y, sin * self.x + cos * self.y)
    }

    /// Angle between two vectors, in [0, pi]. Robust near 0 and pi.
    pub fn angle_to(self, other: Vec2) -> f64 {
        self.cross(other).abs().atan2(self.dot(other))
    }
}

impl std::ops::Sub for Point2 {
    type Output = Vec2;
    fn sub(self, rhs: Point2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Add<Vec2> for Point2 {
    type Output = Point2;
    fn add(self, rhs: Vec2) -> Point2 {
        Point2 {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

/// Euclidean distance between two points.
pub fn distance(p: Point2, q: Point2) -> f64 {
    p.distance(q)
}

/// A circle with strictly positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Self {
        assert!(radius > 0.0, "circle radius must be positive (got {radius})");
        Self { center, radius }
    }
}

/// A line in homogeneous form `a*x + b*y + c = 0`.
///
/// Intersections are computed as cross products of coefficient triples, which
/// stays well-defined for vertical lines.
#[derive(Debug, Clone, Copy)]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line {
    /// Line through two distinct points.
    pub fn through(p: Point2, q: Point2) -> Self {
        // Cross product of the homogeneous point triples (x, y, 1).
        Line {
            a: p.y - q.y,
            b: q.x - p.x,
            c: p.x * q.y - p.y * q.x,
        }
    }

    /// Intersection point of two lines; `None` when parallel.
    pub fn intersection(&self, other: &Line) -> Option<Point2> {
        let x = self.b * other.c - self.c * other.b;
        let y = self.c * other.a - self.a * other.c;
        let w = self.a * other.b - self.b * other.a;
        if w == 0.0 || !(x / w).is_finite() || !(y / w).is_finite() {
            return None;
        }
        Some(Point2::new(x / w, y / w))
    }

    /// Signed distance residual of a point (unnormalized).
    pub fn eval(&self, p: Point2) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }
}

/// A direct or reflecting rigid motion: reflect across the x-axis (optional),
/// rotate by `rotation`, then translate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub rotation: f64,
    pub translation: Vec2,
    pub reflect: bool,
}

impl RigidMotion {
    pub fn identity() -> Self {
        Self {
            rotation: 0.0,
            translation: Vec2::new(0.0, 0.0),
            reflect: false,
        }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        let v = if self.reflect {
            Vec2::new(p.x, -p.y)
        } else {
            Vec2::new(p.x, p.y)
        };
        Point2::ORIGIN + v.rotated(self.rotation) + self.translation
    }

    /// Inverse motion: applying a motion and then its inverse is the identity.
    pub fn inverse(&self) -> RigidMotion {
        // apply = T . R(theta) . F, so inverse = F . R(-theta) . T(-t); as a
        // motion in the same normal form the reflection conjugates the
        // rotation sign.
        let rotation = if self.reflect {
            self.rotation
        } else {
            -self.rotation
        };
        let back = self.translation.scale(-1.0).rotated(-self.rotation);
        let translation = if self.reflect {
            Vec2::new(back.x, -back.y)
        } else {
            back
        };
        RigidMotion {
            rotation,
            translation,
            reflect: self.reflect,
        }
    }
}

impl std::ops::Add<Vec2> for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

/// Three planar points with strictly positive weights: the problem instance.
///
/// Vertices are pairwise distinct; collinearity is allowed here and is checked
/// by the consumers that cannot tolerate it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedTriple {
    vertices: [Point2; 3],
    weights: [f64; 3],
}

impl WeightedTriple {
    pub fn new(vertices: [Point2; 3], weights: [f64; 3]) -> Result<Self, Error> {
        for (index, &value) in weights.iter().enumerate() {
            if value <= 0.0 || !value.is_finite() {
                return Err(Error::NonPositiveWeight { index, value });
            }
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                if vertices[i] == vertices[j] {
                    return Err(Error::CoincidentVertices { i, j });
                }
            }
        }
        Ok(Self { vertices, weights })
    }

    pub fn vertices(&self) -> [Point2; 3] {
        self.vertices
    }

    pub fn weights(&self) -> [f64; 3] {
        self.weights
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    /// Length of the side between vertices `i` and `j`.
    pub fn side(&self, i: usize, j: usize) -> f64 {
        self.vertices[i].distance(self.vertices[j])
    }

    /// Longest side; also the diameter of the vertex set.
    pub fn diameter(&self) -> f64 {
        self.side(0, 1).max(self.side(1, 2)).max(self.side(0, 2))
    }

    /// Absolute doubled area (cross product magnitude of two edges).
    pub fn doubled_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        (b - a).cross(c - a).abs()
    }

    /// Scale-relative collinearity test (see [`COLLINEAR_REL_EPS`]).
    pub fn is_collinear(&self) -> bool {
        let longest = self.diameter();
        self.doubled_area() < COLLINEAR_REL_EPS * longest * longest
    }

    /// Replaces the weights, keeping the vertices.
    pub fn with_weights(&self, weights: [f64; 3]) -> Result<Self, Error> {
        Self::new(self.vertices, weights)
    }

    /// Applies a rigid motion to every vertex.
    pub fn transformed(&self, motion: &RigidMotion) -> Self {
        Self {
            vertices: [
                motion.apply(self.vertices[0]),
                motion.apply(self.vertices[1]),
                motion.apply(self.vertices[2]),
            ],
            weights: self.weights,
        }
    }

    /// Interior angle at vertex `i`, in (0, pi).
    ///
    /// Fails on collinear input, where the angle would collapse to 0 or pi.
    pub fn vertex_angle(&self, i: usize) -> Result<f64, Error> {
        if self.is_collinear() {
            return Err(Error::CollinearVertices);
        }
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        let u = self.vertices[j] - self.vertices[i];
        let v = self.vertices[k] - self.vertices[i];
        Ok(u.angle_to(v))
    }

    /// Circumscribed circle through the three vertices.
    pub fn circumcircle(&self) -> Result<Circle, Error> {
        if self.is_collinear() {
            return Err(Error::CollinearVertices);
        }
        let [a, b, c] = self.vertices;
        Ok(circumcircle_of(a, b, c))
    }

    /// Central angles of the circumscribed circle; each subtends one side and
    /// equals twice the inscribed angle at the opposite vertex. The three sum
    /// to 2*pi; for an obtuse triangle one of them exceeds pi.
    pub fn central_angles(&self) -> Result<CentralAngles, Error> {
        Ok(CentralAngles {
            c12: 2.0 * self.vertex_angle(2)?,
            c23: 2.0 * self.vertex_angle(0)?,
            c13: 2.0 * self.vertex_angle(1)?,
        })
    }

    /// Rigid motion into the canonical frame: `A1` at the origin, `A2` on the
    /// positive x-axis, `A3` in the upper half plane (a reflection is recorded
    /// when needed). The returned motion maps canonical coordinates back to
    /// the input frame.
    pub fn canonical_frame(&self) -> (WeightedTriple, RigidMotion) {
        let [a1, a2, a3] = self.vertices;
        let axis = a2 - a1;
        let rotation = axis.y.atan2(axis.x);
        let reflect = (a3 - a1).rotated(-rotation).y < 0.0;
        let motion = RigidMotion {
            rotation,
            translation: a1 - Point2::ORIGIN,
            reflect,
        };
        let inv = motion.inverse();
        let canonical = WeightedTriple {
            vertices: [inv.apply(a1), inv.apply(a2), inv.apply(a3)],
            weights: self.weights,
        };
        (canonical, motion)
    }
}

/// Central angles `c_ij` of the circumcircle, subtending side `AiAj`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentralAngles {
    pub c12: f64,
    pub c23: f64,
    pub c13: f64,
}

impl CentralAngles {
    pub fn sum(&self) -> f64 {
        self.c12 + self.c23 + self.c13
    }
}

/// Circumcircle of three non-collinear points.
pub fn circumcircle_of(a: Point2, b: Point2, c: Point2) -> Circle {
    // Perpendicular-bisector intersection in determinant form, anchored at
    // `c` to reduce cancellation.
    let ax = a.x - c.x;
    let ay = a.y - c.y;
    let bx = b.x - c.x;
    let by = b.y - c.y;
    let d = 2.0 * (ax * by - ay * bx);
    let a_sq = ax * ax + ay * ay;
    let b_sq = bx * bx + by * by;
    let ux = (a_sq * by - b_sq * ay) / d;
    let uy = (b_sq * ax - a_sq * bx) / d;
    let center = Point2::new(ux + c.x, uy + c.y);
    Circle::new(center, center.distance(a))
}

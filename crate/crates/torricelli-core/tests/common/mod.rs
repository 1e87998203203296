//! Shared instance generators for the integration suites. All sampling is
//! seeded so failures reproduce.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torricelli_core::{classify, Point2, RigidMotion, Vec2, WeightedTriple};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertex coordinates uniform in [-10, 10]^2, weights uniform in [0.5, 2].
pub fn random_triple(rng: &mut ChaCha8Rng) -> WeightedTriple {
    loop {
        let vertex = |rng: &mut ChaCha8Rng| {
            Point2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0))
        };
        let vertices = [vertex(rng), vertex(rng), vertex(rng)];
        let weights = [
            rng.gen_range(0.5..2.0),
            rng.gen_range(0.5..2.0),
            rng.gen_range(0.5..2.0),
        ];
        if let Ok(t) = WeightedTriple::new(vertices, weights) {
            if !t.is_collinear() {
                return t;
            }
        }
    }
}

/// Rejection-samples [`random_triple`] down to the floating case.
pub fn random_floating(rng: &mut ChaCha8Rng) -> WeightedTriple {
    loop {
        let t = random_triple(rng);
        if classify(&t).is_floating() {
            return t;
        }
    }
}

#[allow(dead_code)] // each test binary uses its own subset of these helpers
pub fn random_motion(rng: &mut ChaCha8Rng) -> RigidMotion {
    RigidMotion {
        rotation: rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
        translation: Vec2::new(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0)),
        reflect: rng.gen_bool(0.5),
    }
}

/// Measured angle at `p` between the rays toward vertices `i` and `j`.
pub fn sight_angle(t: &WeightedTriple, p: Point2, i: usize, j: usize) -> f64 {
    (t.vertex(i) - p).angle_to(t.vertex(j) - p)
}

//! Problem-instance input: a flat JSON document or inline coordinate flags.

use serde::Deserialize;
use torricelli_core::{Point2, WeightedTriple};

/// Loose on-disk shape; field and element counts are validated with
/// field-naming diagnostics rather than left to the deserializer.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    vertices: Vec<Vec<f64>>,
    weights: Vec<f64>,
    #[serde(default)]
    label: Option<String>,
}

/// Instance: three vertices, three positive weights, and an optional label.
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub vertices: [[f64; 2]; 3],
    pub weights: [f64; 3],
    pub label: Option<String>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let raw: RawInstance =
            serde_json::from_str(text).map_err(|e| format!("instance JSON: {e}"))?;
        if raw.vertices.len() != 3 {
            return Err(format!(
                "vertices: expected exactly 3 points, got {}",
                raw.vertices.len()
            ));
        }
        let mut vertices = [[0.0; 2]; 3];
        for (i, v) in raw.vertices.iter().enumerate() {
            if v.len() != 2 {
                return Err(format!(
                    "vertices[{i}]: expected [x, y], got {} coordinates",
                    v.len()
                ));
            }
            if !v[0].is_finite() || !v[1].is_finite() {
                return Err(format!("vertices[{i}]: coordinates must be finite"));
            }
            vertices[i] = [v[0], v[1]];
        }
        if raw.weights.len() != 3 {
            return Err(format!(
                "weights: expected exactly 3 numbers, got {}",
                raw.weights.len()
            ));
        }
        let mut weights = [0.0; 3];
        for (i, w) in raw.weights.iter().enumerate() {
            if !w.is_finite() || *w <= 0.0 {
                return Err(format!("weights[{i}]: must be a finite positive number"));
            }
            weights[i] = *w;
        }
        Ok(InstanceFile {
            vertices,
            weights,
            label: raw.label,
        })
    }

    pub fn to_triple(&self) -> Result<WeightedTriple, String> {
        let vertices = [
            Point2::new(self.vertices[0][0], self.vertices[0][1]),
            Point2::new(self.vertices[1][0], self.vertices[1][1]),
            Point2::new(self.vertices[2][0], self.vertices[2][1]),
        ];
        WeightedTriple::new(vertices, self.weights).map_err(|e| e.to_string())
    }
}

/// Parses an inline "x,y" pair.
pub fn parse_pair(flag: &str, value: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = value.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("--{flag}: expected \"x,y\", got {value:?}"));
    }
    let mut out = [0.0; 2];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("--{flag}: {part:?} is not a number"))?;
        if !slot.is_finite() {
            return Err(format!("--{flag}: coordinates must be finite"));
        }
    }
    Ok(out)
}

/// Parses an inline "b1,b2,b3" weight list.
pub fn parse_weights(value: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = value.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("--w: expected \"b1,b2,b3\", got {value:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("--w: {part:?} is not a number"))?;
    }
    Ok(out)
}

//! Deterministic report rendering: fixed field order and fixed 15
//! significant-digit number formatting, so identical inputs produce
//! byte-identical output.

use torricelli_core::{AngularSolution, Case, Classification, Solution};

/// 15 significant digits in exponent form; a valid JSON number.
pub fn sig15(x: f64) -> String {
    format!("{x:.14e}")
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn number_array(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| sig15(*v)).collect();
    format!("[{}]", parts.join(", "))
}

/// One solved method within a report.
pub struct SolutionEntry {
    pub method_name: String,
    pub solution: Solution,
    /// Sight angles at the point (radians); absent for absorbed solutions.
    pub sight_angles: Option<[f64; 3]>,
    /// Polar pair about `A1`; present for the angular method only.
    pub angular: Option<AngularSolution>,
    /// Wall time, present only when timing was requested.
    pub elapsed_us: Option<u128>,
}

/// Renders the solve report. Field order is fixed by construction.
pub fn render_report(
    label: Option<&str>,
    classification: &Classification,
    weights: [f64; 3],
    entries: &[SolutionEntry],
    max_discrepancy: Option<f64>,
) -> String {
    let mut out = String::from("{\n");
    if let Some(label) = label {
        out.push_str(&format!("  \"label\": {},\n", json_string(label)));
    }
    match classification.case {
        Case::Floating => out.push_str("  \"classification\": \"floating\",\n"),
        Case::Absorbed(i) => {
            out.push_str("  \"classification\": \"absorbed\",\n");
            out.push_str(&format!("  \"absorbed_vertex\": {},\n", i + 1));
        }
    }
    out.push_str(&format!("  \"pulls\": {},\n", number_array(&classification.pulls)));
    out.push_str(&format!("  \"weights\": {},\n", number_array(&weights)));

    out.push_str("  \"solutions\": [\n");
    for (index, entry) in entries.iter().enumerate() {
        let s = &entry.solution;
        out.push_str("    {\n");
        out.push_str(&format!("      \"method\": {},\n", json_string(&entry.method_name)));
        out.push_str(&format!(
            "      \"point\": [{}, {}],\n",
            sig15(s.point.x),
            sig15(s.point.y)
        ));
        out.push_str(&format!("      \"objective\": {},\n", sig15(s.objective)));
        out.push_str(&format!("      \"residual\": {},\n", sig15(s.residual)));
        out.push_str(&format!("      \"iterations\": {},\n", s.iterations));
        match entry.sight_angles {
            Some(angles) => {
                out.push_str(&format!(
                    "      \"sight_angles_rad\": {},\n",
                    number_array(&angles)
                ));
                let degrees: Vec<f64> = angles.iter().map(|a| a.to_degrees()).collect();
                out.push_str(&format!(
                    "      \"sight_angles_deg\": {}",
                    number_array(&degrees)
                ));
            }
            None => {
                out.push_str("      \"sight_angles_rad\": null,\n");
                out.push_str("      \"sight_angles_deg\": null");
            }
        }
        if let Some(angular) = &entry.angular {
            out.push_str(",\n");
            out.push_str(&format!(
                "      \"angular\": {{\"angle_rad\": {}, \"angle_deg\": {}, \"distance\": {}}}",
                sig15(angular.angle),
                sig15(angular.angle.to_degrees()),
                sig15(angular.distance)
            ));
        }
        if let Some(us) = entry.elapsed_us {
            out.push_str(",\n");
            out.push_str(&format!("      \"elapsed_us\": {us}"));
        }
        out.push('\n');
        out.push_str(if index + 1 == entries.len() { "    }\n" } else { "    },\n" });
    }
    out.push_str("  ]");

    if let Some(discrepancy) = max_discrepancy {
        out.push_str(&format!(",\n  \"max_discrepancy\": {}\n", sig15(discrepancy)));
    } else {
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

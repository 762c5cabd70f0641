//! Flat drawing of a pentagonal face.
//!
//! The face is not planar, so its chord lengths and angles do not close up
//! exactly in the plane. The angles are shifted equally so they sum to 540°,
//! the edge vectors are laid out by a turtle walk, and the remaining gap is
//! removed by the least-squares correction: each of the `n` edge vectors
//! moves by `−gap/n`.

use std::fmt::Write as _;

use belyi_core::numgeom::FaceGeometryReport;

#[derive(Clone, Debug, PartialEq)]
pub struct FlatPolygon {
    pub labels: Vec<String>,
    pub vertices: Vec<[f64; 2]>,
    /// Angles after the equal shift, degrees.
    pub angles: Vec<f64>,
    /// Edge lengths after closure.
    pub lengths: Vec<f64>,
    /// Length of the gap left by the turtle walk before correction.
    pub closure_gap: f64,
}

/// Lays out a polygon from interior angles (degrees) at each vertex and the
/// lengths of the edges `i → i+1`.
pub fn flat_polygon(labels: &[String], lengths: &[f64], angles: &[f64]) -> FlatPolygon {
    let n = lengths.len();
    assert!(n >= 3 && angles.len() == n && labels.len() == n);
    let shift = ((n as f64 - 2.0) * 180.0 - angles.iter().sum::<f64>()) / n as f64;
    let angles: Vec<f64> = angles.iter().map(|a| a + shift).collect();

    let mut heading: f64 = 0.0;
    let mut edges = Vec::with_capacity(n);
    for i in 0..n {
        edges.push([lengths[i] * heading.cos(), lengths[i] * heading.sin()]);
        heading += (180.0 - angles[(i + 1) % n]).to_radians();
    }
    let gap = edges.iter().fold([0.0, 0.0], |g, e| [g[0] + e[0], g[1] + e[1]]);
    for e in &mut edges {
        e[0] -= gap[0] / n as f64;
        e[1] -= gap[1] / n as f64;
    }
    let mut vertices = Vec::with_capacity(n);
    let mut at = [0.0, 0.0];
    for e in &edges {
        vertices.push(at);
        at = [at[0] + e[0], at[1] + e[1]];
    }
    FlatPolygon {
        labels: labels.to_vec(),
        vertices,
        angles,
        lengths: edges.iter().map(|e| e[0].hypot(e[1])).collect(),
        closure_gap: gap[0].hypot(gap[1]),
    }
}

pub fn flat_face(report: &FaceGeometryReport) -> FlatPolygon {
    let labels: Vec<String> = report.vertices.iter().map(|v| v.label.clone()).collect();
    let lengths: Vec<f64> = report.edges.iter().map(|e| e.length).collect();
    let angles: Vec<f64> = report.angles.iter().map(|a| a.degrees).collect();
    flat_polygon(&labels, &lengths, &angles)
}

/// SVG of the flat pentagon, annotated with the reported (unadjusted)
/// edge lengths and angles.
pub fn emit_svg(report: &FaceGeometryReport) -> String {
    let poly = flat_face(report);
    let n = poly.vertices.len();
    let scale = 400.0;
    let margin = 80.0;
    let xs = poly.vertices.iter().map(|v| v[0]);
    let ys = poly.vertices.iter().map(|v| v[1]);
    let (min_x, max_x) = xs.fold((f64::MAX, f64::MIN), |(a, b), x| (a.min(x), b.max(x)));
    let (min_y, max_y) = ys.fold((f64::MAX, f64::MIN), |(a, b), y| (a.min(y), b.max(y)));
    let width = (max_x - min_x) * scale + 2.0 * margin;
    let height = (max_y - min_y) * scale + 2.0 * margin + 40.0;
    // SVG y grows downwards
    let map = |v: [f64; 2]| [(v[0] - min_x) * scale + margin, (max_y - v[1]) * scale + margin];
    let pts: Vec<[f64; 2]> = poly.vertices.iter().map(|&v| map(v)).collect();
    let cx = pts.iter().map(|p| p[0]).sum::<f64>() / n as f64;
    let cy = pts.iter().map(|p| p[1]).sum::<f64>() / n as f64;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let path: Vec<String> = pts.iter().map(|p| format!("{:.3},{:.3}", p[0], p[1])).collect();
    let _ = writeln!(s, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#, path.join(" "));
    for (i, p) in pts.iter().enumerate() {
        let (dx, dy) = (p[0] - cx, p[1] - cy);
        let d = dx.hypot(dy).max(1e-9);
        let _ = writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="4" fill="black"/>"#, p[0], p[1]);
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
            p[0] + 28.0 * dx / d,
            p[1] + 28.0 * dy / d + 5.0,
            poly.labels[i]
        );
        let _ = writeln!(
            s,
            r##"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" fill="#a00" text-anchor="middle">{:.3}°</text>"##,
            p[0] - 30.0 * dx / d,
            p[1] - 30.0 * dy / d + 4.0,
            report.angles[i].degrees
        );
        let q = pts[(i + 1) % n];
        let (mx, my) = ((p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0);
        let (ex, ey) = (mx - cx, my - cy);
        let e = ex.hypot(ey).max(1e-9);
        let _ = writeln!(
            s,
            r##"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" fill="#00a" text-anchor="middle">{:.3}</text>"##,
            mx + 18.0 * ex / e,
            my + 18.0 * ey / e + 4.0,
            report.edges[i].length
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" text-anchor="middle">flat approximation: angles shifted by {:+.4}° each, closure gap {:.2e} spread over the edges</text>"#,
        width / 2.0,
        height - 15.0,
        poly.angles[0] - report.angles[0].degrees,
        poly.closure_gap
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("P{i}")).collect()
    }

    fn closes(p: &FlatPolygon) -> f64 {
        let n = p.vertices.len();
        let last = p.vertices[n - 1];
        let first = p.vertices[0];
        // the last edge, rebuilt from its reported length, should end at the start
        (last[0] - first[0]).hypot(last[1] - first[1]) - p.lengths[n - 1]
    }

    #[test]
    fn regular_pentagon() {
        let p = flat_polygon(&labels(5), &[1.0; 5], &[108.0; 5]);
        assert!(p.closure_gap < 1e-12);
        for i in 0..5 {
            let a = p.vertices[i];
            let b = p.vertices[(i + 1) % 5];
            assert!(((a[0] - b[0]).hypot(a[1] - b[1]) - 1.0).abs() < 1e-12);
        }
        assert!(closes(&p).abs() < 1e-12);
    }

    #[test]
    fn inconsistent_data_is_closed() {
        let p = flat_polygon(&labels(5), &[0.632, 0.599, 0.599, 0.632, 0.696], &[103.3, 111.2, 110.8, 111.2, 103.3]);
        assert!(p.closure_gap > 1e-6);
        assert!(closes(&p).abs() < 1e-6);
        assert!((p.angles.iter().sum::<f64>() - 540.0).abs() < 1e-9);
    }
}

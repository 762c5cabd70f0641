use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use serde::Serialize;

use super::sphere::{dot, norm};
use super::{arg_0_2pi, inverse_stereographic, plane_through, roots, ComplexPoint, NumError, Plane, RootConfig, SpherePoint};
use crate::exactalg::UniPoly;

/// `Z⁴ + 228Z³ + 494Z² − 228Z + 1`; the barrel vertex polynomial is `Q(z⁶)`.
pub fn barrel_quartic() -> UniPoly {
    UniPoly::from_ints(&[1, -228, 494, 228, 1])
}

/// `z²⁴ + 228z¹⁸ + 494z¹² − 228z⁶ + 1`.
pub fn barrel_vertex_polynomial() -> UniPoly {
    barrel_quartic().substitute_power(6)
}

#[derive(Clone, Debug)]
pub struct BarrelVertices {
    /// Ring moduli `a1 < a7 < a13 < a19`.
    pub moduli: [f64; 4],
    /// `A1 … A24` in label order.
    pub points: Vec<ComplexPoint>,
}

impl BarrelVertices {
    /// Vertex by label, `"A1"` … `"A24"`.
    pub fn get(&self, label: &str) -> Option<ComplexPoint> {
        let i: usize = label.strip_prefix('A')?.parse().ok()?;
        (1..=self.points.len()).contains(&i).then(|| self.points[i - 1])
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.points.len()).map(|i| format!("A{i}")).collect()
    }
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(std::f64::consts::TAU);
    d.min(std::f64::consts::TAU - d)
}

/// Roots of the barrel vertex polynomial, labelled ring by ring:
/// `A1…A6` at `a1·e^{kπi/3}`, `A7…A12` at `a7·e^{kπi/3}`, `A13…A18` at
/// `a13·e^{(π/6 + kπ/3)i}` and `A19…A24` at `a19·e^{(π/6 + kπ/3)i}`.
///
/// Fails if the roots do not have this structure to `1e−8`.
pub fn barrel_vertices(cfg: &RootConfig) -> Result<BarrelVertices, NumError> {
    let rs = roots(&barrel_vertex_polynomial(), cfg)?;
    let mut moduli = [0.0; 4];
    let mut points = Vec::with_capacity(24);
    for (ring, chunk) in rs.chunks(6).enumerate() {
        let base = chunk[0].norm();
        let offset = if ring < 2 { 0.0 } else { FRAC_PI_6 };
        for (k, z) in chunk.iter().enumerate() {
            let want = offset + k as f64 * FRAC_PI_3;
            if ((z.norm() - base) / base).abs() > 1e-8 || angle_gap(arg_0_2pi(*z), want) > 1e-8 {
                return Err(NumError::Structure(format!(
                    "root {} of ring {} is not at modulus {base} and argument {want}",
                    z,
                    ring + 1
                )));
            }
        }
        moduli[ring] = chunk.iter().map(|z| z.norm()).sum::<f64>() / 6.0;
        points.extend_from_slice(chunk);
    }
    Ok(BarrelVertices { moduli, points })
}

/// Roots of [`barrel_quartic`] in increasing order next to
/// `(−a19⁶, −a13⁶, a1⁶, a7⁶)`.
pub fn quartic_vs_sixth_powers(bv: &BarrelVertices, cfg: &RootConfig) -> Result<Vec<(f64, f64)>, NumError> {
    let mut q: Vec<f64> = roots(&barrel_quartic(), cfg)?.into_iter().map(|z| z.re).collect();
    q.sort_by(f64::total_cmp);
    let [a1, a7, a13, a19] = bv.moduli;
    let expected = [-a19.powi(6), -a13.powi(6), a1.powi(6), a7.powi(6)];
    Ok(q.into_iter().zip(expected).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub length: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexAngle {
    pub label: String,
    pub degrees: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelledPoint {
    pub label: String,
    /// Position in the plane before projection.
    pub plane: [f64; 2],
    pub sphere: SpherePoint,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceGeometryReport {
    /// Vertices in cyclic order around the face.
    pub vertices: Vec<LabelledPoint>,
    pub edges: Vec<Edge>,
    /// Angle at each vertex between its two edge chords.
    pub angles: Vec<VertexAngle>,
    pub angle_sum: f64,
    /// Labels of the three points fixing `quad_plane`.
    pub quad_plane_points: [String; 3],
    pub quad_plane: Plane,
    /// Label and residual of the fourth quadrilateral vertex in `quad_plane`.
    pub quad_fourth: (String, f64),
    pub apex_plane_points: [String; 3],
    pub apex_plane: Plane,
    pub normal_dot: f64,
    pub dihedral_degrees: f64,
}

/// The face of the barrel used throughout: `A1 A7 A13 A8 A2`.
pub const BARREL_FACE: [&str; 5] = ["A1", "A7", "A13", "A8", "A2"];

/// Metric data of a pentagonal face given by five labels in cyclic order
/// `[v0, v1, apex, v3, v4]`. The quadrilateral plane passes through
/// `v0, v4, v1` and `v3` is tested against it; the apex plane passes
/// through `v1, v3, apex`.
pub fn face_geometry(bv: &BarrelVertices, labels: &[&str; 5]) -> Result<FaceGeometryReport, NumError> {
    let mut vertices = Vec::with_capacity(5);
    for l in labels {
        let z = bv.get(l).ok_or_else(|| NumError::UnknownLabel(l.to_string()))?;
        vertices.push(LabelledPoint { label: l.to_string(), plane: [z.re, z.im], sphere: inverse_stereographic(z) });
    }
    let s = |i: usize| &vertices[i].sphere;
    let name = |i: usize| labels[i].to_string();

    let edges = (0..5)
        .map(|i| Edge { from: name(i), to: name((i + 1) % 5), length: s(i).distance(s((i + 1) % 5)) })
        .collect();
    let angles: Vec<VertexAngle> = (0..5)
        .map(|i| {
            let u = s((i + 4) % 5).sub(s(i));
            let w = s((i + 1) % 5).sub(s(i));
            let cos = (dot(u, w) / (norm(u) * norm(w))).clamp(-1.0, 1.0);
            VertexAngle { label: name(i), degrees: cos.acos().to_degrees() }
        })
        .collect();
    let angle_sum = angles.iter().map(|a| a.degrees).sum();

    let quad_plane = plane_through(s(0), s(4), s(1))?;
    let apex_plane = plane_through(s(1), s(3), s(2))?;
    let normal_dot = dot(quad_plane.unit_normal(), apex_plane.unit_normal());
    Ok(FaceGeometryReport {
        quad_fourth: (name(3), quad_plane.residual(s(3))),
        quad_plane_points: [name(0), name(4), name(1)],
        apex_plane_points: [name(1), name(3), name(2)],
        dihedral_degrees: quad_plane.angle_to(&apex_plane),
        normal_dot,
        quad_plane,
        apex_plane,
        angles,
        angle_sum,
        edges,
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_structure() {
        let bv = barrel_vertices(&RootConfig::default()).unwrap();
        let [a1, a7, a13, a19] = bv.moduli;
        assert!((a1 * a19 - 1.0).abs() < 1e-9);
        assert!((a7 * a13 - 1.0).abs() < 1e-9);
        let rot = ComplexPoint::from_polar(1.0, FRAC_PI_3);
        assert!((bv.get("A2").unwrap() - rot * bv.get("A1").unwrap()).norm() < 1e-9);
        assert!(bv.get("A25").is_none() && bv.get("B1").is_none());
    }

    #[test]
    fn sixth_powers_are_quartic_roots() {
        let cfg = RootConfig::default();
        let bv = barrel_vertices(&cfg).unwrap();
        for (q, e) in quartic_vs_sixth_powers(&bv, &cfg).unwrap() {
            assert!((q - e).abs() <= 1e-9 * q.abs().max(1.0), "{q} vs {e}");
        }
    }

    #[test]
    fn unknown_label() {
        let bv = barrel_vertices(&RootConfig::default()).unwrap();
        assert!(matches!(face_geometry(&bv, &["A1", "A7", "A99", "A8", "A2"]), Err(NumError::UnknownLabel(_))));
    }

    #[test]
    fn barrel_face_matches_reference_values() {
        let bv = barrel_vertices(&RootConfig::default()).unwrap();
        let close = |a: f64, b: f64, tol: f64| assert!((a - b).abs() <= tol, "{a} vs {b}");
        for (m, e) in bv.moduli.iter().zip([0.405238004359, 0.853678562295, 1.17140109189, 2.46768562978]) {
            close(*m, e, 1e-10);
        }
        let r = face_geometry(&bv, &BARREL_FACE).unwrap();
        for (e, want) in r.edges.iter().zip([0.632193, 0.599847, 0.599847, 0.632193, 0.696155]) {
            close(e.length, want, 1e-6);
        }
        for (a, want) in r.angles.iter().zip([103.32743, 111.25424, 110.81751, 111.25424, 103.32743]) {
            close(a.degrees, want, 1e-5);
        }
        close(r.quad_plane.p, 0.935342, 1e-6);
        close(r.apex_plane.r, -0.457614, 1e-6);
        close(r.quad_fourth.1, 0.0, 1e-12);
        close(r.normal_dot, 0.99971795, 1e-8);
        close(r.dihedral_degrees, 1.3608481, 1e-6);
        close(r.angle_sum, 539.98084, 1e-4);
    }
}

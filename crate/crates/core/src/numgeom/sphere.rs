use serde::Serialize;

use super::{ComplexPoint, NumError};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpherePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpherePoint {
    pub fn sub(&self, o: &SpherePoint) -> [f64; 3] {
        [self.x - o.x, self.y - o.y, self.z - o.z]
    }

    pub fn distance(&self, o: &SpherePoint) -> f64 {
        norm(self.sub(o))
    }

    /// `X² + Y² + Z² − 1`.
    pub fn sphere_residual(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z - 1.0
    }
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// `(X, Y, Z) = (2x, 2y, x² + y² − 1) / (x² + y² + 1)`.
pub fn inverse_stereographic(p: ComplexPoint) -> SpherePoint {
    let r2 = p.norm_sqr();
    let d = r2 + 1.0;
    SpherePoint { x: 2.0 * p.re / d, y: 2.0 * p.im / d, z: (r2 - 1.0) / d }
}

/// The plane `pX + qY + rZ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Plane {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl Plane {
    pub fn residual(&self, s: &SpherePoint) -> f64 {
        self.p * s.x + self.q * s.y + self.r * s.z - 1.0
    }

    pub fn unit_normal(&self) -> [f64; 3] {
        let n = [self.p, self.q, self.r];
        let l = norm(n);
        [n[0] / l, n[1] / l, n[2] / l]
    }

    /// Angle between the planes in degrees, in `[0°, 90°]`.
    pub fn angle_to(&self, other: &Plane) -> f64 {
        dot(self.unit_normal(), other.unit_normal()).abs().min(1.0).acos().to_degrees()
    }
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Solves for `(p, q, r)` by Cramer's rule. Fails when the points are
/// collinear or the plane passes through the origin.
pub fn plane_through(a: &SpherePoint, b: &SpherePoint, c: &SpherePoint) -> Result<Plane, NumError> {
    let m = [[a.x, a.y, a.z], [b.x, b.y, b.z], [c.x, c.y, c.z]];
    let d = det3(m);
    let scale = [a, b, c].iter().map(|s| norm([s.x, s.y, s.z])).product::<f64>();
    if d.abs() <= 1e-12 * scale.max(1e-300) {
        return Err(NumError::Degenerate("points are collinear or coplanar with the origin".into()));
    }
    let col = |j: usize| {
        let mut mj = m;
        for row in &mut mj {
            row[j] = 1.0;
        }
        det3(mj) / d
    };
    Ok(Plane { p: col(0), q: col(1), r: col(2) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_south_pole() {
        let s = inverse_stereographic(ComplexPoint::new(0.0, 0.0));
        assert_eq!(s, SpherePoint { x: 0.0, y: 0.0, z: -1.0 });
    }

    #[test]
    fn plane_through_axis_points() {
        let e = |x, y, z| SpherePoint { x, y, z };
        let pl = plane_through(&e(1.0, 0.0, 0.0), &e(0.0, 1.0, 0.0), &e(0.0, 0.0, 1.0)).unwrap();
        assert!((pl.p - 1.0).abs() < 1e-15 && (pl.q - 1.0).abs() < 1e-15 && (pl.r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn collinear_rejected() {
        let e = |x, y, z| SpherePoint { x, y, z };
        assert!(plane_through(&e(1.0, 0.0, 0.0), &e(2.0, 0.0, 0.0), &e(3.0, 0.0, 0.0)).is_err());
    }
}

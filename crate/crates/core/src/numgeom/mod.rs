//! Floating-point layer: roots of the barrel vertex polynomial, inverse
//! stereographic projection and the metric data of one pentagonal face.

mod barrel;
mod roots;
mod sphere;

pub use barrel::{
    barrel_quartic, barrel_vertex_polynomial, barrel_vertices, face_geometry, quartic_vs_sixth_powers, BarrelVertices,
    Edge, FaceGeometryReport, LabelledPoint, VertexAngle, BARREL_FACE,
};
pub use roots::{arg_0_2pi, backward_error, evaluation_scale, roots, sort_roots, ComplexPoint, RootConfig};
pub use sphere::{inverse_stereographic, plane_through, Plane, SpherePoint};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumError {
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("constant polynomial has no roots")]
    Constant,
    #[error("polynomial {0} has a repeated root")]
    NotSquarefree(String),
    #[error("root iteration did not converge in {0} steps")]
    NoConvergence(usize),
    #[error("root {root:?} has backward error {error:e}")]
    Residual { root: (f64, f64), error: f64 },
    #[error("unexpected root structure: {0}")]
    Structure(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("unknown vertex label {0}")]
    UnknownLabel(String),
}

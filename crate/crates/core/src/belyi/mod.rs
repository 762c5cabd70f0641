//! Belyi-pair data model: passports, factored Belyi functions and their
//! verification, the fullerene face-vector and counting formulas, and the
//! main equation `k V³ − P⁵ H⁶ = M²`.

mod factored;
mod format;
mod passport;

pub use factored::{verify_belyi, CriticalClass, Factor, FactoredBelyi, InfinityTag};
pub use format::{FactorDoc, FactoredBelyiDoc, FormatError};
pub use passport::{Partition, Passport};

use serde::Serialize;

use crate::exactalg::{GaussRat, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BelyiError {
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("factor {0} is not squarefree")]
    FactorNotSquarefree(String),
    #[error("factors {0} and {1} share a root")]
    FactorsShareRoot(String, String),
    #[error("degree imbalance: {0}")]
    DegreeImbalance(String),
    #[error("malformed Belyi function: {0}")]
    Malformed(String),
}

/// Face vector of a fullerene with `p6` hexagons (and always 12 pentagons).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FullereneParams {
    pub p6: u64,
    pub p5: u64,
    pub f0: u64,
    pub f1: u64,
    pub f2: u64,
    /// Edges of the dessin: a white vertex splits every polyhedron edge in
    /// two, so this is `2 f1`.
    pub n_dessin_edges: u64,
    /// `false` only for `p6 = 1`, which has no fullerene.
    pub realizable: bool,
}

impl FullereneParams {
    /// Euler, trivalence, face control and Fuller's relation.
    pub fn satisfies_face_system(&self) -> bool {
        let (f0, f1, f2) = (self.f0 as i64, self.f1 as i64, self.f2 as i64);
        f0 - f1 + f2 == 2
            && 3 * f0 == 2 * f1
            && self.f2 == self.p5 + self.p6
            && 3 * self.f0 == 5 * self.p5 + 6 * self.p6
    }
}

pub fn face_vector(p6: u64) -> FullereneParams {
    FullereneParams {
        p6,
        p5: 12,
        f0: 20 + 2 * p6,
        f1: 30 + 3 * p6,
        f2: 12 + p6,
        n_dessin_edges: 60 + 6 * p6,
        realizable: p6 != 1,
    }
}

/// `(3^{2n} | 2^{3n} | 5^{12} 6^{n−10})` with `n = 10 + p6`.
pub fn fullerene_passport(p6: u64) -> Passport {
    let n = 10 + p6 as u32;
    Passport::new(
        Partition::from_counts(&[(3, 2 * n)]),
        Partition::from_counts(&[(2, 3 * n)]),
        Partition::from_counts(&[(5, 12), (6, n - 10)]),
    )
    .expect("fullerene passport sums are all 6n")
}

/// Unknowns and equations of the main equation with monic `V`, `P`, `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counting {
    pub unknowns: u64,
    pub equations: u64,
    /// Always 3, the dimension of the Möbius group acting on `z`.
    pub excess: u64,
}

pub fn counting(p6: u64) -> Counting {
    // k; V (20+2p6); P (12); H (p6); M (31+3p6 coefficients)
    let unknowns = 1 + (20 + 2 * p6) + 12 + p6 + (31 + 3 * p6);
    // 1 + 2 deg M
    let equations = 1 + 2 * (30 + 3 * p6);
    Counting { unknowns, equations, excess: unknowns - equations }
}

/// `k·V³ − P⁵·H⁶ − k·M²`.
///
/// This is the main equation with the midpoint polynomial `M` taken monic:
/// for `β = k V³/(P⁵ H⁶)` one has `β − 1 = k M²/(P⁵ H⁶)`. With the scalar
/// on the `V³` side only, the dodecahedron (`k = 1/1728`) would need an
/// `M` with a `√3` in it.
pub fn main_equation_residual(k: &GaussRat, v: &UniPoly, p: &UniPoly, h: &UniPoly, m: &UniPoly) -> UniPoly {
    let lhs = &v.pow(3).scale(k) - &(&p.pow(5) * &h.pow(6));
    &lhs - &m.pow(2).scale(k)
}

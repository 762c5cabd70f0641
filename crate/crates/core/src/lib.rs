//! Exact computation and verification of Belyi functions for the smallest
//! fullerenes.
//!
//! * [`exactalg`]: Gaussian rationals, univariate polynomials, rational maps.
//! * [`multipoly`]: multivariate polynomials and sequential linear elimination.
//! * [`belyi`]: passports, factored Belyi functions, fullerene counting.
//! * [`derive`]: the elimination pipelines for the dodecahedron quotient and
//!   the `(3^k | 2^l | 5^m s^1)` passports.
//! * [`compose`]: Möbius maps and the composition pipeline for the
//!   dodecahedron and barrel Belyi functions.
//! * [`numgeom`]: numeric roots, stereographic projection and the barrel
//!   face geometry.

pub mod belyi;
pub mod compose;
pub mod derive;
pub mod exactalg;
pub mod multipoly;
pub mod numgeom;

pub use exactalg::{GaussRat, RationalMap, UniPoly};
pub use multipoly::{MultiPoly, ParamPoly, VarSet};

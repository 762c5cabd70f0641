//! Exact arithmetic over the Gaussian rationals `Q(i)`: scalars, dense
//! univariate polynomials and rational maps.

mod gauss;
mod ratmap;
mod unipoly;

pub use gauss::GaussRat;
pub use ratmap::RationalMap;
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed coefficient string `{0}`")]
    Coefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("rational map has a zero denominator")]
    ZeroDenominator,
    #[error("rational map is identically zero")]
    ZeroMap,
}

/// `p + q`.
pub fn poly_add(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p + q
}

/// `p · q`.
pub fn poly_mul(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p * q
}

/// `c · p`.
pub fn poly_scale(p: &UniPoly, c: &GaussRat) -> UniPoly {
    p.scale(c)
}

pub fn poly_derivative(p: &UniPoly) -> UniPoly {
    p.derivative()
}

/// `p(q(z))`.
pub fn poly_compose(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p.compose(q)
}

pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p.gcd(q)
}

pub fn squarefree_check(p: &UniPoly) -> bool {
    p.is_squarefree()
}

/// `f(z^n)` in canonical form.
pub fn ratmap_substitute_power(f: &RationalMap, n: usize) -> RationalMap {
    f.substitute_power(n)
}

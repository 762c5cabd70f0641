//! Möbius maps over `Q(i)` and the composition pipeline
//! `β₁₂ = β₆ ∘ μ₁ ∘ (z ↦ z²) ∘ μ₂`, `β₆₀ = β₁₂(z⁵)`, `β₇₂ = β₁₂(z⁶)`, with the
//! icosahedral form identity `φ₂₀³ − φ₃₀² = 1728 φ₁₂⁵`.

mod moebius;

pub use moebius::{ratmap_compose_moebius, ExtPoint, Moebius, Side};

use std::fmt;
use std::str::FromStr;

use crate::belyi::{verify_belyi, BelyiError, FactoredBelyi};
use crate::derive::{d6_solve, DeriveError};
use crate::exactalg::{GaussRat, RationalMap, UniPoly};

#[derive(Debug, Clone, thiserror::Error)]
pub enum ComposeError {
    #[error("degenerate Möbius data: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Derive(#[from] DeriveError),
    #[error(transparent)]
    Belyi(#[from] BelyiError),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
}

/// Sends `0, 1, ∞` to `−11+2i, 0, −11−2i`: the roots of `z²+22z+125` become
/// `0` and `∞`.
pub fn mu1() -> Moebius {
    Moebius::from_three_points(
        &[ExtPoint::int(0), ExtPoint::int(1), ExtPoint::Infinity],
        &[ExtPoint::gauss(-11, 2), ExtPoint::int(0), ExtPoint::gauss(-11, -2)],
    )
    .expect("distinct points")
}

/// `(iz − 1)/(iz + 1)`: sends `0, ∞, 1` to `−1, 1, i`.
pub fn mu2() -> Moebius {
    Moebius::from_three_points(
        &[ExtPoint::int(0), ExtPoint::Infinity, ExtPoint::int(1)],
        &[ExtPoint::int(-1), ExtPoint::int(1), ExtPoint::gauss(0, 1)],
    )
    .expect("distinct points")
}

fn verified(f: FactoredBelyi) -> Result<FactoredBelyi, ComposeError> {
    verify_belyi(&f)?;
    Ok(f)
}

pub fn beta6_map() -> Result<RationalMap, ComposeError> {
    Ok(d6_solve()?.beta.to_rational_map())
}

pub fn beta12_map() -> Result<RationalMap, ComposeError> {
    let square = RationalMap::from_poly(&UniPoly::z().pow(2)).expect("z^2 is nonzero");
    let b6 = beta6_map()?;
    let f = ratmap_compose_moebius(&b6, &mu1(), Side::Pre).compose(&square);
    Ok(ratmap_compose_moebius(&f, &mu2(), Side::Pre))
}

pub fn build_beta12() -> Result<FactoredBelyi, ComposeError> {
    verified(FactoredBelyi::from_rational_map(&beta12_map()?))
}

pub fn build_beta60() -> Result<FactoredBelyi, ComposeError> {
    verified(FactoredBelyi::from_rational_map(&beta12_map()?.substitute_power(5)))
}

pub fn build_beta72() -> Result<FactoredBelyi, ComposeError> {
    verified(FactoredBelyi::from_rational_map(&beta12_map()?.substitute_power(6)))
}

/// Belyi functions computed by the pipelines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    D6,
    D12,
    D60,
    D72,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::D6, Preset::D12, Preset::D60, Preset::D72];

    pub fn name(self) -> &'static str {
        match self {
            Preset::D6 => "d6",
            Preset::D12 => "d12",
            Preset::D60 => "d60",
            Preset::D72 => "d72",
        }
    }

    pub fn build(self) -> Result<FactoredBelyi, ComposeError> {
        match self {
            Preset::D6 => Ok(d6_solve()?.beta),
            Preset::D12 => build_beta12(),
            Preset::D60 => build_beta60(),
            Preset::D72 => build_beta72(),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown preset `{s}` (expected d6, d12, d60 or d72)"))
    }
}

fn sparse(terms: &[(usize, i64)]) -> UniPoly {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = vec![0i64; deg + 1];
    for &(k, v) in terms {
        c[k] = v;
    }
    UniPoly::from_ints(&c)
}

/// `s(1 − 11s⁵ − s¹⁰)`.
pub fn phi12() -> UniPoly {
    sparse(&[(1, 1), (6, -11), (11, -1)])
}

/// `1 + 228s⁵ + 494s¹⁰ − 228s¹⁵ + s²⁰`.
pub fn phi20() -> UniPoly {
    sparse(&[(0, 1), (5, 228), (10, 494), (15, -228), (20, 1)])
}

/// `1 − 522s⁵ − c s¹⁰ − c s²⁰ + 522s²⁵ + s³⁰` with `c` the middle
/// coefficient, which is 10005.
pub fn phi30_with(c: i64) -> UniPoly {
    sparse(&[(0, 1), (5, -522), (10, -c), (20, -c), (25, 522), (30, 1)])
}

pub fn phi30() -> UniPoly {
    phi30_with(10005)
}

/// `φ₂₀³ − φ₃₀² − 1728 φ₁₂⁵` for the given `φ₃₀`.
pub fn schwarz_residual(phi30: &UniPoly) -> UniPoly {
    let lhs = &phi20().pow(3) - &phi30.pow(2);
    &lhs - &phi12().pow(5).scale(&GaussRat::from_int(1728))
}

/// Checks `φ₂₀³ − φ₃₀² = 1728 φ₁₂⁵` and `β₆₀(−s) = φ₂₀³/(1728 φ₁₂⁵)`.
pub fn schwarz_check() -> Result<(), ComposeError> {
    let r = schwarz_residual(&phi30());
    if !r.is_zero() {
        return Err(ComposeError::IdentityFailed(format!("phi20^3 - phi30^2 - 1728 phi12^5 = {r}")));
    }
    let minus = RationalMap::from_poly(&UniPoly::from_ints(&[0, -1])).unwrap();
    let b60 = beta12_map()?.substitute_power(5).compose(&minus);
    let forms = RationalMap::new(GaussRat::from_frac(1, 1728), phi20().pow(3), phi12().pow(5)).unwrap();
    if b60 != forms {
        return Err(ComposeError::IdentityFailed("beta60(-s) != phi20^3/(1728 phi12^5)".into()));
    }
    Ok(())
}

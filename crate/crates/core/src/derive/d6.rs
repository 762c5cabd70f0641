use num_bigint::BigInt;
use num_rational::BigRational;

use super::DeriveError;
use crate::belyi::{CriticalClass, Factor, FactoredBelyi, InfinityTag};
use crate::exactalg::{GaussRat, UniPoly};
use crate::multipoly::{sequential_linear_solve, parse, Equation, EliminationTrace, MultiPoly, ParamPoly, VarSet};

/// Unknowns of the `D₆` system, lowest priority first.
pub const D6_UNKNOWNS: [&str; 7] = ["k", "a0", "a1", "b0", "b1", "c0", "c1"];

#[derive(Clone, Debug)]
pub struct D6Solution {
    pub system: Vec<Equation>,
    pub trace: EliminationTrace,
    /// `β₆` with the scalar on the zero side (`k = 1/1728`).
    pub beta: FactoredBelyi,
    /// The constant in `S = A³ − B²C − k z`, i.e. 1728.
    pub k: BigRational,
}

fn quadratic(vars: &VarSet, c1: &str, c0: &str) -> ParamPoly {
    let v = |n: &str| MultiPoly::var(vars, n).expect("variable is in the D6 set");
    ParamPoly::monic_with(vars, 2, &[v(c0), v(c1)])
}

/// Coefficients of `S = (z²+a₁z+a₀)³ − (z²+b₁z+b₀)²(z²+c₁z+c₀) − kz` at
/// `z⁵, …, z⁰`. The `z⁶` coefficient is identically zero.
pub fn d6_system() -> Vec<Equation> {
    let vars = VarSet::new(&D6_UNKNOWNS);
    let a = quadratic(&vars, "a1", "a0");
    let b = quadratic(&vars, "b1", "b0");
    let c = quadratic(&vars, "c1", "c0");
    let kz = ParamPoly::new(&vars, vec![MultiPoly::zero(&vars), MultiPoly::var(&vars, "k").unwrap()]);
    let s = &(&(&(&a * &a) * &a) - &(&(&b * &b) * &c)) - &kz;
    debug_assert!(s.coeff(6).is_zero());
    (0..=5).rev().map(|i| Equation::new(format!("z^{i}"), s.coeff(i))).collect()
}

/// The assumption `a₁ − b₁ ≠ 0`: with `b₁ = a₁` the system forces
/// `b₀ = a₀`, and then `A` and `B` share a root.
pub fn d6_assumption() -> MultiPoly {
    parse(&VarSet::new(&D6_UNKNOWNS), "a1 - b1").unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Solves the `D₆` system with unknown order [`D6_UNKNOWNS`], normalizes
/// `a₁ = 10` and returns `β₆ = (z²+10z+5)³ / (1728 z)`.
pub fn d6_solve() -> Result<D6Solution, DeriveError> {
    d6_solve_with(&D6_UNKNOWNS, ("a1", int(10)))
}

/// Same pipeline with a caller-chosen unknown order and normalization of
/// the one free unknown.
pub fn d6_solve_with(unknowns: &[&str], normalize: (&str, BigRational)) -> Result<D6Solution, DeriveError> {
    let system = d6_system();
    let mut trace = sequential_linear_solve(&system, unknowns, &[d6_assumption()])?;
    if trace.free_vars != [normalize.0] {
        return Err(DeriveError::Unexpected(format!(
            "expected {} to be the only free unknown, got {:?}",
            normalize.0, trace.free_vars
        )));
    }
    trace.normalizations.push((normalize.0.to_string(), normalize.1));

    let values = trace.normalized_values();
    let get = |n: &str| -> Result<GaussRat, DeriveError> {
        values
            .iter()
            .find(|(name, _)| name == n)
            .and_then(|(_, p)| p.constant_value())
            .map(GaussRat::real)
            .ok_or_else(|| DeriveError::Unexpected(format!("{n} is not determined")))
    };
    let quad = |c1: &str, c0: &str| -> Result<UniPoly, DeriveError> {
        Ok(UniPoly::new(vec![get(c0)?, get(c1)?, GaussRat::from_int(1)]))
    };
    let k = get("k")?;
    let beta = FactoredBelyi {
        k: k.inv().ok_or_else(|| DeriveError::Unexpected("k = 0".into()))?,
        zeros: vec![Factor::new(quad("a1", "a0")?, 3)],
        ones: vec![Factor::new(quad("b1", "b0")?, 2), Factor::new(quad("c1", "c0")?, 1)],
        poles: vec![Factor::new(UniPoly::z(), 1)],
        infinity: Some(InfinityTag { class: CriticalClass::Pole, order: 5 }),
    };
    Ok(D6Solution { system, trace, beta, k: k.re })
}

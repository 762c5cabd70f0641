use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;

use super::{solve_ode_system, vm_from_p, DeriveError};
use crate::exactalg::{GaussRat, UniPoly};
use crate::multipoly::{parse, Equation, EliminationTrace, MultiPoly, ParamPoly};

/// The two-parameter solution of the `s = 6` differential equation.
#[derive(Clone, Debug)]
pub struct Family {
    pub system: Vec<Equation>,
    pub trace: EliminationTrace,
    /// `P`, `V`, `M` with every coefficient a polynomial in `a9`, `a10`.
    pub p: ParamPoly,
    pub v: ParamPoly,
    pub m: ParamPoly,
    /// `k = −5⁴(2³·5²·a10³ + 3³·11·a9²)/(3³·11³)`.
    pub k: MultiPoly,
}

/// `−5⁴(2³·5²·a10³ + 3³·11·a9²)/(3³·11³)` over the variables of `vars`.
pub(crate) fn family_k_formula(vars: &crate::multipoly::VarSet) -> MultiPoly {
    parse(vars, "-625*(200*a10^3 + 297*a9^2)/35937").expect("formula parses")
}

fn build() -> Result<Family, DeriveError> {
    let (system, p, trace) = solve_ode_system(6)?;
    if trace.free_vars != ["a9", "a10"] {
        return Err(DeriveError::Unexpected(format!("s = 6 left free unknowns {:?}", trace.free_vars)));
    }
    let subs: Vec<(usize, MultiPoly)> = trace
        .resolved
        .iter()
        .map(|(n, v)| (p.vars().index_of(n).unwrap(), v.clone()))
        .collect();
    let p = p.substitute_all(&subs)?;
    let (v, m) = vm_from_p(&p, 6);
    let k = family_k_formula(p.vars());
    Ok(Family { system, trace, p, v, m, k })
}

/// The `s = 6` family, computed once.
pub fn s6_family() -> Result<&'static Family, DeriveError> {
    static FAMILY: OnceLock<Result<Family, DeriveError>> = OnceLock::new();
    FAMILY.get_or_init(build).as_ref().map_err(Clone::clone)
}

/// One member of the `s = 6` family with its verified constant `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPoint {
    pub a9: BigRational,
    pub a10: BigRational,
    pub p: UniPoly,
    pub v: UniPoly,
    pub m: UniPoly,
    pub k: BigRational,
    /// Geometric meaning of the two ends of the projective family.
    pub endpoint: Option<&'static str>,
}

/// Specializes the family at `(a9, a10)`, evaluates `k` by the closed
/// formula and checks `V³ = M² + k P⁵` exactly.
pub fn family_k(a9: &BigRational, a10: &BigRational) -> Result<FamilyPoint, DeriveError> {
    if a9.is_zero() && a10.is_zero() {
        return Err(DeriveError::Unexpected("(a9, a10) = (0, 0) is not a point of the family".into()));
    }
    let fam = s6_family()?;
    let vars = fam.p.vars();
    let mut point = vec![BigRational::zero(); vars.len()];
    point[vars.index_of("a9").unwrap()] = a9.clone();
    point[vars.index_of("a10").unwrap()] = a10.clone();
    let p = UniPoly::new(fam.p.coeffs().iter().map(|c| GaussRat::real(c.evaluate(&point))).collect());
    let (v, m) = vm_from_p(&p, 6);
    let k = fam.k.evaluate(&point);

    let residual = &(&v.pow(3) - &m.pow(2)) - &p.pow(5).scale(&GaussRat::real(k.clone()));
    if !residual.is_zero() {
        return Err(DeriveError::IdentityFailed(format!("V^3 - M^2 - k P^5 at a9 = {a9}, a10 = {a10}")));
    }
    let endpoint = if a10.is_zero() {
        Some("dodecahedron dessin with a vertex at the infinite point")
    } else if a9.is_zero() {
        Some("dodecahedron dessin with the middle of an edge at the infinite point")
    } else {
        None
    };
    Ok(FamilyPoint { a9: a9.clone(), a10: a10.clone(), p, v, m, k, endpoint })
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_at_one_one() {
        let pt = family_k(&rat(1, 1), &rat(1, 1)).unwrap();
        assert_eq!(pt.k, rat(-310625, 35937));
        assert_eq!(pt.endpoint, None);
    }

    #[test]
    fn endpoints() {
        assert!(family_k(&rat(3, 1), &rat(0, 1)).unwrap().endpoint.unwrap().contains("vertex"));
        assert!(family_k(&rat(0, 1), &rat(-2, 7)).unwrap().endpoint.unwrap().contains("edge"));
        assert!(family_k(&rat(0, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn family_degrees() {
        let fam = s6_family().unwrap();
        assert_eq!(fam.p.degree(), Some(12));
        assert_eq!(fam.v.degree(), Some(20));
        assert_eq!(fam.m.degree(), Some(30));
    }
}

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{BelyiError, Partition, Passport};
use crate::exactalg::{GaussRat, RationalMap, UniPoly};

/// Which fibre a critical point lies over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriticalClass {
    Zero,
    One,
    Pole,
}

impl fmt::Display for CriticalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalClass::Zero => "zero",
            CriticalClass::One => "one",
            CriticalClass::Pole => "pole",
        })
    }
}

/// The point `∞` lies over `class` with multiplicity `order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct InfinityTag {
    pub class: CriticalClass,
    pub order: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub poly: UniPoly,
    pub exp: u32,
}

impl Factor {
    pub fn new(poly: UniPoly, exp: u32) -> Self {
        Factor { poly, exp }
    }
}

/// `β = k · Π zeros^e / Π poles^e`, together with the declared factorization
/// of the numerator of `β − 1` and the behaviour at `∞`.
///
/// The scalar multiplies the zero side, so a function written as
/// `V³ / (1728 · …)` has `k = 1/1728`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredBelyi {
    pub k: GaussRat,
    pub zeros: Vec<Factor>,
    pub ones: Vec<Factor>,
    pub poles: Vec<Factor>,
    /// `None` when `∞` is in none of the three fibres.
    pub infinity: Option<InfinityTag>,
}

fn product(fs: &[Factor]) -> UniPoly {
    fs.iter().fold(UniPoly::one(), |acc, f| &acc * &f.poly.pow(f.exp))
}

fn degree(fs: &[Factor]) -> u64 {
    fs.iter().map(|f| f.poly.degree().unwrap_or(0) as u64 * f.exp as u64).sum()
}

fn decomposed(p: &UniPoly) -> Vec<Factor> {
    p.squarefree_decomposition().into_iter().map(|(f, e)| Factor::new(f, e)).collect()
}

impl FactoredBelyi {
    /// Product of the zero factors (without `k`).
    pub fn zero_product(&self) -> UniPoly {
        product(&self.zeros)
    }

    pub fn one_product(&self) -> UniPoly {
        product(&self.ones)
    }

    pub fn pole_product(&self) -> UniPoly {
        product(&self.poles)
    }

    pub fn to_rational_map(&self) -> RationalMap {
        RationalMap::new(self.k.clone(), self.zero_product(), self.pole_product())
            .expect("factored Belyi function has nonzero scalar and denominator")
    }

    /// Reads the squarefree decompositions of the numerator, the denominator
    /// and the numerator of `β − 1` off a rational map. The factors are
    /// grouped by multiplicity, not split into irreducibles.
    pub fn from_rational_map(beta: &RationalMap) -> Self {
        let shifted = beta.shifted_numerator(&GaussRat::one());
        let n = beta.degree() as u64;
        let dz = beta.num().degree().unwrap() as u64;
        let dp = beta.den().degree().unwrap() as u64;
        let d1 = shifted.degree().map_or(0, |d| d as u64);
        let infinity = [(CriticalClass::Zero, dz), (CriticalClass::One, d1), (CriticalClass::Pole, dp)]
            .into_iter()
            .find(|&(_, d)| d < n)
            .map(|(class, d)| InfinityTag { class, order: (n - d) as u32 });
        FactoredBelyi {
            k: beta.scalar().clone(),
            zeros: decomposed(beta.num()),
            ones: decomposed(&shifted),
            poles: decomposed(beta.den()),
            infinity,
        }
    }

    fn labelled(&self) -> Vec<(String, &Factor)> {
        let mut out = Vec::new();
        for (name, list) in [("zero", &self.zeros), ("one", &self.ones), ("pole", &self.poles)] {
            for (i, f) in list.iter().enumerate() {
                out.push((format!("{name}[{i}] ({})", f.poly), f));
            }
        }
        out
    }

    /// `(zero, one, pole)` orders of `∞` implied by the factor degrees.
    fn implied_infinity(&self) -> Option<InfinityTag> {
        let dz = degree(&self.zeros);
        let d1 = degree(&self.ones);
        let dp = degree(&self.poles);
        let n = dz.max(dp);
        [(CriticalClass::Zero, dz), (CriticalClass::One, d1), (CriticalClass::Pole, dp)]
            .into_iter()
            .find(|&(_, d)| d < n)
            .map(|(class, d)| InfinityTag { class, order: (n - d) as u32 })
    }

    fn partition(&self, list: &[Factor], class: CriticalClass) -> Partition {
        let mut parts: Vec<u32> = list
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.exp, f.poly.degree().unwrap_or(0)))
            .collect();
        if let Some(t) = self.infinity.filter(|t| t.class == class) {
            parts.push(t.order);
        }
        Partition::new(parts)
    }
}

/// Certifies that `f` is a genus-zero Belyi function with the declared
/// factorization and returns its passport.
///
/// Checks, in order: factors are monic, non-constant, with positive
/// exponent; each factor is squarefree; factors are pairwise coprime across
/// all three lists; `k·Z − Pl` is a nonzero scalar multiple of the one-side
/// product; the declared behaviour at `∞` matches the degrees.
///
/// Connectedness of the dessin is not checked.
pub fn verify_belyi(f: &FactoredBelyi) -> Result<Passport, BelyiError> {
    if f.k.is_zero() {
        return Err(BelyiError::Malformed("scalar k is zero".into()));
    }
    let all = f.labelled();
    for (label, fac) in &all {
        if fac.exp == 0 || fac.poly.is_constant() || !fac.poly.is_monic() {
            return Err(BelyiError::Malformed(format!(
                "factor {label} must be monic, non-constant, with positive exponent"
            )));
        }
    }
    for (label, fac) in &all {
        if !fac.poly.is_squarefree() {
            return Err(BelyiError::FactorNotSquarefree(label.clone()));
        }
    }
    for (i, (la, fa)) in all.iter().enumerate() {
        for (lb, fb) in &all[i + 1..] {
            if !fa.poly.is_coprime(&fb.poly) {
                return Err(BelyiError::FactorsShareRoot(la.clone(), lb.clone()));
            }
        }
    }

    let z = f.zero_product();
    let pl = f.pole_product();
    let o = f.one_product();
    let shifted = &z.scale(&f.k) - &pl;
    let ok = match shifted.leading() {
        Some(c) => shifted == o.scale(c),
        None => false,
    };
    if !ok {
        return Err(BelyiError::IdentityFailed(format!(
            "k*Z - Pl is not a scalar multiple of the one-side product ({})",
            o
        )));
    }

    let implied = f.implied_infinity();
    if implied != f.infinity {
        let show = |t: Option<InfinityTag>| t.map_or("none".to_string(), |t| format!("{} of order {}", t.class, t.order));
        return Err(BelyiError::DegreeImbalance(format!(
            "declared infinity {} but factor degrees imply {}",
            show(f.infinity),
            show(implied)
        )));
    }

    let passport = Passport::new(
        f.partition(&f.zeros, CriticalClass::Zero),
        f.partition(&f.ones, CriticalClass::One),
        f.partition(&f.poles, CriticalClass::Pole),
    )
    .ok_or_else(|| BelyiError::DegreeImbalance("partition sums differ".into()))?;
    Ok(passport)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn beta6() -> FactoredBelyi {
        FactoredBelyi {
            k: GaussRat::from_frac(1, 1728),
            zeros: vec![Factor::new(p(&[5, 10, 1]), 3)],
            ones: vec![Factor::new(p(&[-1, 4, 1]), 2), Factor::new(p(&[125, 22, 1]), 1)],
            poles: vec![Factor::new(p(&[0, 1]), 1)],
            infinity: Some(InfinityTag { class: CriticalClass::Pole, order: 5 }),
        }
    }

    #[test]
    fn beta6_passport() {
        let pp = verify_belyi(&beta6()).unwrap();
        assert_eq!(pp.to_string(), "(3^2 | 2^2 1^2 | 5^1 1^1)");
        assert_eq!(pp.degree(), 6);
    }

    #[test]
    fn from_rational_map_recovers_beta6() {
        let f = FactoredBelyi::from_rational_map(&beta6().to_rational_map());
        // grouped by multiplicity, so the one side is two factors here as well
        assert_eq!(verify_belyi(&f).unwrap(), verify_belyi(&beta6()).unwrap());
        assert_eq!(f.infinity, beta6().infinity);
    }

    #[test]
    fn wrong_identity() {
        let mut f = beta6();
        f.ones[1].poly = p(&[126, 22, 1]);
        assert!(matches!(verify_belyi(&f), Err(BelyiError::IdentityFailed(_))));
    }

    #[test]
    fn not_squarefree() {
        let mut f = beta6();
        f.zeros[0].poly = p(&[1, 2, 1]);
        match verify_belyi(&f) {
            Err(BelyiError::FactorNotSquarefree(l)) => assert!(l.starts_with("zero[0]")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shared_root() {
        let mut f = beta6();
        f.poles.push(Factor::new(p(&[5, 10, 1]), 1));
        match verify_belyi(&f) {
            Err(BelyiError::FactorsShareRoot(a, b)) => {
                assert!(a.starts_with("zero[0]"));
                assert!(b.starts_with("pole[1]"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrong_infinity() {
        let mut f = beta6();
        f.infinity = Some(InfinityTag { class: CriticalClass::Pole, order: 4 });
        assert!(matches!(verify_belyi(&f), Err(BelyiError::DegreeImbalance(_))));
        f.infinity = None;
        assert!(matches!(verify_belyi(&f), Err(BelyiError::DegreeImbalance(_))));
    }
}

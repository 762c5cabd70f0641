use std::fmt;

use num_traits::{One, Zero};

use super::{ExactError, GaussRat, UniPoly};

/// `scalar · num / den` with `num`, `den` monic and coprime.
///
/// The canonical form makes structural equality coincide with equality of
/// rational functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMap {
    scalar: GaussRat,
    num: UniPoly,
    den: UniPoly,
}

impl RationalMap {
    /// Canonicalizes `scalar · num / den`. Fails if any of the three is zero.
    pub fn new(scalar: GaussRat, num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if scalar.is_zero() || num.is_zero() {
            return Err(ExactError::ZeroMap);
        }
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let scalar = &(&scalar * num.leading().unwrap()) / den.leading().unwrap();
        Ok(RationalMap { scalar, num: num.monic(), den: den.monic() })
    }

    pub fn from_poly(p: &UniPoly) -> Result<Self, ExactError> {
        Self::new(GaussRat::one(), p.clone(), UniPoly::one())
    }

    pub fn identity() -> Self {
        RationalMap { scalar: GaussRat::one(), num: UniPoly::z(), den: UniPoly::one() }
    }

    pub fn scalar(&self) -> &GaussRat {
        &self.scalar
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap().max(self.den.degree().unwrap())
    }

    /// `self(inner(z))`. Both maps are treated as projective pairs, so poles of
    /// `inner` need no special casing.
    pub fn compose(&self, inner: &RationalMap) -> RationalMap {
        let p = inner.num.scale(&inner.scalar);
        let q = &inner.den;
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let d = dn.max(dd);
        let num = &self.num.homogenize(&p, q, dn) * &q.pow((d - dn) as u32);
        let den = &self.den.homogenize(&p, q, dd) * &q.pow((d - dd) as u32);
        RationalMap::new(self.scalar.clone(), num, den).expect("composite of nonconstant maps is nonzero")
    }

    /// `self(z^n)`.
    pub fn substitute_power(&self, n: usize) -> RationalMap {
        assert!(n >= 1, "substitution power must be positive");
        RationalMap::new(
            self.scalar.clone(),
            self.num.substitute_power(n),
            self.den.substitute_power(n),
        )
        .expect("substitution keeps the map nonzero")
    }

    /// Numerator of `self - c` over the same denominator: `scalar·num - c·den`.
    pub fn shifted_numerator(&self, c: &GaussRat) -> UniPoly {
        &self.num.scale(&self.scalar) - &self.den.scale(c)
    }

    /// Value at a finite point, `None` at a pole.
    pub fn eval(&self, x: &GaussRat) -> Option<GaussRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&(&self.scalar * &self.num.eval(x)) / &d)
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scalar.is_one() {
            write!(f, "({:?}) * ", self.scalar)?;
        }
        write!(f, "({})", self.num)?;
        if !self.den.is_constant() {
            write!(f, " / ({})", self.den)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_cancels_common_factor() {
        // (2z² - 2) / (4z - 4) = (1/2)(z + 1)
        let f = RationalMap::new(
            GaussRat::one(),
            UniPoly::from_ints(&[-2, 0, 2]),
            UniPoly::from_ints(&[-4, 4]),
        )
        .unwrap();
        assert_eq!(f.num(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &UniPoly::one());
        assert_eq!(f.scalar(), &GaussRat::from_frac(1, 2));
    }

    #[test]
    fn substitute_square() {
        let f = RationalMap::new(GaussRat::one(), UniPoly::z(), UniPoly::from_ints(&[1, 1])).unwrap();
        let g = f.substitute_power(2);
        assert_eq!(g.num(), &UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(g.den(), &UniPoly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn compose_with_identity() {
        let f = RationalMap::new(
            GaussRat::from_frac(1, 1728),
            UniPoly::from_ints(&[5, 10, 1]).pow(3),
            UniPoly::z(),
        )
        .unwrap();
        assert_eq!(f.compose(&RationalMap::identity()), f);
        assert_eq!(RationalMap::identity().compose(&f), f);
    }

    #[test]
    fn compose_matches_pointwise_evaluation() {
        let f = RationalMap::new(GaussRat::from_int(3), UniPoly::from_ints(&[1, 0, 1]), UniPoly::from_ints(&[0, 1])).unwrap();
        let g = RationalMap::new(GaussRat::i(), UniPoly::from_ints(&[-1, 1]), UniPoly::from_ints(&[2, 0, 1])).unwrap();
        let h = f.compose(&g);
        for x in [GaussRat::from_int(3), GaussRat::from_ints(1, 1), GaussRat::from_frac(-5, 7)] {
            let expect = f.eval(&g.eval(&x).unwrap()).unwrap();
            assert_eq!(h.eval(&x).unwrap(), expect);
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalMap::new(GaussRat::one(), UniPoly::z(), UniPoly::zero()),
            Err(ExactError::ZeroDenominator)
        );
    }
}

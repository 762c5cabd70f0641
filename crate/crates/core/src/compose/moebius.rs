use std::fmt;

use num_traits::{One, Zero};

use super::ComposeError;
use crate::exactalg::{GaussRat, RationalMap, UniPoly};

/// A point of the Riemann sphere with exact coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtPoint {
    Finite(GaussRat),
    Infinity,
}

impl ExtPoint {
    pub fn int(n: i64) -> Self {
        ExtPoint::Finite(GaussRat::from_int(n))
    }

    pub fn gauss(re: i64, im: i64) -> Self {
        ExtPoint::Finite(GaussRat::from_ints(re, im))
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Finite(z) => write!(f, "{z:?}"),
            ExtPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// `z ↦ (az + b)/(cz + d)`, stored up to scale with the first nonzero
/// entry of `(a, b, c, d)` equal to 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Moebius {
    a: GaussRat,
    b: GaussRat,
    c: GaussRat,
    d: GaussRat,
}

impl Moebius {
    pub fn new(a: GaussRat, b: GaussRat, c: GaussRat, d: GaussRat) -> Result<Self, ComposeError> {
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return Err(ComposeError::Degenerate("ad - bc = 0".into()));
        }
        let lead = [&a, &b, &c, &d].into_iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
        Ok(Moebius { a: &a * &lead, b: &b * &lead, c: &c * &lead, d: &d * &lead })
    }

    pub fn identity() -> Self {
        Moebius { a: GaussRat::one(), b: GaussRat::zero(), c: GaussRat::zero(), d: GaussRat::one() }
    }

    pub fn entries(&self) -> [&GaussRat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Maps `z1, z2, z3` to `0, 1, ∞`.
    fn to_standard(z: &[ExtPoint; 3]) -> Result<Self, ComposeError> {
        use ExtPoint::*;
        let zero = GaussRat::zero;
        let one = GaussRat::one;
        match z {
            [Infinity, Finite(z2), Finite(z3)] => Self::new(zero(), z2 - z3, one(), -z3),
            [Finite(z1), Infinity, Finite(z3)] => Self::new(one(), -z1, one(), -z3),
            [Finite(z1), Finite(z2), Infinity] => Self::new(one(), -z1, zero(), z2 - z1),
            [Finite(z1), Finite(z2), Finite(z3)] => {
                let u = z2 - z3;
                let w = z2 - z1;
                Self::new(u.clone(), -&(z1 * &u), w.clone(), -&(z3 * &w))
            }
            _ => Err(ComposeError::Degenerate("points coincide".into())),
        }
    }

    /// The unique map sending `z[i]` to `w[i]`.
    pub fn from_three_points(z: &[ExtPoint; 3], w: &[ExtPoint; 3]) -> Result<Self, ComposeError> {
        for pts in [z, w] {
            if pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2] {
                return Err(ComposeError::Degenerate(format!("points {}, {}, {} are not distinct", pts[0], pts[1], pts[2])));
            }
        }
        Ok(Self::to_standard(w)?.inverse().compose(&Self::to_standard(z)?))
    }

    /// `self ∘ inner`, i.e. the matrix product `self · inner`.
    pub fn compose(&self, inner: &Moebius) -> Moebius {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&inner.a, &inner.b, &inner.c, &inner.d);
        Self::new(&(a * e) + &(b * g), &(a * f) + &(b * h), &(c * e) + &(d * g), &(c * f) + &(d * h))
            .expect("product of invertible matrices is invertible")
    }

    pub fn inverse(&self) -> Moebius {
        Self::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("inverse is invertible")
    }

    pub fn apply(&self, p: &ExtPoint) -> ExtPoint {
        match p {
            ExtPoint::Infinity if self.c.is_zero() => ExtPoint::Infinity,
            ExtPoint::Infinity => ExtPoint::Finite(&self.a / &self.c),
            ExtPoint::Finite(z) => {
                let den = &(&self.c * z) + &self.d;
                if den.is_zero() {
                    ExtPoint::Infinity
                } else {
                    ExtPoint::Finite(&(&(&self.a * z) + &self.b) / &den)
                }
            }
        }
    }

    pub fn to_rational_map(&self) -> RationalMap {
        RationalMap::new(
            GaussRat::one(),
            UniPoly::new(vec![self.b.clone(), self.a.clone()]),
            UniPoly::new(vec![self.d.clone(), self.c.clone()]),
        )
        .expect("Möbius map is a nonzero rational map")
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}*z + {:?})/({:?}*z + {:?})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `f ∘ m`.
    Pre,
    /// `m ∘ f`.
    Post,
}

pub fn ratmap_compose_moebius(f: &RationalMap, m: &Moebius, side: Side) -> RationalMap {
    match side {
        Side::Pre => f.compose(&m.to_rational_map()),
        Side::Post => m.to_rational_map().compose(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussRat {
        GaussRat::from_ints(re, im)
    }

    #[test]
    fn identity_from_points() {
        let pts = [ExtPoint::int(0), ExtPoint::int(1), ExtPoint::Infinity];
        assert_eq!(Moebius::from_three_points(&pts, &pts).unwrap(), Moebius::identity());
        let pts = [ExtPoint::gauss(2, 1), ExtPoint::int(-3), ExtPoint::gauss(0, 7)];
        assert_eq!(Moebius::from_three_points(&pts, &pts).unwrap(), Moebius::identity());
    }

    #[test]
    fn maps_points() {
        let z = [ExtPoint::Infinity, ExtPoint::gauss(1, 1), ExtPoint::int(5)];
        let w = [ExtPoint::int(2), ExtPoint::Infinity, ExtPoint::gauss(0, -3)];
        let m = Moebius::from_three_points(&z, &w).unwrap();
        for (a, b) in z.iter().zip(&w) {
            assert_eq!(&m.apply(a), b);
        }
    }

    #[test]
    fn coincident_points_rejected() {
        let z = [ExtPoint::int(0), ExtPoint::int(0), ExtPoint::Infinity];
        let w = [ExtPoint::int(0), ExtPoint::int(1), ExtPoint::Infinity];
        assert!(Moebius::from_three_points(&z, &w).is_err());
        assert!(Moebius::from_three_points(&w, &z).is_err());
        assert!(Moebius::new(g(1, 0), g(2, 0), g(2, 0), g(4, 0)).is_err());
    }

    #[test]
    fn inverse_law() {
        let m = Moebius::new(g(1, 2), g(0, -1), g(3, 0), g(1, 1)).unwrap();
        assert_eq!(m.compose(&m.inverse()), Moebius::identity());
        let f = RationalMap::new(g(2, 0), UniPoly::from_ints(&[1, 0, 1]), UniPoly::from_ints(&[0, 1])).unwrap();
        let there = ratmap_compose_moebius(&f, &m, Side::Pre);
        assert_eq!(ratmap_compose_moebius(&there, &m.inverse(), Side::Pre), f);
        assert_eq!(ratmap_compose_moebius(&f, &Moebius::identity(), Side::Post), f);
    }

    #[test]
    fn composition_matches_maps() {
        let m = Moebius::new(g(1, 2), g(0, -1), g(3, 0), g(1, 1)).unwrap();
        let n = Moebius::new(g(0, 1), g(4, 0), g(1, 0), g(-2, 3)).unwrap();
        assert_eq!(m.compose(&n).to_rational_map(), m.to_rational_map().compose(&n.to_rational_map()));
    }
}

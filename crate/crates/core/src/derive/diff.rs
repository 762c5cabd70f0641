use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactalg::{GaussRat, UniPoly};
use crate::multipoly::ParamPoly;

/// The few operations the differential-trick formulas need, shared by
/// concrete ([`UniPoly`]) and parametric ([`ParamPoly`]) polynomials.
pub trait DiffPoly: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_q(&self, c: &BigRational) -> Self;
    fn d(&self) -> Self;

    fn scale_int(&self, n: i64) -> Self {
        self.scale_q(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl DiffPoly for UniPoly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_q(&self, c: &BigRational) -> Self {
        self.scale(&GaussRat::real(c.clone()))
    }
    fn d(&self) -> Self {
        self.derivative()
    }
}

impl DiffPoly for ParamPoly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_q(&self, c: &BigRational) -> Self {
        self.scale(c)
    }
    fn d(&self) -> Self {
        self.derivative()
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `V = 25/(11 s²) · (−12 P P″ + 11 P′²)` and
/// `M = 25/(11 s³) · (90 P P′ P″ − 36 P² P‴ − 55 P′³)`.
pub fn vm_from_p<T: DiffPoly>(p: &T, s: u32) -> (T, T) {
    assert!(s > 0, "s must be positive");
    let s = s as i64;
    let p1 = p.d();
    let p2 = p1.d();
    let p3 = p2.d();
    let v = p.mul(&p2).scale_int(-12).add(&p1.mul(&p1).scale_int(11));
    let m = p
        .mul(&p1)
        .mul(&p2)
        .scale_int(90)
        .sub(&p.mul(p).mul(&p3).scale_int(36))
        .sub(&p1.mul(&p1).mul(&p1).scale_int(55));
    (v.scale_q(&ratio(25, 11 * s * s)), m.scale_q(&ratio(25, 11 * s * s * s)))
}

/// `22 P P⁗ + 45 P″² − 66 P′ P‴`.
pub fn ode_residual<T: DiffPoly>(p: &T) -> T {
    let p1 = p.d();
    let p2 = p1.d();
    let p3 = p2.d();
    let p4 = p3.d();
    p.mul(&p4).scale_int(22).add(&p2.mul(&p2).scale_int(45)).sub(&p1.mul(&p3).scale_int(66))
}

/// Coefficient of `z^{2m−4}` in [`ode_residual`] for monic `P` of degree
/// `m = 6 + s`: `(s−6)(s−5)(s+5)(s+6)`.
///
/// Panics if the three equivalent forms of the coefficient disagree.
pub fn ode_leading_coeff(s: u64) -> i128 {
    let s = s as i128;
    let m = s + 6;
    let factored = (s - 6) * (s - 5) * (s + 5) * (s + 6);
    let in_m = m * (m - 1) * (m - 11) * (m - 12);
    let expanded = 22 * m * (m - 1) * (m - 2) * (m - 3) + 45 * m * m * (m - 1) * (m - 1) - 66 * m * m * (m - 1) * (m - 2);
    assert!(factored == in_m && in_m == expanded, "leading coefficient forms disagree at s = {s}");
    factored
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{MultiPoly, MultiPolyError, VarSet};
use crate::exactalg::{GaussRat, UniPoly};

/// A polynomial in `z` whose coefficients are [`MultiPoly`] values over a
/// shared variable set. Entry `k` multiplies `z^k`; the last stored
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamPoly {
    vars: VarSet,
    coeffs: Vec<MultiPoly>,
}

impl ParamPoly {
    pub fn new(vars: &VarSet, mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.vars() == vars));
        ParamPoly { vars: vars.clone(), coeffs }
    }

    pub fn zero(vars: &VarSet) -> Self {
        ParamPoly { vars: vars.clone(), coeffs: Vec::new() }
    }

    /// Monic polynomial of degree `m` with symbolic lower coefficients:
    /// `z^m + Σ c_i z^i`, where `lower[i]` is `c_i`. Missing entries are zero.
    pub fn monic_with(vars: &VarSet, m: usize, lower: &[MultiPoly]) -> Self {
        assert!(lower.len() <= m);
        let mut coeffs: Vec<MultiPoly> = lower.to_vec();
        coeffs.resize(m, MultiPoly::zero(vars));
        coeffs.push(MultiPoly::one(vars));
        Self::new(vars, coeffs)
    }

    /// Lifts a rational univariate polynomial. Fails if a coefficient has a
    /// nonzero imaginary part.
    pub fn from_unipoly(vars: &VarSet, p: &UniPoly) -> Option<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.is_real().then(|| MultiPoly::constant(vars, c.re.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(vars, coeffs))
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(&self.vars))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.vars, self.coeffs.iter().map(|m| m.scale(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.vars,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&BigRational::from_integer(BigInt::from(i))))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn substitute_all(&self, subs: &[(usize, MultiPoly)]) -> Result<Self, MultiPolyError> {
        Ok(Self::new(
            &self.vars,
            self.coeffs.iter().map(|c| c.substitute_all(subs)).collect::<Result<_, _>>()?,
        ))
    }

    /// Drops to a concrete polynomial when every coefficient is constant.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        self.coeffs
            .iter()
            .map(|c| c.constant_value().map(GaussRat::real))
            .collect::<Option<Vec<_>>>()
            .map(UniPoly::new)
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ParamPoly::new(&self.vars, (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &(-rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::new(&self.vars, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero(&self.vars);
        }
        let mut out = vec![MultiPoly::zero(&self.vars); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        ParamPoly::new(&self.vars, out)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

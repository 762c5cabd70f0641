use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MultiPolyError;

/// An ordered, named set of indeterminates shared by every polynomial of one
/// system. Two sets are equal when their names agree position by position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarSet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `prefix0, prefix1, …, prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        VarSet((0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, MultiPolyError> {
        self.index_of(name).ok_or_else(|| MultiPolyError::UnknownVariable(name.to_string()))
    }

    fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

pub(crate) type Exponents = Vec<u32>;

/// Sparse polynomial with rational coefficients over a fixed [`VarSet`].
///
/// Terms are keyed by exponent vectors; zero coefficients are never stored.
/// The `BTreeMap` order is lexicographic with the first variable most
/// significant, which is the order used by [`MultiPoly::div_exact`].
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Exponents, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn from_int(vars: &VarSet, n: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var_at(vars: &VarSet, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, BigRational::one());
        p
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self, MultiPolyError> {
        Ok(Self::var_at(vars, vars.require(name)?))
    }

    pub(crate) fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(BigRational::zero))
    }

    /// Highest power of variable `idx`; `None` for the zero polynomial.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] > 0)
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.involves(i)).collect()
    }

    /// Coefficients of `self` viewed as a polynomial in variable `idx`;
    /// entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[idx] as usize;
            let mut e2 = e.clone();
            e2[idx] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    fn check(&self, other: &MultiPoly) -> Result<(), MultiPolyError> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(MultiPolyError::MismatchedVariables)
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        self.check(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces variable `idx` by `value` everywhere.
    pub fn substitute(&self, idx: usize, value: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        self.substitute_all(&[(idx, value.clone())])
    }

    pub fn substitute_named(&self, name: &str, value: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        self.substitute(self.vars.require(name)?, value)
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_all(&self, subs: &[(usize, MultiPoly)]) -> Result<MultiPoly, MultiPolyError> {
        for (_, v) in subs {
            self.check(v)?;
        }
        if subs.iter().all(|(i, _)| !self.involves(*i)) {
            return Ok(self.clone());
        }
        // powers[k][j] = subs[k].1 ^ j, filled on demand
        let mut powers: Vec<Vec<MultiPoly>> = subs.iter().map(|_| vec![Self::one(&self.vars)]).collect();
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let mut factor = Self::constant(&self.vars, c.clone());
            for (k, (idx, val)) in subs.iter().enumerate() {
                let p = e[*idx] as usize;
                if p == 0 {
                    continue;
                }
                rest[*idx] = 0;
                while powers[k].len() <= p {
                    let next = powers[k].last().unwrap() * val;
                    powers[k].push(next);
                }
                factor = &factor * &powers[k][p];
            }
            let mono = MultiPoly::from_terms(&self.vars, [(rest, BigRational::one())]);
            for (e2, c2) in (&factor * &mono).terms {
                out.add_term(e2, c2);
            }
        }
        Ok(out)
    }

    /// Evaluates every variable at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact quotient `self / divisor`; `NotDivisible` if a remainder is
    /// left. Uses the lexicographic leading term, for which a single divisor
    /// always forms a Gröbner basis, so the test is complete.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        self.check(divisor)?;
        let (lt_e, lt_c) = divisor.terms.last_key_value().ok_or(MultiPolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((e, c)) = rem.terms.last_key_value() {
            if e.iter().zip(lt_e).any(|(a, b)| a < b) {
                return Err(MultiPolyError::NotDivisible);
            }
            let m: Exponents = e.iter().zip(lt_e).map(|(a, b)| a - b).collect();
            let q = c / lt_c;
            let mono = MultiPoly::from_terms(&self.vars, [(m.clone(), q.clone())]);
            rem = &rem - &(&mono * divisor);
            quot.add_term(m, q);
        }
        Ok(quot)
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &MultiPoly) -> bool {
        !divisor.is_zero() && self.div_exact(divisor).is_ok()
    }

    /// Terms in display order: descending total degree, then descending
    /// exponent vector.
    fn ordered_terms(&self) -> Vec<(&Exponents, &BigRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        t
    }

    fn monomial_string(&self, e: &[u32]) -> String {
        e.iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    self.vars.name(i).to_string()
                } else {
                    format!("{}^{}", self.vars.name(i), k)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Parsable form, e.g. `-15/44*a10^2 + 3*a9`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = self.monomial_string(e);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

// Operator forms assume a shared variable set and panic otherwise; use the
// `checked_*` methods when that is not guaranteed.
impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("variable sets differ")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("variable sets differ")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("variable sets differ")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse;

    fn vs() -> VarSet {
        VarSet::new(&["a0", "a1", "b0", "b1"])
    }

    #[test]
    fn difference_of_squares() {
        let v = vs();
        let a1 = MultiPoly::var(&v, "a1").unwrap();
        let b1 = MultiPoly::var(&v, "b1").unwrap();
        let prod = &(&a1 - &b1) * &(&a1 + &b1);
        assert_eq!(prod, parse(&v, "a1^2 - b1^2").unwrap());
    }

    #[test]
    fn substitution_annihilates() {
        let v = vs();
        let eq = parse(&v, "2*a1 - 5*b1").unwrap();
        let val = parse(&v, "2/5*a1").unwrap();
        assert!(eq.substitute_named("b1", &val).unwrap().is_zero());
    }

    #[test]
    fn substitution_to_constant() {
        let v = VarSet::indexed("a", 7);
        let p = parse(&v, "-a6^2/121").unwrap();
        let r = p.substitute_named("a6", &MultiPoly::from_int(&v, 11)).unwrap();
        assert_eq!(r.constant_value(), Some(BigRational::from_integer((-1).into())));
    }

    #[test]
    fn mismatched_variable_sets() {
        let a = MultiPoly::var(&vs(), "a0").unwrap();
        let b = MultiPoly::var(&VarSet::indexed("a", 2), "a0").unwrap();
        assert_eq!(a.checked_add(&b), Err(MultiPolyError::MismatchedVariables));
        assert_eq!(a.checked_mul(&b), Err(MultiPolyError::MismatchedVariables));
    }

    #[test]
    fn exact_division() {
        let v = vs();
        let f = parse(&v, "a1 - b1").unwrap();
        let g = parse(&v, "a1^2 - 5*a1*b1 + 4*b1^2 + 6*a0 - 6*b0").unwrap();
        assert_eq!((&f * &g).div_exact(&f).unwrap(), g);
        assert_eq!(g.div_exact(&f), Err(MultiPolyError::NotDivisible));
    }

    #[test]
    fn degrees_and_coefficients() {
        let v = vs();
        let p = parse(&v, "3*a1^2*b1 + a0*a1 - 7").unwrap();
        assert_eq!(p.degree_in(1), Some(2));
        assert_eq!(p.total_degree(), Some(3));
        let c = p.coefficients_in(1);
        assert_eq!(c.len(), 3);
        assert_eq!(c[1], parse(&v, "a0").unwrap());
        assert_eq!(c[2], parse(&v, "3*b1").unwrap());
        assert_eq!(c[0], parse(&v, "-7").unwrap());
    }

    #[test]
    fn display_parses_back() {
        let v = vs();
        let p = parse(&v, "-(a1 - b1)^3/27 + 4*a0").unwrap();
        assert_eq!(parse(&v, &p.to_string()).unwrap(), p);
    }
}

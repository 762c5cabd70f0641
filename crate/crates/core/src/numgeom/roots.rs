use std::f64::consts::TAU;

use num_complex::Complex64;

use super::NumError;
use crate::exactalg::UniPoly;

pub type ComplexPoint = Complex64;

#[derive(Clone, Copy, Debug)]
pub struct RootConfig {
    /// Accepted backward error: `|p(r)| ≤ tol · Σ |c_i| |r|^i`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig { tol: 1e-10, max_iter: 500 }
    }
}

fn to_complex(p: &UniPoly) -> Vec<Complex64> {
    p.coeffs()
        .iter()
        .map(|c| {
            let (re, im) = c.to_f64_pair();
            Complex64::new(re, im)
        })
        .collect()
}

/// `(p(z), p′(z))` by Horner.
fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// `Σ |c_i| |z|^i`, the natural size of `p(z)` in floating point.
pub fn evaluation_scale(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
}

/// Relative backward error `|p(z)| / Σ |c_i| |z|^i` of a candidate root.
pub fn backward_error(p: &UniPoly, z: Complex64) -> f64 {
    let c = to_complex(p);
    eval_with_derivative(&c, z).0.norm() / evaluation_scale(&c, z)
}

fn aberth(c: &[Complex64], max_iter: usize) -> Option<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[n];
    let radius = (c[0] / lead).norm().powf(1.0 / n as f64).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + 0.4)).collect();
    for _ in 0..max_iter {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.is_finite() {
                return None;
            }
            z[k] -= w;
            worst = worst.max(w.norm() / z[k].norm().max(1.0));
        }
        if worst < 1e-15 {
            return Some(z);
        }
    }
    None
}

fn newton_polish(c: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..5 {
        let (p, dp) = eval_with_derivative(c, z);
        let next = z - p / dp;
        if !next.is_finite() || eval_with_derivative(c, next).0.norm() >= p.norm() {
            break;
        }
        z = next;
    }
    z
}

/// Argument in `[0, 2π)`, with values within `1e−12` of `2π` folded to 0.
pub fn arg_0_2pi(z: Complex64) -> f64 {
    let a = z.arg().rem_euclid(TAU);
    if TAU - a < 1e-12 {
        0.0
    } else {
        a
    }
}

/// Sorts by modulus, grouping moduli that agree to `1e−9` relative, and then
/// by argument in `[0, 2π)`.
pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    let mut start = 0;
    while start < roots.len() {
        let base = roots[start].norm();
        let mut end = start + 1;
        while end < roots.len() && (roots[end].norm() - base).abs() <= 1e-9 * base.max(1.0) {
            end += 1;
        }
        roots[start..end].sort_by(|a, b| arg_0_2pi(*a).total_cmp(&arg_0_2pi(*b)));
        start = end;
    }
}

/// All `deg p` complex roots of a squarefree polynomial.
///
/// Aberth iteration followed by Newton polishing. Every root is checked to
/// have backward error at most `cfg.tol`.
pub fn roots(p: &UniPoly, cfg: &RootConfig) -> Result<Vec<ComplexPoint>, NumError> {
    if !(cfg.tol > 0.0) {
        return Err(NumError::InvalidTolerance(cfg.tol));
    }
    match p.degree() {
        None | Some(0) => return Err(NumError::Constant),
        _ => {}
    }
    if !p.is_squarefree() {
        return Err(NumError::NotSquarefree(p.to_string()));
    }
    let c = to_complex(p);
    let raw = aberth(&c, cfg.max_iter).ok_or(NumError::NoConvergence(cfg.max_iter))?;
    let mut out: Vec<Complex64> = raw.into_iter().map(|z| newton_polish(&c, z)).collect();
    for &z in &out {
        let err = eval_with_derivative(&c, z).0.norm() / evaluation_scale(&c, z);
        if !(err <= cfg.tol) {
            return Err(NumError::Residual { root: (z.re, z.im), error: err });
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_minus_i() {
        let r = roots(&UniPoly::from_ints(&[1, 0, 1]), &RootConfig::default()).unwrap();
        assert!((r[0] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
        assert!((r[1] - Complex64::new(0.0, -1.0)).norm() < 1e-14);
    }

    #[test]
    fn quadratic_with_gaussian_roots() {
        let r = roots(&UniPoly::from_ints(&[125, 22, 1]), &RootConfig::default()).unwrap();
        assert!((r[0] - Complex64::new(-11.0, 2.0)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(-11.0, -2.0)).norm() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        let cfg = RootConfig::default();
        assert!(matches!(roots(&UniPoly::from_ints(&[1, -2, 1]), &cfg), Err(NumError::NotSquarefree(_))));
        assert!(matches!(roots(&UniPoly::from_ints(&[3]), &cfg), Err(NumError::Constant)));
        let bad = RootConfig { tol: 0.0, ..cfg };
        assert!(matches!(roots(&UniPoly::from_ints(&[1, 1]), &bad), Err(NumError::InvalidTolerance(_))));
    }

    #[test]
    fn deterministic() {
        let p = UniPoly::from_ints(&[1, -228, 494, 228, 1]);
        let a = roots(&p, &RootConfig::default()).unwrap();
        let b = roots(&p, &RootConfig::default()).unwrap();
        assert_eq!(a, b);
    }
}

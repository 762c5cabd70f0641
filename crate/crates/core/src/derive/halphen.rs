use crate::exactalg::{GaussRat, UniPoly};

/// Names of the checked identities, in the order they are tested.
pub const HALPHEN_IDENTITIES: [&str; 7] = ["sM", "sV2", "ODE-1", "ODE-2", "VR", "PR", "ODE-4"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalphenCheck {
    /// `R = −190 P″ / 11`.
    pub r: UniPoly,
    pub r_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("identity {identity} fails: residual {residual}")]
pub struct HalphenFailure {
    pub identity: &'static str,
    pub residual: UniPoly,
}

fn c(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

/// Checks the intermediate identities of the differential trick on a
/// concrete solution `(P, V, M)`:
///
/// * `sM = 3V′P − 5VP′`
/// * `sV² = 2M′P − 5MP′`
/// * `V²(3V′P − 5VP′) = M(2M′P − 5MP′)`
/// * `s²V² = 6V″P² − 19V′P′P − 10VPP″ + 25VP′²`
/// * `VR = 6V″P − 19V′P′` and `PR = s²V + 10PP″ − 25P′²`
/// * `7P′R′ − 6PR″ − 370P′P‴ + 60PP⁗ + R² − 16P″R − 240P″² = 0`
///
/// with `R = −190P″/11`. Stops at the first failure.
pub fn halphen_intermediates_check(p: &UniPoly, v: &UniPoly, m: &UniPoly, s: u32) -> Result<HalphenCheck, HalphenFailure> {
    let s = c(s as i64);
    let s2 = &s * &s;
    let (p1, v1, m1) = (p.derivative(), v.derivative(), m.derivative());
    let (p2, v2) = (p1.derivative(), v1.derivative());
    let p3 = p2.derivative();
    let p4 = p3.derivative();
    let r = p2.scale(&GaussRat::from_frac(-190, 11));
    let r1 = r.derivative();
    let r2 = r1.derivative();

    let dv = &(&v1 * p).scale(&c(3)) - &(v * &p1).scale(&c(5));
    let dm = &(&m1 * p).scale(&c(2)) - &(m * &p1).scale(&c(5));
    let vv = v * v;

    let checks: [(&'static str, UniPoly); 7] = [
        ("sM", &m.scale(&s) - &dv),
        ("sV2", &vv.scale(&s) - &dm),
        ("ODE-1", &(&vv * &dv) - &(m * &dm)),
        ("ODE-2", {
            let rhs = &(&(&(&(&v2 * p) * p).scale(&c(6)) - &(&(&v1 * &p1) * p).scale(&c(19)))
                - &(&(v * p) * &p2).scale(&c(10)))
                + &(&(v * &p1) * &p1).scale(&c(25));
            &vv.scale(&s2) - &rhs
        }),
        ("VR", &(v * &r) - &(&(&v2 * p).scale(&c(6)) - &(&v1 * &p1).scale(&c(19)))),
        ("PR", {
            let rhs = &(&v.scale(&s2) + &(p * &p2).scale(&c(10))) - &(&p1 * &p1).scale(&c(25));
            &(p * &r) - &rhs
        }),
        ("ODE-4", {
            let terms = [
                (&p1 * &r1).scale(&c(7)),
                (p * &r2).scale(&c(-6)),
                (&p1 * &p3).scale(&c(-370)),
                (p * &p4).scale(&c(60)),
                &r * &r,
                (&p2 * &r).scale(&c(-16)),
                (&p2 * &p2).scale(&c(-240)),
            ];
            terms.iter().fold(UniPoly::zero(), |acc, t| &acc + t)
        }),
    ];
    debug_assert!(checks.iter().map(|(n, _)| *n).eq(HALPHEN_IDENTITIES));
    for (identity, residual) in checks {
        if !residual.is_zero() {
            return Err(HalphenFailure { identity, residual });
        }
    }
    Ok(HalphenCheck { r_degree: r.degree(), r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derive::vm_from_p;

    fn dodecahedron() -> (UniPoly, UniPoly, UniPoly) {
        let p = UniPoly::from_ints(&[0, -1, 0, 0, 0, 0, -11, 0, 0, 0, 0, 1]);
        let (v, m) = vm_from_p(&p, 5);
        (p, v, m)
    }

    #[test]
    fn dodecahedron_passes() {
        let (p, v, m) = dodecahedron();
        let h = halphen_intermediates_check(&p, &v, &m, 5).unwrap();
        assert_eq!(h.r_degree, Some(9));
        assert!(h.r_degree.unwrap() <= p.degree().unwrap() - 2);
    }

    #[test]
    fn perturbed_m_fails_first_identity() {
        let (p, v, m) = dodecahedron();
        let bad = &m + &UniPoly::one();
        assert_eq!(halphen_intermediates_check(&p, &v, &bad, 5).unwrap_err().identity, "sM");
    }

    #[test]
    fn wrong_s_fails() {
        let (p, v, m) = dodecahedron();
        assert!(halphen_intermediates_check(&p, &v, &m, 6).is_err());
    }
}

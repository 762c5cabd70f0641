//! Executable derivations: the `D₆` elimination and the case analysis for
//! passports `(3^k | 2^l | 5^m s^1)` via the differential trick.
//!
//! For monic `P` of degree `m = 6 + s`, the pentagon polynomial must solve
//! `22 P P⁗ + 45 P″² − 66 P′ P‴ = 0`, and then `V` and `M` are determined
//! by `P`. The leading coefficient of that equation is
//! `(s−6)(s−5)(s+5)(s+6)`, so only `s = 5` and `s = 6` need elimination.

mod d6;
mod diff;
mod family;
mod halphen;

pub use d6::{d6_assumption, d6_solve, d6_solve_with, d6_system, D6Solution, D6_UNKNOWNS};
pub use diff::{ode_leading_coeff, ode_residual, vm_from_p, DiffPoly};
pub use family::{family_k, s6_family, Family, FamilyPoint};
pub use halphen::{halphen_intermediates_check, HalphenCheck, HalphenFailure, HALPHEN_IDENTITIES};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::belyi::main_equation_residual;
use crate::exactalg::{GaussRat, UniPoly};
use crate::multipoly::{
    sequential_linear_solve, EliminationError, EliminationTrace, Equation, MultiPoly, MultiPolyError, ParamPoly,
    TraceReport, VarSet,
};

#[derive(Debug, Clone, thiserror::Error)]
pub enum DeriveError {
    #[error("s = {s} is outside 1..={max}")]
    OutOfRange { s: u32, max: u32 },
    #[error("elimination failed: {0}")]
    Elimination(#[from] EliminationError),
    #[error(transparent)]
    Poly(#[from] MultiPolyError),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("unexpected result: {0}")]
    Unexpected(String),
}

#[derive(Clone, Copy, Debug)]
pub struct DeriveConfig {
    /// Largest `s` accepted by [`derive_case`].
    pub max_s: u32,
}

impl Default for DeriveConfig {
    fn default() -> Self {
        DeriveConfig { max_s: 12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// A Belyi function exists and was computed.
    Solved,
    /// The differential equation has nonzero leading coefficient.
    NoSolutionLeadingCoeff,
    /// Solutions of the differential equation exist but give `deg V` below
    /// the required `10 + 2s`.
    NoSolutionDegreeDeficit,
}

#[derive(Clone, Debug)]
pub enum CaseArtifacts {
    Solution { p: UniPoly, v: UniPoly, m: UniPoly, k: GaussRat, halphen: HalphenCheck },
    Family(Box<Family>),
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub s: u32,
    /// `deg P = 6 + s`.
    pub m: u32,
    /// `deg V = 10 + 2s`.
    pub k_deg: u32,
    /// `deg M = 15 + 3s`.
    pub l_deg: u32,
    /// `deg β = 30 + 6s`.
    pub n: u32,
    pub leading_coeff: i128,
    pub verdict: Verdict,
    pub artifacts: Option<CaseArtifacts>,
    pub trace: Option<EliminationTrace>,
    pub notes: Vec<String>,
}

/// Serializable view of a [`CaseReport`], polynomials as strings.
#[derive(Clone, Debug, Serialize)]
pub struct CaseSummary {
    pub s: u32,
    pub m: u32,
    pub k_deg: u32,
    pub l_deg: u32,
    pub n: u32,
    pub leading_coeff: i128,
    pub verdict: Verdict,
    pub p: Option<String>,
    pub v: Option<String>,
    pub m_poly: Option<String>,
    pub k: Option<String>,
    pub trace: Option<TraceReport>,
    pub notes: Vec<String>,
}

impl CaseReport {
    pub fn summary(&self) -> CaseSummary {
        let (p, v, m, k) = match &self.artifacts {
            Some(CaseArtifacts::Solution { p, v, m, k, .. }) => {
                (Some(p.to_string()), Some(v.to_string()), Some(m.to_string()), Some(k.to_string()))
            }
            Some(CaseArtifacts::Family(f)) => {
                (Some(f.p.to_string()), Some(f.v.to_string()), Some(f.m.to_string()), Some(f.k.to_string()))
            }
            None => (None, None, None, None),
        };
        CaseSummary {
            s: self.s,
            m: self.m,
            k_deg: self.k_deg,
            l_deg: self.l_deg,
            n: self.n,
            leading_coeff: self.leading_coeff,
            verdict: self.verdict,
            p,
            v,
            m_poly: m,
            k,
            trace: self.trace.as_ref().map(|t| t.report()),
            notes: self.notes.clone(),
        }
    }
}

/// Monic `P` of degree `6 + s` with `a_{m−1} = 0` and symbolic
/// `a_0 … a_{m−2}`.
pub fn parametric_p(s: u32) -> ParamPoly {
    let m = 6 + s as usize;
    let vars = VarSet::indexed("a", m - 1);
    let lower: Vec<MultiPoly> = (0..m - 1).map(|i| MultiPoly::var_at(&vars, i)).collect();
    ParamPoly::monic_with(&vars, m, &lower)
}

/// Coefficients of the differential equation for [`parametric_p`], from
/// `z^{2m−4}` down to `z⁰`.
pub fn ode_system(s: u32) -> (ParamPoly, Vec<Equation>) {
    let p = parametric_p(s);
    let r = ode_residual(&p);
    let top = 2 * (6 + s as usize) - 4;
    let system = (0..=top).rev().map(|i| Equation::new(format!("z^{i}"), r.coeff(i))).collect();
    (p, system)
}

pub(crate) fn solve_ode_system(s: u32) -> Result<(Vec<Equation>, ParamPoly, EliminationTrace), DeriveError> {
    let (p, system) = ode_system(s);
    let unknowns: Vec<String> = p.vars().names().to_vec();
    let trace = sequential_linear_solve(&system, &unknowns, &[])?;
    Ok((system, p, trace))
}

/// Runs the case analysis for one `s`.
pub fn derive_case(s: u32, cfg: &DeriveConfig) -> Result<CaseReport, DeriveError> {
    if s == 0 || s > cfg.max_s {
        return Err(DeriveError::OutOfRange { s, max: cfg.max_s });
    }
    let lc = ode_leading_coeff(s as u64);
    let (_, system) = ode_system(s);
    let top = &system[0].poly;
    let expected = BigRational::from_integer(BigInt::from(lc));
    let matches = if top.is_zero() { lc == 0 } else { top.constant_value() == Some(expected) };
    if !matches {
        return Err(DeriveError::Unexpected(format!("top coefficient {top} differs from {lc}")));
    }
    let mut report = CaseReport {
        s,
        m: 6 + s,
        k_deg: 10 + 2 * s,
        l_deg: 15 + 3 * s,
        n: 30 + 6 * s,
        leading_coeff: lc,
        verdict: Verdict::NoSolutionLeadingCoeff,
        artifacts: None,
        trace: None,
        notes: Vec::new(),
    };
    match s {
        5 => solve_s5(&mut report)?,
        6 => solve_s6(&mut report)?,
        _ => report
            .notes
            .push(format!("leading coefficient (s-6)(s-5)(s+5)(s+6) = {lc} is nonzero")),
    }
    if s == 1 {
        report.notes.push("no fullerene C22: the passport (3^22 | 2^33 | 5^12 6^1) is not realizable".into());
    }
    Ok(report)
}

fn solve_s5(report: &mut CaseReport) -> Result<(), DeriveError> {
    let (_, p_sym, mut trace) = solve_ode_system(5)?;
    if trace.free_vars != ["a6"] {
        return Err(DeriveError::Unexpected(format!("s = 5 left free unknowns {:?}", trace.free_vars)));
    }
    // a6 = -11 gives P = z^11 - 11 z^6 - z; a6 = 11 is its image under z -> -z
    trace.normalizations.push(("a6".into(), BigRational::from_integer((-11).into())));
    let vars = p_sym.vars().clone();
    let subs: Vec<(usize, MultiPoly)> = trace
        .normalized_values()
        .into_iter()
        .map(|(n, v)| (vars.index_of(&n).unwrap(), v))
        .collect();
    let p = p_sym
        .substitute_all(&subs)?
        .to_unipoly()
        .ok_or_else(|| DeriveError::Unexpected("P is not fully determined".into()))?;
    let (v, m) = vm_from_p(&p, 5);
    let diff = &v.pow(3) - &m.pow(2);
    let k = match diff.exact_div(&p.pow(5)) {
        Some(q) if q.is_constant() && !q.is_zero() => q.coeff(0),
        _ => return Err(DeriveError::IdentityFailed("V^3 - M^2 is not a constant multiple of P^5".into())),
    };
    let k_inv = k.inv().expect("k is nonzero");
    if !main_equation_residual(&k_inv, &v, &p, &UniPoly::one(), &m).is_zero() {
        return Err(DeriveError::IdentityFailed("main equation".into()));
    }
    let halphen = halphen_intermediates_check(&p, &v, &m, 5).map_err(|e| DeriveError::IdentityFailed(e.to_string()))?;
    report.verdict = Verdict::Solved;
    report.notes.push(format!("k = {k} from V^3 = M^2 + k P^5"));
    report
        .notes
        .push("the solution is unique up to z -> a z, so the dodecahedron is the only dessin with passport (3^20 | 2^30 | 5^12)".into());
    report.artifacts = Some(CaseArtifacts::Solution { p, v, m, k, halphen });
    report.trace = Some(trace);
    Ok(())
}

fn solve_s6(report: &mut CaseReport) -> Result<(), DeriveError> {
    let fam = s6_family()?;
    let top_v = fam.v.coeff(22);
    let top_m = fam.m.coeff(33);
    if !top_v.is_zero() || !top_m.is_zero() {
        return Err(DeriveError::Unexpected("expected the z^22 coefficient of V to vanish".into()));
    }
    report.verdict = Verdict::NoSolutionDegreeDeficit;
    report.notes.push(format!(
        "coefficient of z^22 in V is 0, so deg V <= {} < {}; likewise deg M < 33",
        fam.v.degree().unwrap_or(0),
        report.k_deg
    ));
    report.notes.push("the solutions form a family in (a9 : a10), each a dodecahedron Belyi function".into());
    report.trace = Some(fam.trace.clone());
    report.artifacts = Some(CaseArtifacts::Family(Box::new(fam.clone())));
    Ok(())
}

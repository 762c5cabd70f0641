//! Sequential linear elimination.
//!
//! Equations are visited in the order given (by convention, descending
//! `z`-degree of the coefficient they came from). Each one is rewritten under
//! the substitutions found so far, stripped of every declared nonzero factor,
//! and then solved for the highest-priority unknown that occurs linearly with
//! a nonzero constant coefficient. Unknown priority is position in the
//! `unknowns` list: later entries win.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{MultiPoly, MultiPolyError, VarSet};

/// One equation of a system, tagged with where it came from (e.g. `z^5`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub label: String,
    pub poly: MultiPoly,
}

impl Equation {
    pub fn new(label: impl Into<String>, poly: MultiPoly) -> Self {
        Equation { label: label.into(), poly }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    /// Label of the source equation.
    pub origin: String,
    /// The source equation after earlier substitutions.
    pub equation: MultiPoly,
    /// Assumed-nonzero factors removed from `equation`, with multiplicity.
    pub divided_out: Vec<(MultiPoly, u32)>,
    /// What was actually solved.
    pub reduced: MultiPoly,
    pub variable: String,
    /// Value of `variable` in terms of the still-unsolved unknowns at the
    /// time of solving.
    pub substitution: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationTrace {
    pub vars: VarSet,
    pub steps: Vec<EliminationStep>,
    pub assumptions: Vec<MultiPoly>,
    /// Unknowns never solved for, in `unknowns` order.
    pub free_vars: Vec<String>,
    /// Labels of equations that vanished identically.
    pub annihilated: Vec<String>,
    /// Every solved unknown expressed in the free unknowns only.
    pub resolved: Vec<(String, MultiPoly)>,
    /// Values chosen afterwards for free unknowns (scaling gauges and the like).
    pub normalizations: Vec<(String, BigRational)>,
}

impl EliminationTrace {
    pub fn new(vars: &VarSet) -> Self {
        EliminationTrace {
            vars: vars.clone(),
            steps: Vec::new(),
            assumptions: Vec::new(),
            free_vars: Vec::new(),
            annihilated: Vec::new(),
            resolved: Vec::new(),
            normalizations: Vec::new(),
        }
    }

    pub fn step_for(&self, var: &str) -> Option<&EliminationStep> {
        self.steps.iter().find(|s| s.variable == var)
    }

    pub fn resolved_value(&self, var: &str) -> Option<&MultiPoly> {
        self.resolved.iter().find(|(n, _)| n == var).map(|(_, p)| p)
    }

    fn resolved_subs(&self) -> Vec<(usize, MultiPoly)> {
        self.resolved
            .iter()
            .map(|(n, p)| (self.vars.index_of(n).expect("resolved variable is in the set"), p.clone()))
            .collect()
    }

    /// Substitutes the fully resolved values into each equation. For a
    /// successful elimination every entry is zero.
    pub fn replay(&self, system: &[Equation]) -> Result<Vec<MultiPoly>, MultiPolyError> {
        let subs = self.resolved_subs();
        system.iter().map(|e| e.poly.substitute_all(&subs)).collect()
    }

    /// Applies the recorded normalizations on top of the resolved values,
    /// giving every unknown a rational value when all free unknowns are
    /// normalized.
    pub fn normalized_values(&self) -> Vec<(String, MultiPoly)> {
        let norm: Vec<(usize, MultiPoly)> = self
            .normalizations
            .iter()
            .map(|(n, v)| (self.vars.index_of(n).unwrap(), MultiPoly::constant(&self.vars, v.clone())))
            .collect();
        let mut out: Vec<(String, MultiPoly)> = self
            .resolved
            .iter()
            .map(|(n, p)| (n.clone(), p.substitute_all(&norm).unwrap()))
            .collect();
        for (n, v) in &self.normalizations {
            out.push((n.clone(), MultiPoly::constant(&self.vars, v.clone())));
        }
        out
    }

    pub fn report(&self) -> TraceReport {
        TraceReport {
            steps: self
                .steps
                .iter()
                .map(|s| StepReport {
                    origin: s.origin.clone(),
                    equation: s.equation.to_string(),
                    divided_out: s
                        .divided_out
                        .iter()
                        .map(|(f, k)| if *k == 1 { format!("{f}") } else { format!("({f})^{k}") })
                        .collect(),
                    variable: s.variable.clone(),
                    substitution: s.substitution.to_string(),
                })
                .collect(),
            assumptions: self.assumptions.iter().map(|a| format!("{a} != 0")).collect(),
            free_vars: self.free_vars.clone(),
            annihilated: self.annihilated.clone(),
            resolved: self.resolved.iter().map(|(n, p)| format!("{n} = {p}")).collect(),
            normalizations: self.normalizations.iter().map(|(n, v)| format!("{n} = {v}")).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub origin: String,
    pub equation: String,
    pub divided_out: Vec<String>,
    pub variable: String,
    pub substitution: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub steps: Vec<StepReport>,
    pub assumptions: Vec<String>,
    pub free_vars: Vec<String>,
    pub annihilated: Vec<String>,
    pub resolved: Vec<String>,
    pub normalizations: Vec<String>,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum EliminationError {
    #[error("no pending equation is linear in a remaining unknown ({} pending)", pending.len())]
    NonLinearStep { trace: Box<EliminationTrace>, pending: Vec<Equation> },
    #[error("equation {label} reduces to the nonzero constant {value}")]
    InconsistentSystem { trace: Box<EliminationTrace>, label: String, value: BigRational },
    #[error(transparent)]
    Poly(#[from] MultiPolyError),
}

/// Divides `factor` out of `eq` exactly once and registers it as an
/// assumption on `trace`.
pub fn divide_out_assumed_nonzero(
    eq: &MultiPoly,
    factor: &MultiPoly,
    trace: &mut EliminationTrace,
) -> Result<MultiPoly, MultiPolyError> {
    let q = eq.div_exact(factor)?;
    if !trace.assumptions.contains(factor) {
        trace.assumptions.push(factor.clone());
    }
    Ok(q)
}

/// Removes every assumed-nonzero factor from `eq` as many times as it divides.
fn strip_assumptions(eq: MultiPoly, assumptions: &[MultiPoly]) -> (MultiPoly, Vec<(MultiPoly, u32)>) {
    let mut eq = eq;
    let mut removed = Vec::new();
    for a in assumptions {
        if a.is_constant() {
            continue;
        }
        let mut k = 0;
        while let Ok(q) = eq.div_exact(a) {
            eq = q;
            k += 1;
        }
        if k > 0 {
            removed.push((a.clone(), k));
        }
    }
    (eq, removed)
}

/// Picks the last unknown in `order` (not yet solved) that occurs in `eq`
/// with degree one and a nonzero constant coefficient. Returns the unknown
/// and its solved value.
fn linear_candidate(eq: &MultiPoly, order: &[usize], solved: &[bool]) -> Option<(usize, MultiPoly)> {
    for &v in order.iter().rev() {
        if solved[v] || eq.degree_in(v) != Some(1) {
            continue;
        }
        let parts = eq.coefficients_in(v);
        let Some(c) = parts[1].constant_value() else { continue };
        if c.is_zero() {
            continue;
        }
        let value = (-&parts[0]).scale(&(BigRational::from_integer(1.into()) / c));
        return Some((v, value));
    }
    None
}

pub fn sequential_linear_solve<S: AsRef<str>>(
    system: &[Equation],
    unknowns: &[S],
    assumptions: &[MultiPoly],
) -> Result<EliminationTrace, EliminationError> {
    let vars = match system.first() {
        Some(e) => e.poly.vars().clone(),
        None => {
            let mut t = EliminationTrace::new(&VarSet::new::<&str>(&[]));
            t.free_vars = unknowns.iter().map(|s| s.as_ref().to_string()).collect();
            return Ok(t);
        }
    };
    for e in system {
        if e.poly.vars() != &vars {
            return Err(MultiPolyError::MismatchedVariables.into());
        }
    }
    let order: Vec<usize> = unknowns.iter().map(|u| vars.require(u.as_ref())).collect::<Result<_, _>>()?;
    let mut trace = EliminationTrace::new(&vars);
    trace.assumptions = assumptions.to_vec();
    let mut solved = vec![false; vars.len()];
    let mut subs: Vec<(usize, MultiPoly)> = Vec::new();
    let mut pending: Vec<usize> = (0..system.len()).collect();

    loop {
        let mut progress = false;
        let mut i = 0;
        while i < pending.len() {
            let src = &system[pending[i]];
            let eq = src.poly.substitute_all(&subs)?;
            if eq.is_zero() {
                trace.annihilated.push(src.label.clone());
                pending.remove(i);
                continue;
            }
            let (reduced, divided_out) = strip_assumptions(eq.clone(), &trace.assumptions);
            if let Some(value) = reduced.constant_value() {
                return Err(EliminationError::InconsistentSystem {
                    label: src.label.clone(),
                    value,
                    trace: Box::new(trace),
                });
            }
            let Some((v, value)) = linear_candidate(&reduced, &order, &solved) else {
                i += 1;
                continue;
            };
            for (_, expr) in subs.iter_mut() {
                *expr = expr.substitute(v, &value)?;
            }
            subs.push((v, value.clone()));
            solved[v] = true;
            trace.steps.push(EliminationStep {
                origin: src.label.clone(),
                equation: eq,
                divided_out,
                reduced,
                variable: vars.name(v).to_string(),
                substitution: value,
            });
            pending.remove(i);
            progress = true;
            break;
        }
        if pending.is_empty() {
            break;
        }
        if !progress {
            trace.resolved = subs.iter().map(|(v, p)| (vars.name(*v).to_string(), p.clone())).collect();
            let pending = pending.iter().map(|&k| system[k].clone()).collect();
            return Err(EliminationError::NonLinearStep { trace: Box::new(trace), pending });
        }
    }

    trace.free_vars = order.iter().filter(|&&v| !solved[v]).map(|&v| vars.name(v).to_string()).collect();
    trace.resolved = subs.into_iter().map(|(v, p)| (vars.name(v).to_string(), p)).collect();
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse;

    fn vs() -> VarSet {
        VarSet::new(&["x", "y", "z"])
    }

    #[test]
    fn triangular_system() {
        let v = vs();
        let sys = vec![
            Equation::new("e1", parse(&v, "z - x - y").unwrap()),
            Equation::new("e2", parse(&v, "y - 2*x^2").unwrap()),
        ];
        let t = sequential_linear_solve(&sys, &["x", "y", "z"], &[]).unwrap();
        assert_eq!(t.steps[0].variable, "z");
        assert_eq!(t.steps[1].variable, "y");
        assert_eq!(t.free_vars, vec!["x".to_string()]);
        assert_eq!(t.resolved_value("z").unwrap(), &parse(&v, "x + 2*x^2").unwrap());
        assert!(t.replay(&sys).unwrap().iter().all(|r| r.is_zero()));
    }

    #[test]
    fn inconsistent() {
        let v = vs();
        let sys = vec![
            Equation::new("e1", parse(&v, "x - 1").unwrap()),
            Equation::new("e2", parse(&v, "x - 2").unwrap()),
        ];
        match sequential_linear_solve(&sys, &["x"], &[]) {
            Err(EliminationError::InconsistentSystem { label, .. }) => assert_eq!(label, "e2"),
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn nonlinear_reported_with_trace() {
        let v = vs();
        let sys = vec![
            Equation::new("e1", parse(&v, "y - x").unwrap()),
            Equation::new("e2", parse(&v, "x^2 - 2").unwrap()),
        ];
        match sequential_linear_solve(&sys, &["x", "y"], &[]) {
            Err(EliminationError::NonLinearStep { trace, pending }) => {
                assert_eq!(trace.steps.len(), 1);
                assert_eq!(pending.len(), 1);
                assert_eq!(pending[0].label, "e2");
            }
            other => panic!("expected a nonlinear step, got {other:?}"),
        }
    }

    #[test]
    fn assumption_division_enables_a_step() {
        let v = vs();
        // (x - y)(z - 3) = 0 with x - y != 0
        let sys = vec![Equation::new("e", parse(&v, "(x - y)*(z - 3)").unwrap())];
        let assume = parse(&v, "x - y").unwrap();
        let t = sequential_linear_solve(&sys, &["x", "y", "z"], &[assume.clone()]).unwrap();
        assert_eq!(t.steps[0].variable, "z");
        assert_eq!(t.steps[0].divided_out, vec![(assume, 1)]);
        assert_eq!(t.resolved_value("z").unwrap(), &MultiPoly::from_int(&v, 3));
    }

    #[test]
    fn divide_out_registers_assumption() {
        let v = VarSet::new(&["a0", "a1", "b0", "b1"]);
        let f = parse(&v, "a1 - b1").unwrap();
        let g = parse(&v, "a1^2 - 5*a1*b1 + 4*b1^2 + 6*a0 - 6*b0").unwrap();
        let mut t = EliminationTrace::new(&v);
        assert_eq!(divide_out_assumed_nonzero(&(&f * &g), &f, &mut t).unwrap(), g);
        assert_eq!(t.assumptions, vec![f.clone()]);

        let f5 = f.pow(5);
        let eq = (&f5 * &parse(&v, "2*a1 - 5*b1").unwrap()).scale(&BigRational::new((-1).into(), 27.into()));
        let q = divide_out_assumed_nonzero(&eq, &f5, &mut t).unwrap();
        assert_eq!(q, parse(&v, "-(2*a1 - 5*b1)/27").unwrap());

        assert_eq!(divide_out_assumed_nonzero(&g, &f, &mut t), Err(MultiPolyError::NotDivisible));
    }
}

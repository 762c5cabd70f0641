//! Command-line front end: argument model, dispatch and report rendering.
//!
//! Every command produces an [`Outcome`] holding both a plain-text report
//! and a JSON document; `--format` picks which one is written.

pub mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use belyi_core::belyi::{counting, face_vector, fullerene_passport, verify_belyi, FactoredBelyi, FormatError};
use belyi_core::compose::{schwarz_check, ComposeError, Preset};
use belyi_core::derive::{d6_solve, derive_case, CaseArtifacts, DeriveConfig, DeriveError};
use belyi_core::multipoly::TraceReport;
use belyi_core::numgeom::{barrel_vertices, face_geometry, NumError, RootConfig, BARREL_FACE};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "belyi", version, about = "Exact Belyi functions of the smallest fullerenes")]
pub struct CommandConfig {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Backward-error tolerance for numeric roots.
    #[arg(long, default_value_t = 1e-10, value_parser = positive_f64, global = true)]
    pub tol: f64,
    /// Largest `s` accepted by `derive`.
    #[arg(long, default_value_t = 12, global = true)]
    pub max_s: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Face vector and unknown/equation count for a fullerene with `p6` hexagons.
    Facevector { p6: u64 },
    /// Passport of the fullerene Belyi function with `p6` hexagons.
    Passport { p6: u64 },
    /// Verify a preset (d6, d12, d60, d72) or a Belyi function stored as JSON.
    Verify { target: String },
    /// Run the elimination for the `(3^k | 2^l | 5^12 s^1)` passport, or `d6`.
    Derive { case: String },
    /// Build a composed Belyi function, or check the Schwarz identity.
    Compose { target: ComposeTarget },
    /// Metric data of the barrel face A1 A7 A13 A8 A2.
    Geometry {
        #[arg(value_enum)]
        shape: Shape,
        /// Also write the flat pentagon as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write a preset as a JSON document.
    Export { preset: String, path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComposeTarget {
    D12,
    D60,
    D72,
    Schwarz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Barrel,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("tolerance must be positive, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed input {path}: {source}")]
    Malformed { path: PathBuf, source: FormatError },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Derive(#[from] DeriveError),
    #[error(transparent)]
    Compose(#[from] ComposeError),
    #[error(transparent)]
    Numeric(#[from] NumError),
}

impl CliError {
    /// 2 for bad invocations or unreadable input, 1 for failed checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } | CliError::Malformed { .. } => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub success: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, success: true }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

pub fn run(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Facevector { p6 } => Ok(facevector(*p6)),
        Command::Passport { p6 } => Ok(passport(*p6)),
        Command::Verify { target } => verify(target),
        Command::Derive { case } => derive(case, cfg.max_s),
        Command::Compose { target } => compose(*target),
        Command::Geometry { shape: Shape::Barrel, svg } => geometry(cfg.tol, svg.as_deref()),
        Command::Export { preset, path } => export(preset, path),
    }
}

/// Writes the rendered report to `--output` or returns it for standard output.
pub fn deliver(cfg: &CommandConfig, outcome: &Outcome) -> Result<Option<String>, CliError> {
    let body = outcome.render(cfg.format);
    match &cfg.output {
        Some(path) => {
            write_file(path, &body)?;
            Ok(None)
        }
        None => Ok(Some(body)),
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn parse_preset(s: &str) -> Result<Preset, CliError> {
    s.parse::<Preset>().map_err(CliError::Usage)
}

fn facevector(p6: u64) -> Outcome {
    let fv = face_vector(p6);
    let c = counting(p6);
    let mut t = String::new();
    let _ = writeln!(t, "p6 {}  p5 {}", fv.p6, fv.p5);
    let _ = writeln!(t, "vertices {}  edges {}  faces {}", fv.f0, fv.f1, fv.f2);
    let _ = writeln!(t, "dessin edges {}", fv.n_dessin_edges);
    let _ = writeln!(t, "face system holds: {}", fv.satisfies_face_system());
    let _ = writeln!(t, "unknowns {}  equations {}  excess {}", c.unknowns, c.equations, c.excess);
    if !fv.realizable {
        let _ = writeln!(t, "no fullerene has exactly one hexagon");
    }
    Outcome::ok(t, json!({ "command": "facevector", "face_vector": fv, "counting": c }))
}

fn passport(p6: u64) -> Outcome {
    let pp = fullerene_passport(p6);
    let fv = face_vector(p6);
    let mut t = format!("passport {pp}\ndegree {}\n", pp.degree());
    if !fv.realizable {
        t.push_str("not realizable\n");
    }
    Outcome::ok(
        t,
        json!({ "command": "passport", "p6": p6, "passport": pp.to_string(), "degree": pp.degree(), "realizable": fv.realizable }),
    )
}

fn load_belyi(target: &str) -> Result<(String, FactoredBelyi), CliError> {
    if let Ok(p) = target.parse::<Preset>() {
        return Ok((p.name().to_string(), p.build()?));
    }
    let path = Path::new(target);
    if !path.exists() {
        return Err(CliError::Usage(format!("`{target}` is neither a preset (d6, d12, d60, d72) nor an existing file")));
    }
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    let f = FactoredBelyi::from_json(&src).map_err(|source| CliError::Malformed { path: path.to_path_buf(), source })?;
    Ok((target.to_string(), f))
}

fn verify(target: &str) -> Result<Outcome, CliError> {
    let (name, f) = load_belyi(target)?;
    let pp = verify_belyi(&f).map_err(|e| CliError::Verification(e.to_string()))?;
    let t = format!("{name}: degree {}\npassport {pp}\nall identities pass\n", pp.degree());
    Ok(Outcome::ok(
        t,
        json!({ "command": "verify", "target": name, "degree": pp.degree(), "passport": pp.to_string(), "verified": true }),
    ))
}

fn trace_text(t: &mut String, trace: &TraceReport) {
    let _ = writeln!(t, "elimination steps {}", trace.steps.len());
    for s in &trace.steps {
        let _ = writeln!(t, "  {} := {}   [{}]", s.variable, s.substitution, s.origin);
    }
    for a in &trace.assumptions {
        let _ = writeln!(t, "  assumed nonzero: {a}");
    }
    for n in &trace.normalizations {
        let _ = writeln!(t, "  normalized: {n}");
    }
    if !trace.free_vars.is_empty() {
        let _ = writeln!(t, "  free: {}", trace.free_vars.join(", "));
    }
}

fn derive(case: &str, max_s: u32) -> Result<Outcome, CliError> {
    if case == "d6" {
        let sol = d6_solve()?;
        let pp = verify_belyi(&sol.beta).map_err(|e| CliError::Verification(e.to_string()))?;
        let report = sol.trace.report();
        let beta = sol.beta.to_rational_map();
        let mut t = format!("beta6 = {beta}\nk {}\npassport {pp}\n", sol.k);
        trace_text(&mut t, &report);
        return Ok(Outcome::ok(
            t,
            json!({
                "command": "derive",
                "case": "d6",
                "k": sol.k.to_string(),
                "beta": beta.to_string(),
                "passport": pp.to_string(),
                "trace": report,
            }),
        ));
    }
    let s: u32 = case.parse().map_err(|_| CliError::Usage(format!("`{case}` is not a value of s or `d6`")))?;
    let report = derive_case(s, &DeriveConfig { max_s })?;
    let sum = report.summary();
    let mut t = String::new();
    let _ = writeln!(t, "s {}  deg P {}  deg V {}  deg M {}  deg beta {}", sum.s, sum.m, sum.k_deg, sum.l_deg, sum.n);
    let _ = writeln!(t, "verdict {:?}", sum.verdict);
    let _ = writeln!(t, "leading coefficient {}", sum.leading_coeff);
    if let Some(CaseArtifacts::Solution { halphen, .. }) = &report.artifacts {
        let _ = writeln!(t, "R = {}  (degree {})", halphen.r, halphen.r_degree.map_or("-".to_string(), |d| d.to_string()));
    }
    for (label, v) in [("P", &sum.p), ("V", &sum.v), ("M", &sum.m_poly), ("k", &sum.k)] {
        if let Some(v) = v {
            let _ = writeln!(t, "{label} = {v}");
        }
    }
    if let Some(trace) = &sum.trace {
        trace_text(&mut t, trace);
    }
    for n in &sum.notes {
        let _ = writeln!(t, "note: {n}");
    }
    let mut j = json!({ "command": "derive", "case": s });
    j["report"] = serde_json::to_value(&sum).expect("summary serializes");
    Ok(Outcome::ok(t, j))
}

fn compose(target: ComposeTarget) -> Result<Outcome, CliError> {
    let preset = match target {
        ComposeTarget::Schwarz => {
            schwarz_check()?;
            return Ok(Outcome::ok(
                "phi20^3 - phi30^2 = 1728 phi12^5 holds\nbeta60(-s) = phi20^3/(1728 phi12^5) holds\n".into(),
                json!({ "command": "compose", "target": "schwarz", "schwarz": true, "beta60_forms": true }),
            ));
        }
        ComposeTarget::D12 => Preset::D12,
        ComposeTarget::D60 => Preset::D60,
        ComposeTarget::D72 => Preset::D72,
    };
    let f = preset.build()?;
    let pp = verify_belyi(&f).map_err(|e| CliError::Verification(e.to_string()))?;
    let beta = f.to_rational_map();
    let t = format!("{preset} = {beta}\nbeta - 1 numerator = {}\npassport {pp}\n", f.one_product());
    Ok(Outcome::ok(
        t,
        json!({
            "command": "compose",
            "target": preset.name(),
            "passport": pp.to_string(),
            "beta": f.to_doc(),
        }),
    ))
}

fn geometry(tol: f64, svg_path: Option<&Path>) -> Result<Outcome, CliError> {
    let bv = barrel_vertices(&RootConfig { tol, ..RootConfig::default() })?;
    let r = face_geometry(&bv, &BARREL_FACE)?;
    let mut t = String::new();
    let [a1, a7, a13, a19] = bv.moduli;
    let _ = writeln!(t, "moduli a1 {a1:.9}  a7 {a7:.9}  a13 {a13:.9}  a19 {a19:.9}");
    let _ = writeln!(t, "a1*a19 {:.12}  a7*a13 {:.12}", a1 * a19, a7 * a13);
    for v in &r.vertices {
        let _ = writeln!(
            t,
            "{:<4} plane ({:+.6}, {:+.6})  sphere ({:+.6}, {:+.6}, {:+.6})",
            v.label, v.plane[0], v.plane[1], v.sphere.x, v.sphere.y, v.sphere.z
        );
    }
    for e in &r.edges {
        let _ = writeln!(t, "|{}{}| {:.6}", e.from, e.to, e.length);
    }
    for a in &r.angles {
        let _ = writeln!(t, "angle {:<4} {:.4}", a.label, a.degrees);
    }
    let _ = writeln!(t, "angle sum {:.4}", r.angle_sum);
    let q = &r.quad_plane;
    let _ = writeln!(
        t,
        "plane {}: {:.6}X {:+.6}Y {:+.6}Z = 1  ({} residual {:.1e})",
        r.quad_plane_points.join(" "),
        q.p,
        q.q,
        q.r,
        r.quad_fourth.0,
        r.quad_fourth.1
    );
    let a = &r.apex_plane;
    let _ = writeln!(t, "plane {}: {:.6}X {:+.6}Y {:+.6}Z = 1", r.apex_plane_points.join(" "), a.p, a.q, a.r);
    let _ = writeln!(t, "normal dot {:.8}  dihedral {:.6} deg", r.normal_dot, r.dihedral_degrees);

    let mut j = json!({ "command": "geometry", "shape": "barrel", "moduli": bv.moduli, "face": r });
    if let Some(path) = svg_path {
        write_file(path, &svg::emit_svg(&r))?;
        let _ = writeln!(t, "svg written to {}", path.display());
        j["svg"] = json!(path.display().to_string());
    }
    Ok(Outcome::ok(t, j))
}

fn export(preset: &str, path: &Path) -> Result<Outcome, CliError> {
    let p = parse_preset(preset)?;
    let f = p.build()?;
    let mut body = f.to_json();
    body.push('\n');
    write_file(path, &body)?;
    Ok(Outcome::ok(
        format!("{p} written to {}\n", path.display()),
        json!({ "command": "export", "preset": p.name(), "path": path.display().to_string() }),
    ))
}

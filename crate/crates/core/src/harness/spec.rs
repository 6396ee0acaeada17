use std::path::PathBuf;
use std::str::FromStr;

use serde::Deserialize;

use crate::discretization::{DelayProblem, Family, Grid1D};
use crate::error::{Error, Result};
use crate::trace::InterfaceTrace;
use crate::waveform::{Method, Norm, Partition};

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ITERS: usize = 100;
pub const DEFAULT_OVERLAP_CELLS: usize = 2;

/// Initial interface guess, sampled at `t = dt, 2dt, …, T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guess {
    #[default]
    TSquared,
    Zero,
    Ones,
}

impl FromStr for Guess {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "t^2" => Ok(Guess::TSquared),
            "zero" => Ok(Guess::Zero),
            "ones" => Ok(Guess::Ones),
            other => Err(Error::validation(
                "guess.expr",
                format!("expected `t^2`, `zero` or `ones`, got `{other}`"),
            )),
        }
    }
}

impl Guess {
    pub fn trace(self, nt: usize, dt: f64) -> InterfaceTrace {
        match self {
            Guess::TSquared => InterfaceTrace::from_fn(nt, dt, |t| t * t),
            Guess::Zero => InterfaceTrace::zeros(nt, dt),
            Guess::Ones => InterfaceTrace::new(vec![1.0; nt], dt),
        }
    }
}

/// How the spatial step is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Spacing {
    Dx(f64),
    Nx(usize),
    /// Nodes per subdomain, shared interface nodes counted on both sides.
    PointsPerSubdomain(usize),
}

/// One queued solver run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Run {
    pub method: Method,
    /// θ, or `p` for optimized Schwarz, or 0 for classical Schwarz.
    pub parameter: f64,
    pub subdomains: usize,
}

/// A validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub name: String,
    pub family: Family,
    pub tau: f64,
    pub t_end: f64,
    pub domain: (f64, f64),
    pub spacing: Spacing,
    pub dt: f64,
    pub kinds: Vec<Method>,
    pub dnwr_theta: Vec<f64>,
    pub nnwr_theta: Vec<f64>,
    pub osw_p: Vec<f64>,
    pub overlap_cells: usize,
    pub tol: f64,
    pub max_iters: usize,
    pub norm: Norm,
    pub subdomains: Vec<usize>,
    /// Explicit boundaries; `None` means equal widths.
    pub boundaries: Option<Vec<f64>>,
    pub guess: Guess,
    pub output_dir: Option<PathBuf>,
    pub gnuplot: bool,
}

impl ExperimentSpec {
    /// Runs in queue order: kinds as listed, then subdomain counts, then
    /// parameter values.
    pub fn runs(&self) -> Vec<Run> {
        let mut out = Vec::new();
        for &method in &self.kinds {
            let params: &[f64] = match method {
                Method::Dnwr => &self.dnwr_theta,
                Method::Nnwr => &self.nnwr_theta,
                Method::OptimizedSchwarz => &self.osw_p,
                Method::ClassicalSchwarz => &[0.0],
            };
            for &subdomains in &self.subdomains {
                for &parameter in params {
                    out.push(Run { method, parameter, subdomains });
                }
            }
        }
        out
    }

    /// Method label used in CSV rows and file names, e.g. `dnwr` or `dnwr-n4`
    /// when the spec sweeps over subdomain counts.
    pub fn label(&self, run: &Run) -> String {
        if self.subdomains.len() > 1 {
            format!("{}-n{}", run.method.label(), run.subdomains)
        } else {
            run.method.label().to_string()
        }
    }

    pub fn problem(&self) -> Result<DelayProblem> {
        DelayProblem::homogeneous(self.family, self.tau, self.domain, self.t_end)
    }

    pub fn grid_for(&self, subdomains: usize) -> Result<Grid1D> {
        let (lo, hi) = self.domain;
        let nx = match self.spacing {
            Spacing::Nx(nx) => nx,
            Spacing::Dx(dx) => {
                let cells = (hi - lo) / dx;
                let rounded = cells.round();
                if (cells - rounded).abs() > 1e-9 * rounded.max(1.0) {
                    return Err(Error::validation("grid.dx", format!("dx = {dx} does not divide the domain")));
                }
                rounded as usize + 1
            }
            Spacing::PointsPerSubdomain(p) => subdomains * (p - 1) + 1,
        };
        Grid1D::new(self.domain, nx, self.dt, self.t_end, self.tau)
    }

    pub fn partition_for(&self, grid: &Grid1D, subdomains: usize) -> Result<Partition> {
        match &self.boundaries {
            Some(b) => Partition::new(grid, b),
            None => Partition::equal(grid, subdomains),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    problem: RawProblem,
    grid: RawGrid,
    method: RawMethod,
    #[serde(default)]
    partition: RawPartition,
    #[serde(default)]
    guess: RawGuess,
    #[serde(default)]
    output: RawOutput,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    family: String,
    a1: Option<f64>,
    a2: Option<f64>,
    nu: Option<f64>,
    c: Option<f64>,
    lambda: Option<f64>,
    mu: Option<f64>,
    r: Option<f64>,
    d: Option<f64>,
    tau: f64,
    t_end: f64,
    x_min: f64,
    x_max: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    dx: Option<f64>,
    nx: Option<usize>,
    dt: f64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    fn into_vec(self) -> Vec<T> {
        match self {
            OneOrMany::One(v) => vec![v],
            OneOrMany::Many(v) => v,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMethod {
    kinds: Vec<String>,
    dnwr_theta: Option<OneOrMany<f64>>,
    nnwr_theta: Option<OneOrMany<f64>>,
    osw_p: Option<OneOrMany<f64>>,
    overlap_cells: Option<usize>,
    tol: Option<f64>,
    max_iters: Option<usize>,
    norm: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawBoundaries {
    Named(String),
    List(Vec<f64>),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPartition {
    subdomains: Option<OneOrMany<usize>>,
    boundaries: Option<RawBoundaries>,
    points_per_subdomain: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGuess {
    expr: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    name: Option<String>,
    dir: Option<String>,
    gnuplot: Option<bool>,
}

fn finite(field: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::validation(field, format!("must be finite, got {v}")))
    }
}

fn parse_method(s: &str) -> Result<Method> {
    match s {
        "dnwr" => Ok(Method::Dnwr),
        "nnwr" => Ok(Method::Nnwr),
        "csw" => Ok(Method::ClassicalSchwarz),
        "osw" => Ok(Method::OptimizedSchwarz),
        other => Err(Error::validation(
            "method.kinds",
            format!("unknown method `{other}`, expected dnwr, nnwr, csw or osw"),
        )),
    }
}

fn family_from(raw: &RawProblem) -> Result<Family> {
    let keys = [
        ("a1", raw.a1),
        ("a2", raw.a2),
        ("nu", raw.nu),
        ("c", raw.c),
        ("lambda", raw.lambda),
        ("mu", raw.mu),
        ("r", raw.r),
        ("d", raw.d),
    ];
    let wanted: &[&str] = match raw.family.as_str() {
        "parabolic" => &["a1", "a2", "nu"],
        "wave" => &["c", "lambda"],
        "neutral" => &["mu", "c", "r", "d"],
        other => {
            return Err(Error::validation(
                "problem.family",
                format!("expected parabolic, wave or neutral, got `{other}`"),
            ))
        }
    };
    for (key, value) in keys {
        let field = format!("problem.{key}");
        match (wanted.contains(&key), value) {
            (true, None) => return Err(Error::validation(field, format!("required for the {} family", raw.family))),
            (false, Some(_)) => return Err(Error::validation(field, format!("not used by the {} family", raw.family))),
            (true, Some(v)) => {
                finite(&field, v)?;
            }
            (false, None) => {}
        }
    }
    let get = |key: &str| keys.iter().find(|(k, _)| *k == key).and_then(|(_, v)| *v).unwrap_or(0.0);
    Ok(match raw.family.as_str() {
        "parabolic" => Family::Parabolic { a1: get("a1"), a2: get("a2"), nu: get("nu") },
        "wave" => Family::Wave { c: get("c"), lambda: get("lambda") },
        _ => Family::Neutral { mu: get("mu"), c: get("c"), r: get("r"), d: get("d") },
    })
}

fn parameter_list(field: &str, raw: Option<OneOrMany<f64>>, needed: bool, check: impl Fn(f64) -> Result<()>) -> Result<Vec<f64>> {
    match (raw, needed) {
        (None, true) => Err(Error::validation(field, "required by the listed method")),
        (Some(_), false) => Err(Error::validation(field, "given but the method is not listed in kinds")),
        (None, false) => Ok(Vec::new()),
        (Some(v), true) => {
            let v = v.into_vec();
            if v.is_empty() {
                return Err(Error::validation(field, "empty list"));
            }
            for &x in &v {
                finite(field, x)?;
                check(x)?;
            }
            Ok(v)
        }
    }
}

fn theta_check(field: &'static str) -> impl Fn(f64) -> Result<()> {
    move |t| {
        if t > 0.0 && t < 1.0 {
            Ok(())
        } else {
            Err(Error::validation(field, "theta out of (0,1)"))
        }
    }
}

/// Line number (1-based) of a byte offset.
fn line_of(text: &str, offset: usize) -> usize {
    text.as_bytes()[..offset.min(text.len())].iter().filter(|&&b| b == b'\n').count() + 1
}

/// Parses and validates an experiment document.
pub fn parse_spec(text: &str) -> Result<ExperimentSpec> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map_or(0, |s| line_of(text, s.start)),
        message: e.message().to_string(),
    })?;

    let family = family_from(&raw.problem)?;
    let p = &raw.problem;
    let tau = finite("problem.tau", p.tau)?;
    let t_end = finite("problem.t_end", p.t_end)?;
    let domain = (finite("problem.x_min", p.x_min)?, finite("problem.x_max", p.x_max)?);
    if domain.0 >= domain.1 {
        return Err(Error::validation("problem.x_max", "must exceed x_min"));
    }
    DelayProblem::homogeneous(family, tau, domain, t_end).map_err(|e| Error::validation("problem", e.to_string()))?;

    let dt = finite("grid.dt", raw.grid.dt)?;
    let points = raw.partition.points_per_subdomain;
    let spacing = match (raw.grid.dx, raw.grid.nx, points) {
        (None, None, Some(p)) if p >= 3 => Spacing::PointsPerSubdomain(p),
        (None, None, Some(_)) => {
            return Err(Error::validation("partition.points_per_subdomain", "must be at least 3"))
        }
        (_, _, Some(_)) => {
            return Err(Error::validation("partition.points_per_subdomain", "cannot be combined with grid.dx or grid.nx"))
        }
        (Some(dx), None, None) if finite("grid.dx", dx)? > 0.0 => Spacing::Dx(dx),
        (Some(_), None, None) => return Err(Error::validation("grid.dx", "must be positive")),
        (None, Some(nx), None) => Spacing::Nx(nx),
        (Some(_), Some(_), None) => return Err(Error::validation("grid", "give either dx or nx, not both")),
        (None, None, None) => return Err(Error::validation("grid", "one of dx or nx is required")),
    };

    let m = raw.method;
    if m.kinds.is_empty() {
        return Err(Error::validation("method.kinds", "at least one method is required"));
    }
    let mut kinds = Vec::with_capacity(m.kinds.len());
    for k in &m.kinds {
        let method = parse_method(k)?;
        if kinds.contains(&method) {
            return Err(Error::validation("method.kinds", format!("`{k}` listed twice")));
        }
        kinds.push(method);
    }
    let dnwr_theta =
        parameter_list("method.dnwr_theta", m.dnwr_theta, kinds.contains(&Method::Dnwr), theta_check("method.dnwr_theta"))?;
    let nnwr_theta =
        parameter_list("method.nnwr_theta", m.nnwr_theta, kinds.contains(&Method::Nnwr), theta_check("method.nnwr_theta"))?;
    let osw_p = parameter_list("method.osw_p", m.osw_p, kinds.contains(&Method::OptimizedSchwarz), |p| {
        if p > 0.0 {
            Ok(())
        } else {
            Err(Error::validation("method.osw_p", "must be positive"))
        }
    })?;
    let schwarz = kinds.contains(&Method::ClassicalSchwarz) || kinds.contains(&Method::OptimizedSchwarz);
    if m.overlap_cells.is_some() && !schwarz {
        return Err(Error::validation("method.overlap_cells", "only used by csw and osw"));
    }
    let overlap_cells = m.overlap_cells.unwrap_or(DEFAULT_OVERLAP_CELLS);
    if kinds.contains(&Method::ClassicalSchwarz) && overlap_cells == 0 {
        return Err(Error::validation("method.overlap_cells", "classical Schwarz needs at least one cell"));
    }
    let tol = finite("method.tol", m.tol.unwrap_or(DEFAULT_TOL))?;
    if tol <= 0.0 {
        return Err(Error::validation("method.tol", "must be positive"));
    }
    let max_iters = m.max_iters.unwrap_or(DEFAULT_MAX_ITERS);
    if max_iters == 0 {
        return Err(Error::validation("method.max_iters", "must be at least 1"));
    }
    let norm = match &m.norm {
        Some(s) => s.parse::<Norm>().map_err(|_| Error::validation("method.norm", format!("expected `sup` or `l2`, got `{s}`")))?,
        None => Norm::default(),
    };

    let subdomains = raw.partition.subdomains.map_or(vec![2], OneOrMany::into_vec);
    if subdomains.is_empty() || subdomains.iter().any(|&n| n < 2) {
        return Err(Error::validation("partition.subdomains", "each count must be at least 2"));
    }
    if schwarz && subdomains != [2] {
        return Err(Error::validation("partition.subdomains", "csw and osw need exactly two subdomains"));
    }
    let boundaries = match raw.partition.boundaries {
        None => None,
        Some(RawBoundaries::Named(s)) if s == "equal" => None,
        Some(RawBoundaries::Named(s)) => {
            return Err(Error::validation("partition.boundaries", format!("expected `equal` or a list, got `{s}`")))
        }
        Some(RawBoundaries::List(b)) => {
            if subdomains.len() != 1 || b.len() != subdomains[0] + 1 {
                return Err(Error::validation(
                    "partition.boundaries",
                    "an explicit list needs one subdomain count and count + 1 entries",
                ));
            }
            if matches!(spacing, Spacing::PointsPerSubdomain(_)) {
                return Err(Error::validation("partition.boundaries", "cannot be combined with points_per_subdomain"));
            }
            for &x in &b {
                finite("partition.boundaries", x)?;
            }
            Some(b)
        }
    };

    let guess = match &raw.guess.expr {
        Some(e) => e.parse()?,
        None => Guess::default(),
    };

    let spec = ExperimentSpec {
        name: raw.output.name.unwrap_or_else(|| "experiment".to_string()),
        family,
        tau,
        t_end,
        domain,
        spacing,
        dt,
        kinds,
        dnwr_theta,
        nnwr_theta,
        osw_p,
        overlap_cells,
        tol,
        max_iters,
        norm,
        subdomains,
        boundaries,
        guess,
        output_dir: raw.output.dir.map(PathBuf::from),
        gnuplot: raw.output.gnuplot.unwrap_or(false),
    };
    if spec.name.is_empty() || spec.name.contains(['/', '\\']) {
        return Err(Error::validation("output.name", "must be a non-empty file name"));
    }
    // every grid and partition the runs will need must exist
    for &n in &spec.subdomains {
        let grid = spec.grid_for(n).map_err(|e| Error::validation("grid", e.to_string()))?;
        spec.partition_for(&grid, n).map_err(|e| Error::validation("partition", e.to_string()))?;
    }
    Ok(spec)
}

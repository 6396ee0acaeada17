use std::fmt;

use super::config::{error_norm, Norm};
use crate::discretization::{monolithic_solve, DelayProblem, Grid1D, SpaceTimeField};
use crate::error::Result;
use crate::trace::InterfaceTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Dnwr,
    Nnwr,
    ClassicalSchwarz,
    OptimizedSchwarz,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::Dnwr => "dnwr",
            Method::Nnwr => "nnwr",
            Method::ClassicalSchwarz => "csw",
            Method::OptimizedSchwarz => "osw",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Interface error per iteration, `k = 0` included.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceHistory {
    pub method: Method,
    /// θ for the waveform methods, the Robin `p` for optimized Schwarz, 0 for
    /// classical Schwarz.
    pub parameter: f64,
    pub subdomains: usize,
    /// `‖e^k‖` for `k = 0..=iterations_run`.
    pub errors: Vec<f64>,
    pub iterations_run: usize,
    pub converged: bool,
    /// Interface traces after the last iteration.
    pub traces: Vec<InterfaceTrace>,
}

impl ConvergenceHistory {
    pub fn relative_errors(&self) -> Vec<f64> {
        let e0 = self.errors[0];
        if e0 == 0.0 {
            return vec![0.0; self.errors.len()];
        }
        self.errors.iter().map(|e| e / e0).collect()
    }

    /// First iteration whose relative error is at or below `tol`.
    pub fn iterations_to(&self, tol: f64) -> Option<usize> {
        self.relative_errors().iter().position(|&r| r <= tol)
    }

    /// Successive ratios `‖e^{k+1}‖ / ‖e^k‖`.
    pub fn ratios(&self) -> Vec<f64> {
        self.errors.windows(2).map(|w| w[1] / w[0]).collect()
    }
}

/// Monolithic solution used as the target when the problem carries data.
pub(crate) fn reference_field(problem: &DelayProblem, grid: &Grid1D) -> Result<Option<SpaceTimeField>> {
    if problem.is_homogeneous() {
        Ok(None)
    } else {
        monolithic_solve(problem, grid).map(Some)
    }
}

pub(crate) struct Iteration {
    pub errors: Vec<f64>,
    pub converged: bool,
    pub traces: Vec<InterfaceTrace>,
}

/// Runs `step` on the interface traces until the relative error meets `tol`
/// or `max_iters` is reached. The error of a trace family is the largest
/// per-interface norm of `trace - reference`.
pub(crate) fn iterate(
    initial: Vec<InterfaceTrace>,
    reference: Option<&[InterfaceTrace]>,
    tol: f64,
    max_iters: usize,
    norm: Norm,
    mut step: impl FnMut(&[InterfaceTrace]) -> Result<Vec<InterfaceTrace>>,
) -> Result<Iteration> {
    let measure = |traces: &[InterfaceTrace]| -> Result<f64> {
        let mut worst = 0.0f64;
        for (j, tr) in traces.iter().enumerate() {
            let e = match reference {
                Some(r) => error_norm(&tr.sub(&r[j])?, norm),
                None => error_norm(tr, norm),
            };
            worst = worst.max(e);
        }
        Ok(worst)
    };

    let mut traces = initial;
    let e0 = measure(&traces)?;
    let mut errors = vec![e0];
    let mut converged = e0 == 0.0;
    while !converged && errors.len() <= max_iters {
        traces = step(&traces)?;
        let e = measure(&traces)?;
        errors.push(e);
        converged = e / e0 <= tol;
        if !e.is_finite() {
            break;
        }
    }
    Ok(Iteration { errors, converged, traces })
}

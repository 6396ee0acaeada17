//! Neumann-Neumann waveform relaxation.

use rayon::prelude::*;

use super::config::WrConfig;
use super::history::{iterate, reference_field, ConvergenceHistory, Method};
use super::partition::Partition;
use super::check_traces;
use crate::discretization::{
    physical_boundary, solve_subdomain, BoundarySpec, DelayProblem, Side, SpaceTimeField,
};
use crate::error::Result;
use crate::trace::InterfaceTrace;

/// Dirichlet solves on every subdomain with the current interface traces.
/// The solves share nothing and run concurrently.
pub(crate) fn dirichlet_phase(
    problem: &DelayProblem,
    partition: &Partition,
    g: &[InterfaceTrace],
) -> Result<Vec<SpaceTimeField>> {
    let n = partition.subdomains();
    (0..n)
        .into_par_iter()
        .map(|i| dirichlet_solve(problem, partition, g, i))
        .collect()
}

pub(crate) fn dirichlet_solve(
    problem: &DelayProblem,
    partition: &Partition,
    g: &[InterfaceTrace],
    i: usize,
) -> Result<SpaceTimeField> {
    let n = partition.subdomains();
    let grid = partition.subgrid(i);
    let left = if i == 0 { physical_boundary(problem, grid, Side::Left) } else { g[i - 1].clone() };
    let right = if i == n - 1 { physical_boundary(problem, grid, Side::Right) } else { g[i].clone() };
    solve_subdomain(problem, grid, &BoundarySpec::dirichlet(left), &BoundarySpec::dirichlet(right))
}

/// Flux jumps `∂x u_j - ∂x u_{j+1}` across each interface.
pub(crate) fn flux_jumps(fields: &[SpaceTimeField]) -> Result<Vec<InterfaceTrace>> {
    fields
        .windows(2)
        .map(|w| w[0].interface_flux(Side::Right).sub(&w[1].interface_flux(Side::Left)))
        .collect()
}

/// Homogeneous correction solves driven by the flux jumps, all concurrent.
pub(crate) fn correction_phase(
    problem: &DelayProblem,
    partition: &Partition,
    jumps: &[InterfaceTrace],
) -> Result<Vec<SpaceTimeField>> {
    let homogeneous = problem.error_equation();
    (0..partition.subdomains())
        .into_par_iter()
        .map(|i| correction_solve(&homogeneous, partition, jumps, i))
        .collect()
}

pub(crate) fn correction_solve(
    homogeneous: &DelayProblem,
    partition: &Partition,
    jumps: &[InterfaceTrace],
    i: usize,
) -> Result<SpaceTimeField> {
    let n = partition.subdomains();
    let grid = partition.subgrid(i);
    let zero = || BoundarySpec::dirichlet(InterfaceTrace::zeros(grid.nt(), grid.dt()));
    // the jump is the outward normal derivative on both sides of an interface
    let left = if i == 0 { zero() } else { BoundarySpec::neumann(jumps[i - 1].scaled(-1.0)) };
    let right = if i == n - 1 { zero() } else { BoundarySpec::neumann(jumps[i].clone()) };
    solve_subdomain(homogeneous, grid, &left, &right)
}

/// NNWR on two or more subdomains:
/// `g^k = g^{k-1} - θ (φ_j|_Γ + φ_{j+1}|_Γ)` per interface, where `φ` are the
/// correction solutions.
pub fn nnwr_run(
    problem: &DelayProblem,
    partition: &Partition,
    g0: &[InterfaceTrace],
    cfg: &WrConfig,
) -> Result<ConvergenceHistory> {
    check_traces(partition, g0)?;
    if cfg.theta >= 0.5 {
        log::warn!("NNWR with theta = {} outside (0, 1/2) is not expected to converge", cfg.theta);
    }
    let n = partition.subdomains();
    let reference = reference_field(problem, partition.grid())?.map(|f| {
        (0..n - 1)
            .map(|j| f.trace_at(partition.interface_node(j)))
            .collect::<Vec<_>>()
    });

    let step = |g: &[InterfaceTrace]| -> Result<Vec<InterfaceTrace>> {
        let fields = dirichlet_phase(problem, partition, g)?;
        let jumps = flux_jumps(&fields)?;
        let corrections = correction_phase(problem, partition, &jumps)?;
        (0..n - 1)
            .map(|j| {
                let sum = corrections[j]
                    .boundary_trace(Side::Right)
                    .add(&corrections[j + 1].boundary_trace(Side::Left))?;
                g[j].zip_with(&sum, |gj, s| gj - cfg.theta * s)
            })
            .collect()
    };

    let run = iterate(g0.to_vec(), reference.as_deref(), cfg.tol, cfg.max_iters, cfg.norm, step)?;
    Ok(ConvergenceHistory {
        method: Method::Nnwr,
        parameter: cfg.theta,
        subdomains: n,
        iterations_run: run.errors.len() - 1,
        errors: run.errors,
        converged: run.converged,
        traces: run.traces,
    })
}

//! Dirichlet-Neumann waveform relaxation.

use super::config::{interface_update, WrConfig};
use super::history::{iterate, reference_field, ConvergenceHistory, Method};
use super::partition::Partition;
use super::check_traces;
use crate::discretization::{physical_boundary, solve_subdomain, BoundarySpec, DelayProblem, Side};
use crate::error::{Error, Result};
use crate::trace::InterfaceTrace;

/// Two-subdomain DNWR: a Dirichlet solve on the left subdomain with interface
/// value `h^{k-1}`, a Neumann solve on the right one with the left solution's
/// interface flux, then `h^k = θ u_2|_Γ + (1-θ) h^{k-1}`.
pub fn dnwr_run(
    problem: &DelayProblem,
    partition: &Partition,
    h0: &InterfaceTrace,
    cfg: &WrConfig,
) -> Result<ConvergenceHistory> {
    if partition.subdomains() != 2 {
        return Err(Error::InvalidPartition(format!(
            "two-subdomain DNWR got {} subdomains",
            partition.subdomains()
        )));
    }
    sweep(problem, partition, std::slice::from_ref(h0), cfg)
}

/// DNWR on any number of subdomains.
///
/// Subdomain `⌈N/2⌉` (1-based) solves a pure Dirichlet problem first. The
/// solution then propagates outwards: each neighbour takes the flux of its
/// inner neighbour as Neumann data and the current trace as Dirichlet data on
/// its outer interface. The leftward and rightward sweeps run concurrently.
/// Each interface trace is relaxed with the value of the subdomain that saw
/// it as a Neumann boundary. With `N = 2` this is exactly [`dnwr_run`].
pub fn dnwr_multi_run(
    problem: &DelayProblem,
    partition: &Partition,
    traces: &[InterfaceTrace],
    cfg: &WrConfig,
) -> Result<ConvergenceHistory> {
    sweep(problem, partition, traces, cfg)
}

fn sweep(
    problem: &DelayProblem,
    partition: &Partition,
    h0: &[InterfaceTrace],
    cfg: &WrConfig,
) -> Result<ConvergenceHistory> {
    check_traces(partition, h0)?;
    let n = partition.subdomains();
    let mid = n.div_ceil(2) - 1;
    let reference = reference_field(problem, partition.grid())?.map(|f| {
        (0..n - 1)
            .map(|j| f.trace_at(partition.interface_node(j)))
            .collect::<Vec<_>>()
    });
    let outer_left = physical_boundary(problem, partition.subgrid(0), Side::Left);
    let outer_right = physical_boundary(problem, partition.subgrid(n - 1), Side::Right);

    let step = |h: &[InterfaceTrace]| -> Result<Vec<InterfaceTrace>> {
        let left_value = |i: usize| if i == 0 { outer_left.clone() } else { h[i - 1].clone() };
        let right_value = |i: usize| if i == n - 1 { outer_right.clone() } else { h[i].clone() };

        let centre = solve_subdomain(
            problem,
            partition.subgrid(mid),
            &BoundarySpec::dirichlet(left_value(mid)),
            &BoundarySpec::dirichlet(right_value(mid)),
        )?;

        let (leftward, rightward) = rayon::join(
            || -> Result<Vec<(usize, InterfaceTrace)>> {
                let mut out = Vec::with_capacity(mid);
                let mut flux = centre.interface_flux(Side::Left);
                for i in (0..mid).rev() {
                    let u = solve_subdomain(
                        problem,
                        partition.subgrid(i),
                        &BoundarySpec::dirichlet(left_value(i)),
                        &BoundarySpec::neumann(flux),
                    )?;
                    out.push((i, u.boundary_trace(Side::Right)));
                    flux = u.interface_flux(Side::Left);
                }
                Ok(out)
            },
            || -> Result<Vec<(usize, InterfaceTrace)>> {
                let mut out = Vec::with_capacity(n - 1 - mid);
                let mut flux = centre.interface_flux(Side::Right);
                for i in mid + 1..n {
                    let u = solve_subdomain(
                        problem,
                        partition.subgrid(i),
                        &BoundarySpec::neumann(flux),
                        &BoundarySpec::dirichlet(right_value(i)),
                    )?;
                    out.push((i - 1, u.boundary_trace(Side::Left)));
                    flux = u.interface_flux(Side::Right);
                }
                Ok(out)
            },
        );

        let mut next = h.to_vec();
        for (j, candidate) in leftward?.into_iter().chain(rightward?) {
            next[j] = interface_update(&h[j], &candidate, cfg.theta)?;
        }
        Ok(next)
    };

    let run = iterate(h0.to_vec(), reference.as_deref(), cfg.tol, cfg.max_iters, cfg.norm, step)?;
    Ok(ConvergenceHistory {
        method: Method::Dnwr,
        parameter: cfg.theta,
        subdomains: n,
        iterations_run: run.errors.len() - 1,
        errors: run.errors,
        converged: run.converged,
        traces: run.traces,
    })
}

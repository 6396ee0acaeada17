//! Overlapping Schwarz waveform relaxation with Dirichlet (classical) or
//! Robin (optimized) transmission, two subdomains, Jacobi ordering.

use crate::discretization::{
    physical_boundary, solve_subdomain, BoundarySpec, DelayProblem, Grid1D, Side, SpaceTimeField,
};
use crate::error::{Error, Result};
use crate::trace::InterfaceTrace;
use crate::waveform::{iterate, reference_field, ConvergenceHistory, Method, Norm};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzConfig {
    /// Overlap width in cells.
    pub overlap_cells: usize,
    /// Robin parameter, used only by [`optimized_schwarz_run`].
    pub robin_p: f64,
    pub tol: f64,
    pub max_iters: usize,
    pub norm: Norm,
}

impl SchwarzConfig {
    pub fn new(overlap_cells: usize, robin_p: f64, tol: f64, max_iters: usize, norm: Norm) -> Result<Self> {
        if !robin_p.is_finite() || robin_p <= 0.0 {
            return Err(Error::InvalidConfig(format!("robin_p must be positive and finite, got {robin_p}")));
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {tol}")));
        }
        if max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        Ok(Self { overlap_cells, robin_p, tol, max_iters, norm })
    }
}

/// Node layout of the two overlapping subdomains on the global grid.
#[derive(Debug, Clone)]
struct Layout {
    /// Global index of the left end of Ω2.
    left2: usize,
    /// Global index of the right end of Ω1.
    right1: usize,
    grid1: Grid1D,
    grid2: Grid1D,
}

fn layout(grid: &Grid1D, split: f64, overlap_cells: usize) -> Result<Layout> {
    let s = grid.node_at(split).ok_or(Error::NonConforming { x: split })?;
    let half = overlap_cells / 2;
    let last = grid.nx() - 1;
    if half > s || s - half + overlap_cells > last {
        return Err(Error::OverlapTooLarge { overlap_cells });
    }
    let left2 = s - half;
    let right1 = left2 + overlap_cells;
    if right1 < 2 || left2 + 2 > last {
        return Err(Error::OverlapTooLarge { overlap_cells });
    }
    Ok(Layout { left2, right1, grid1: grid.subgrid(0, right1)?, grid2: grid.subgrid(left2, last)? })
}

#[derive(Clone, Copy)]
enum Transmission {
    Dirichlet,
    Robin(f64),
}

impl Transmission {
    fn boundary(self, data: InterfaceTrace) -> BoundarySpec {
        match self {
            Transmission::Dirichlet => BoundarySpec::dirichlet(data),
            Transmission::Robin(p) => BoundarySpec::robin(p, data),
        }
    }

    /// Quantity imposed at `node` of `field` for a boundary facing `side`.
    fn extract(self, field: &SpaceTimeField, node: usize, side: Side) -> Result<InterfaceTrace> {
        match self {
            Transmission::Dirichlet => Ok(field.trace_at(node)),
            Transmission::Robin(p) => {
                let sign = match side {
                    Side::Left => -1.0,
                    Side::Right => 1.0,
                };
                field.derivative_at(node).zip_with(&field.trace_at(node), |du, u| sign * du + p * u)
            }
        }
    }
}

/// Classical Schwarz: each subdomain takes Dirichlet data from the other
/// subdomain's previous iterate. `guesses[0]` is the data on the right end
/// of Ω1, `guesses[1]` on the left end of Ω2.
pub fn classical_schwarz_run(
    problem: &DelayProblem,
    grid: &Grid1D,
    split: f64,
    cfg: &SchwarzConfig,
    guesses: &[InterfaceTrace; 2],
) -> Result<ConvergenceHistory> {
    if cfg.overlap_cells == 0 {
        return Err(Error::InvalidConfig("classical Schwarz needs overlap_cells >= 1".into()));
    }
    run(problem, grid, split, cfg, guesses, Transmission::Dirichlet)
}

/// Optimized Schwarz: Ω1 imposes `∂x u + p u` on its right end and Ω2 imposes
/// `-∂x u + p u` on its left end, both taken from the neighbour's previous
/// iterate. Zero overlap is allowed.
pub fn optimized_schwarz_run(
    problem: &DelayProblem,
    grid: &Grid1D,
    split: f64,
    cfg: &SchwarzConfig,
    guesses: &[InterfaceTrace; 2],
) -> Result<ConvergenceHistory> {
    run(problem, grid, split, cfg, guesses, Transmission::Robin(cfg.robin_p))
}

fn run(
    problem: &DelayProblem,
    grid: &Grid1D,
    split: f64,
    cfg: &SchwarzConfig,
    guesses: &[InterfaceTrace; 2],
    tx: Transmission,
) -> Result<ConvergenceHistory> {
    let lay = layout(grid, split, cfg.overlap_cells)?;
    for g in guesses {
        if g.len() != grid.nt() {
            return Err(Error::LengthMismatch { expected: grid.nt(), found: g.len() });
        }
        if !g.is_finite() {
            return Err(Error::InvalidConfig("initial guess contains non-finite values".into()));
        }
    }
    let reference = match reference_field(problem, grid)? {
        Some(u) => Some(vec![
            tx.extract(&u, lay.right1, Side::Right)?,
            tx.extract(&u, lay.left2, Side::Left)?,
        ]),
        None => None,
    };
    let outer_left = physical_boundary(problem, &lay.grid1, Side::Left);
    let outer_right = physical_boundary(problem, &lay.grid2, Side::Right);

    let step = |g: &[InterfaceTrace]| -> Result<Vec<InterfaceTrace>> {
        let (u1, u2) = rayon::join(
            || {
                solve_subdomain(
                    problem,
                    &lay.grid1,
                    &BoundarySpec::dirichlet(outer_left.clone()),
                    &tx.boundary(g[0].clone()),
                )
            },
            || {
                solve_subdomain(
                    problem,
                    &lay.grid2,
                    &tx.boundary(g[1].clone()),
                    &BoundarySpec::dirichlet(outer_right.clone()),
                )
            },
        );
        let (u1, u2) = (u1?, u2?);
        Ok(vec![
            tx.extract(&u2, lay.right1 - lay.left2, Side::Right)?,
            tx.extract(&u1, lay.left2, Side::Left)?,
        ])
    };

    let out = iterate(guesses.to_vec(), reference.as_deref(), cfg.tol, cfg.max_iters, cfg.norm, step)?;
    let (method, parameter) = match tx {
        Transmission::Dirichlet => (Method::ClassicalSchwarz, 0.0),
        Transmission::Robin(p) => (Method::OptimizedSchwarz, p),
    };
    Ok(ConvergenceHistory {
        method,
        parameter,
        subdomains: 2,
        iterations_run: out.errors.len() - 1,
        errors: out.errors,
        converged: out.converged,
        traces: out.traces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::Family;

    fn setup() -> (DelayProblem, Grid1D) {
        let fam = Family::Parabolic { a1: 1.0, a2: 2.3, nu: 1.0 };
        let problem = DelayProblem::homogeneous(fam, 1.5, (0.0, 6.0), 3.0).unwrap();
        let grid = Grid1D::new((0.0, 6.0), 61, 0.1, 3.0, 1.5).unwrap();
        (problem, grid)
    }

    #[test]
    fn layout_indices() {
        let (_, grid) = setup();
        let lay = layout(&grid, 3.0, 2).unwrap();
        assert_eq!((lay.left2, lay.right1), (29, 31));
        let lay = layout(&grid, 3.0, 3).unwrap();
        assert_eq!((lay.left2, lay.right1), (29, 32));
        let lay = layout(&grid, 3.0, 0).unwrap();
        assert_eq!((lay.left2, lay.right1), (30, 30));
        assert!(matches!(layout(&grid, 3.0, 80), Err(Error::OverlapTooLarge { .. })));
        assert!(matches!(layout(&grid, 0.0, 2), Err(Error::OverlapTooLarge { .. })));
        assert!(matches!(layout(&grid, 3.05, 2), Err(Error::NonConforming { .. })));
    }

    #[test]
    fn zero_guesses_converge_at_start() {
        let (problem, grid) = setup();
        let cfg = SchwarzConfig::new(2, 4.0, 1e-6, 50, Norm::Sup).unwrap();
        let zero = InterfaceTrace::zeros(grid.nt(), grid.dt());
        let guesses = [zero.clone(), zero];
        for h in [
            classical_schwarz_run(&problem, &grid, 3.0, &cfg, &guesses).unwrap(),
            optimized_schwarz_run(&problem, &grid, 3.0, &cfg, &guesses).unwrap(),
        ] {
            assert!(h.converged);
            assert_eq!(h.iterations_run, 0);
        }
    }

    #[test]
    fn classical_rejects_zero_overlap() {
        let (problem, grid) = setup();
        let cfg = SchwarzConfig::new(0, 4.0, 1e-6, 50, Norm::Sup).unwrap();
        let zero = InterfaceTrace::zeros(grid.nt(), grid.dt());
        let guesses = [zero.clone(), zero];
        assert!(classical_schwarz_run(&problem, &grid, 3.0, &cfg, &guesses).is_err());
        assert!(SchwarzConfig::new(2, f64::NAN, 1e-6, 50, Norm::Sup).is_err());
    }
}

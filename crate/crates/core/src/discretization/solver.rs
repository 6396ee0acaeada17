//! Full-window subdomain solves for the three delay families.
//!
//! Every scheme is implicit in the undelayed spatial term and, per new level
//! `L`, reduces at node `i` to
//!
//! ```text
//! A u_i - κ (u_{i-1} - 2 u_i + u_{i+1}) / dx² = b_i
//! ```
//!
//! with `(A, κ)` fixed by the family and `dt`, and `b_i` collecting older
//! levels, delayed terms and forcing. Delayed levels `L - m <= 0` come from
//! the history slab.

use ndarray::Array2;

use super::field::{SpaceTimeField, Side};
use super::grid::Grid1D;
use super::problem::{DelayProblem, Family};
use super::tridiag::TridiagonalLu;
use crate::error::{Error, Result};
use crate::trace::InterfaceTrace;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryKind {
    /// Data is the boundary value.
    Dirichlet,
    /// Data is `∂x u` at the boundary (not the outward normal derivative).
    Neumann,
    /// Data is `∂x u + p u` on a right boundary, `-∂x u + p u` on a left one.
    Robin { p: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySpec {
    pub kind: BoundaryKind,
    pub data: InterfaceTrace,
}

impl BoundarySpec {
    pub fn dirichlet(data: InterfaceTrace) -> Self {
        Self { kind: BoundaryKind::Dirichlet, data }
    }

    pub fn neumann(data: InterfaceTrace) -> Self {
        Self { kind: BoundaryKind::Neumann, data }
    }

    pub fn robin(p: f64, data: InterfaceTrace) -> Self {
        Self { kind: BoundaryKind::Robin { p }, data }
    }
}

/// Implicit-level coefficients `(A, κ)`.
fn level_coefficients(family: Family, dt: f64) -> (f64, f64) {
    match family {
        Family::Parabolic { a1, nu, .. } => (1.0 / dt + a1, nu * nu),
        Family::Wave { c, .. } => (1.0 / (dt * dt), c * c),
        Family::Neutral { mu, r, .. } => (1.0 / dt - r, mu * mu),
    }
}

struct Stencil<'a> {
    problem: &'a DelayProblem,
    grid: &'a Grid1D,
}

impl Stencil<'_> {
    /// Right-hand side `b_i` at node `i` of new level `l`.
    fn rhs(&self, u: &Array2<f64>, ghosts: (&[f64], &[f64]), l: isize, i: usize) -> f64 {
        let m = self.grid.delay_steps() as isize;
        let dt = self.grid.dt();
        let row = |level: isize| (level + m) as usize;
        let x = self.grid.x(i);
        let f = self.problem.forcing_at(x, self.grid.t(l));
        let prev = u[[row(l - 1), i]];
        let delayed = u[[row(l - m), i]];
        match self.problem.family() {
            Family::Parabolic { a2, .. } => prev / dt - a2 * delayed + f,
            Family::Wave { lambda, .. } => {
                (2.0 * prev - u[[row(l - 2), i]]) / (dt * dt) + lambda * delayed + f
            }
            Family::Neutral { mu, c, d, .. } => {
                let rd = row(l - m);
                let n = self.grid.nx() - 1;
                let left = if i == 0 { ghosts.0[rd] } else { u[[rd, i - 1]] };
                let right = if i == n { ghosts.1[rd] } else { u[[rd, i + 1]] };
                let dxx = (left - 2.0 * delayed + right) / (self.grid.dx() * self.grid.dx());
                prev / dt + mu * mu * c * c * dxx + d * delayed + f
            }
        }
    }
}

/// Solves one subdomain over the whole time window.
///
/// The grid must carry the problem's delay. Boundary data traces hold
/// levels `1..=nt`. Neumann and Robin sides use the ghost-point closure
/// `u_{-1} = u_1 - 2dx ∂x u` (mirrored on the right) substituted into the
/// boundary-node equation.
pub fn solve_subdomain(
    problem: &DelayProblem,
    grid: &Grid1D,
    left: &BoundarySpec,
    right: &BoundarySpec,
) -> Result<SpaceTimeField> {
    if (grid.tau() - problem.tau()).abs() > 1e-12 * problem.tau() {
        return Err(Error::DelayMismatch {
            grid_steps: grid.delay_steps(),
            tau: problem.tau(),
            dt: grid.dt(),
        });
    }
    for spec in [left, right] {
        if spec.data.len() != grid.nt() {
            return Err(Error::LengthMismatch {
                expected: grid.nt(),
                found: spec.data.len(),
            });
        }
    }

    let nx = grid.nx();
    let n = nx - 1;
    let m = grid.delay_steps();
    let dx = grid.dx();
    let (a, kappa) = level_coefficients(problem.family(), grid.dt());
    let off = kappa / (dx * dx);
    let stencil = Stencil { problem, grid };

    let mut sub = vec![-off; n];
    let mut diag = vec![a + 2.0 * off; nx];
    let mut sup = vec![-off; n];
    for (side, spec) in [(Side::Left, left), (Side::Right, right)] {
        let (d, o) = match side {
            Side::Left => (0, &mut sup[0]),
            Side::Right => (n, &mut sub[n - 1]),
        };
        match spec.kind {
            BoundaryKind::Dirichlet => {
                diag[d] = 1.0;
                *o = 0.0;
            }
            BoundaryKind::Neumann => *o = -2.0 * off,
            BoundaryKind::Robin { p } => {
                diag[d] += 2.0 * kappa * p / dx;
                *o = -2.0 * off;
            }
        }
    }
    let lu = TridiagonalLu::factor(&sub, &diag, &sup)?;

    let levels = grid.levels();
    let mut u = Array2::<f64>::zeros((levels, nx));
    let mut ghost_left = vec![0.0; levels];
    let mut ghost_right = vec![0.0; levels];
    for r in 0..=m {
        let t = grid.t(r as isize - m as isize);
        for i in 0..nx {
            u[[r, i]] = problem.history_at(grid.x(i), t);
        }
        ghost_left[r] = problem.history_at(grid.x_min() - dx, t);
        ghost_right[r] = problem.history_at(grid.x_max() + dx, t);
    }

    let mut rhs = vec![0.0; nx];
    for step in 0..grid.nt() {
        let l = step as isize + 1;
        let r = step + m + 1;
        for (i, b) in rhs.iter_mut().enumerate() {
            *b = stencil.rhs(&u, (&ghost_left, &ghost_right), l, i);
        }
        let b_left = rhs[0];
        let b_right = rhs[n];
        for (side, spec) in [(Side::Left, left), (Side::Right, right)] {
            let idx = if side == Side::Left { 0 } else { n };
            let g = spec.data.values()[step];
            match (spec.kind, side) {
                (BoundaryKind::Dirichlet, _) => rhs[idx] = g,
                (BoundaryKind::Neumann, Side::Left) => rhs[idx] -= 2.0 * kappa * g / dx,
                (BoundaryKind::Neumann, Side::Right) => rhs[idx] += 2.0 * kappa * g / dx,
                (BoundaryKind::Robin { .. }, _) => rhs[idx] += 2.0 * kappa * g / dx,
            }
        }
        lu.solve_in_place(&mut rhs)?;
        for (i, v) in rhs.iter().enumerate() {
            u[[r, i]] = *v;
        }

        for (side, spec, b) in [(Side::Left, left, b_left), (Side::Right, right, b_right)] {
            let (bnd, inner) = match side {
                Side::Left => (u[[r, 0]], u[[r, 1]]),
                Side::Right => (u[[r, n]], u[[r, n - 1]]),
            };
            let g = spec.data.values()[step];
            // flux ∂x u at this boundary, then ghost = inner ∓ 2dx·flux
            let ghost = match spec.kind {
                BoundaryKind::Dirichlet => (a * bnd - b) / off + 2.0 * bnd - inner,
                BoundaryKind::Neumann | BoundaryKind::Robin { .. } => {
                    let flux = match (spec.kind, side) {
                        (BoundaryKind::Robin { p }, Side::Left) => p * bnd - g,
                        (BoundaryKind::Robin { p }, Side::Right) => g - p * bnd,
                        _ => g,
                    };
                    match side {
                        Side::Left => inner - 2.0 * dx * flux,
                        Side::Right => inner + 2.0 * dx * flux,
                    }
                }
            };
            match side {
                Side::Left => ghost_left[r] = ghost,
                Side::Right => ghost_right[r] = ghost,
            }
        }
    }

    Ok(SpaceTimeField::new(grid.clone(), u, ghost_left, ghost_right))
}

/// Samples the problem's physical Dirichlet data on one side.
pub fn physical_boundary(problem: &DelayProblem, grid: &Grid1D, side: Side) -> InterfaceTrace {
    InterfaceTrace::from_fn(grid.nt(), grid.dt(), |t| match side {
        Side::Left => problem.boundary_left_at(t),
        Side::Right => problem.boundary_right_at(t),
    })
}

/// Whole-domain reference solve with the problem's own Dirichlet data.
pub fn monolithic_solve(problem: &DelayProblem, grid: &Grid1D) -> Result<SpaceTimeField> {
    let left = BoundarySpec::dirichlet(physical_boundary(problem, grid, Side::Left));
    let right = BoundarySpec::dirichlet(physical_boundary(problem, grid, Side::Right));
    solve_subdomain(problem, grid, &left, &right)
}

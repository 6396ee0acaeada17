//! Independent reference implementations used only by tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use delay_dd::discretization::{monolithic_solve, BoundaryKind, BoundarySpec, DelayProblem, Family, Grid1D};

/// Dense Gaussian elimination with partial pivoting, row-major `a` (n × n).
pub fn dense_solve(mut a: Vec<f64>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    assert_eq!(a.len(), n * n);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap();
        assert!(a[piv * n + col].abs() > 1e-300, "singular dense system");
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
            }
            b.swap(piv, col);
        }
        let p = a[col * n + col];
        for row in col + 1..n {
            let factor = a[row * n + col] / p;
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row * n + k] -= factor * a[col * n + k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= a[row * n + k] * x[k];
        }
        x[row] = s / a[row * n + row];
    }
    x
}

/// Value of `u` at (level, node) where node `-1` and `nx` are ghost points.
enum Slot {
    Unknown(usize),
    Known(f64),
}

struct SpaceTime<'a> {
    problem: &'a DelayProblem,
    grid: &'a Grid1D,
}

impl SpaceTime<'_> {
    fn width(&self) -> usize {
        self.grid.nx() + 2
    }

    fn unknowns(&self) -> usize {
        self.grid.nt() * self.width()
    }

    fn slot(&self, level: isize, node: isize) -> Slot {
        if level <= 0 {
            let x = self.grid.x_min() + node as f64 * self.grid.dx();
            Slot::Known(self.problem.history_at(x, level as f64 * self.grid.dt()))
        } else {
            Slot::Unknown((level as usize - 1) * self.width() + (node + 1) as usize)
        }
    }
}

/// Assembles every level of the scheme into one dense linear system, with
/// ghost values as explicit unknowns, and solves it. Returns `u[level][node]`
/// for levels `1..=nt`.
pub fn space_time_oracle(
    problem: &DelayProblem,
    grid: &Grid1D,
    left: &BoundarySpec,
    right: &BoundarySpec,
) -> Vec<Vec<f64>> {
    let st = SpaceTime { problem, grid };
    let n = st.unknowns();
    let mut a = vec![0.0; n * n];
    let mut b = vec![0.0; n];
    let nx = grid.nx() as isize;
    let m = grid.delay_steps() as isize;
    let dt = grid.dt();
    let dx = grid.dx();

    let mut row = 0usize;
    let mut emit = |terms: &[(f64, isize, isize)], rhs: f64, a: &mut Vec<f64>, b: &mut Vec<f64>| {
        let mut r = rhs;
        for &(coef, level, node) in terms {
            match st.slot(level, node) {
                Slot::Unknown(j) => a[row * n + j] += coef,
                Slot::Known(v) => r -= coef * v,
            }
        }
        b[row] = r;
        row += 1;
    };

    for level in 1..=grid.nt() as isize {
        let t = level as f64 * dt;
        let step = (level - 1) as usize;
        // ghost rows
        for (spec, node, inner, bnd, sign) in [(left, -1, 1, 0, -1.0), (right, nx, nx - 2, nx - 1, 1.0)] {
            let g = spec.data.values()[step];
            match spec.kind {
                BoundaryKind::Dirichlet => emit(&[(1.0, level, node)], 0.0, &mut a, &mut b),
                // ∂x u = (u_right - u_left) / 2dx across the boundary node
                BoundaryKind::Neumann => emit(
                    &[(sign / (2.0 * dx), level, node), (-sign / (2.0 * dx), level, inner)],
                    g,
                    &mut a,
                    &mut b,
                ),
                // left: -∂x u + p u = g, right: ∂x u + p u = g
                BoundaryKind::Robin { p } => emit(
                    &[
                        (1.0 / (2.0 * dx), level, node),
                        (-1.0 / (2.0 * dx), level, inner),
                        (p, level, bnd),
                    ],
                    g,
                    &mut a,
                    &mut b,
                ),
            }
        }
        for i in 0..nx {
            let x = grid.x_min() + i as f64 * dx;
            let f = problem.forcing_at(x, t);
            let is_dirichlet = (i == 0 && left.kind == BoundaryKind::Dirichlet)
                || (i == nx - 1 && right.kind == BoundaryKind::Dirichlet);
            if is_dirichlet {
                let g = if i == 0 { &left.data } else { &right.data };
                emit(&[(1.0, level, i)], g.values()[step], &mut a, &mut b);
                continue;
            }
            let lap = |coef: f64, lv: isize| {
                let c = coef / (dx * dx);
                [(c, lv, i - 1), (-2.0 * c, lv, i), (c, lv, i + 1)]
            };
            let mut terms: Vec<(f64, isize, isize)> = Vec::new();
            match problem.family() {
                Family::Parabolic { a1, a2, nu } => {
                    // u_t - ν² u_xx + a1 u + a2 u(t-τ) = f
                    terms.extend([(1.0 / dt, level, i), (-1.0 / dt, level - 1, i)]);
                    terms.extend(lap(-nu * nu, level));
                    terms.extend([(a1, level, i), (a2, level - m, i)]);
                }
                Family::Wave { c, lambda } => {
                    // u_tt - c² u_xx - λ u(t-τ) = f
                    let k = 1.0 / (dt * dt);
                    terms.extend([(k, level, i), (-2.0 * k, level - 1, i), (k, level - 2, i)]);
                    terms.extend(lap(-c * c, level));
                    terms.push((-lambda, level - m, i));
                }
                Family::Neutral { mu, c, r, d } => {
                    // u_t - μ² u_xx - μ²c² u_xx(t-τ) - r u - d u(t-τ) = f
                    terms.extend([(1.0 / dt, level, i), (-1.0 / dt, level - 1, i)]);
                    terms.extend(lap(-mu * mu, level));
                    terms.extend(lap(-mu * mu * c * c, level - m));
                    terms.extend([(-r, level, i), (-d, level - m, i)]);
                }
            }
            emit(&terms, f, &mut a, &mut b);
        }
    }
    assert_eq!(row, n);
    let x = dense_solve(a, b);
    (0..grid.nt())
        .map(|s| x[s * st.width() + 1..s * st.width() + 1 + grid.nx()].to_vec())
        .collect()
}

pub fn max_abs(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Max-norm error of the monolithic solve against a manufactured solution.
pub fn mms_error(family: Family, nx: usize, dt: f64, tau: f64, t_end: f64) -> f64 {
    let exact = |x: f64, t: f64| (PI * x).sin() * (-t).exp();
    let forcing = move |x: f64, t: f64| {
        let u = exact(x, t);
        let ud = exact(x, t - tau);
        match family {
            // u_t - ν² u_xx + a1 u + a2 u(t-τ)
            Family::Parabolic { a1, a2, nu } => -u + nu * nu * PI * PI * u + a1 * u + a2 * ud,
            // u_t - μ² u_xx - μ²c² u_xx(t-τ) - r u - d u(t-τ)
            Family::Neutral { mu, c, r, d } => {
                -u + mu * mu * PI * PI * u + mu * mu * c * c * PI * PI * ud - r * u - d * ud
            }
            Family::Wave { .. } => unreachable!(),
        }
    };
    let grid = Grid1D::new((0.0, 1.0), nx, dt, t_end, tau).unwrap();
    let problem = DelayProblem::homogeneous(family, tau, (0.0, 1.0), t_end)
        .unwrap()
        .with_history(exact)
        .with_forcing(forcing);
    let field = monolithic_solve(&problem, &grid).unwrap();
    let mut err = 0.0f64;
    for l in 1..=grid.nt() as isize {
        for i in 0..nx {
            err = err.max((field.at(l, i) - exact(grid.x(i), grid.t(l))).abs());
        }
    }
    err
}

pub fn observed_orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

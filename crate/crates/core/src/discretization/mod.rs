//! Grids, delay problems and single-subdomain solves.

mod field;
mod grid;
mod problem;
mod solver;
mod tridiag;

pub use field::{Side, SpaceTimeField};
pub use grid::Grid1D;
pub use problem::{DelayProblem, Family, SpaceTimeFn, TimeFn};
pub use solver::{monolithic_solve, physical_boundary, solve_subdomain, BoundaryKind, BoundarySpec};
pub use tridiag::{thomas_solve, TridiagonalLu};

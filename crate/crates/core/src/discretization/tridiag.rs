//! Thomas algorithm for tridiagonal systems.

use crate::error::{Error, Result};

const PIVOT_FLOOR: f64 = 1e-300;

/// LU factors of a tridiagonal matrix, reusable across right-hand sides.
///
/// Every time level of a subdomain solve shares one matrix, so the forward
/// sweep coefficients are computed once.
#[derive(Debug, Clone)]
pub struct TridiagonalLu {
    sub: Vec<f64>,
    /// Reciprocal pivots.
    inv_pivot: Vec<f64>,
    /// Modified super-diagonal `c'_i = c_i / pivot_i`.
    sup_mod: Vec<f64>,
}

impl TridiagonalLu {
    pub fn factor(sub: &[f64], diag: &[f64], sup: &[f64]) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::LengthMismatch { expected: 1, found: 0 });
        }
        for len in [sub.len(), sup.len()] {
            if len != n - 1 {
                return Err(Error::LengthMismatch { expected: n - 1, found: len });
            }
        }
        let mut inv_pivot = Vec::with_capacity(n);
        let mut sup_mod = Vec::with_capacity(n.saturating_sub(1));
        let mut pivot = diag[0];
        for i in 0..n {
            if i > 0 {
                pivot = diag[i] - sub[i - 1] * sup_mod[i - 1];
            }
            if pivot.is_nan() || pivot.abs() < PIVOT_FLOOR {
                return Err(Error::ZeroPivot { row: i });
            }
            inv_pivot.push(1.0 / pivot);
            if i + 1 < n {
                sup_mod.push(sup[i] / pivot);
            }
        }
        Ok(Self {
            sub: sub.to_vec(),
            inv_pivot,
            sup_mod,
        })
    }

    pub fn len(&self) -> usize {
        self.inv_pivot.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inv_pivot.is_empty()
    }

    /// Overwrites `rhs` with the solution.
    pub fn solve_in_place(&self, rhs: &mut [f64]) -> Result<()> {
        let n = self.len();
        if rhs.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: rhs.len() });
        }
        rhs[0] *= self.inv_pivot[0];
        for i in 1..n {
            rhs[i] = (rhs[i] - self.sub[i - 1] * rhs[i - 1]) * self.inv_pivot[i];
        }
        for i in (0..n - 1).rev() {
            rhs[i] -= self.sup_mod[i] * rhs[i + 1];
        }
        Ok(())
    }
}

/// Solves `T x = rhs` for tridiagonal `T` given by its three diagonals.
///
/// `sub[i]` sits at row `i + 1`, column `i`; `sup[i]` at row `i`, column `i + 1`.
pub fn thomas_solve(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let lu = TridiagonalLu::factor(sub, diag, sup)?;
    let mut x = rhs.to_vec();
    lu.solve_in_place(&mut x)?;
    Ok(x)
}

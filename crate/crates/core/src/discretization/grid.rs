use crate::error::{Error, Result};

/// Relative tolerance for `tau / dt` and `T / dt` to count as integers.
const INTEGER_RATIO_TOL: f64 = 1e-12;

/// Uniform space-time lattice for one (sub)domain.
///
/// Time levels run from `-delay_steps` (t = -τ) up to `nt` (t = T); levels
/// `<= 0` form the history slab.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    nx: usize,
    dx: f64,
    t_end: f64,
    dt: f64,
    nt: usize,
    delay_steps: usize,
}

fn integer_ratio(num: f64, den: f64) -> Option<usize> {
    let ratio = num / den;
    let rounded = ratio.round();
    if rounded >= 1.0 && (ratio - rounded).abs() <= INTEGER_RATIO_TOL * ratio {
        Some(rounded as usize)
    } else {
        None
    }
}

impl Grid1D {
    pub fn new(domain: (f64, f64), nx: usize, dt: f64, t_end: f64, tau: f64) -> Result<Self> {
        let (x_min, x_max) = domain;
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::InvalidGrid(format!(
                "domain ({x_min}, {x_max}) is empty or not finite"
            )));
        }
        if nx < 3 {
            return Err(Error::InvalidGrid(format!("need nx >= 3, got {nx}")));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidGrid(format!("dt must be positive, got {dt}")));
        }
        if !(tau.is_finite() && tau > 0.0) {
            return Err(Error::InvalidGrid(format!("tau must be positive, got {tau}")));
        }
        if !(t_end.is_finite() && t_end > 0.0) {
            return Err(Error::InvalidGrid(format!("T must be positive, got {t_end}")));
        }
        let delay_steps = integer_ratio(tau, dt).ok_or(Error::NonIntegerDelay { tau, dt })?;
        let nt = integer_ratio(t_end, dt).ok_or(Error::NonIntegerHorizon { t_end, dt })?;
        Ok(Self {
            x_min,
            x_max,
            nx,
            dx: (x_max - x_min) / (nx - 1) as f64,
            t_end,
            dt,
            nt,
            delay_steps,
        })
    }

    /// Grid over nodes `first..=last` of `self`, sharing `dx` and the time axis.
    pub fn subgrid(&self, first: usize, last: usize) -> Result<Self> {
        if last >= self.nx || last < first + 2 {
            return Err(Error::InvalidGrid(format!(
                "subgrid {first}..={last} of a {}-node grid needs at least three nodes",
                self.nx
            )));
        }
        Ok(Self {
            x_min: self.x(first),
            x_max: self.x(last),
            nx: last - first + 1,
            ..self.clone()
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn delay_steps(&self) -> usize {
        self.delay_steps
    }

    pub fn tau(&self) -> f64 {
        self.delay_steps as f64 * self.dt
    }

    /// Number of stored time levels, history slab included.
    pub fn levels(&self) -> usize {
        self.delay_steps + 1 + self.nt
    }

    /// Node coordinate; `i` may run one past either end for ghost points.
    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.nx {
            self.x_max
        } else {
            self.x_min + i as f64 * self.dx
        }
    }

    /// Time of a signed level index.
    pub fn t(&self, level: isize) -> f64 {
        level as f64 * self.dt
    }

    /// Index of the node at `x`, if `x` lies on the grid to within `1e-9·dx`.
    pub fn node_at(&self, x: f64) -> Option<usize> {
        let pos = (x - self.x_min) / self.dx;
        let idx = pos.round();
        if idx < 0.0 || idx > (self.nx - 1) as f64 || (pos - idx).abs() > 1e-9 {
            None
        } else {
            Some(idx as usize)
        }
    }
}

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type SpaceTimeFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
pub type TimeFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// The three model equations, each with a delay `τ` carried by [`DelayProblem`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `u_t = ν² u_xx - a1 u - a2 u(t-τ) + f`
    Parabolic { a1: f64, a2: f64, nu: f64 },
    /// `u_tt = c² u_xx + λ u(t-τ) + f`
    Wave { c: f64, lambda: f64 },
    /// `u_t = μ² u_xx + μ²c² u_xx(t-τ) + r u + d u(t-τ) + f`
    Neutral { mu: f64, c: f64, r: f64, d: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Parabolic { .. } => "parabolic",
            Family::Wave { .. } => "wave",
            Family::Neutral { .. } => "neutral",
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = |vals: &[f64]| vals.iter().all(|v| v.is_finite());
        match *self {
            Family::Parabolic { a1, a2, nu } => {
                if !finite(&[a1, a2, nu]) {
                    return Err(Error::InvalidProblem("non-finite coefficient".into()));
                }
                if a2 == 0.0 {
                    return Err(Error::InvalidProblem("parabolic family needs a2 != 0".into()));
                }
                if nu <= 0.0 {
                    return Err(Error::InvalidProblem("diffusion nu must be positive".into()));
                }
            }
            Family::Wave { c, lambda } => {
                if !finite(&[c, lambda]) || c <= 0.0 {
                    return Err(Error::InvalidProblem("wave speed c must be positive".into()));
                }
            }
            Family::Neutral { mu, c, r, d } => {
                if !finite(&[mu, c, r, d]) || mu <= 0.0 {
                    return Err(Error::InvalidProblem("neutral mu must be positive".into()));
                }
            }
        }
        Ok(())
    }
}

/// A delay PDE on a bounded interval with history, forcing and Dirichlet data.
///
/// Absent data (`None`) means identically zero, so a problem with no data at
/// all is the error equation.
#[derive(Clone)]
pub struct DelayProblem {
    family: Family,
    tau: f64,
    domain: (f64, f64),
    t_end: f64,
    history: Option<SpaceTimeFn>,
    forcing: Option<SpaceTimeFn>,
    boundary_left: Option<TimeFn>,
    boundary_right: Option<TimeFn>,
}

impl fmt::Debug for DelayProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DelayProblem")
            .field("family", &self.family)
            .field("tau", &self.tau)
            .field("domain", &self.domain)
            .field("t_end", &self.t_end)
            .field("homogeneous", &self.is_homogeneous())
            .finish()
    }
}

impl DelayProblem {
    /// Error-equation problem: zero history, forcing and boundary data.
    pub fn homogeneous(family: Family, tau: f64, domain: (f64, f64), t_end: f64) -> Result<Self> {
        family.validate()?;
        if !(tau.is_finite() && tau > 0.0) {
            return Err(Error::InvalidProblem(format!("tau must be positive, got {tau}")));
        }
        if !(t_end.is_finite() && t_end > 0.0) {
            return Err(Error::InvalidProblem(format!("T must be positive, got {t_end}")));
        }
        if !(domain.0.is_finite() && domain.1.is_finite() && domain.1 > domain.0) {
            return Err(Error::InvalidProblem(format!("empty domain {domain:?}")));
        }
        Ok(Self {
            family,
            tau,
            domain,
            t_end,
            history: None,
            forcing: None,
            boundary_left: None,
            boundary_right: None,
        })
    }

    pub fn with_history(mut self, f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.history = Some(Arc::new(f));
        self
    }

    pub fn with_forcing(mut self, f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.forcing = Some(Arc::new(f));
        self
    }

    pub fn with_boundary_left(mut self, g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.boundary_left = Some(Arc::new(g));
        self
    }

    pub fn with_boundary_right(mut self, g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.boundary_right = Some(Arc::new(g));
        self
    }

    /// Same equation with all data stripped.
    pub fn error_equation(&self) -> Self {
        Self {
            history: None,
            forcing: None,
            boundary_left: None,
            boundary_right: None,
            ..self.clone()
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn is_homogeneous(&self) -> bool {
        self.history.is_none()
            && self.forcing.is_none()
            && self.boundary_left.is_none()
            && self.boundary_right.is_none()
    }

    pub fn history_at(&self, x: f64, t: f64) -> f64 {
        self.history.as_ref().map_or(0.0, |h| h(x, t))
    }

    pub fn forcing_at(&self, x: f64, t: f64) -> f64 {
        self.forcing.as_ref().map_or(0.0, |f| f(x, t))
    }

    pub fn boundary_left_at(&self, t: f64) -> f64 {
        self.boundary_left.as_ref().map_or(0.0, |g| g(t))
    }

    pub fn boundary_right_at(&self, t: f64) -> f64 {
        self.boundary_right.as_ref().map_or(0.0, |g| g(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_needs_delayed_reaction() {
        let fam = Family::Parabolic { a1: 1.0, a2: 0.0, nu: 1.0 };
        assert!(DelayProblem::homogeneous(fam, 1.0, (0.0, 1.0), 1.0).is_err());
    }

    #[test]
    fn error_equation_strips_data() {
        let fam = Family::Wave { c: 1.0, lambda: 0.5 };
        let p = DelayProblem::homogeneous(fam, 1.0, (0.0, 1.0), 1.0)
            .unwrap()
            .with_forcing(|x, t| x + t)
            .with_boundary_left(|t| t);
        assert!(!p.is_homogeneous());
        let e = p.error_equation();
        assert!(e.is_homogeneous());
        assert_eq!(e.forcing_at(0.3, 0.4), 0.0);
        assert_eq!(p.forcing_at(0.3, 0.4), 0.7);
    }
}

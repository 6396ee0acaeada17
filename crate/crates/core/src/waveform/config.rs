use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::trace::InterfaceTrace;

/// Norm over time used for interface errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Norm {
    #[default]
    Sup,
    /// `sqrt(dt · Σ v²)`
    L2,
}

impl FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sup" => Ok(Norm::Sup),
            "l2" => Ok(Norm::L2),
            other => Err(Error::validation("norm", format!("expected `sup` or `l2`, got `{other}`"))),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Norm::Sup => "sup",
            Norm::L2 => "l2",
        })
    }
}

/// Relaxation and stopping parameters for a waveform-relaxation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrConfig {
    pub theta: f64,
    /// Target for `‖e^k‖ / ‖e^0‖`.
    pub tol: f64,
    pub max_iters: usize,
    pub norm: Norm,
}

impl WrConfig {
    pub fn new(theta: f64, tol: f64, max_iters: usize, norm: Norm) -> Result<Self> {
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::InvalidConfig(format!("theta out of (0,1): {theta}")));
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {tol}")));
        }
        if max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        Ok(Self { theta, tol, max_iters, norm })
    }
}

/// `θ·candidate + (1-θ)·prev`, pointwise.
pub fn interface_update(prev: &InterfaceTrace, candidate: &InterfaceTrace, theta: f64) -> Result<InterfaceTrace> {
    prev.zip_with(candidate, |p, c| theta * c + (1.0 - theta) * p)
}

pub fn error_norm(trace: &InterfaceTrace, norm: Norm) -> f64 {
    match norm {
        Norm::Sup => trace.values().iter().fold(0.0, |acc, v| acc.max(v.abs())),
        Norm::L2 => (trace.dt() * trace.values().iter().map(|v| v * v).sum::<f64>()).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn update_endpoints_and_midpoint() {
        let prev = InterfaceTrace::new(vec![2.0, 4.0], 0.1);
        let cand = InterfaceTrace::new(vec![0.0, 0.0], 0.1);
        assert_eq!(interface_update(&prev, &cand, 1.0).unwrap(), cand);
        assert_eq!(interface_update(&prev, &cand, 0.0).unwrap(), prev);
        assert_eq!(interface_update(&prev, &cand, 0.5).unwrap().values(), &[1.0, 2.0]);
    }

    #[test]
    fn update_length_mismatch() {
        let prev = InterfaceTrace::new(vec![2.0, 4.0], 0.1);
        let cand = InterfaceTrace::new(vec![0.0], 0.1);
        assert!(matches!(
            interface_update(&prev, &cand, 0.5),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn norms() {
        assert_eq!(error_norm(&InterfaceTrace::zeros(5, 0.1), Norm::Sup), 0.0);
        assert_eq!(error_norm(&InterfaceTrace::zeros(5, 0.1), Norm::L2), 0.0);
        let h = InterfaceTrace::from_fn(60, 0.1, |t| t * t);
        assert!((error_norm(&h, Norm::Sup) - 36.0).abs() < 1e-12);
        let ones = InterfaceTrace::new(vec![1.0; 4], 0.25);
        assert!((error_norm(&ones, Norm::L2) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn config_validation() {
        assert!(WrConfig::new(0.5, 1e-8, 10, Norm::Sup).is_ok());
        assert!(WrConfig::new(1.5, 1e-8, 10, Norm::Sup).is_err());
        assert!(WrConfig::new(0.0, 1e-8, 10, Norm::Sup).is_err());
        assert!(WrConfig::new(0.5, 0.0, 10, Norm::Sup).is_err());
        assert!(WrConfig::new(0.5, 1e-8, 0, Norm::Sup).is_err());
        assert_eq!("l2".parse::<Norm>().unwrap(), Norm::L2);
        assert!("max".parse::<Norm>().is_err());
    }
}

//! Time series carried on a single interface point.

use crate::error::{Error, Result};

/// Values at times `dt, 2dt, ..., T` on one interface point.
///
/// Depending on context this is a Dirichlet value, a flux `∂x u`, or a Robin
/// combination `±∂x u + p u`.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceTrace {
    values: Vec<f64>,
    dt: f64,
}

impl InterfaceTrace {
    pub fn new(values: Vec<f64>, dt: f64) -> Self {
        debug_assert!(dt > 0.0);
        Self { values, dt }
    }

    pub fn zeros(nt: usize, dt: f64) -> Self {
        Self::new(vec![0.0; nt], dt)
    }

    /// Samples `f` at `dt, 2dt, ..., nt·dt`.
    pub fn from_fn(nt: usize, dt: f64, f: impl Fn(f64) -> f64) -> Self {
        Self::new((1..=nt).map(|n| f(n as f64 * dt)).collect(), dt)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(self.values.iter().map(|v| v * factor).collect(), self.dt)
    }

    /// Pointwise `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise `self + other`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            self.dt,
        ))
    }
}

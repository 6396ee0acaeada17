//! Laplace-domain contraction factors of DNWR and NNWR.
//!
//! For two subdomains of widths `a` (left) and `b` (right) the interface
//! iterates satisfy `ĥ^k(s) = ρ(s) ĥ^{k-1}(s)`. The parabolic factors are for
//! the infinite line and do not depend on `s`; the wave and neutral factors
//! are for bounded subdomains with homogeneous outer Dirichlet data.

use num_complex::Complex64;

use crate::discretization::Family;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolMethod {
    Dnwr,
    Nnwr,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolQuery {
    pub method: SymbolMethod,
    pub family: Family,
    pub a: f64,
    pub b: f64,
    pub theta: f64,
    pub s: Complex64,
    pub tau: f64,
}

/// `tanh` that saturates to `±1` once `|Re z| > 30`, where `cosh` would
/// overflow and the true value is `±1` to double precision.
fn tanh_guarded(z: Complex64) -> Complex64 {
    if z.re.abs() > 30.0 {
        Complex64::new(z.re.signum(), 0.0)
    } else {
        z.tanh()
    }
}

/// Per-iteration multiplier `ρ(s)`.
pub fn contraction_symbol(q: &SymbolQuery) -> Result<Complex64> {
    if !q.s.re.is_finite() || !q.s.im.is_finite() || q.s.re <= 0.0 {
        return Err(Error::BranchFailure { re: q.s.re });
    }
    let theta = q.theta;
    let one = Complex64::new(1.0, 0.0);
    let delay = (-q.tau * q.s).exp();

    // Wave and neutral both reduce to ratios of tanh(width · ω).
    let (wa, wb) = match q.family {
        Family::Parabolic { .. } => {
            let rho = match q.method {
                SymbolMethod::Dnwr => 1.0 - 2.0 * theta,
                SymbolMethod::Nnwr => 1.0 - 4.0 * theta,
            };
            return Ok(Complex64::new(rho, 0.0));
        }
        Family::Wave { c, lambda } => {
            let sigma = (q.s * q.s - lambda * delay).sqrt();
            (q.a * sigma / c, q.b * sigma / c)
        }
        Family::Neutral { mu, c, r, d } => {
            let gamma = ((q.s - r - d * delay) / (one + c * c * delay)).sqrt() / mu;
            (q.a * gamma, q.b * gamma)
        }
    };
    let ta = tanh_guarded(wa);
    let tb = tanh_guarded(wb);
    if ta == Complex64::new(0.0, 0.0) || tb == Complex64::new(0.0, 0.0) {
        return Err(Error::SingularSymbol);
    }
    // coth(a)·tanh(b) for the wave equals coth(a)/coth(b) for the neutral case
    let rho = match q.method {
        SymbolMethod::Dnwr => one - theta - theta * (tb / ta),
        SymbolMethod::Nnwr => one - theta * (2.0 + ta / tb + tb / ta),
    };
    if rho.is_finite() {
        Ok(rho)
    } else {
        Err(Error::SingularSymbol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn query(method: SymbolMethod, family: Family, a: f64, b: f64, theta: f64, s: Complex64) -> SymbolQuery {
        SymbolQuery { method, family, a, b, theta, s, tau: 3.0 }
    }

    const WAVE: Family = Family::Wave { c: 1.0, lambda: 0.5 };
    const NEUTRAL: Family = Family::Neutral { mu: 1.0, c: 0.1, r: 0.05, d: 0.0025 };

    #[test]
    fn symmetric_optimal_theta_is_zero() {
        let s = Complex64::new(0.7, 2.3);
        for fam in [WAVE, NEUTRAL, Family::Parabolic { a1: 1.0, a2: 2.3, nu: 1.0 }] {
            let d = contraction_symbol(&query(SymbolMethod::Dnwr, fam, 3.0, 3.0, 0.5, s)).unwrap();
            let n = contraction_symbol(&query(SymbolMethod::Nnwr, fam, 3.0, 3.0, 0.25, s)).unwrap();
            assert_eq!(d, Complex64::new(0.0, 0.0));
            assert_eq!(n, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn left_half_plane_is_rejected() {
        let q = query(SymbolMethod::Dnwr, WAVE, 1.0, 1.0, 0.5, Complex64::new(0.0, 1.0));
        assert!(matches!(contraction_symbol(&q), Err(Error::BranchFailure { .. })));
        let q = query(SymbolMethod::Dnwr, WAVE, 1.0, 1.0, 0.5, Complex64::new(-1.0, 0.0));
        assert!(contraction_symbol(&q).is_err());
    }

    #[test]
    fn large_s_saturates() {
        let s = Complex64::new(1e6, 0.0);
        for fam in [WAVE, NEUTRAL] {
            let d = contraction_symbol(&query(SymbolMethod::Dnwr, fam, 4.0, 2.0, 0.3, s)).unwrap();
            assert!((d - Complex64::new(0.4, 0.0)).norm() < 1e-12, "{d}");
            let n = contraction_symbol(&query(SymbolMethod::Nnwr, fam, 4.0, 2.0, 0.1, s)).unwrap();
            assert!((n - Complex64::new(0.6, 0.0)).norm() < 1e-12, "{n}");
        }
    }

    #[test]
    fn nnwr_is_symmetric_in_widths() {
        let s = Complex64::new(1.3, -0.4);
        for fam in [WAVE, NEUTRAL] {
            let ab = contraction_symbol(&query(SymbolMethod::Nnwr, fam, 4.0, 2.0, 0.2, s)).unwrap();
            let ba = contraction_symbol(&query(SymbolMethod::Nnwr, fam, 2.0, 4.0, 0.2, s)).unwrap();
            assert!((ab - ba).norm() < 1e-14);
        }
    }
}

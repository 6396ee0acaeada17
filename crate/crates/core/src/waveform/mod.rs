//! Waveform-relaxation orchestration over partitioned domains.
//!
//! Interfaces exchange whole time traces. Fluxes are taken with
//! [`SpaceTimeField::interface_flux`](crate::discretization::SpaceTimeField::interface_flux)
//! so a converged iteration reproduces the monolithic discrete solution.

mod config;
mod dnwr;
mod history;
mod nnwr;
mod partition;

pub use config::{error_norm, interface_update, Norm, WrConfig};
pub use dnwr::{dnwr_multi_run, dnwr_run};
pub use history::{ConvergenceHistory, Method};
pub use nnwr::nnwr_run;
pub use partition::Partition;
pub use crate::trace::InterfaceTrace;

pub(crate) use history::{iterate, reference_field};

use crate::error::{Error, Result};

fn check_traces(partition: &Partition, traces: &[InterfaceTrace]) -> Result<()> {
    if traces.len() != partition.interfaces() {
        return Err(Error::LengthMismatch {
            expected: partition.interfaces(),
            found: traces.len(),
        });
    }
    let nt = partition.grid().nt();
    for tr in traces {
        if tr.len() != nt {
            return Err(Error::LengthMismatch { expected: nt, found: tr.len() });
        }
        if !tr.is_finite() {
            return Err(Error::InvalidConfig("initial interface trace is not finite".into()));
        }
    }
    Ok(())
}

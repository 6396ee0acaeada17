pub mod discretization;
pub mod error;
pub mod harness;
pub mod schwarz;
pub mod symbol;
pub mod trace;
pub mod waveform;

pub use error::{Error, Result};
pub use trace::InterfaceTrace;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("delay {tau} is not an integer multiple of dt = {dt}")]
    NonIntegerDelay { tau: f64, dt: f64 },

    #[error("horizon {t_end} is not an integer multiple of dt = {dt}")]
    NonIntegerHorizon { t_end: f64, dt: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("grid delay of {grid_steps} steps does not match problem delay {tau} (dt = {dt})")]
    DelayMismatch { grid_steps: usize, tau: f64, dt: f64 },

    #[error("zero pivot in tridiagonal elimination at row {row}")]
    ZeroPivot { row: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("partition boundary x = {x} does not coincide with a grid node")]
    NonConforming { x: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("overlap of {overlap_cells} cells leaves a subdomain with fewer than three nodes")]
    OverlapTooLarge { overlap_cells: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("Laplace variable must lie in the right half-plane, got Re(s) = {re}")]
    BranchFailure { re: f64 },

    #[error("contraction symbol is singular at this s")]
    SingularSymbol,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid value for `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("{context}: {source}")]
    Experiment {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn in_context(self, context: impl Into<String>) -> Self {
        Error::Experiment {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

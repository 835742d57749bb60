//! Error type shared by all modules of the crate.

use crate::diagnostics::DiagnosticsRecord;
use crate::grid::Space;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("grid: {0}")]
    InvalidGrid(String),

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("expected a field in {expected:?} space")]
    SpaceMismatch { expected: Space },

    #[error("kernel: {0}")]
    InvalidKernel(String),

    #[error("kernel needs a {required}-dimensional grid, got {got}")]
    KernelDimension { required: usize, got: usize },

    #[error("multiplier at zero wavenumber is {value}; normalization needs a positive value")]
    NotNormalizable { value: f64 },

    #[error("exponents: {0}")]
    InvalidExponent(String),

    #[error("background: {0}")]
    InvalidBackground(String),

    #[error("background file {path}:{line}: {message}")]
    BackgroundFile {
        path: String,
        line: usize,
        message: String,
    },

    #[error("integrator: {0}")]
    InvalidIntegrator(String),

    /// Non-finite values appeared during time stepping. Carries the failure
    /// time and the diagnostics collected up to the last healthy record.
    #[error("numerical blow-up: non-finite field values at t = {time}")]
    BlowUp {
        time: f64,
        records: Vec<DiagnosticsRecord>,
    },

    #[error("phase is ill-defined: min |u| = {min_modulus} is below 0.1")]
    PhaseUndefined { min_modulus: f64 },

    #[error(
        "mass window radius {radius} too large: the cutoff support 2R must fit \
         within the smallest box half-length {half_length}"
    )]
    WindowTooLarge { radius: f64, half_length: f64 },

    #[error("growth bound not applicable: {0}")]
    BoundNotApplicable(String),

    #[error("field must be real: max |Im| = {0}")]
    NotReal(f64),

    #[error("diagnostics: {0}")]
    Diagnostics(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

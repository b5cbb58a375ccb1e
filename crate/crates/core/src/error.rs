use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown preset `{name}` (available: {})", available.join(", "))]
    UnknownPreset { name: String, available: Vec<&'static str> },

    #[error("parameter file: {0}")]
    ParamFile(String),

    #[error("temperature must be positive, got {0} K")]
    NonPositiveTemperature(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not Hermitian (|H - H^dag| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("no isentropic field in range [{lo}, {hi}] T")]
    NoIsentropicField { lo: f64, hi: f64 },

    #[error("no isentropic temperature in range [{lo}, {hi}] K")]
    NoIsentropicTemperature { lo: f64, hi: f64 },

    #[error("root finder stalled at x = {x} with residual {residual:e}")]
    RootStalled { x: f64, residual: f64 },

    #[error("operating mode `none` has no efficiency")]
    NoEfficiency,
}

impl Error {
    /// Failures of the numerics rather than of the caller's input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::NotHermitian { .. }
                | Error::RootStalled { .. }
                | Error::NoIsentropicField { .. }
                | Error::NoIsentropicTemperature { .. }
        )
    }
}

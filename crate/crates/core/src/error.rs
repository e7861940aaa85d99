use thiserror::Error;

/// Errors surfaced by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    /// A thermodynamic kernel received a density outside the admissible set.
    #[error("nonpositive density {value} in {context}")]
    NonpositiveDensity { value: f64, context: &'static str },

    /// Equation-of-state parameters outside their admissible range.
    #[error("invalid equation of state: {0}")]
    InvalidEos(String),

    /// Direction index does not exist for the state's spatial dimension.
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    /// Requested polynomial degree has no operator set.
    #[error("polynomial degree {degree} outside supported range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },

    /// A nodal state with nonpositive density was found during a residual
    /// evaluation; indices identify the offending element and node.
    #[error("inadmissible state (rho = {rho}) in element {element} at node {node:?}")]
    InadmissibleState {
        element: usize,
        node: (usize, usize),
        rho: f64,
    },

    /// The global maximum wave speed is unusable for a CFL step estimate.
    #[error("maximum wave speed {0} is not positive and finite")]
    InvalidWaveSpeed(f64),

    /// Run configuration could not be parsed or is inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

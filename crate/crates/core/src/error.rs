use thiserror::Error;

pub type Result<T, E = LimitsError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LimitsError {
    /// An input outside the domain of a formula (nonpositive energy, radius, ...).
    #[error("{quantity} must be {requirement}, got {value:e}")]
    Domain {
        quantity: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("target energy {target:e} J is outside the achievable range ({low:e}, {high:e}) J")]
    EnergyOutOfRange { target: f64, low: f64, high: f64 },

    /// The species-inclusion fixed point cycled between two sets.
    #[error(
        "species inclusion did not settle: oscillates between [{}] and [{}]",
        first.join(", "),
        second.join(", ")
    )]
    SpeciesOscillation { first: Vec<String>, second: Vec<String> },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("unknown scenario `{name}` (available: {})", available.join(", "))]
    UnknownScenario { name: String, available: Vec<String> },

    #[error("unknown parameter `{key}` for scenario `{scenario}` (accepted: {})", accepted.join(", "))]
    UnknownParameter {
        scenario: String,
        key: String,
        accepted: Vec<String>,
    },
}

/// Rejects values that are not strictly positive and finite.
pub(crate) fn positive<T: crate::Scalar>(quantity: &'static str, value: T) -> Result<T> {
    if value > T::zero() && value.is_finite() {
        Ok(value)
    } else {
        Err(LimitsError::Domain {
            quantity,
            requirement: "positive and finite",
            value: value.as_f64(),
        })
    }
}

pub(crate) fn non_negative<T: crate::Scalar>(quantity: &'static str, value: T) -> Result<T> {
    if value >= T::zero() && value.is_finite() {
        Ok(value)
    } else {
        Err(LimitsError::Domain {
            quantity,
            requirement: "nonnegative and finite",
            value: value.as_f64(),
        })
    }
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violates the invariant of the type or operation it feeds.
    #[error("invalid parameter `{name}` = {value:e}: {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Operating current at or above the critical current: surface pinning is broken.
    #[error("operating current {current:e} A must stay below the critical current {critical:e} A")]
    PinningBroken { current: f64, critical: f64 },

    #[error("depth {z:e} m lies outside the slab [0, {thickness:e}] m")]
    OutsideSlab { z: f64, thickness: f64 },

    #[error("slab boundary system is singular (condition number {condition:e})")]
    SingularSystem { condition: f64 },

    #[error("integrand returned a non-finite value at abscissa {abscissa:e}")]
    NonFiniteIntegrand { abscissa: f64 },

    #[error(
        "quadrature did not converge after {evals} evaluations \
         (estimate {estimate:e}, error estimate {error_estimate:e})"
    )]
    QuadratureNotConverged {
        estimate: f64,
        error_estimate: f64,
        evals: usize,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: f64, requirement: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            requirement,
        }
    }
}

/// Returns `Ok(value)` when `value` is finite and strictly positive.
pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(name, value, "must be finite and > 0"))
    }
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(name, value, "must be finite and >= 0"))
    }
}

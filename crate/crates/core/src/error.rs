use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("pole of the gamma function at z = {0}")]
    Pole(f64),

    #[error("{what} did not converge after {iterations} iterations")]
    Convergence { what: &'static str, iterations: usize },

    #[error("integrand envelope {envelope:e} at u = {u:e} still exceeds the tolerance")]
    Truncation { envelope: f64, u: f64 },

    #[error("quadrature did not converge within {panels} panels (error estimate {err:e})")]
    Quadrature { panels: usize, err: f64 },

    #[error("degenerate variance {variance:e}; the distribution is a point mass")]
    Degenerate { variance: f64 },

    #[error("need at least {need} samples, have {have}")]
    InsufficientSamples { have: usize, need: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64) -> Error {
    Error::Domain { what, value }
}

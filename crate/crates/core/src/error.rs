//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma requested at a nonpositive integer.
    #[error("gamma pole at x = {x}")]
    Pole { x: f64 },

    /// Series term budget exhausted before the tail criterion was met
    /// (the argument is too large for working precision).
    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },

    /// Input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid structural parameter (λ, s, α, β, grid spec, ...).
    #[error("parameter error: {0}")]
    Param(String),

    /// The fractional-derivative series of the Weierstrass function does not
    /// exist: alpha must be < 2 - s. Carries the term growth ratio λ^(s-2+α).
    #[error("divergent series: alpha must be < 2 - s (term growth ratio {growth_ratio})")]
    DivergentSeries { growth_ratio: f64 },

    /// Too few usable scales for a log-log regression.
    #[error("scale error: {0}")]
    Scale(String),

    /// Signal is constant; the requested estimator is undefined on it.
    #[error("degenerate signal: {0}")]
    Degenerate(String),
}

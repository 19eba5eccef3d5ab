use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {0} lies on a pole of the Gamma function")]
    Pole(String),
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    #[error("degenerate hypergeometric parameters: c - a - b = {0} is too close to an integer")]
    DegenerateParameters(String),
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("no propagating wave: 2*mu*E/hbar^2 - alpha^2*l(l+1) = {radicand} <= 0")]
    EvanescentChannel { radicand: f64 },
    #[error("pole equation has no sign change in the search window [{lo}, {hi})")]
    NoBracket { lo: f64, hi: f64 },
    #[error("the potential supports no bound state")]
    NoneFound,
    #[error("phase fit is ill-conditioned (determinant {det:e})")]
    IllConditioned { det: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

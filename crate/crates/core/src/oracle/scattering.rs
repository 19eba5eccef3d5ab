use super::{
    numerov_integrate, reduce_mod_pi, ApproxEquation, ExactEquation, IntegrationConfig,
    RadialEquation,
};
use crate::model::{Channel, PotentialParams};
use crate::phaseshift::wrap_pi;
use crate::Result;

/// Phase shift obtained by direct integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OraclePhase {
    /// Reduced to (−π/2, π/2].
    pub delta: f64,
    /// Largest step-halving change among the integrations involved.
    pub halving_change: f64,
    pub converged: bool,
}

/// δ from the approximated equation: θ with the interaction minus θ with
/// V₀ = A = 0, both read off as cos(kr + θ).
pub fn oracle_delta_approx(
    p: &PotentialParams,
    ch: &Channel,
    cfg: &IntegrationConfig,
) -> Result<OraclePhase> {
    let full = numerov_integrate(&ApproxEquation::new(p, ch), cfg)?;
    let free = numerov_integrate(&ApproxEquation::new(&p.free(), ch), cfg)?;
    let theta = full.extracted_phase.unwrap_or(f64::NAN);
    let theta_free = free.extracted_phase.unwrap_or(f64::NAN);
    Ok(OraclePhase {
        delta: reduce_mod_pi(wrap_pi(theta - theta_free)),
        halving_change: full
            .halving_change
            .unwrap_or(f64::INFINITY)
            .max(free.halving_change.unwrap_or(f64::INFINITY)),
        converged: full.converged && free.converged,
    })
}

/// δ from the full interaction with the true centrifugal term, matched to
/// spherical Bessel functions at momentum √(2μE)/ħ.
pub fn oracle_delta_exact(
    p: &PotentialParams,
    ch: &Channel,
    cfg: &IntegrationConfig,
) -> Result<OraclePhase> {
    let eq = ExactEquation::new(p, ch);
    let mut cfg = *cfg;
    // Same energy, larger momentum: keep the match spacing off the period.
    cfg.match_radii.0 = cfg.match_radii.1 - 0.37 / eq.wave_number();
    let sol = numerov_integrate(&eq, &cfg)?;
    Ok(OraclePhase {
        delta: reduce_mod_pi(sol.extracted_phase.unwrap_or(f64::NAN)),
        halving_change: sol.halving_change.unwrap_or(f64::INFINITY),
        converged: sol.converged,
    })
}


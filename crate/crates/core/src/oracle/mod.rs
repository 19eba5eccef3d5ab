//! Direct integration of the radial equation, independent of the
//! hypergeometric solution.
//!
//! Everything here works with the reduced wavefunction u(r) obeying
//! u'' + q(r) u = 0.

mod equations;
mod numerov;
mod phase;
mod scattering;
mod shooting;

pub use equations::{ApproxEquation, ExactEquation, PotentialFnEquation, RadialEquation};
pub use numerov::{numerov_integrate, IntegrationConfig, HALVING_TOLERANCE, RENORMALIZE_EVERY};
pub use phase::{extract_phase, reduce_mod_pi, PhaseMode};
pub use scattering::{oracle_delta_approx, oracle_delta_exact, OraclePhase};
pub use shooting::{shooting_bound_states, ShootingConfig, ShootingLevel};

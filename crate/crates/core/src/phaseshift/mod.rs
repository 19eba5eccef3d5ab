//! Closed-form phase shifts, wavefunctions and S-matrix poles of the
//! approximated problem.

mod bound;
mod convention;
mod sweep;
mod wavefunction;

pub use bound::{bound_states, pole_function, BoundState, POLE_RESIDUAL_TOLERANCE};
pub use convention::{resolve_convention, ConventionCandidate, ConventionResolution, ANCHOR};
pub use sweep::{table_sweep, SweepCell, TableGrid};
pub use wavefunction::{asymptotic_envelope, radial_wavefunction, radial_wavefunction_complex};

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::model::{k_over_alpha_sq, transformed_params, Channel, PotentialParams};
use crate::specfun::arg_gamma;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AngleUnit {
    #[default]
    Radians,
    Degrees,
}

impl AngleUnit {
    pub fn from_radians(self, rad: f64) -> f64 {
        match self {
            AngleUnit::Radians => rad,
            AngleUnit::Degrees => rad.to_degrees(),
        }
    }

    pub fn to_radians(self, value: f64) -> f64 {
        match self {
            AngleUnit::Radians => value,
            AngleUnit::Degrees => value.to_radians(),
        }
    }
}

impl fmt::Display for AngleUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleUnit::Radians => "rad",
            AngleUnit::Degrees => "deg",
        })
    }
}

impl FromStr for AngleUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rad" | "radians" => Ok(AngleUnit::Radians),
            "deg" | "degrees" => Ok(AngleUnit::Degrees),
            other => Err(Error::InvalidParameter(format!("unknown angle unit {other:?}"))),
        }
    }
}

/// How each arg Γ term is read off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ArgConvention {
    /// Im log Γ on the principal branch of log Γ (continuous, unreduced).
    #[default]
    ContinuousBranch,
    /// arg Γ(z) reduced to (−π, π].
    PrincipalValue,
}

impl ArgConvention {
    fn arg(self, z: Complex64) -> Result<f64> {
        let a = arg_gamma(z)?;
        Ok(match self {
            ArgConvention::ContinuousBranch => a,
            ArgConvention::PrincipalValue => wrap_pi(a),
        })
    }
}

/// Reduce to (−π, π].
pub fn wrap_pi(x: f64) -> f64 {
    use std::f64::consts::PI;
    let y = x - 2.0 * PI * (x / (2.0 * PI)).round();
    if y <= -PI {
        y + 2.0 * PI
    } else {
        y
    }
}

/// Parameters of the hypergeometric solution and the two combinations
/// c − a, c − b that enter the phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeomSolution {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    /// σ + ik/α + √ζ₁
    pub a_star: Complex64,
    /// σ + ik/α − √ζ₁
    pub b_star: Complex64,
}

pub fn hypergeom_solution(p: &PotentialParams, ch: &Channel) -> HypergeomSolution {
    let t = transformed_params(p, ch);
    let ik = Complex64::new(0.0, ch.k / p.alpha);
    let sigma = Complex64::new(t.sigma, 0.0);
    HypergeomSolution {
        a: sigma - ik - t.sqrt_zeta1,
        b: sigma - ik + t.sqrt_zeta1,
        c: Complex64::new(2.0 * t.sigma, 0.0),
        a_star: sigma + ik + t.sqrt_zeta1,
        b_star: sigma + ik - t.sqrt_zeta1,
    }
}

/// η₁*, η₂* of the interaction-free problem.
fn free_etas(ch: &Channel, alpha: f64) -> (Complex64, Complex64) {
    let sigma = ch.l as f64 + 1.0;
    let w = (ch.centrifugal() + k_over_alpha_sq(ch.k, alpha)).sqrt();
    let t = ch.k / alpha;
    (Complex64::new(sigma, t + w), Complex64::new(sigma, t - w))
}

fn check_inputs(p: &PotentialParams, ch: &Channel) -> Result<()> {
    p.validate()?;
    Channel::new(ch.l, ch.k).map(|_| ())
}

/// θ_l = arg Γ(2ik/α) − arg Γ(a*) − arg Γ(b*), radians.
pub fn theta_l(p: &PotentialParams, ch: &Channel) -> Result<f64> {
    check_inputs(p, ch)?;
    let s = hypergeom_solution(p, ch);
    let g = ArgConvention::ContinuousBranch;
    Ok(g.arg(Complex64::new(0.0, 2.0 * ch.k / p.alpha))? - g.arg(s.a_star)? - g.arg(s.b_star)?)
}

/// θ_l⁽⁰⁾: the same combination with the interaction removed, radians.
pub fn theta_l_free(ch: &Channel, alpha: f64) -> Result<f64> {
    let ch = Channel::new(ch.l, ch.k)?;
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("alpha must be > 0, got {alpha}")));
    }
    let (e1, e2) = free_etas(&ch, alpha);
    let g = ArgConvention::ContinuousBranch;
    Ok(g.arg(Complex64::new(0.0, 2.0 * ch.k / alpha))? - g.arg(e1)? - g.arg(e2)?)
}

/// The four arg Γ contributions to δ_l.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgGammaTerms {
    pub eta1_star: f64,
    pub eta2_star: f64,
    pub a_star: f64,
    pub b_star: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseShiftResult {
    pub theta_l: f64,
    pub theta_l_free: f64,
    pub delta_l: f64,
    pub terms: ArgGammaTerms,
    pub unit: AngleUnit,
}

impl PhaseShiftResult {
    pub fn to_unit(&self, unit: AngleUnit) -> Self {
        let conv = |v: f64| unit.from_radians(self.unit.to_radians(v));
        Self {
            theta_l: conv(self.theta_l),
            theta_l_free: conv(self.theta_l_free),
            delta_l: conv(self.delta_l),
            terms: ArgGammaTerms {
                eta1_star: conv(self.terms.eta1_star),
                eta2_star: conv(self.terms.eta2_star),
                a_star: conv(self.terms.a_star),
                b_star: conv(self.terms.b_star),
            },
            unit,
        }
    }
}

/// δ_l = arg Γ(η₁*) + arg Γ(η₂*) − arg Γ(a*) − arg Γ(b*) together with θ_l
/// and θ_l⁽⁰⁾.
pub fn delta_l(p: &PotentialParams, ch: &Channel, unit: AngleUnit) -> Result<PhaseShiftResult> {
    delta_l_with_convention(p, ch, unit, ArgConvention::ContinuousBranch)
}

pub fn delta_l_with_convention(
    p: &PotentialParams,
    ch: &Channel,
    unit: AngleUnit,
    convention: ArgConvention,
) -> Result<PhaseShiftResult> {
    check_inputs(p, ch)?;
    if p.alpha <= 0.0 {
        return Err(Error::InvalidParameter("alpha must be > 0".into()));
    }
    let s = hypergeom_solution(p, ch);
    let (e1, e2) = free_etas(ch, p.alpha);
    let g = convention.arg(Complex64::new(0.0, 2.0 * ch.k / p.alpha))?;
    let terms = ArgGammaTerms {
        eta1_star: convention.arg(e1)?,
        eta2_star: convention.arg(e2)?,
        a_star: convention.arg(s.a_star)?,
        b_star: convention.arg(s.b_star)?,
    };
    let rad = PhaseShiftResult {
        theta_l: g - terms.a_star - terms.b_star,
        theta_l_free: g - terms.eta1_star - terms.eta2_star,
        delta_l: terms.eta1_star + terms.eta2_star - terms.a_star - terms.b_star,
        terms,
        unit: AngleUnit::Radians,
    };
    Ok(rad.to_unit(unit))
}

use num_complex::Complex64;

use super::{hypergeom_solution, theta_l};
use crate::model::{Channel, PotentialParams};
use crate::radial::RadialSolution;
use crate::specfun::{gauss_2f1_with_complement, log_gamma, Gauss2F1Params};
use crate::{Error, Result};

fn check_grid(r_grid: &[f64]) -> Result<()> {
    if r_grid.is_empty() {
        return Err(Error::Domain("empty radius grid".into()));
    }
    if !(r_grid[0] > 0.0) || r_grid.iter().any(|r| !r.is_finite()) {
        return Err(Error::Domain("radii must be finite and > 0".into()));
    }
    if r_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("radius grid must be strictly increasing".into()));
    }
    Ok(())
}

/// R(r) = (1 − e^{−αr})^σ e^{ikr} ₂F₁(a, b; c; 1 − e^{−αr}) with unit
/// normalization. The regular solution of a real equation, so the imaginary
/// part is rounding noise.
pub fn radial_wavefunction_complex(
    p: &PotentialParams,
    ch: &Channel,
    r_grid: &[f64],
) -> Result<Vec<Complex64>> {
    check_grid(r_grid)?;
    let s = hypergeom_solution(p, ch);
    let params = Gauss2F1Params::new(s.a, s.b, s.c)?;
    let sigma = s.c.re / 2.0;
    r_grid
        .iter()
        .map(|&r| {
            let x = p.alpha * r;
            let z = -(-x).exp_m1();
            let w = (-x).exp();
            let f = gauss_2f1_with_complement(&params, z.into(), w.into())?;
            Ok(z.powf(sigma) * Complex64::from_polar(1.0, ch.k * r) * f)
        })
        .collect()
}

/// Real part of [`radial_wavefunction_complex`] packaged with θ_l.
pub fn radial_wavefunction(
    p: &PotentialParams,
    ch: &Channel,
    r_grid: &[f64],
) -> Result<RadialSolution> {
    let values = radial_wavefunction_complex(p, ch, r_grid)?;
    Ok(RadialSolution {
        r: r_grid.to_vec(),
        u: values.iter().map(|v| v.re).collect(),
        step: None,
        match_radii: None,
        extracted_phase: Some(theta_l(p, ch)?),
        halving_change: None,
        converged: true,
    })
}

/// Amplitude of the large-r cosine, 2|Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b))|.
pub fn asymptotic_envelope(p: &PotentialParams, ch: &Channel) -> Result<f64> {
    let s = hypergeom_solution(p, ch);
    let excess = Complex64::new(0.0, 2.0 * ch.k / p.alpha);
    let lg = log_gamma(s.c)? + log_gamma(excess)? - log_gamma(s.a_star)? - log_gamma(s.b_star)?;
    Ok(2.0 * lg.re.exp())
}

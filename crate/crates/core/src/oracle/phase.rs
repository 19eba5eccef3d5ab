use std::f64::consts::{FRAC_PI_2, PI};

use crate::model::Channel;
use crate::radial::RadialSolution;
use crate::specfun::spherical_bessel_jy;
use crate::{Error, Result};

const DETERMINANT_FLOOR: f64 = 1e-8;

/// Free solutions the asymptotic region is fitted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseMode {
    /// u = C cos(kr + θ)
    Plane,
    /// u = C [cos δ · kr j_l(kr) − sin δ · kr y_l(kr)]
    SphericalBessel,
}

/// Phase in (−π, π] from the two match-point samples of `sol`.
pub fn extract_phase(sol: &RadialSolution, ch: &Channel, mode: PhaseMode) -> Result<f64> {
    let (m1, m2) = sol
        .match_radii
        .ok_or_else(|| Error::InvalidParameter("solution carries no match radii".into()))?;
    let (r1, u1) = sol
        .sample_near(m1)
        .ok_or_else(|| Error::InvalidParameter("empty solution".into()))?;
    let (r2, u2) = sol.sample_near(m2).unwrap();
    let k = ch.k;
    // u = P·f(r) + Q·g(r) with (P, Q) = C(cos φ, sin φ)
    let basis = |r: f64| -> Result<(f64, f64)> {
        match mode {
            PhaseMode::Plane => Ok(((k * r).cos(), -(k * r).sin())),
            PhaseMode::SphericalBessel => {
                let x = k * r;
                let (j, y) = spherical_bessel_jy(ch.l, x)?;
                Ok((x * j, -x * y))
            }
        }
    };
    let (f1, g1) = basis(r1)?;
    let (f2, g2) = basis(r2)?;
    let det = f1 * g2 - f2 * g1;
    if det.abs() < DETERMINANT_FLOOR {
        return Err(Error::IllConditioned { det });
    }
    let p = (u1 * g2 - u2 * g1) / det;
    let q = (f1 * u2 - f2 * u1) / det;
    Ok(q.atan2(p))
}

/// Reduce to (−π/2, π/2].
pub fn reduce_mod_pi(x: f64) -> f64 {
    let y = x - PI * (x / PI).round();
    if y <= -FRAC_PI_2 {
        y + PI
    } else {
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sampled(k: f64, f: impl Fn(f64) -> f64, match_radii: (f64, f64)) -> RadialSolution {
        let h = 0.01;
        let r: Vec<f64> = (0..20_000).map(|i| 1.0 + i as f64 * h).collect();
        RadialSolution {
            u: r.iter().map(|&x| f(k * x)).collect(),
            r,
            step: Some(h),
            match_radii: Some(match_radii),
            extracted_phase: None,
            halving_change: None,
            converged: true,
        }
    }

    #[test]
    fn plane_fit_recovers_constructed_phase() {
        let k = 0.3;
        let ch = Channel::new(0, k).unwrap();
        let sol = sampled(k, |x| 2.5 * (x + 0.3).cos(), (150.0, 150.0 + 0.37 / k));
        assert!((extract_phase(&sol, &ch, PhaseMode::Plane).unwrap() - 0.3).abs() < 1e-9);
        let sol = sampled(k, |x| x.sin(), (150.0, 150.0 + 0.37 / k));
        let th = extract_phase(&sol, &ch, PhaseMode::Plane).unwrap();
        assert!((th + FRAC_PI_2).abs() < 1e-9);
    }

    #[test]
    fn spherical_fit_of_free_wave_is_zero() {
        let k = 0.7;
        for l in 0..4u32 {
            let ch = Channel::new(l, k).unwrap();
            let sol = sampled(
                k,
                |x| x * spherical_bessel_jy(l, x).unwrap().0,
                (120.0, 120.0 + 0.37 / k),
            );
            let d = extract_phase(&sol, &ch, PhaseMode::SphericalBessel).unwrap();
            assert!(d.abs() < 1e-9, "l = {l}: {d}");
        }
    }

    #[test]
    fn degenerate_match_points() {
        let period = 12.5;
        let k = 2.0 * PI / period;
        let ch = Channel::new(0, k).unwrap();
        let sol = sampled(k, |x| x.cos(), (50.0, 50.0 + period));
        assert!(matches!(
            extract_phase(&sol, &ch, PhaseMode::Plane),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn mod_pi_reduction() {
        assert!((reduce_mod_pi(PI + 0.1) - 0.1).abs() < 1e-15);
        assert!((reduce_mod_pi(-FRAC_PI_2) - FRAC_PI_2).abs() < 1e-15);
        assert!((reduce_mod_pi(85.99747) - (85.99747 - 27.0 * PI)).abs() < 1e-12);
    }
}

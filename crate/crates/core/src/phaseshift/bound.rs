use crate::model::PotentialParams;
use crate::{Error, Result};

/// Largest |a(E) + n| accepted at a reported pole.
pub const POLE_RESIDUAL_TOLERANCE: f64 = 1e-9;

const ENERGY_TOLERANCE: f64 = 1e-12;
const MAX_BISECTIONS: usize = 400;

/// A bound level located at a real pole of the S-matrix, k = iκ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub n: u32,
    pub energy: f64,
    pub kappa: f64,
}

/// a(E) + n continued to k = iκ, κ = √(α² l(l+1) − 2μE/ħ²):
///
/// a = σ + κ/α − √(ζ₂ − l(l+1) + κ²/α²).
///
/// Where the square root would turn imaginary, a has no real zero and the
/// radicand is clamped at zero.
pub fn pole_function(p: &PotentialParams, l: u32, n: u32, energy: f64) -> f64 {
    let lf = l as f64;
    let cent = lf * (lf + 1.0);
    let kappa = kappa_of(p, cent, energy);
    let zeta2 = p.mass_factor() * p.effective_strength() / (p.alpha * p.alpha);
    let t = kappa / p.alpha;
    let radicand = (zeta2 - cent + t * t).max(0.0);
    lf + 1.0 + t - radicand.sqrt() + n as f64
}

fn kappa_of(p: &PotentialParams, cent: f64, energy: f64) -> f64 {
    (p.alpha * p.alpha * cent - p.mass_factor() * energy).max(0.0).sqrt()
}

/// Lower edge of the pole search. Every zero of a(E) + n has
/// κ/α < ζ₂/2, hence E > −ħ²α²ζ₂²/(8μ); the window starts a margin below.
fn search_floor(p: &PotentialParams) -> f64 {
    let zeta2 = p.mass_factor() * p.effective_strength() / (p.alpha * p.alpha);
    -p.alpha * p.alpha * (zeta2 * zeta2 / 4.0 + 1.0) / p.mass_factor()
}

fn locate_pole(p: &PotentialParams, l: u32, n: u32) -> Result<BoundState> {
    let floor = search_floor(p);
    let ceiling = 0.0;
    let g = |e: f64| pole_function(p, l, n, e);
    // a + n decreases with E between the floor and the threshold.
    let (mut lo, mut hi) = (floor, ceiling);
    if !(g(lo) > 0.0 && g(hi) < 0.0) {
        return Err(Error::NoBracket { lo, hi });
    }
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= ENERGY_TOLERANCE {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let energy = 0.5 * (lo + hi);
    let lf = l as f64;
    let kappa = kappa_of(p, lf * (lf + 1.0), energy);
    let residual = g(energy).abs();
    if !(energy < 0.0 && kappa > 0.0) || residual >= POLE_RESIDUAL_TOLERANCE {
        return Err(Error::NoBracket { lo, hi });
    }
    Ok(BoundState { n, energy, kappa })
}

/// Bound levels n = 0..=n_max from the poles a(E) = −n, deepest first.
///
/// The spectrum is truncated at the first n without a pole (a + n grows with
/// n, so no higher level exists either). An interaction with no poles gives
/// an empty list.
pub fn bound_states(p: &PotentialParams, l: u32, n_max: u32) -> Result<Vec<BoundState>> {
    p.validate()?;
    let mut levels = Vec::new();
    for n in 0..=n_max {
        match locate_pole(p, l, n) {
            Ok(s) => levels.push(s),
            Err(Error::NoBracket { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_field_has_no_poles() {
        let p = PotentialParams::new(0.0, 0.0, 0.05).unwrap();
        assert!(bound_states(&p, 0, 5).unwrap().is_empty());
        assert!(matches!(locate_pole(&p, 0, 0), Err(Error::NoBracket { .. })));
    }

    #[test]
    fn poles_satisfy_residual_and_ordering() {
        let p = PotentialParams::new(1.0, 5.0, 0.1).unwrap();
        let levels = bound_states(&p, 1, 4).unwrap();
        assert_eq!(levels.len(), 5);
        for (i, s) in levels.iter().enumerate() {
            assert_eq!(s.n, i as u32);
            assert!(s.energy < 0.0 && s.kappa > 0.0);
            assert!(pole_function(&p, 1, s.n, s.energy).abs() < POLE_RESIDUAL_TOLERANCE);
        }
        assert!(levels.windows(2).all(|w| w[0].energy < w[1].energy));
    }

    #[test]
    fn weak_well_truncates_spectrum() {
        // ζ₂ = 2·0.02/0.01 = 4: only √ζ₂ > n + 1 survives for l = 0, i.e. n = 0.
        let p = PotentialParams::new(0.02, 0.0, 0.1).unwrap();
        let levels = bound_states(&p, 0, 10).unwrap();
        assert_eq!(levels.len(), 1);
    }

    #[test]
    fn floor_lies_below_deepest_level() {
        for &(v0, a, alpha) in &[(1.0, 0.0, 0.05), (1.0, 5.0, 0.05), (3.0, 2.0, 0.5)] {
            let p = PotentialParams::new(v0, a, alpha).unwrap();
            let deepest = bound_states(&p, 0, 0).unwrap()[0].energy;
            assert!(search_floor(&p) < deepest);
        }
    }
}

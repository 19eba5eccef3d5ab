//! The interaction, its exactly solvable approximation, and the parameters
//! of the transformed radial equation.

use num_complex::Complex64;

use crate::{Error, Result};

/// Physical inputs of the Hulthén-type plus Yukawa interaction
///
/// V(r) = −[V₀ + A(1 − e^{−αr})/r] / (e^{αr} − 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub v0: f64,
    pub a: f64,
    pub alpha: f64,
    pub mu: f64,
    pub hbar: f64,
}

impl PotentialParams {
    /// Atomic units, ħ = μ = 1.
    pub fn new(v0: f64, a: f64, alpha: f64) -> Result<Self> {
        Self::with_units(v0, a, alpha, 1.0, 1.0)
    }

    pub fn with_units(v0: f64, a: f64, alpha: f64, mu: f64, hbar: f64) -> Result<Self> {
        let p = Self {
            v0,
            a,
            alpha,
            mu,
            hbar,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("V0", self.v0),
            ("A", self.a),
            ("alpha", self.alpha),
            ("mu", self.mu),
            ("hbar", self.hbar),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} = {v} is not finite")));
            }
        }
        for (name, v) in [("alpha", self.alpha), ("mu", self.mu), ("hbar", self.hbar)] {
            if v <= 0.0 {
                return Err(Error::InvalidParameter(format!("{name} must be > 0, got {v}")));
            }
        }
        Ok(())
    }

    /// Attractive regime (V₀ >= 0, A >= 0) in which the results were validated.
    pub fn in_validated_regime(&self) -> bool {
        self.v0 >= 0.0 && self.a >= 0.0
    }

    /// Same α, μ, ħ with the interaction switched off.
    pub fn free(&self) -> Self {
        Self {
            v0: 0.0,
            a: 0.0,
            ..*self
        }
    }

    /// Effective Hulthén strength V₀ + αA of the approximated potential.
    pub fn effective_strength(&self) -> f64 {
        self.v0 + self.alpha * self.a
    }

    /// 2μ/ħ².
    pub fn mass_factor(&self) -> f64 {
        2.0 * self.mu / (self.hbar * self.hbar)
    }
}

/// Partial-wave channel: angular momentum and asymptotic wave number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel {
    pub l: u32,
    pub k: f64,
}

impl Channel {
    pub fn new(l: u32, k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "wave number k must be finite and > 0, got {k}"
            )));
        }
        Ok(Self { l, k })
    }

    /// l(l + 1).
    pub fn centrifugal(&self) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0)
    }

    /// Scattering energy E for this channel, inverting [`wave_number`].
    pub fn energy(&self, p: &PotentialParams) -> f64 {
        (self.k * self.k + p.alpha * p.alpha * self.centrifugal()) / p.mass_factor()
    }
}

/// Parameters of the transformed equation in z = 1 − e^{−αr}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformedParams {
    pub zeta1: f64,
    pub zeta2: f64,
    pub zeta3: f64,
    pub sigma: f64,
    /// Principal root: real for ζ₁ >= 0, +i√|ζ₁| otherwise.
    pub sqrt_zeta1: Complex64,
}

pub fn transformed_params(p: &PotentialParams, ch: &Channel) -> TransformedParams {
    let alpha2 = p.alpha * p.alpha;
    let zeta2 = p.mass_factor() * p.effective_strength() / alpha2;
    let zeta3 = ch.centrifugal();
    let zeta1 = zeta2 - zeta3 - k_over_alpha_sq(ch.k, p.alpha);
    let sqrt_zeta1 = if zeta1 >= 0.0 {
        Complex64::new(zeta1.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-zeta1).sqrt())
    };
    TransformedParams {
        zeta1,
        zeta2,
        zeta3,
        sigma: ch.l as f64 + 1.0,
        sqrt_zeta1,
    }
}

/// k²/α², shared by every formula that needs it so free-field cancellations
/// stay exact.
pub(crate) fn k_over_alpha_sq(k: f64, alpha: f64) -> f64 {
    let t = k / alpha;
    t * t
}

/// Asymptotic wave number k = √(2μE/ħ² − α² l(l+1)).
pub fn wave_number(p: &PotentialParams, energy: f64, l: u32) -> Result<f64> {
    let lf = l as f64;
    let radicand = p.mass_factor() * energy - p.alpha * p.alpha * lf * (lf + 1.0);
    if !(radicand > 0.0) {
        return Err(Error::EvanescentChannel { radicand });
    }
    Ok(radicand.sqrt())
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("radius must be finite and > 0, got {r}")))
    }
}

/// The full interaction. `expm1` keeps 1 − e^{−αr} accurate as αr → 0.
pub fn potential_exact(p: &PotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let x = p.alpha * r;
    let decay = (-x).exp();
    let one_minus_exp = -(-x).exp_m1();
    Ok(-decay * (p.v0 / one_minus_exp + p.a / r))
}

/// The interaction after 1/r → α/(1 − e^{−αr}) in the Yukawa term:
/// −(V₀ + αA)/(e^{αr} − 1).
pub fn potential_approx(p: &PotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let x = p.alpha * r;
    let decay = (-x).exp();
    let one_minus_exp = -(-x).exp_m1();
    Ok(-decay * (p.effective_strength() / one_minus_exp))
}

/// α²/(1 − e^{−αr})², the short-range stand-in for 1/r².
pub fn centrifugal_approx(alpha: f64, r: f64) -> Result<f64> {
    check_radius(r)?;
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("alpha must be > 0, got {alpha}")));
    }
    let d = -(-alpha * r).exp_m1();
    Ok(alpha * alpha / (d * d))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationRow {
    pub r: f64,
    /// |α²/(1−e^{−αr})² − 1/r²| relative to the approximant.
    pub centrifugal_error: f64,
    /// |V_approx − V_exact| relative to the approximant (0 when both vanish).
    pub potential_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationReport {
    pub rows: Vec<ApproximationRow>,
    pub max_centrifugal_error: f64,
    pub max_potential_error: f64,
}

/// How far the short-range approximation strays from the exact centrifugal
/// term and potential on a radius grid.
pub fn approximation_report(p: &PotentialParams, r_grid: &[f64]) -> Result<ApproximationReport> {
    if r_grid.is_empty() {
        return Err(Error::Domain("empty radius grid".into()));
    }
    let mut rows = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let approx_c = centrifugal_approx(p.alpha, r)?;
        let exact_c = 1.0 / (r * r);
        let approx_v = potential_approx(p, r)?;
        let exact_v = potential_exact(p, r)?;
        let potential_error = if approx_v == 0.0 {
            (exact_v - approx_v).abs()
        } else {
            ((approx_v - exact_v) / approx_v).abs()
        };
        rows.push(ApproximationRow {
            r,
            centrifugal_error: ((approx_c - exact_c) / approx_c).abs(),
            potential_error,
        });
    }
    let max_centrifugal_error = rows.iter().map(|r| r.centrifugal_error).fold(0.0, f64::max);
    let max_potential_error = rows.iter().map(|r| r.potential_error).fold(0.0, f64::max);
    Ok(ApproximationReport {
        rows,
        max_centrifugal_error,
        max_potential_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
            .collect()
    }

    #[test]
    fn zeta_examples() {
        let p = PotentialParams::new(1.0, 0.0, 0.05).unwrap();
        let t = transformed_params(&p, &Channel::new(0, 0.01).unwrap());
        assert!((t.zeta2 - 800.0).abs() < 1e-10);
        assert_eq!(t.zeta3, 0.0);
        assert_eq!(t.sigma, 1.0);
        assert!((t.zeta1 - 799.96).abs() < 1e-10);

        let p = PotentialParams::new(1.0, 5.0, 0.1).unwrap();
        let t = transformed_params(&p, &Channel::new(2, 0.15).unwrap());
        assert!((t.zeta2 - 300.0).abs() < 1e-10);
        assert_eq!(t.zeta3, 6.0);
        assert!((t.zeta1 - 291.75).abs() < 1e-10);
    }

    #[test]
    fn free_field_root_is_imaginary() {
        let p = PotentialParams::new(0.0, 0.0, 0.1).unwrap();
        let ch = Channel::new(3, 0.2).unwrap();
        let t = transformed_params(&p, &ch);
        let expected = (12.0_f64 + 4.0).sqrt();
        assert_eq!(t.sqrt_zeta1.re, 0.0);
        assert!((t.sqrt_zeta1.im - expected).abs() < 1e-14);
    }

    #[test]
    fn wave_number_examples() {
        let p = PotentialParams::new(1.0, 0.0, 0.05).unwrap();
        assert!((wave_number(&p, 0.005, 0).unwrap() - 0.1).abs() < 1e-15);
        assert!((wave_number(&p, 0.01, 1).unwrap() - 0.015_f64.sqrt()).abs() < 1e-15);
        let threshold = p.alpha * p.alpha * 2.0 / 2.0;
        assert!(matches!(
            wave_number(&p, threshold, 1),
            Err(Error::EvanescentChannel { .. })
        ));
        let ch = Channel::new(1, 0.3).unwrap();
        assert!((wave_number(&p, ch.energy(&p), 1).unwrap() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn exact_potential_identity() {
        for &(v0, a, alpha) in &[(1.0, 5.0, 0.1), (1.0, 0.0, 0.05), (0.3, 2.0, 0.75)] {
            let p = PotentialParams::new(v0, a, alpha).unwrap();
            for r in log_grid(1e-3, 1e3, 60) {
                let x = alpha * r;
                let simple = -v0 / x.exp_m1() - a * (-x).exp() / r;
                let got = potential_exact(&p, r).unwrap();
                assert!((got - simple).abs() <= 1e-13 * simple.abs(), "r = {r}");
            }
        }
    }

    #[test]
    fn screening_decay() {
        let p = PotentialParams::new(1.0, 0.0, 0.05).unwrap();
        let far = potential_exact(&p, 2000.0).unwrap();
        assert!(far < 0.0 && far > -1e-40);
    }

    #[test]
    fn approx_equals_exact_without_yukawa() {
        let p = PotentialParams::new(1.3, 0.0, 0.2).unwrap();
        for r in log_grid(1e-4, 1e2, 40) {
            assert_eq!(potential_approx(&p, r).unwrap(), potential_exact(&p, r).unwrap());
        }
    }

    #[test]
    fn nonpositive_radius_is_domain_error() {
        let p = PotentialParams::new(1.0, 5.0, 0.1).unwrap();
        for r in [0.0, -1.0, f64::NAN] {
            assert!(matches!(potential_exact(&p, r), Err(Error::Domain(_))));
            assert!(matches!(potential_approx(&p, r), Err(Error::Domain(_))));
            assert!(matches!(centrifugal_approx(0.1, r), Err(Error::Domain(_))));
        }
        assert!(approximation_report(&p, &[1.0, -2.0]).is_err());
        assert!(approximation_report(&p, &[]).is_err());
    }

    #[test]
    fn centrifugal_limits() {
        let alpha = 0.05;
        let r = 1e-4;
        let v = centrifugal_approx(alpha, r).unwrap();
        assert!((v * r * r - 1.0).abs() < 2.0 * alpha * r);
        let v = centrifugal_approx(alpha, 2000.0).unwrap();
        assert!((v / (alpha * alpha) - 1.0).abs() < 1e-15);
        // Tiny αr goes through expm1 without cancellation.
        let v = centrifugal_approx(1e-9, 1e-3).unwrap();
        assert!((v * 1e-6 - 1.0).abs() < 1e-11);
    }

    #[test]
    fn report_vanishing_alpha() {
        let p = PotentialParams::new(1.0, 5.0, 1e-6).unwrap();
        let grid: Vec<f64> = (1..=10).map(|i| i as f64).collect();
        let rep = approximation_report(&p, &grid).unwrap();
        assert!(rep.max_centrifugal_error < 1e-5);
        assert!(rep.max_potential_error < 1e-5);
    }

    #[test]
    fn report_without_yukawa_has_zero_potential_error() {
        let p = PotentialParams::new(1.0, 0.0, 0.1).unwrap();
        let rep = approximation_report(&p, &log_grid(0.1, 50.0, 30)).unwrap();
        assert!(rep.rows.iter().all(|r| r.potential_error == 0.0));
    }

    #[test]
    fn report_centrifugal_error_grows_with_radius() {
        let p = PotentialParams::new(1.0, 5.0, 0.1).unwrap();
        let rep = approximation_report(&p, &log_grid(0.1, 50.0, 40)).unwrap();
        for w in rep.rows.windows(2) {
            assert!(w[1].centrifugal_error > w[0].centrifugal_error);
        }
    }

    #[test]
    fn report_point_values() {
        // Direct evaluation of both forms at αr = 0.5 and αr = 0.05.
        let p = PotentialParams::new(1.0, 5.0, 0.05).unwrap();
        let rep = approximation_report(&p, &[1.0, 10.0]).unwrap();
        for row in &rep.rows {
            let x: f64 = 0.05 * row.r;
            let ratio = (1.0 - (-x).exp()) / x;
            let expected = 1.0 - ratio * ratio;
            assert!((row.centrifugal_error - expected).abs() < 1e-14);
        }
        assert!(rep.rows[0].centrifugal_error < 0.05);
        assert!((rep.rows[1].centrifugal_error - 0.380_6).abs() < 1e-3);
    }
}

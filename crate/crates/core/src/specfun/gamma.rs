use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::ensure_finite;
use crate::{Error, Result};

/// Absolute distance from a nonpositive integer below which `log_gamma`
/// reports a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Principal branch of log Γ(z).
///
/// The imaginary part is continuous everywhere off the negative real axis,
/// so it is *not* reduced modulo 2π. On the negative real axis the value is
/// the limit from the upper half plane.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    ensure_finite(z, "z")?;
    let nearest = z.re.round();
    if nearest <= 0.0 && (z - nearest).norm() < POLE_TOLERANCE {
        return Err(Error::Pole(format!("{z}")));
    }
    if z.im < 0.0 {
        return Ok(log_gamma_upper(z.conj()).conj());
    }
    Ok(log_gamma_upper(z))
}

/// Argument of Γ(z) on the branch of [`log_gamma`].
pub fn arg_gamma(z: Complex64) -> Result<f64> {
    log_gamma(z).map(|lg| lg.im)
}

// Requires Im z >= 0 and z off the poles.
fn log_gamma_upper(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        return lanczos(z);
    }
    // log Γ(z) = log π − log sin(πz) − log Γ(1 − z), with log sin(πz) taken on
    // the branch continuous in the closed upper half plane:
    //   log sin(πz) = −iπz + iπ/2 − log 2 + log(1 − e^{2πiz}).
    // |e^{2πiz}| <= 1 there, so the last logarithm never leaves its principal
    // strip.
    let i = Complex64::i();
    let e = (2.0 * PI * i * z).exp();
    let log_sin = -i * PI * z + i * (PI / 2.0) - LN_2 + (Complex64::new(1.0, 0.0) - e).ln();
    LN_PI - log_sin - lanczos(Complex64::new(1.0, 0.0) - z)
}

// Valid for Re z >= 0.5.
fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + sum.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_of_one_and_half() {
        let lg = log_gamma(c(1.0, 0.0)).unwrap();
        assert!(lg.norm() < 1e-15);
        let lg = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((lg.re - PI.sqrt().ln()).abs() < 1e-14);
        assert_eq!(lg.im, 0.0);
    }

    #[test]
    fn positive_reals_have_zero_argument() {
        assert_eq!(arg_gamma(c(2.0, 0.0)).unwrap(), 0.0);
        assert_eq!(arg_gamma(c(7.3, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn negative_real_axis_matches_upper_limit() {
        // Γ(−1/2) = −2√π, log taken from above: ln(2√π) − iπ.
        let lg = log_gamma(c(-0.5, 0.0)).unwrap();
        assert!((lg.re - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
        assert!((lg.im + PI).abs() < 1e-14);
    }

    #[test]
    fn poles_are_rejected() {
        for n in 0..5 {
            let z = c(-(n as f64), 0.0);
            assert!(matches!(log_gamma(z), Err(Error::Pole(_))));
        }
        assert!(matches!(log_gamma(c(-3.0 + 1e-13, 0.0)), Err(Error::Pole(_))));
        assert!(log_gamma(c(-3.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn non_finite_input_is_an_error() {
        assert!(log_gamma(c(f64::NAN, 0.0)).is_err());
        assert!(log_gamma(c(1.0, f64::INFINITY)).is_err());
    }

    #[test]
    fn factorials() {
        let mut fact = 1.0_f64;
        for n in 1..20 {
            fact *= n as f64;
            let lg = log_gamma(c(n as f64 + 1.0, 0.0)).unwrap();
            assert!((lg.re - fact.ln()).abs() < 1e-12 * fact.ln().max(1.0), "n = {n}");
        }
    }

    #[test]
    fn branch_is_continuous_across_reflection_seam() {
        for &y in &[0.0, 0.2, 3.0, 15.0] {
            let left = log_gamma(c(0.5 - 1e-9, y)).unwrap();
            let right = log_gamma(c(0.5 + 1e-9, y)).unwrap();
            assert!((left - right).norm() < 1e-7, "y = {y}");
        }
    }
}

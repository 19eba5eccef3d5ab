use num_complex::Complex64;

use super::{ensure_finite, log_gamma, POLE_TOLERANCE};
use crate::{Error, Result};

/// |z| at and below which the power series is summed directly.
pub const SERIES_CROSSOVER: f64 = 0.5;
/// Term cap for every power series.
pub const MAX_SERIES_TERMS: usize = 10_000;
/// Distance of c − a − b from an integer below which the connection formula
/// is refused.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

const RELATIVE_TERM_TOLERANCE: f64 = 1e-15;

/// Parameters (a, b; c) of the Gauss hypergeometric function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauss2F1Params {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl Gauss2F1Params {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        ensure_finite(a, "a")?;
        ensure_finite(b, "b")?;
        ensure_finite(c, "c")?;
        if is_nonpositive_integer(c, POLE_TOLERANCE) {
            return Err(Error::Pole(format!("c = {c}")));
        }
        Ok(Self { a, b, c })
    }

    pub fn real(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    /// c − a − b.
    pub fn excess(&self) -> Complex64 {
        self.c - self.a - self.b
    }
}

/// ₂F₁(a, b; c; z) for |z| < 1 or |1 − z| < 1.
///
/// Direct summation for |z| <= 0.5; the two-term linear transformation to
/// series in 1 − z otherwise (falling back to the direct series when that
/// transformation is unavailable and |z| < 1).
pub fn gauss_2f1(p: &Gauss2F1Params, z: Complex64) -> Result<Complex64> {
    ensure_finite(z, "z")?;
    gauss_2f1_with_complement(p, z, Complex64::new(1.0, 0.0) - z)
}

/// Same as [`gauss_2f1`] with 1 − z supplied by the caller, which keeps the
/// complement accurate when z is within rounding of 1.
pub(crate) fn gauss_2f1_with_complement(
    p: &Gauss2F1Params,
    z: Complex64,
    one_minus_z: Complex64,
) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let zn = z.norm();
    let wn = one_minus_z.norm();
    if zn <= SERIES_CROSSOVER {
        return series(p.a, p.b, p.c, z);
    }
    let degenerate = is_near_integer(p.excess(), DEGENERACY_TOLERANCE);
    if wn < 1.0 && !degenerate {
        return connection(p, one_minus_z);
    }
    if zn < 1.0 {
        return series(p.a, p.b, p.c, z);
    }
    if wn < 1.0 {
        return Err(Error::DegenerateParameters(format!("{}", p.excess())));
    }
    Err(Error::Domain(format!(
        "z = {z} is outside |z| < 1 and |1 - z| < 1"
    )))
}

/// Right-hand side of the two-term connection formula
///
/// ₂F₁(a,b;c;z) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) ₂F₁(a,b;a+b−c+1;1−z)
///              + (1−z)^{c−a−b} Γ(c)Γ(a+b−c)/(Γ(a)Γ(b)) ₂F₁(c−a,c−b;c−a−b+1;1−z)
///
/// evaluated literally, without any regime switching.
pub fn connection_formula_rhs(p: &Gauss2F1Params, z: Complex64) -> Result<Complex64> {
    ensure_finite(z, "z")?;
    let w = Complex64::new(1.0, 0.0) - z;
    if w.norm() >= 1.0 {
        return Err(Error::Domain(format!("|1 - z| = {} >= 1", w.norm())));
    }
    if is_near_integer(p.excess(), DEGENERACY_TOLERANCE) {
        return Err(Error::DegenerateParameters(format!("{}", p.excess())));
    }
    connection(p, w)
}

fn connection(p: &Gauss2F1Params, w: Complex64) -> Result<Complex64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let s = c - a - b;
    let lg_c = log_gamma(c)?;
    let first = match gamma_ratio(lg_c + log_gamma(s)?, &[c - a, c - b])? {
        Some(pref) => pref * series(a, b, 1.0 - s, w)?,
        None => Complex64::new(0.0, 0.0),
    };
    let second = match gamma_ratio(lg_c + log_gamma(-s)?, &[a, b])? {
        Some(pref) => (s * w.ln()).exp() * pref * series(c - a, c - b, s + 1.0, w)?,
        None => Complex64::new(0.0, 0.0),
    };
    Ok(first + second)
}

/// exp(log_numerator − Σ log Γ(d)); `None` when some 1/Γ(d) vanishes.
fn gamma_ratio(log_numerator: Complex64, denominators: &[Complex64]) -> Result<Option<Complex64>> {
    let mut acc = log_numerator;
    for &d in denominators {
        match log_gamma(d) {
            Ok(lg) => acc -= lg,
            Err(Error::Pole(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(acc.exp()))
}

fn series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    // Terms may dip transiently while n passes −Re a or −Re b; only test for
    // convergence once the term ratio is settled below one.
    let settle = (-a.re).max(-b.re).max(0.0).ceil() as usize + 1;
    for n in 0..MAX_SERIES_TERMS {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        term *= ratio;
        sum += term;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        if n >= settle
            && ratio.norm() < 1.0
            && term.norm() < RELATIVE_TERM_TOLERANCE * sum.norm()
        {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

fn is_near_integer(z: Complex64, tol: f64) -> bool {
    z.im.abs() < tol && (z.re - z.re.round()).abs() < tol
}

fn is_nonpositive_integer(z: Complex64, tol: f64) -> bool {
    z.re.round() <= 0.0 && is_near_integer(z, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn value_at_origin_is_exactly_one() {
        let p = Gauss2F1Params::new(c(-27.3, 0.2), c(29.3, -0.2), c(2.0, 0.0)).unwrap();
        assert_eq!(gauss_2f1(&p, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn log_closed_form() {
        let p = Gauss2F1Params::real(1.0, 1.0, 2.0).unwrap();
        for x in [0.3f64, 0.45, 0.7, 0.9] {
            let expected = -(1.0 - x).ln() / x;
            let got = gauss_2f1(&p, c(x, 0.0)).unwrap();
            // c − a − b = 0 is degenerate, so z > 0.5 falls back to the series.
            assert!((got.re - expected).abs() < 1e-13 * expected, "x = {x}");
            assert!(got.im.abs() < 1e-15);
        }
    }

    #[test]
    fn polynomial_case_terminates() {
        // ₂F₁(−2, b; c; z) = 1 − 2bz/c + b(b+1)z²/(c(c+1))
        let (b, cc, z) = (1.5, 2.5, 0.4);
        let p = Gauss2F1Params::real(-2.0, b, cc).unwrap();
        let expected = 1.0 - 2.0 * b * z / cc + b * (b + 1.0) * z * z / (cc * (cc + 1.0));
        assert!((gauss_2f1(&p, c(z, 0.0)).unwrap().re - expected).abs() < 1e-15);
        // Same polynomial through the connection branch: 1/Γ(a) vanishes.
        let z = 0.8;
        let expected = 1.0 - 2.0 * b * z / cc + b * (b + 1.0) * z * z / (cc * (cc + 1.0));
        assert!((gauss_2f1(&p, c(z, 0.0)).unwrap() - expected).norm() < 1e-12);
    }

    #[test]
    fn gauss_summation_limit() {
        let p = Gauss2F1Params::new(c(0.3, 0.1), c(0.4, 0.0), c(1.7, 0.0)).unwrap();
        let s = p.excess();
        let limit = (log_gamma(p.c).unwrap() + log_gamma(s).unwrap()
            - log_gamma(p.c - p.a).unwrap()
            - log_gamma(p.c - p.b).unwrap())
        .exp();
        let near = connection_formula_rhs(&p, c(1.0 - 1e-10, 0.0)).unwrap();
        assert!((near - limit).norm() < 1e-8);
    }

    #[test]
    fn poles_and_degeneracy() {
        assert!(matches!(
            Gauss2F1Params::real(1.0, 1.0, -2.0),
            Err(Error::Pole(_))
        ));
        let p = Gauss2F1Params::real(0.5, 0.5, 2.0).unwrap();
        assert!(matches!(
            connection_formula_rhs(&p, c(0.6, 0.0)),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            gauss_2f1(&p, c(1.2, 0.1)),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(gauss_2f1(&p, c(-1.5, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn term_cap_reports_nonconvergence() {
        // Ratio tends to |z| = 0.99999 with a slowly decaying tail, so the cap wins.
        let p = Gauss2F1Params::real(5.0, 5.0, 1.0).unwrap();
        assert!(matches!(
            series(p.a, p.b, p.c, c(-0.99999, 0.0)),
            Err(Error::NonConvergence { .. })
        ));
    }
}

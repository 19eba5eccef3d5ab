//! Complex special functions used by the phase-shift formulas and the
//! numerical oracle.

mod bessel;
mod gamma;
mod hypergeometric;

pub use bessel::{spherical_bessel_arrays, spherical_bessel_jy, MAX_BESSEL_ORDER};
pub use gamma::{arg_gamma, log_gamma, POLE_TOLERANCE};
pub use hypergeometric::{
    connection_formula_rhs, gauss_2f1, Gauss2F1Params, DEGENERACY_TOLERANCE, MAX_SERIES_TERMS,
    SERIES_CROSSOVER,
};
pub(crate) use hypergeometric::gauss_2f1_with_complement;

use crate::{Error, Result};
use num_complex::Complex64;

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} = {z} is not finite")))
    }
}

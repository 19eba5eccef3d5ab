use crate::{Error, Result};

/// Largest order accepted by the spherical Bessel routines.
pub const MAX_BESSEL_ORDER: u32 = 50;

const RESCALE_ABOVE: f64 = 1e250;

/// Regular and irregular spherical Bessel functions j_l(x), y_l(x).
pub fn spherical_bessel_jy(l: u32, x: f64) -> Result<(f64, f64)> {
    let (j, y) = spherical_bessel_arrays(l, x)?;
    Ok((j[l as usize], y[l as usize]))
}

/// j_n(x) and y_n(x) for n = 0..=lmax.
///
/// j comes from Miller's downward recurrence normalized against the closed
/// forms of j_0 or j_1 (whichever is larger in magnitude); y from upward
/// recurrence, which is stable for the irregular solution.
pub fn spherical_bessel_arrays(lmax: u32, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("spherical Bessel argument x = {x}")));
    }
    if lmax > MAX_BESSEL_ORDER {
        return Err(Error::Domain(format!(
            "spherical Bessel order {lmax} exceeds {MAX_BESSEL_ORDER}"
        )));
    }
    let n = lmax as usize;
    let (s, c) = x.sin_cos();

    let mut y = vec![0.0; n + 1];
    y[0] = -c / x;
    if n >= 1 {
        y[1] = -c / (x * x) - s / x;
    }
    for k in 1..n {
        y[k + 1] = (2 * k + 1) as f64 / x * y[k] - y[k - 1];
    }

    let reach = x.max(lmax as f64);
    let start = (reach + 20.0 + (40.0 * reach).sqrt()) as usize + 2;
    let mut j = vec![0.0; n.max(1) + 1];
    let mut upper = 0.0;
    let mut current = 1e-300;
    for k in (1..=start).rev() {
        // current = j_k, upper = j_{k+1}
        let lower = (2 * k + 1) as f64 / x * current - upper;
        upper = current;
        current = lower;
        if k - 1 < j.len() {
            j[k - 1] = current;
        }
        if current.abs() > RESCALE_ABOVE {
            current /= RESCALE_ABOVE;
            upper /= RESCALE_ABOVE;
            for v in j.iter_mut() {
                *v /= RESCALE_ABOVE;
            }
        }
    }
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    let scale = if j0.abs() >= j1.abs() { j0 / j[0] } else { j1 / j[1] };
    for v in j.iter_mut() {
        *v *= scale;
    }
    j.truncate(n + 1);
    Ok((j, y))
}

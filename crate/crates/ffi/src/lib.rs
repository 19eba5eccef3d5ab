//! C interface to `hyscat`.
//!
//! Every function returns a [`HyscatStatus`]; results go through out
//! pointers. Potentials live behind the opaque [`HyscatPotential`] handle,
//! created by [`hyscat_potential_new`] and released by
//! [`hyscat_potential_free`]. After a failure,
//! [`hyscat_last_error_message`] describes it on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hyscat::model::{Channel, PotentialParams};
use hyscat::oracle::{oracle_delta_approx, oracle_delta_exact, IntegrationConfig};
use hyscat::phaseshift::{bound_states, delta_l, AngleUnit};
use hyscat::specfun::{gauss_2f1, log_gamma, Gauss2F1Params};
use hyscat::{Complex64, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyscatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    Pole = 3,
    NonConvergence = 4,
    DegenerateParameters = 5,
    Domain = 6,
    EvanescentChannel = 7,
    NoBracket = 8,
    NoneFound = 9,
    IllConditioned = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyscatAngleUnit {
    Radians = 0,
    Degrees = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyscatComplex {
    pub re: f64,
    pub im: f64,
}

impl From<HyscatComplex> for Complex64 {
    fn from(z: HyscatComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for HyscatComplex {
    fn from(z: Complex64) -> Self {
        HyscatComplex { re: z.re, im: z.im }
    }
}

/// δ_l with its ingredients, all in the requested unit.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyscatPhaseShift {
    pub delta_l: f64,
    pub theta_l: f64,
    pub theta_l_free: f64,
    pub arg_gamma_eta1_star: f64,
    pub arg_gamma_eta2_star: f64,
    pub arg_gamma_a_star: f64,
    pub arg_gamma_b_star: f64,
}

/// Phase shift from direct integration, radians in (−π/2, π/2].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyscatOraclePhase {
    pub delta: f64,
    pub halving_change: f64,
    pub converged: bool,
}

/// Opaque potential handle.
pub struct HyscatPotential {
    params: PotentialParams,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HyscatStatus {
    match e {
        Error::Pole(_) => HyscatStatus::Pole,
        Error::NonConvergence { .. } => HyscatStatus::NonConvergence,
        Error::DegenerateParameters(_) => HyscatStatus::DegenerateParameters,
        Error::Domain(_) => HyscatStatus::Domain,
        Error::EvanescentChannel { .. } => HyscatStatus::EvanescentChannel,
        Error::NoBracket { .. } => HyscatStatus::NoBracket,
        Error::NoneFound => HyscatStatus::NoneFound,
        Error::IllConditioned { .. } => HyscatStatus::IllConditioned,
        Error::InvalidParameter(_) => HyscatStatus::InvalidParameter,
    }
}

fn fail(status: HyscatStatus, message: &str) -> HyscatStatus {
    set_last_error(message);
    status
}

fn guard(body: impl FnOnce() -> Result<(), HyscatStatus>) -> HyscatStatus {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HyscatStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(HyscatStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: hyscat::Result<T>) -> Result<T, HyscatStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

unsafe fn out<'a, T>(ptr: *mut T) -> Result<&'a mut T, HyscatStatus> {
    ptr.as_mut().ok_or_else(|| fail(HyscatStatus::NullPointer, "null output pointer"))
}

unsafe fn potential<'a>(ptr: *const HyscatPotential) -> Result<&'a PotentialParams, HyscatStatus> {
    ptr.as_ref()
        .map(|h| &h.params)
        .ok_or_else(|| fail(HyscatStatus::NullPointer, "null potential handle"))
}

/// Create a potential handle. ħ = μ = 1 gives atomic units.
///
/// # Safety
/// `out_handle` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hyscat_potential_new(
    v0: f64,
    a: f64,
    alpha: f64,
    mu: f64,
    hbar: f64,
    out_handle: *mut *mut HyscatPotential,
) -> HyscatStatus {
    guard(|| {
        let slot = out(out_handle)?;
        *slot = std::ptr::null_mut();
        let params = lift(PotentialParams::with_units(v0, a, alpha, mu, hbar))?;
        *slot = Box::into_raw(Box::new(HyscatPotential { params }));
        Ok(())
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `handle` must come from [`hyscat_potential_new`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn hyscat_potential_free(handle: *mut HyscatPotential) {
    if !handle.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(handle))));
    }
}

/// Analytic phase shift of partial wave `l` at wave number `k`.
///
/// # Safety
/// `handle` must be live; `out_result` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hyscat_phase_shift(
    handle: *const HyscatPotential,
    l: u32,
    k: f64,
    unit: HyscatAngleUnit,
    out_result: *mut HyscatPhaseShift,
) -> HyscatStatus {
    guard(|| {
        let p = potential(handle)?;
        let slot = out(out_result)?;
        let unit = match unit {
            HyscatAngleUnit::Radians => AngleUnit::Radians,
            HyscatAngleUnit::Degrees => AngleUnit::Degrees,
        };
        let ch = lift(Channel::new(l, k))?;
        let r = lift(delta_l(p, &ch, unit))?;
        *slot = HyscatPhaseShift {
            delta_l: r.delta_l,
            theta_l: r.theta_l,
            theta_l_free: r.theta_l_free,
            arg_gamma_eta1_star: r.terms.eta1_star,
            arg_gamma_eta2_star: r.terms.eta2_star,
            arg_gamma_a_star: r.terms.a_star,
            arg_gamma_b_star: r.terms.b_star,
        };
        Ok(())
    })
}

/// Bound-state energies for n = 0..=n_max, deepest first.
///
/// Writes the number of levels to `out_count`. If it exceeds `capacity`,
/// nothing is copied and `HYSCAT_STATUS_BUFFER_TOO_SMALL` is returned. A
/// potential without bound states yields count 0 and `HYSCAT_STATUS_OK`.
///
/// # Safety
/// `energies` must hold `capacity` doubles (may be null if capacity is 0).
#[no_mangle]
pub unsafe extern "C" fn hyscat_bound_states(
    handle: *const HyscatPotential,
    l: u32,
    n_max: u32,
    energies: *mut f64,
    capacity: usize,
    out_count: *mut usize,
) -> HyscatStatus {
    guard(|| {
        let p = potential(handle)?;
        let count = out(out_count)?;
        *count = 0;
        let levels = match bound_states(p, l, n_max) {
            Ok(v) => v,
            Err(Error::NoBracket { .. } | Error::NoneFound) => Vec::new(),
            Err(e) => return Err(fail(status_of(&e), &e.to_string())),
        };
        *count = levels.len();
        if levels.len() > capacity {
            return Err(fail(HyscatStatus::BufferTooSmall, "energy buffer too small"));
        }
        if !levels.is_empty() {
            if energies.is_null() {
                return Err(fail(HyscatStatus::NullPointer, "null energy buffer"));
            }
            let buf = std::slice::from_raw_parts_mut(energies, capacity);
            for (dst, s) in buf.iter_mut().zip(&levels) {
                *dst = s.energy;
            }
        }
        Ok(())
    })
}

/// Phase shift by Numerov integration with the default layout. `exact`
/// selects the full interaction instead of the approximated equation.
///
/// # Safety
/// `handle` must be live; `out_result` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hyscat_oracle_phase_shift(
    handle: *const HyscatPotential,
    l: u32,
    k: f64,
    exact: bool,
    out_result: *mut HyscatOraclePhase,
) -> HyscatStatus {
    guard(|| {
        let p = potential(handle)?;
        let slot = out(out_result)?;
        let ch = lift(Channel::new(l, k))?;
        let cfg = IntegrationConfig::for_channel(p, &ch);
        let o = if exact {
            lift(oracle_delta_exact(p, &ch, &cfg))?
        } else {
            lift(oracle_delta_approx(p, &ch, &cfg))?
        };
        *slot = HyscatOraclePhase {
            delta: o.delta,
            halving_change: o.halving_change,
            converged: o.converged,
        };
        Ok(())
    })
}

/// Principal branch of log Γ(z).
///
/// # Safety
/// `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hyscat_log_gamma(z: HyscatComplex, out_value: *mut HyscatComplex) -> HyscatStatus {
    guard(|| {
        let slot = out(out_value)?;
        *slot = lift(log_gamma(z.into()))?.into();
        Ok(())
    })
}

/// ₂F₁(a, b; c; z).
///
/// # Safety
/// `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hyscat_gauss_2f1(
    a: HyscatComplex,
    b: HyscatComplex,
    c: HyscatComplex,
    z: HyscatComplex,
    out_value: *mut HyscatComplex,
) -> HyscatStatus {
    guard(|| {
        let slot = out(out_value)?;
        let params = lift(Gauss2F1Params::new(a.into(), b.into(), c.into()))?;
        *slot = lift(gauss_2f1(&params, z.into()))?.into();
        Ok(())
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn hyscat_status_message(status: HyscatStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HyscatStatus::Ok => c"ok",
        HyscatStatus::NullPointer => c"null pointer argument",
        HyscatStatus::InvalidParameter => c"invalid parameter",
        HyscatStatus::Pole => c"argument on a Gamma-function pole",
        HyscatStatus::NonConvergence => c"series did not converge",
        HyscatStatus::DegenerateParameters => c"degenerate hypergeometric parameters",
        HyscatStatus::Domain => c"argument outside the supported domain",
        HyscatStatus::EvanescentChannel => c"channel has no propagating wave",
        HyscatStatus::NoBracket => c"no sign change in the pole search window",
        HyscatStatus::NoneFound => c"no bound state",
        HyscatStatus::IllConditioned => c"ill-conditioned phase fit",
        HyscatStatus::BufferTooSmall => c"output buffer too small",
        HyscatStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Detail of the last failure on this thread, or "" after a success. Valid
/// until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn hyscat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

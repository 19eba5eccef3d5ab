//! Partial-wave scattering for the Hulthén-type plus Yukawa potential.
//!
//! The analytic side evaluates phase shifts from closed-form arg-Gamma
//! combinations of the hypergeometric solution obtained under the
//! short-range centrifugal approximation. The `oracle` module integrates the
//! radial equation directly and is used to cross-check every analytic number.
//!
//! ```
//! use hyscat::model::{Channel, PotentialParams};
//! use hyscat::phaseshift::{delta_l, AngleUnit};
//!
//! let p = PotentialParams::new(1.0, 0.0, 0.05).unwrap();
//! let ch = Channel::new(0, 0.01).unwrap();
//! let r = delta_l(&p, &ch, AngleUnit::Radians).unwrap();
//! assert!((r.delta_l - 85.99747).abs() < 1e-5);
//! ```

pub mod cli;
pub mod error;
pub mod model;
pub mod oracle;
pub mod phaseshift;
pub mod radial;
pub mod reference;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

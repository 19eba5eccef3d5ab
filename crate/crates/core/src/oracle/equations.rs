use super::PhaseMode;
use crate::model::{Channel, PotentialParams};

/// A radial equation u'' + q(r) u = 0 with a regular singular point at the
/// origin, q(r) = −l(l+1)/r² + q₋₁/r + q₀ + O(r).
pub trait RadialEquation: Sync {
    fn l(&self) -> u32;
    /// Asymptotic wave number.
    fn wave_number(&self) -> f64;
    /// Which free solutions the asymptotic region is matched to.
    fn phase_mode(&self) -> PhaseMode;
    fn q(&self, r: f64) -> f64;
    /// (q₋₁, q₀).
    fn origin_series(&self) -> (f64, f64);
    /// Part of q(r) not captured by the free solutions of `phase_mode`.
    fn tail(&self, r: f64) -> f64;
}

fn centrifugal(l: u32) -> f64 {
    let l = l as f64;
    l * (l + 1.0)
}

/// The approximated equation, whose regular solution is the hypergeometric
/// wavefunction:
///
/// q(r) = k² + α²l(l+1) + W/(e^{αr} − 1) − α²l(l+1)/(1 − e^{−αr})²,
/// W = 2μ(V₀ + αA)/ħ².
#[derive(Debug, Clone, Copy)]
pub struct ApproxEquation {
    l: u32,
    k: f64,
    alpha: f64,
    strength: f64,
}

impl ApproxEquation {
    pub fn new(p: &PotentialParams, ch: &Channel) -> Self {
        Self {
            l: ch.l,
            k: ch.k,
            alpha: p.alpha,
            strength: p.mass_factor() * p.effective_strength(),
        }
    }
}

impl RadialEquation for ApproxEquation {
    fn l(&self) -> u32 {
        self.l
    }

    fn wave_number(&self) -> f64 {
        self.k
    }

    fn phase_mode(&self) -> PhaseMode {
        PhaseMode::Plane
    }

    #[inline]
    fn q(&self, r: f64) -> f64 {
        let lc = centrifugal(self.l);
        let a2 = self.alpha * self.alpha;
        let d = -(-self.alpha * r).exp_m1();
        let e = 1.0 - d;
        self.k * self.k + a2 * lc + self.strength * e / d - lc * a2 / (d * d)
    }

    fn origin_series(&self) -> (f64, f64) {
        let lc = centrifugal(self.l);
        let a = self.alpha;
        (
            self.strength / a - lc * a,
            self.k * self.k + 7.0 * lc * a * a / 12.0 - self.strength / 2.0,
        )
    }

    fn tail(&self, r: f64) -> f64 {
        self.q(r) - self.k * self.k
    }
}

/// The full interaction with the true centrifugal term, at the same energy
/// as the channel: q(r) = 2μ(E − V(r))/ħ² − l(l+1)/r².
#[derive(Debug, Clone, Copy)]
pub struct ExactEquation {
    l: u32,
    k: f64,
    alpha: f64,
    v0: f64,
    a: f64,
}

impl ExactEquation {
    pub fn new(p: &PotentialParams, ch: &Channel) -> Self {
        let m = p.mass_factor();
        Self {
            l: ch.l,
            k: (m * ch.energy(p)).sqrt(),
            alpha: p.alpha,
            v0: m * p.v0,
            a: m * p.a,
        }
    }
}

impl RadialEquation for ExactEquation {
    fn l(&self) -> u32 {
        self.l
    }

    fn wave_number(&self) -> f64 {
        self.k
    }

    fn phase_mode(&self) -> PhaseMode {
        PhaseMode::SphericalBessel
    }

    #[inline]
    fn q(&self, r: f64) -> f64 {
        let d = -(-self.alpha * r).exp_m1();
        let e = 1.0 - d;
        self.k * self.k + self.v0 * e / d + self.a * e / r - centrifugal(self.l) / (r * r)
    }

    fn origin_series(&self) -> (f64, f64) {
        (
            self.v0 / self.alpha + self.a,
            self.k * self.k - self.v0 / 2.0 - self.a * self.alpha,
        )
    }

    fn tail(&self, r: f64) -> f64 {
        self.q(r) - self.k * self.k + centrifugal(self.l) / (r * r)
    }
}

/// q(r) = k² − U(r) − l(l+1)/r² for an arbitrary reduced potential
/// U = 2μV/ħ², matched to spherical Bessel functions.
pub struct PotentialFnEquation<F> {
    pub l: u32,
    pub k: f64,
    pub potential: F,
    /// (q₋₁, q₀) of the near-origin expansion.
    pub origin: (f64, f64),
}

impl<F: Fn(f64) -> f64 + Sync> RadialEquation for PotentialFnEquation<F> {
    fn l(&self) -> u32 {
        self.l
    }

    fn wave_number(&self) -> f64 {
        self.k
    }

    fn phase_mode(&self) -> PhaseMode {
        PhaseMode::SphericalBessel
    }

    fn q(&self, r: f64) -> f64 {
        self.k * self.k - (self.potential)(r) - centrifugal(self.l) / (r * r)
    }

    fn origin_series(&self) -> (f64, f64) {
        self.origin
    }

    fn tail(&self, r: f64) -> f64 {
        -(self.potential)(r)
    }
}

use super::{extract_phase, ApproxEquation, ExactEquation, RadialEquation};
use crate::model::{Channel, PotentialParams};
use crate::phaseshift::wrap_pi;
use crate::radial::RadialSolution;
use crate::{Error, Result};

/// Phase change under step halving below which an integration is converged.
pub const HALVING_TOLERANCE: f64 = 1e-6;
/// Steps between renormalizations of u.
pub const RENORMALIZE_EVERY: usize = 1000;

/// |tail(r)| / k² allowed at the match radii.
const ASYMPTOTIC_TOLERANCE: f64 = 1e-8;

/// Uniform-grid discretization of the radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationConfig {
    pub r_min: f64,
    pub r_max: f64,
    /// Initial step; halved until the matched phase settles.
    pub step: f64,
    /// Halving stops below this step.
    pub min_step: f64,
    /// Inner and outer match radius.
    pub match_radii: (f64, f64),
}

impl IntegrationConfig {
    /// r_max = 30/α, pushed out in steps of 1/α until both match radii
    /// r_max − {0.37/k, 0} see a tail below 10⁻⁸ k² in either equation.
    pub fn for_channel(p: &PotentialParams, ch: &Channel) -> Self {
        let approx = ApproxEquation::new(p, ch);
        let exact = ExactEquation::new(p, ch);
        let bound = ASYMPTOTIC_TOLERANCE * ch.k * ch.k;
        let asymptotic = |r: f64| approx.tail(r).abs() < bound && exact.tail(r).abs() < bound;
        let mut r_max = 30.0 / p.alpha;
        for _ in 0..200 {
            if asymptotic(r_max - 0.37 / ch.k) {
                break;
            }
            r_max += 1.0 / p.alpha;
        }
        Self::with_extent(p, ch, r_max, None)
    }

    /// Layout ending at `r_max`, with an optional fixed initial step.
    ///
    /// r_min = 10⁻⁴/(α + Z), Z the strength of the 1/r singularity of q, so
    /// the seed series stays accurate. The default step keeps Z·h, k·h and
    /// h itself small.
    pub fn with_extent(p: &PotentialParams, ch: &Channel, r_max: f64, step: Option<f64>) -> Self {
        let coulomb = p.mass_factor() * (p.v0.abs() / p.alpha + p.a.abs());
        let r_min = 1e-4 / (p.alpha + coulomb);
        let step = step.unwrap_or_else(|| (0.1 / coulomb).min(0.05 / ch.k).min(2e-3));
        Self {
            r_min,
            r_max,
            step,
            min_step: step / 16.0,
            match_radii: (r_max - 0.37 / ch.k, r_max),
        }
    }

    pub fn validate(&self, k: f64) -> Result<()> {
        let (m1, m2) = self.match_radii;
        let ok = self.r_min > 0.0
            && self.step > 0.0
            && self.min_step > 0.0
            && self.r_min < m1
            && m1 < m2
            && m2 <= self.r_max
            && k * self.step < 0.5
            && [self.r_min, self.r_max, self.step, m1, m2].iter().all(|v| v.is_finite());
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "integration layout {self:?} is inconsistent for k = {k}"
            )))
        }
    }
}

/// Numerov march with step halving.
///
/// Starts from the Frobenius series u = r^{l+1}(1 + c₁r + c₂r²) at r_min
/// and halves the step until the matched phase moves by less than
/// [`HALVING_TOLERANCE`]. Returns the finest solution; `converged` is false
/// if `min_step` was reached first.
pub fn numerov_integrate<E: RadialEquation>(eq: &E, cfg: &IntegrationConfig) -> Result<RadialSolution> {
    let k = eq.wave_number();
    cfg.validate(k)?;
    for r in [cfg.match_radii.0, cfg.match_radii.1] {
        let tail = eq.tail(r);
        if !(tail.abs() < ASYMPTOTIC_TOLERANCE * k * k) {
            return Err(Error::InvalidParameter(format!(
                "match radius {r} is not asymptotic (|tail| = {:e}, k² = {:e})",
                tail.abs(),
                k * k
            )));
        }
    }
    let mut step = cfg.step;
    let mut prev = march(eq, cfg, step)?;
    loop {
        step /= 2.0;
        let mut cur = march(eq, cfg, step)?;
        let change = wrap_pi(cur.extracted_phase.unwrap() - prev.extracted_phase.unwrap()).abs();
        cur.halving_change = Some(change);
        if change < HALVING_TOLERANCE {
            cur.converged = true;
            return Ok(cur);
        }
        if step / 2.0 < cfg.min_step {
            return Ok(cur);
        }
        prev = cur;
    }
}

fn march<E: RadialEquation>(eq: &E, cfg: &IntegrationConfig, h: f64) -> Result<RadialSolution> {
    let n = ((cfg.r_max - cfg.r_min) / h).ceil() as usize + 1;
    let r_at = |i: usize| cfg.r_min + i as f64 * h;
    let l = eq.l();
    let (qm1, q0) = eq.origin_series();
    // u'' = f u with f = −q; Frobenius coefficients of u / r^{l+1}.
    let lf = l as f64;
    let c1 = -qm1 / (2.0 * lf + 2.0);
    let c2 = (-qm1 * c1 - q0) / (2.0 * (2.0 * lf + 3.0));
    let seed = |r: f64| r.powi(l as i32 + 1) * (1.0 + r * (c1 + r * c2));

    let h2 = h * h / 12.0;
    let mut u = Vec::with_capacity(n);
    u.push(seed(r_at(0)));
    u.push(seed(r_at(1)));
    let t_first = -h2 * eq.q(r_at(0));
    let mut t_cur = -h2 * eq.q(r_at(1));
    let mut w_prev = (1.0 - t_first) * u[0];
    let mut w_cur = (1.0 - t_cur) * u[1];
    let mut boundaries: Vec<(usize, f64)> = Vec::new();
    for i in 1..n - 1 {
        let t_next = -h2 * eq.q(r_at(i + 1));
        let w_next = 2.0 * w_cur - w_prev + 12.0 * t_cur * u[i];
        let u_next = w_next / (1.0 - t_next);
        u.push(u_next);
        w_prev = w_cur;
        w_cur = w_next;
        t_cur = t_next;
        if i % RENORMALIZE_EVERY == 0 {
            let scale = u[i].abs().max(u_next.abs());
            if scale > 0.0 && scale.is_finite() {
                let s = 1.0 / scale;
                w_prev *= s;
                w_cur *= s;
                u[i] *= s;
                u[i + 1] *= s;
                boundaries.push((i, s));
            }
        }
        if !u_next.is_finite() {
            return Err(Error::Domain(format!("integration overflowed at r = {}", r_at(i + 1))));
        }
    }
    // Sample i still lacks every factor recorded at a boundary past i.
    let mut cum = 1.0;
    let mut end = u.len();
    for &(b, s) in boundaries.iter().rev() {
        for v in &mut u[b..end] {
            *v *= cum;
        }
        cum *= s;
        end = b;
    }
    for v in &mut u[..end] {
        *v *= cum;
    }
    let r: Vec<f64> = (0..u.len()).map(r_at).collect();
    let mut sol = RadialSolution {
        r,
        u,
        step: Some(h),
        match_radii: Some(cfg.match_radii),
        extracted_phase: None,
        halving_change: None,
        converged: false,
    };
    let ch = Channel::new(l, eq.wave_number())?;
    sol.extracted_phase = Some(extract_phase(&sol, &ch, eq.phase_mode())?);
    Ok(sol)
}

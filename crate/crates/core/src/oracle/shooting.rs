use crate::model::PotentialParams;
use crate::{Error, Result};

/// Log-grid layout of the shooting solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    /// Step in ln r.
    pub log_step: f64,
    /// Decay lengths 1/κ past the classical turning region kept in the box.
    pub decay_lengths: f64,
    /// Box radius never exceeds this many screening lengths 1/α.
    pub max_screening_lengths: f64,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        Self {
            log_step: 2.5e-3,
            decay_lengths: 40.0,
            max_screening_lengths: 60.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingLevel {
    /// Node count.
    pub n: u32,
    pub energy: f64,
}

/// The well seen at energy E: q(r) = 2μE/ħ² + s(r).
struct Well {
    approx: bool,
    l: u32,
    alpha: f64,
    m: f64,
    v0: f64,
    a: f64,
}

impl Well {
    fn new(p: &PotentialParams, l: u32, approx: bool) -> Self {
        Self {
            approx,
            l,
            alpha: p.alpha,
            m: p.mass_factor(),
            v0: p.v0,
            a: p.a,
        }
    }

    fn centrifugal(&self) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0)
    }

    #[inline]
    fn static_part(&self, r: f64) -> f64 {
        let lc = self.centrifugal();
        let d = -(-self.alpha * r).exp_m1();
        let e = 1.0 - d;
        if self.approx {
            let w = self.m * (self.v0 + self.alpha * self.a);
            w * e / d - lc * self.alpha * self.alpha / (d * d)
        } else {
            self.m * (self.v0 * e / d + self.a * e / r) - lc / (r * r)
        }
    }

    /// Coefficient of the attractive 1/r singularity, an upper bound for
    /// r·(s(r) + l(l+1)/r²) on r > 0.
    fn coulomb_strength(&self) -> f64 {
        if self.approx {
            self.m * (self.v0 + self.alpha * self.a) / self.alpha
        } else {
            self.m * (self.v0 / self.alpha + self.a)
        }
    }

    /// (q₋₁, q₀) at energy E.
    fn origin_series(&self, energy: f64) -> (f64, f64) {
        let lc = self.centrifugal();
        let me = self.m * energy;
        if self.approx {
            let w = self.m * (self.v0 + self.alpha * self.a);
            (
                w / self.alpha - lc * self.alpha,
                me - w / 2.0 - 5.0 * lc * self.alpha * self.alpha / 12.0,
            )
        } else {
            (
                self.coulomb_strength(),
                me - self.m * self.v0 / 2.0 - self.m * self.a * self.alpha,
            )
        }
    }

    fn kappa(&self, energy: f64) -> f64 {
        let threshold = if self.approx {
            self.centrifugal() * self.alpha * self.alpha
        } else {
            0.0
        };
        (threshold - self.m * energy).max(0.0).sqrt()
    }
}

/// Sign changes of u on (r_min, R(E)] with u regular at the origin.
fn count_nodes(well: &Well, energy: f64, cfg: &ShootingConfig) -> usize {
    let z = well.coulomb_strength().max(0.0);
    let kappa = well.kappa(energy).max(1e-300);
    let cap = cfg.max_screening_lengths / well.alpha;
    let r_max = ((cfg.decay_lengths + 2.0 * z / kappa) / kappa).min(cap);
    let r_min = 1e-6 / (1.0 + z + well.alpha);
    let (x0, x1) = (r_min.ln(), r_max.ln());
    if x1 <= x0 {
        return 0;
    }
    let h = cfg.log_step;
    let n = ((x1 - x0) / h).ceil() as usize + 1;
    let me = well.m * energy;
    // u = r^{1/2} v, r = e^x:  v'' = (1/4 − r² q(r)) v
    let g = |i: usize| {
        let r = (x0 + i as f64 * h).exp();
        0.25 - r * r * (me + well.static_part(r))
    };
    let l = well.l as f64;
    let (qm1, q0) = well.origin_series(energy);
    let c1 = -qm1 / (2.0 * l + 2.0);
    let c2 = (-qm1 * c1 - q0) / (2.0 * (2.0 * l + 3.0));
    let seed = |i: usize| {
        let x = x0 + i as f64 * h;
        let r = x.exp();
        ((l + 0.5) * x).exp() * (1.0 + r * (c1 + r * c2))
    };
    let h2 = h * h / 12.0;
    let (mut v_prev, mut v_cur) = (seed(0), seed(1));
    let mut t_prev = h2 * g(0);
    let mut t_cur = h2 * g(1);
    let mut nodes = usize::from(v_prev * v_cur < 0.0);
    for i in 1..n - 1 {
        let t_next = h2 * g(i + 1);
        let v_next = ((2.0 + 10.0 * t_cur) * v_cur - (1.0 - t_prev) * v_prev) / (1.0 - t_next);
        if v_next * v_cur < 0.0 {
            nodes += 1;
        }
        v_prev = v_cur;
        v_cur = v_next;
        t_prev = t_cur;
        t_cur = t_next;
        let scale = v_cur.abs();
        if scale > 1e100 {
            v_prev /= scale;
            v_cur /= scale;
        }
    }
    nodes
}

/// Bound levels by node counting on the outward solution, bisected in E.
///
/// `use_approx` selects the approximated equation (the one whose S-matrix
/// poles the analytic formulas give); otherwise the full interaction with
/// the true centrifugal term. Returns up to n_max + 1 levels with E < 0,
/// ordered by node count.
pub fn shooting_bound_states(
    p: &PotentialParams,
    l: u32,
    use_approx: bool,
    n_max: u32,
) -> Result<Vec<ShootingLevel>> {
    shooting_bound_states_with(p, l, use_approx, n_max, &ShootingConfig::default())
}

pub(crate) fn shooting_bound_states_with(
    p: &PotentialParams,
    l: u32,
    use_approx: bool,
    n_max: u32,
    cfg: &ShootingConfig,
) -> Result<Vec<ShootingLevel>> {
    p.validate()?;
    let well = Well::new(p, l, use_approx);
    let z = well.coulomb_strength().max(0.0);
    // Comparison with the hydrogenic well z/r bounds every level from below.
    let floor = -1.01 * z * z / (4.0 * well.m) - 1e-12;
    let ceiling = -1e-9 * floor.abs().max(1.0);
    let total = count_nodes(&well, ceiling, cfg);
    if total == 0 {
        return Err(Error::NoneFound);
    }
    let mut levels = Vec::new();
    for n in 0..=n_max {
        if (n as usize) >= total {
            break;
        }
        let (mut lo, mut hi) = (floor, ceiling);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= 1e-12 * mid.abs().max(1.0) || mid <= lo || mid >= hi {
                break;
            }
            if count_nodes(&well, mid, cfg) > n as usize {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        levels.push(ShootingLevel {
            n,
            energy: 0.5 * (lo + hi),
        });
    }
    Ok(levels)
}

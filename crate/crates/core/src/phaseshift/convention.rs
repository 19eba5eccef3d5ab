use super::{delta_l_with_convention, AngleUnit, ArgConvention};
use crate::model::{Channel, PotentialParams};
use crate::reference::{PublishedCell, PUBLISHED_TABLES};
use crate::Result;

/// First published cell: l = 0, k = 0.01, α = 0.050, A = 0, V₀ = 1.
pub const ANCHOR: PublishedCell = PUBLISHED_TABLES[0];

/// Largest anchor mismatch for which a candidate is accepted.
pub const ANCHOR_TOLERANCE: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConventionCandidate {
    pub convention: ArgConvention,
    pub unit: AngleUnit,
    pub anchor_value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConventionResolution {
    pub candidates: Vec<ConventionCandidate>,
    /// The best-matching candidate, if it lies within [`ANCHOR_TOLERANCE`].
    pub chosen: Option<ConventionCandidate>,
}

/// Evaluates the anchor cell under every {branch, unit} reading and keeps the
/// one reproducing the published number.
pub fn resolve_convention() -> Result<ConventionResolution> {
    let p = PotentialParams::new(1.0, ANCHOR.a, ANCHOR.alpha)?;
    let ch = Channel::new(ANCHOR.l, ANCHOR.k)?;
    let mut candidates = Vec::new();
    for convention in [ArgConvention::ContinuousBranch, ArgConvention::PrincipalValue] {
        for unit in [AngleUnit::Radians, AngleUnit::Degrees] {
            let r = delta_l_with_convention(&p, &ch, unit, convention)?;
            candidates.push(ConventionCandidate {
                convention,
                unit,
                anchor_value: r.delta_l,
            });
        }
    }
    let chosen = candidates
        .iter()
        .copied()
        .filter(|c| (c.anchor_value - ANCHOR.delta).abs() <= ANCHOR_TOLERANCE)
        .min_by(|x, y| {
            let dx = (x.anchor_value - ANCHOR.delta).abs();
            let dy = (y.anchor_value - ANCHOR.delta).abs();
            dx.total_cmp(&dy)
        });
    Ok(ConventionResolution { candidates, chosen })
}

//! Sampled reduced radial wavefunctions.

/// u(r) on a grid of increasing radii, with whatever matching metadata the
/// producer attached.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    pub r: Vec<f64>,
    /// Arbitrary normalization.
    pub u: Vec<f64>,
    /// Grid spacing when the grid is uniform.
    pub step: Option<f64>,
    pub match_radii: Option<(f64, f64)>,
    /// Phase of the asymptotic cosine, radians.
    pub extracted_phase: Option<f64>,
    /// |Δphase| between the last two step-halving passes.
    pub halving_change: Option<f64>,
    pub converged: bool,
}

impl RadialSolution {
    /// Sample nearest to `radius`.
    pub fn sample_near(&self, radius: f64) -> Option<(f64, f64)> {
        if self.r.is_empty() {
            return None;
        }
        let idx = match self.step {
            Some(h) => (((radius - self.r[0]) / h).round().max(0.0) as usize).min(self.r.len() - 1),
            None => {
                let i = self.r.partition_point(|&x| x < radius);
                if i == 0 {
                    0
                } else if i == self.r.len() {
                    i - 1
                } else if (self.r[i] - radius).abs() < (radius - self.r[i - 1]).abs() {
                    i
                } else {
                    i - 1
                }
            }
        };
        Some((self.r[idx], self.u[idx]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_sample_on_both_grid_kinds() {
        let mut s = RadialSolution {
            r: vec![1.0, 1.5, 2.0, 2.5],
            u: vec![10.0, 15.0, 20.0, 25.0],
            step: Some(0.5),
            match_radii: None,
            extracted_phase: None,
            halving_change: None,
            converged: true,
        };
        assert_eq!(s.sample_near(1.7), Some((1.5, 15.0)));
        assert_eq!(s.sample_near(9.0), Some((2.5, 25.0)));
        s.step = None;
        assert_eq!(s.sample_near(1.8), Some((2.0, 20.0)));
        assert_eq!(s.sample_near(0.0), Some((1.0, 10.0)));
    }
}

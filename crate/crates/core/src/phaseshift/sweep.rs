use rayon::prelude::*;

use super::{delta_l, AngleUnit, PhaseShiftResult};
use crate::model::{Channel, PotentialParams};
use crate::Result;

/// Axes of a phase-shift table. Cells are ordered (l, A, k, α).
#[derive(Debug, Clone, PartialEq)]
pub struct TableGrid {
    pub ls: Vec<u32>,
    pub a_values: Vec<f64>,
    pub ks: Vec<f64>,
    pub alphas: Vec<f64>,
}

impl TableGrid {
    /// k ∈ {0.01, 0.03, …, 0.15}, α ∈ {0.050, 0.075, 0.100}, A ∈ {0, 5},
    /// l ∈ {0, 1, 2}.
    pub fn published() -> Self {
        Self {
            ls: vec![0, 1, 2],
            a_values: vec![0.0, 5.0],
            ks: vec![0.01, 0.03, 0.05, 0.07, 0.09, 0.11, 0.13, 0.15],
            alphas: vec![0.05, 0.075, 0.1],
        }
    }

    pub fn len(&self) -> usize {
        self.ls.len() * self.a_values.len() * self.ks.len() * self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in sweep order.
    pub fn points(&self) -> Vec<(u32, f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.len());
        for &l in &self.ls {
            for &a in &self.a_values {
                for &k in &self.ks {
                    for &alpha in &self.alphas {
                        out.push((l, a, k, alpha));
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub l: u32,
    pub a: f64,
    pub k: f64,
    pub alpha: f64,
    pub result: Result<PhaseShiftResult>,
}

/// δ_l at every grid point. `base` supplies V₀, μ, ħ; A and α come from the
/// grid. Failing cells carry their error and never abort the sweep.
pub fn table_sweep(base: &PotentialParams, grid: &TableGrid, unit: AngleUnit) -> Vec<SweepCell> {
    grid.points()
        .into_par_iter()
        .map(|(l, a, k, alpha)| {
            let result = PotentialParams::with_units(base.v0, a, alpha, base.mu, base.hbar)
                .and_then(|p| Channel::new(l, k).and_then(|ch| delta_l(&p, &ch, unit)));
            SweepCell {
                l,
                a,
                k,
                alpha,
                result,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_grid_has_144_cells_in_order() {
        let g = TableGrid::published();
        assert_eq!(g.len(), 144);
        let pts = g.points();
        assert_eq!(pts[0], (0, 0.0, 0.01, 0.05));
        assert_eq!(pts[1], (0, 0.0, 0.01, 0.075));
        assert_eq!(pts[3], (0, 0.0, 0.03, 0.05));
        assert_eq!(pts[24], (0, 5.0, 0.01, 0.05));
        assert_eq!(pts[143], (2, 5.0, 0.15, 0.1));
    }

    #[test]
    fn single_cell_matches_direct_call() {
        let base = PotentialParams::new(1.0, 0.0, 1.0).unwrap();
        let grid = TableGrid {
            ls: vec![2],
            a_values: vec![5.0],
            ks: vec![0.15],
            alphas: vec![0.1],
        };
        let cells = table_sweep(&base, &grid, AngleUnit::Radians);
        let direct = delta_l(
            &PotentialParams::new(1.0, 5.0, 0.1).unwrap(),
            &Channel::new(2, 0.15).unwrap(),
            AngleUnit::Radians,
        )
        .unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0].result.as_ref().unwrap(), &direct);
        assert!((direct.delta_l - 41.32505).abs() < 5e-6);
    }

    #[test]
    fn bad_cells_are_marked_not_fatal() {
        let base = PotentialParams::new(1.0, 0.0, 1.0).unwrap();
        let grid = TableGrid {
            ls: vec![0],
            a_values: vec![0.0],
            ks: vec![-0.1, 0.1],
            alphas: vec![0.05],
        };
        let cells = table_sweep(&base, &grid, AngleUnit::Radians);
        assert!(cells[0].result.is_err());
        assert!(cells[1].result.is_ok());
    }
}

//! Built-in benchmark scenarios with published iteration counts.
//!
//! Each row fixes a target trajectory and speed with capture radius 1/10; the
//! count for a precision `delta` is the smallest `n` with `T* - t_n < delta`,
//! where `T*` comes from [`refine_ground_truth`].

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

use serde::Serialize;

use crate::error::Result;
use crate::models::PlantKind;
use crate::solver::{iterations_to_precision, refine_ground_truth, EstimatorKind};
use crate::trajectory::TargetTrajectory;

pub const ELL: f64 = 0.1;
pub const DELTAS: [f64; 3] = [1e-3, 1e-6, 1e-9];
pub const TOLERANCE: usize = 1;
const ITERATION_CAP: usize = 1_000_000;
/// The published counts correspond to the simple step (closed form where the
/// plant has one), not to the inner root search of the best estimator.
pub const DEFAULT_ESTIMATOR: EstimatorKind = EstimatorKind::Simple;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowTrajectory {
    Line {
        xi: f64,
        eta: f64,
        phi: f64,
    },
    Lissajous {
        xi: f64,
        eta: f64,
        omega_x: f64,
        omega_y: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub trajectory: RowTrajectory,
    pub v: f64,
    pub simple: [usize; 3],
    pub dubins: [usize; 3],
}

impl TableRow {
    pub fn target(&self) -> Result<TargetTrajectory> {
        match self.trajectory {
            RowTrajectory::Line { xi, eta, phi } => TargetTrajectory::line(xi, eta, phi, self.v),
            RowTrajectory::Lissajous {
                xi,
                eta,
                omega_x,
                omega_y,
            } => TargetTrajectory::lissajous(xi, eta, omega_x, omega_y, self.v),
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self.trajectory, RowTrajectory::Line { .. })
    }

    pub fn published(&self, plant: PlantKind) -> [usize; 3] {
        match plant {
            PlantKind::Simple => self.simple,
            PlantKind::Dubins => self.dubins,
        }
    }
}

const fn line(xi: f64, eta: f64, phi: f64, v: f64, simple: [usize; 3], dubins: [usize; 3]) -> TableRow {
    TableRow {
        trajectory: RowTrajectory::Line { xi, eta, phi },
        v,
        simple,
        dubins,
    }
}

#[allow(clippy::too_many_arguments)]
const fn liss(
    xi: f64,
    eta: f64,
    omega_x: f64,
    omega_y: f64,
    v: f64,
    simple: [usize; 3],
    dubins: [usize; 3],
) -> TableRow {
    TableRow {
        trajectory: RowTrajectory::Lissajous {
            xi,
            eta,
            omega_x,
            omega_y,
        },
        v,
        simple,
        dubins,
    }
}

pub const ROWS: [TableRow; 28] = [
    line(0.0, 1.0, 0.0, 0.25, [5, 10, 15], [5, 10, 15]),
    line(0.0, 1.0, 0.0, 0.5, [10, 19, 29], [11, 23, 34]),
    line(0.0, 1.0, 0.0, 0.75, [22, 43, 65], [48, 93, 137]),
    line(1.0, 1.0, FRAC_PI_2, 0.25, [8, 15, 21], [7, 14, 20]),
    line(1.0, 1.0, FRAC_PI_2, 0.5, [17, 33, 48], [17, 32, 47]),
    line(1.0, 1.0, FRAC_PI_2, 0.75, [49, 90, 131], [49, 89, 130]),
    line(-1.0, -2.0, FRAC_PI_4, 0.5, [3, 5, 7], [11, 18, 25]),
    line(-1.0, -2.0, FRAC_PI_4, 0.75, [3, 5, 8], [12, 20, 28]),
    line(-1.0, -2.0, FRAC_PI_4, 1.0, [3, 6, 9], [14, 23, 33]),
    line(-2.0, 0.0, FRAC_PI_4, 0.5, [5, 9, 13], [19, 25, 30]),
    line(-2.0, 0.0, FRAC_PI_4, 0.75, [6, 12, 18], [12, 31, 51]),
    line(-2.0, 0.0, FRAC_PI_4, 1.0, [9, 18, 27], [5, 10, 15]),
    liss(1.0, 1.0, 1.0, SQRT_2, 0.5, [5, 8, 11], [6, 9, 13]),
    liss(1.0, 1.0, 1.0, SQRT_2, 1.0, [5, 7, 9], [7, 11, 16]),
    liss(1.0, 1.0, 1.0, SQRT_2, 1.5, [5, 7, 8], [10, 20, 29]),
    liss(1.0, 1.0, 1.0, SQRT_2, 2.0, [5, 7, 9], [28, 46, 64]),
    liss(-1.0, -2.0, 1.0, SQRT_2, 0.5, [12, 26, 40], [5, 8, 11]),
    liss(-1.0, -2.0, 1.0, SQRT_2, 1.0, [9, 21, 33], [6, 8, 10]),
    liss(-1.0, -2.0, 1.0, SQRT_2, 1.5, [7, 17, 26], [7, 10, 12]),
    liss(-1.0, -2.0, 1.0, SQRT_2, 2.0, [8, 20, 33], [9, 13, 16]),
    liss(-1.0, -2.0, 1.0, 2.0, 0.5, [11, 21, 30], [13, 23, 32]),
    liss(-1.0, -2.0, 1.0, 2.0, 1.0, [16, 26, 36], [19, 29, 39]),
    liss(-1.0, -2.0, 1.0, 2.0, 1.5, [18, 26, 33], [21, 28, 36]),
    liss(-1.0, -2.0, 1.0, 2.0, 2.0, [20, 26, 31], [25, 31, 36]),
    liss(0.0, -1.0, 2.0, 1.0, 0.5, [3, 6, 9], [9, 14, 18]),
    liss(0.0, -1.0, 2.0, 1.0, 1.0, [6, 12, 19], [12, 17, 22]),
    liss(0.0, -1.0, 2.0, 1.0, 1.5, [17, 37, 57], [17, 22, 27]),
    liss(0.0, -1.0, 2.0, 1.0, 2.0, [21, 36, 51], [9, 16, 23]),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellResult {
    pub delta: f64,
    pub computed: Option<usize>,
    pub published: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowResult {
    pub row: TableRow,
    pub plant: PlantKind,
    pub estimator: EstimatorKind,
    pub t_star: f64,
    pub cells: Vec<CellResult>,
}

/// Iteration counts for one row and plant.
pub fn evaluate_row(row: &TableRow, plant: PlantKind, estimator: EstimatorKind) -> Result<RowResult> {
    let model = plant.model();
    let target = row.target()?;
    let t_star = refine_ground_truth(model, &target, ELL)?;
    let counts = iterations_to_precision(model, &target, ELL, estimator, t_star, &DELTAS, ITERATION_CAP);
    let cells = DELTAS
        .iter()
        .zip(counts)
        .zip(row.published(plant))
        .map(|((&delta, computed), published)| CellResult {
            delta,
            computed,
            published,
            matches: computed.is_some_and(|c| c.abs_diff(published) <= TOLERANCE),
        })
        .collect();
    Ok(RowResult {
        row: *row,
        plant,
        estimator,
        t_star,
        cells,
    })
}

/// All rows for both plants, simple motions first.
pub fn evaluate_all(estimator: EstimatorKind) -> Result<Vec<RowResult>> {
    let mut out = Vec::with_capacity(2 * ROWS.len());
    for plant in [PlantKind::Simple, PlantKind::Dubins] {
        for row in &ROWS {
            out.push(evaluate_row(row, plant, estimator)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(row: &TableRow, plant: PlantKind) -> Vec<usize> {
        let r = evaluate_row(row, plant, DEFAULT_ESTIMATOR).unwrap();
        r.cells.iter().map(|c| c.computed.unwrap()).collect()
    }

    #[test]
    fn first_row_matches() {
        assert_eq!(counts(&ROWS[0], PlantKind::Simple), vec![5, 10, 15]);
        assert_eq!(counts(&ROWS[0], PlantKind::Dubins), vec![5, 10, 15]);
    }

    #[test]
    fn fast_dubins_row_matches() {
        assert_eq!(counts(&ROWS[11], PlantKind::Dubins), vec![5, 10, 15]);
        assert_eq!(counts(&ROWS[11], PlantKind::Simple), vec![9, 18, 27]);
    }

    #[test]
    fn best_is_never_slower() {
        for row in &ROWS[6..9] {
            let simple = evaluate_row(row, PlantKind::Dubins, EstimatorKind::Simple).unwrap();
            let best = evaluate_row(row, PlantKind::Dubins, EstimatorKind::Best).unwrap();
            for (a, b) in simple.cells.iter().zip(&best.cells) {
                assert!(b.computed.unwrap() <= a.computed.unwrap());
            }
        }
    }
}

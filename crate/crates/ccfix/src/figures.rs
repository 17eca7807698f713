//! Figure data: the circle maps of three collinear bodies and the three
//! scalar maps bounding `psi` in the chart of the 1-simplex.

use std::f64::consts::PI;

use ccfix_core::inverse::{f_maps_n3, n3_membership, N3_T_LIMIT};
use ccfix_core::projective::{ChartSample, CircleChart};
use ccfix_core::MassVector;

use crate::error::Result;
use crate::formats::{csv_float, csv_table};

pub const FIG1_HEADER: [&str; 5] = ["theta", "f", "fbar", "is_wall", "component_id"];
pub const FIG2_HEADER: [&str; 6] = ["t", "f1", "f2", "f3", "member_low", "member_high"];

/// Samples of `f` and `f_bar` at `theta_k = 2 pi k / samples`, merged with
/// the six exact wall crossings, ascending in `theta`.
pub fn fig1(masses: &MassVector, alpha: f64, samples: usize) -> Result<Vec<ChartSample>> {
    let chart = CircleChart::new(masses)?;
    let walls = chart.wall_angles_full();
    let mut thetas: Vec<f64> = (0..samples).map(|k| 2.0 * PI * k as f64 / samples as f64).collect();
    thetas.extend(walls.iter().map(|w| w.0));
    thetas.sort_by(f64::total_cmp);
    thetas.dedup();
    let mut rows = Vec::with_capacity(thetas.len());
    for theta in thetas {
        rows.push(chart.sample(theta, alpha)?);
    }
    Ok(rows)
}

pub fn fig1_csv(rows: &[ChartSample]) -> String {
    csv_table(
        &FIG1_HEADER,
        rows.iter().map(|s| {
            vec![
                csv_float(Some(s.theta)),
                csv_float(s.f),
                csv_float(Some(s.fbar)),
                s.is_wall.to_string(),
                s.component.map(|c| c.to_string()).unwrap_or_default(),
            ]
        }),
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Row {
    pub t: f64,
    pub f: [f64; 3],
    /// `t` lies in `[f3, f2]`.
    pub member_low: bool,
    /// `t` lies in `[f2, f1]`.
    pub member_high: bool,
}

/// Midpoint grid of `samples` cells on the open chart interval.
pub fn fig2_grid(samples: usize) -> Vec<f64> {
    let width = 2.0 * N3_T_LIMIT / samples as f64;
    (0..samples).map(|k| -N3_T_LIMIT + (k as f64 + 0.5) * width).collect()
}

pub fn fig2(alpha: f64, samples: usize) -> Result<Vec<Fig2Row>> {
    fig2_grid(samples)
        .into_iter()
        .map(|t| {
            let f = f_maps_n3(t, alpha)?;
            let (member_low, member_high) = n3_membership(t, &f);
            Ok(Fig2Row { t, f, member_low, member_high })
        })
        .collect()
}

pub fn fig2_csv(rows: &[Fig2Row]) -> String {
    csv_table(
        &FIG2_HEADER,
        rows.iter().map(|r| {
            vec![
                csv_float(Some(r.t)),
                csv_float(Some(r.f[0])),
                csv_float(Some(r.f[1])),
                csv_float(Some(r.f[2])),
                r.member_low.to_string(),
                r.member_high.to_string(),
            ]
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_has_six_walls_and_continuous_fbar() {
        // for equal masses the walls at pi/2 and 3 pi/2 are grid points too
        let rows = fig1(&MassVector::equal(3), 1.0, 2000).unwrap();
        assert_eq!(rows.len(), 2004);
        assert_eq!(rows.iter().filter(|r| r.is_wall).count(), 6);
        assert!(max_jump(&rows) < 10.0 * PI / 2000.0);
        // unequal masses: f_bar is steeper, but its jumps still shrink with the step
        let m = MassVector::new(vec![1.0, 2.0, 3.0]).unwrap();
        let coarse = fig1(&m, 1.0, 2000).unwrap();
        assert_eq!(coarse.len(), 2006);
        assert_eq!(coarse.iter().filter(|r| r.is_wall).count(), 6);
        let fine = fig1(&m, 1.0, 8000).unwrap();
        assert!(max_jump(&fine) < 0.3 * max_jump(&coarse));
    }

    fn max_jump(rows: &[ChartSample]) -> f64 {
        rows.windows(2)
            .map(|w| ccfix_core::projective::circular_distance(w[0].fbar, w[1].fbar, PI))
            .fold(0.0, f64::max)
    }

    #[test]
    fn fig2_grid_is_symmetric() {
        let g = fig2_grid(1000);
        assert_eq!(g.len(), 1000);
        for k in 0..500 {
            assert!((g[k] + g[999 - k]).abs() < 1e-15);
        }
        assert!(g[0] > -N3_T_LIMIT && g[999] < N3_T_LIMIT);
    }

    #[test]
    fn csv_shapes() {
        let rows = fig2(1.0, 4).unwrap();
        let csv = fig2_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,f1,f2,f3,member_low,member_high");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].ends_with(",true,false"));
        assert!(lines[4].ends_with(",false,true"));
        let walls = fig1(&MassVector::equal(3), 1.0, 6).unwrap();
        let csv = fig1_csv(&walls);
        let wall_line = csv.lines().find(|l| l.contains(",true,")).unwrap();
        let cells: Vec<&str> = wall_line.split(',').collect();
        assert_eq!(cells.len(), 5);
        assert!(cells[1].is_empty() && cells[4].is_empty());
    }
}

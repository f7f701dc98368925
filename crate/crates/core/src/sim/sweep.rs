use rayon::prelude::*;
use serde::Serialize;

use super::config::SimConfig;
use super::engine::run;
use super::metrics::{synchrony_metrics, SyncAnalysis};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Mean synchrony at one pool diameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow<T> {
    /// Side of the square the nodes are scattered in, m.
    pub diameter: T,
    /// `diameter / (v T)`
    pub diameter_over_vt: T,
    pub mean_order_parameter: T,
    /// Standard error over seeds; `None` with a single seed.
    pub stderr: Option<T>,
    /// Fraction of seeds whose ensemble locked.
    pub locked_fraction: T,
    pub seeds: usize,
}

/// Runs `base` once per `(diameter, seed)` with nodes scattered uniformly in
/// a square (or cube, or segment, following `base`'s dimension) of side
/// `diameter`, and averages the order parameter over seeds.
///
/// Cells run in parallel; rows come back in the order of `diameters`.
pub fn pool_sweep<T: Scalar>(
    base: &SimConfig<T>,
    diameters: &[T],
    seeds: &[u64],
    analysis: &SyncAnalysis<T>,
) -> Result<Vec<SweepRow<T>>> {
    if diameters.is_empty() || seeds.is_empty() {
        return domain("sweep", 0.0, "need at least one diameter and one seed");
    }
    if let Some(&d) = diameters.iter().find(|d| !(**d > T::zero()) || !d.is_finite()) {
        return domain("diameter", d.as_f64(), "must be positive and finite");
    }
    let n = base.n_nodes();
    let dim = base.dimension().max(1);
    let cells: Vec<(usize, u64)> = (0..diameters.len())
        .flat_map(|d| seeds.iter().map(move |&s| (d, s)))
        .collect();
    let scores: Vec<(T, bool)> = cells
        .par_iter()
        .map(|&(d, seed)| {
            let cfg = base.clone().with_random_layout(n, dim, diameters[d], seed);
            let trace = run(&cfg)?;
            let report = synchrony_metrics(&trace, analysis)?;
            Ok((report.order_parameter, report.locked))
        })
        .collect::<Result<_>>()?;

    let light_cone = base.light_cone();
    Ok(diameters
        .iter()
        .zip(scores.chunks(seeds.len()))
        .map(|(&diameter, cell)| {
            let m = T::from_count(cell.len() as u64);
            let mean = cell.iter().map(|c| c.0).sum::<T>() / m;
            let stderr = (cell.len() > 1).then(|| {
                let var = cell.iter().map(|c| (c.0 - mean).powi(2)).sum::<T>() / (m - T::one());
                (var / m).sqrt()
            });
            let locked = T::from_count(cell.iter().filter(|c| c.1).count() as u64) / m;
            SweepRow {
                diameter,
                diameter_over_vt: diameter / light_cone,
                mean_order_parameter: mean,
                stderr,
                locked_fraction: locked,
                seeds: cell.len(),
            }
        })
        .collect())
}

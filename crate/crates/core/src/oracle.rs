//! Brute-force validation oracle: transfer-matrix products over a sliced
//! piecewise-constant potential.
//!
//! Slicing is exact on this problem class (each sub-slab is itself a
//! constant piece), so any disagreement with the closed forms indicts the
//! closed forms, not the oracle.

use crate::error::{Error, Result};
use crate::scattering::{
    matrix_to_amplitudes, transfer_matrix_raw, ScatteringAmplitudes, TransferMatrix,
};

/// Arbitrary piecewise-constant potential: strictly increasing breakpoints
/// and one height per interval between consecutive breakpoints (zero outside).
#[derive(Debug, Clone)]
pub struct PiecewisePotential {
    breakpoints: Vec<f64>,
    heights: Vec<f64>,
}

impl PiecewisePotential {
    pub fn new(breakpoints: Vec<f64>, heights: Vec<f64>) -> Result<Self> {
        if breakpoints.iter().any(|b| !b.is_finite()) || heights.iter().any(|h| !h.is_finite()) {
            return Err(Error::Domain("breakpoints and heights must be finite".into()));
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Domain("breakpoints must be strictly increasing".into()));
        }
        if !breakpoints.is_empty() && heights.len() + 1 != breakpoints.len() {
            return Err(Error::Domain(format!(
                "expected {} heights for {} breakpoints, got {}",
                breakpoints.len() - 1,
                breakpoints.len(),
                heights.len()
            )));
        }
        Ok(PiecewisePotential { breakpoints, heights })
    }

    /// Potential of a double-layer system.
    pub fn from_double_layer(sys: &crate::scattering::DoubleLayerSystem) -> Self {
        let l1 = &sys.layer1;
        let l2 = &sys.layer2;
        if sys.r > 0.0 {
            PiecewisePotential {
                breakpoints: vec![l1.x_left, l1.x_right(), l2.x_left, l2.x_right()],
                heights: vec![l1.h, 0.0, l2.h],
            }
        } else {
            PiecewisePotential {
                breakpoints: vec![l1.x_left, l1.x_right(), l2.x_right()],
                heights: vec![l1.h, l2.h],
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.breakpoints.len() < 2
    }

    pub fn n_intervals(&self) -> usize {
        self.heights.len()
    }

    fn height_at(&self, x: f64) -> f64 {
        for (i, h) in self.heights.iter().enumerate() {
            if x >= self.breakpoints[i] && x < self.breakpoints[i + 1] {
                return *h;
            }
        }
        0.0
    }
}

/// Scatter through `pot` by multiplying exact transfer matrices over the
/// union of a uniform `n_slices` grid and the breakpoints, then mapping the
/// product matrix to amplitudes.
pub fn oracle_scatter(
    pot: &PiecewisePotential,
    energy: f64,
    n_slices: usize,
) -> Result<ScatteringAmplitudes> {
    if !(energy > 0.0) {
        return Err(Error::Domain(format!("energy E = {energy} must be > 0")));
    }
    if pot.is_empty() {
        return Ok(ScatteringAmplitudes::free(energy));
    }
    if n_slices < pot.n_intervals() {
        return Err(Error::Domain(format!(
            "n_slices = {} must be >= {} intervals",
            n_slices,
            pot.n_intervals()
        )));
    }
    let a = pot.breakpoints[0];
    let b = *pot.breakpoints.last().unwrap();

    // Uniform grid refined by the breakpoints, so every sub-slab is constant.
    let mut cuts: Vec<f64> = (0..=n_slices)
        .map(|i| a + (b - a) * i as f64 / n_slices as f64)
        .chain(pot.breakpoints.iter().copied())
        .collect();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup_by(|p, q| (*p - *q).abs() < 1e-15 * (b - a).max(1.0));

    let mut total = TransferMatrix::identity();
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let h = pot.height_at(0.5 * (lo + hi));
        total = total.then(&transfer_matrix_raw(h, hi - lo, energy));
        if total.max_abs_entry() > 1e150 {
            return Err(Error::Numeric(
                "transfer-matrix product overflow (entry > 1e150)".into(),
            ));
        }
    }
    matrix_to_amplitudes(&total, a, b, energy)
}

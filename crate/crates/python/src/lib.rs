//! Python extension module wrapping the pscatter library.
//!
//! Complex amplitudes cross the boundary as Python `complex`; each
//! scattering call returns a plain dict so the results are easy to feed
//! into numpy/pandas.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pscatter as core;
use pscatter::RegionLabel;

fn to_py(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_region(s: &str) -> PyResult<RegionLabel> {
    RegionLabel::parse(s).map_err(to_py)
}

fn amplitude_dict<'py>(
    py: Python<'py>,
    amp: &core::ScatteringAmplitudes,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("r_left", amp.r_left)?;
    d.set_item("r_right", amp.r_right)?;
    d.set_item("t", amp.t)?;
    d.set_item("R", amp.reflection())?;
    d.set_item("T", amp.transmission())?;
    d.set_item("energy", amp.energy)?;
    Ok(d)
}

/// 2x2 transfer matrix of one rectangular layer as a nested tuple.
#[pyfunction]
fn transfer_matrix(
    h: f64,
    l: f64,
    energy: f64,
) -> PyResult<((Complex64, Complex64), (Complex64, Complex64))> {
    let layer = core::Layer::new(h, l, 0.0).map_err(to_py)?;
    let m = core::transfer_matrix(&layer, energy).map_err(to_py)?;
    Ok(((m.m11, m.m12), (m.m21, m.m22)))
}

/// Scattering amplitudes of a single layer.
#[pyfunction]
#[pyo3(signature = (h, l, energy, x_left = 0.0))]
fn layer_scattering<'py>(
    py: Python<'py>,
    h: f64,
    l: f64,
    energy: f64,
    x_left: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let layer = core::Layer::new(h, l, x_left).map_err(to_py)?;
    let amp = core::layer_scattering(&layer, energy).map_err(to_py)?;
    amplitude_dict(py, &amp)
}

/// Exact two-layer scattering, including the u, v, |D|^2 decomposition.
#[pyfunction]
#[pyo3(signature = (h1, l1, h2, l2, r, energy, x_left = 0.0))]
#[allow(clippy::too_many_arguments)]
fn double_layer<'py>(
    py: Python<'py>,
    h1: f64,
    l1: f64,
    h2: f64,
    l2: f64,
    r: f64,
    energy: f64,
    x_left: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let sys = core::DoubleLayerSystem::from_parts(h1, l1, h2, l2, r, x_left).map_err(to_py)?;
    let detail = core::double_layer_detail(&sys, energy).map_err(to_py)?;
    let d = amplitude_dict(py, &detail.amplitudes)?;
    d.set_item("u", detail.u)?;
    d.set_item("v", detail.v)?;
    d.set_item("abs_d2", detail.d.norm_sqr())?;
    Ok(d)
}

/// Slicing-oracle scattering for an arbitrary piecewise-constant potential.
#[pyfunction]
#[pyo3(signature = (breakpoints, heights, energy, n_slices = 1000))]
fn oracle_scatter<'py>(
    py: Python<'py>,
    breakpoints: Vec<f64>,
    heights: Vec<f64>,
    energy: f64,
    n_slices: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let pot = core::PiecewisePotential::new(breakpoints, heights).map_err(to_py)?;
    let amp = core::oracle_scatter(&pot, energy, n_slices).map_err(to_py)?;
    amplitude_dict(py, &amp)
}

/// Region label ("P", "K", ..., "OffSurface") of a scaling exponent triple.
#[pyfunction]
fn classify_region(mu: f64, nu: f64, tau: f64) -> String {
    core::classify_region(mu, nu, tau).to_string()
}

/// Region normalization constant.
#[pyfunction]
fn zeta(region: &str, eta: f64, c: f64) -> PyResult<f64> {
    core::zeta(parse_region(region)?, eta, c).map_err(to_py)
}

/// Height amplitudes (a1, a2) realizing intensity gamma in a region.
#[pyfunction]
fn amplitudes_from_gamma(region: &str, eta: f64, c: f64, gamma: f64) -> PyResult<(f64, f64)> {
    core::amplitudes_from_gamma(parse_region(region)?, eta, c, gamma).map_err(to_py)
}

/// First `n_max` resonance intensities as (n, gamma, residual) tuples.
#[pyfunction]
#[pyo3(signature = (region, eta = 1.0, c = 0.0, n_max = 5))]
fn resonances(region: &str, eta: f64, c: f64, n_max: usize) -> PyResult<Vec<(i64, f64, f64)>> {
    let set = core::enumerate_resonances(parse_region(region)?, eta, c, n_max).map_err(to_py)?;
    Ok(set.roots.iter().map(|r| (r.n, r.gamma, r.residual)).collect())
}

/// Limiting amplitude-ratio square theta^2 at intensity gamma.
#[pyfunction]
fn theta_squared(region: &str, eta: f64, c: f64, gamma: f64) -> PyResult<f64> {
    core::theta_squared(parse_region(region)?, eta, c, gamma).map_err(to_py)
}

/// Limiting transmission 4 theta^2 / (1 + theta^2)^2 at intensity gamma.
#[pyfunction]
fn transmission_limit(region: &str, eta: f64, c: f64, gamma: f64) -> PyResult<f64> {
    Ok(core::transmission_limit(parse_region(region)?, eta, c, gamma)
        .map_err(to_py)?
        .t_limit)
}

/// Closed-form limiting transmission at the vertex point with c = 0.
#[pyfunction]
fn transmission_vertex_c0(eta: f64, gamma: f64) -> PyResult<f64> {
    core::transmission_vertex_c0(eta, gamma).map_err(to_py)
}

/// Finite-epsilon transmission along a squeezing path, as
/// (epsilon, T) pairs.
#[pyfunction]
#[pyo3(signature = (region, eta, c, gamma, epsilons, energy = 1.0))]
fn convergence_study(
    region: &str,
    eta: f64,
    c: f64,
    gamma: f64,
    epsilons: Vec<f64>,
    energy: f64,
) -> PyResult<Vec<(f64, f64)>> {
    let params = core::SqueezeParametrization::for_region(parse_region(region)?, eta, c, gamma)
        .map_err(to_py)?;
    let rows = core::convergence_study(&params, &epsilons, energy).map_err(to_py)?;
    Ok(rows.iter().map(|r| (r.epsilon, r.t_exact)).collect())
}

#[pymodule]
fn pscatter_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(transfer_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(layer_scattering, m)?)?;
    m.add_function(wrap_pyfunction!(double_layer, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_scatter, m)?)?;
    m.add_function(wrap_pyfunction!(classify_region, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(amplitudes_from_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(resonances, m)?)?;
    m.add_function(wrap_pyfunction!(theta_squared, m)?)?;
    m.add_function(wrap_pyfunction!(transmission_limit, m)?)?;
    m.add_function(wrap_pyfunction!(transmission_vertex_c0, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_study, m)?)?;
    Ok(())
}

//! Limiting transmission on the trihedral surface: the region-wise
//! amplitude-ratio formulas, the set-function transmission
//! `T = 4 theta^2 / (1 + theta^2)^2`, the vertex closed form at `c = 0`,
//! and finite-epsilon convergence sweeps against the exact scattering.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::resonance::ResonanceRoot;
use crate::scattering::double_layer_exact;
use crate::squeezing::{zeta, RegionLabel, SqueezeParametrization};

/// Transmission at one resonance level.
#[derive(Debug, Clone, Copy)]
pub struct ResonantTransmission {
    pub region: RegionLabel,
    pub n: i64,
    pub gamma: f64,
    pub theta_sq: f64,
    pub t_limit: f64,
}

fn sinhc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        Complex64::new(1.0, 0.0) + z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sinh() / z
    }
}

fn sinc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        Complex64::new(1.0, 0.0) - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// Region-wise amplitude-ratio formula (hyperbolic arguments continued
/// for `gamma < 0`):
///
/// ```text
///   P: (cosh w + c w sinh w)^2 + eta sinh^2 w,  w = sqrt(2 gamma / zeta)
///   K: (1 + 2 c gamma / zeta)^2 + 2 eta gamma / zeta
///   L: (cosh w + c w sinh w)^2
///   N: cosh^2 w + eta sinh^2 w
///   X: 1 + 2 gamma          Y: (1 - 2 gamma)^-1
/// ```
pub fn theta_squared(region: RegionLabel, eta: f64, c: f64, gamma: f64) -> Result<f64> {
    let z = zeta(region, eta, c)?;
    let w = Complex64::new(2.0 * gamma / z, 0.0).sqrt();
    let val = match region {
        RegionLabel::P => {
            let b = w.cosh() + c * w * w.sinh();
            (b * b + eta * w.sinh() * w.sinh()).re
        }
        RegionLabel::K => {
            let b = 1.0 + 2.0 * c * gamma / z;
            b * b + 2.0 * eta * gamma / z
        }
        RegionLabel::L => {
            let b = w.cosh() + c * w * w.sinh();
            (b * b).re
        }
        RegionLabel::N => {
            let (ch, sh) = (w.cosh(), w.sinh());
            (ch * ch + eta * sh * sh).re
        }
        RegionLabel::X => 1.0 + 2.0 * gamma,
        RegionLabel::Y => {
            if (1.0 - 2.0 * gamma).abs() < 1e-14 {
                return Err(Error::Pole("theta^2 on Y diverges at gamma = 1/2".into()));
            }
            1.0 / (1.0 - 2.0 * gamma)
        }
        RegionLabel::Z => {
            return Err(Error::Unsupported(
                "plane Z has no resonant transmission with a defined delta' limit".into(),
            ))
        }
        RegionLabel::OffSurface => {
            return Err(Error::Domain("theta^2 undefined off the surface".into()))
        }
    };
    Ok(val)
}

/// Independent route to the same limit via the amplitude-ratio asymptotics:
/// `theta = sinhc(B) / sinc(G)` with the limiting arguments
/// `B = sqrt(2 gamma / zeta) lim eps^(1 - mu/2)` (nonzero only where
/// `mu = 2`) and `G = sqrt(2 gamma eta / zeta) lim eps^(1 - mu + nu/2)`
/// (nonzero only where `2(1 - mu) + nu = 0`).
pub fn theta_sq_asymptotic(region: RegionLabel, eta: f64, c: f64, gamma: f64) -> Result<f64> {
    let z = zeta(region, eta, c)?;
    let zero = Complex64::new(0.0, 0.0);
    let b = match region {
        RegionLabel::P | RegionLabel::L | RegionLabel::N | RegionLabel::Y => {
            Complex64::new(2.0 * gamma / z, 0.0).sqrt()
        }
        RegionLabel::K | RegionLabel::X => zero,
        _ => {
            return Err(Error::Unsupported(format!(
                "no limiting amplitude ratio on {region}"
            )))
        }
    };
    let g = match region {
        RegionLabel::P | RegionLabel::K | RegionLabel::N | RegionLabel::X => {
            Complex64::new(2.0 * gamma * eta / z, 0.0).sqrt()
        }
        _ => zero,
    };
    let sg = sinc(g);
    if sg.norm() < 1e-12 {
        return Err(Error::Pole(format!("sinc pole in theta limit at G = {g}")));
    }
    let theta = sinhc(b) / sg;
    Ok((theta * theta).re)
}

/// `T = 4 theta^2 / (1 + theta^2)^2`, packaged with the inputs.
pub fn transmission_limit(
    region: RegionLabel,
    eta: f64,
    c: f64,
    gamma: f64,
) -> Result<ResonantTransmission> {
    let theta_sq = theta_squared(region, eta, c, gamma)?;
    if !(theta_sq > 0.0) {
        return Err(Error::Numeric(format!(
            "theta^2 = {theta_sq} not positive at gamma = {gamma}"
        )));
    }
    Ok(ResonantTransmission {
        region,
        n: 0,
        gamma,
        theta_sq,
        t_limit: transmission_of_theta_sq(theta_sq),
    })
}

/// Same, carrying the root's index.
pub fn transmission_at_root(
    region: RegionLabel,
    eta: f64,
    c: f64,
    root: &ResonanceRoot,
) -> Result<ResonantTransmission> {
    let mut t = transmission_limit(region, eta, c, root.gamma)?;
    t.n = root.n;
    Ok(t)
}

pub fn transmission_of_theta_sq(theta_sq: f64) -> f64 {
    let s = 1.0 + theta_sq;
    4.0 * theta_sq / (s * s)
}

/// Vertex closed form at `c = 0`:
/// `T = (1 - tanh^2 chi)(1 + eta tanh^2 chi) / (1 + (eta-1)/2 tanh^2 chi)^2`
/// with `chi = sqrt(2 gamma / (1 + eta))`.
pub fn transmission_vertex_c0(eta: f64, gamma: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::Domain(format!("eta = {eta} must be > 0")));
    }
    let chi = Complex64::new(2.0 * gamma / (1.0 + eta), 0.0).sqrt();
    let t2 = chi.tanh() * chi.tanh(); // real for gamma of either sign
    let val = (1.0 - t2) * (1.0 + eta * t2) / ((1.0 + 0.5 * (eta - 1.0) * t2) * (1.0 + 0.5 * (eta - 1.0) * t2));
    Ok(val.re)
}

/// One row of a finite-epsilon convergence sweep.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub epsilon: f64,
    pub t_exact: f64,
}

/// Exact transmission of the realized system over a decreasing epsilon grid.
///
/// For `gamma` on the resonance set this converges to the limit value; off
/// the set it collapses to zero (the squeezed structure reflects perfectly).
pub fn convergence_study(
    params: &SqueezeParametrization,
    eps_grid: &[f64],
    energy: f64,
) -> Result<Vec<ConvergenceRow>> {
    if eps_grid.is_empty() || !eps_grid.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::Domain("eps_grid must be non-empty and decreasing".into()));
    }
    let mut rows = Vec::with_capacity(eps_grid.len());
    for &eps in eps_grid {
        let sys = params.at(eps)?.to_double_layer()?;
        let amp = double_layer_exact(&sys, energy)?;
        rows.push(ConvergenceRow { epsilon: eps, t_exact: amp.transmission() });
    }
    Ok(rows)
}

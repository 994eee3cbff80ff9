//! Three-scale squeezing parametrization, trihedral-surface region
//! classification, distributional-limit checks and the small-width
//! asymptotics of the interference quantities.
//!
//! A squeezed system realizes
//!
//! ```text
//!   h1 = a1 e^-mu,  h2 = a2 e^-nu,  l1 = e,  l2 = eta e^(1-mu+nu),  r = c e^tau
//! ```
//!
//! with `a1 = 2 gamma / zeta_Q`, `a2 = -2 gamma / (eta zeta_Q)`, where `Q`
//! is the vertex/edge/plane of the trihedral surface that `(mu, nu, tau)`
//! lies on. On that surface the potential converges to `gamma delta'` in
//! the sense of distributions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scattering::DoubleLayerSystem;

/// Region of the `(mu, nu, tau)` octant: the vertex `P`, edges `K`, `L`,
/// `N`, planes `X`, `Y`, `Z` of the trihedral surface, or off the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    P,
    K,
    L,
    N,
    X,
    Y,
    Z,
    OffSurface,
}

impl RegionLabel {
    pub fn on_surface(&self) -> bool {
        !matches!(self, RegionLabel::OffSurface)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "P" => Ok(RegionLabel::P),
            "K" => Ok(RegionLabel::K),
            "L" => Ok(RegionLabel::L),
            "N" => Ok(RegionLabel::N),
            "X" => Ok(RegionLabel::X),
            "Y" => Ok(RegionLabel::Y),
            "Z" => Ok(RegionLabel::Z),
            "OFFSURFACE" | "OFF" => Ok(RegionLabel::OffSurface),
            other => Err(Error::Domain(format!("unknown region label: {other}"))),
        }
    }

    /// A representative `(mu, nu, tau)` inside the region.
    pub fn representative_point(&self) -> Result<(f64, f64, f64)> {
        match self {
            RegionLabel::P => Ok((2.0, 2.0, 1.0)),
            RegionLabel::K => Ok((1.5, 1.0, 0.5)),
            RegionLabel::L => Ok((2.0, 3.0, 1.0)),
            RegionLabel::N => Ok((2.0, 2.0, 2.0)),
            RegionLabel::X => Ok((1.5, 1.0, 1.5)),
            RegionLabel::Y => Ok((2.0, 3.0, 2.0)),
            RegionLabel::Z => Ok((1.5, 2.0, 0.5)),
            RegionLabel::OffSurface => {
                Err(Error::Domain("no representative point off the surface".into()))
            }
        }
    }
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegionLabel::P => "P",
            RegionLabel::K => "K",
            RegionLabel::L => "L",
            RegionLabel::N => "N",
            RegionLabel::X => "X",
            RegionLabel::Y => "Y",
            RegionLabel::Z => "Z",
            RegionLabel::OffSurface => "OffSurface",
        };
        f.write_str(s)
    }
}

/// Classify a point of the positive octant. Total on the octant; the seven
/// surface sets are pairwise disjoint by construction:
///
/// ```text
///   P: mu = nu = 2, tau = 1            N: mu = nu = 2, tau > 1
///   K: 1 < mu < 2, nu = 2(mu-1), tau = mu-1
///   X: 1 < mu < 2, nu = 2(mu-1), tau > mu-1
///   Z: 1 < mu < 2, nu > 2(mu-1), tau = mu-1
///   L: mu = 2, nu > 2, tau = 1         Y: mu = 2, nu > 2, tau > 1
/// ```
pub fn classify_region(mu: f64, nu: f64, tau: f64) -> RegionLabel {
    if !(mu > 0.0 && nu > 0.0 && tau > 0.0) {
        return RegionLabel::OffSurface;
    }
    if mu == 2.0 && nu == 2.0 && tau == 1.0 {
        RegionLabel::P
    } else if mu == 2.0 && nu == 2.0 && tau > 1.0 {
        RegionLabel::N
    } else if mu == 2.0 && nu > 2.0 && tau == 1.0 {
        RegionLabel::L
    } else if mu == 2.0 && nu > 2.0 && tau > 1.0 {
        RegionLabel::Y
    } else if 1.0 < mu && mu < 2.0 && nu == 2.0 * (mu - 1.0) && tau == mu - 1.0 {
        RegionLabel::K
    } else if 1.0 < mu && mu < 2.0 && nu == 2.0 * (mu - 1.0) && tau > mu - 1.0 {
        RegionLabel::X
    } else if 1.0 < mu && mu < 2.0 && nu > 2.0 * (mu - 1.0) && tau == mu - 1.0 {
        RegionLabel::Z
    } else {
        RegionLabel::OffSurface
    }
}

/// The set function normalizing the layer amplitudes:
///
/// ```text
///   zeta = 1 + eta + 2c at P;  eta + 2c on K;  1 + 2c on L;
///          1 + eta on N;  eta on X;  1 on Y;  2c on Z.
/// ```
pub fn zeta(region: RegionLabel, eta: f64, c: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::Domain(format!("eta = {eta} must be > 0")));
    }
    if c < 0.0 {
        return Err(Error::Domain(format!("c = {c} must be >= 0")));
    }
    match region {
        RegionLabel::P => Ok(1.0 + eta + 2.0 * c),
        RegionLabel::K => Ok(eta + 2.0 * c),
        RegionLabel::L => Ok(1.0 + 2.0 * c),
        RegionLabel::N => Ok(1.0 + eta),
        RegionLabel::X => Ok(eta),
        RegionLabel::Y => Ok(1.0),
        RegionLabel::Z => {
            if c > 0.0 {
                Ok(2.0 * c)
            } else {
                Err(Error::Domain(
                    "on plane Z the distribution gamma delta' requires c > 0".into(),
                ))
            }
        }
        RegionLabel::OffSurface => {
            Err(Error::Domain("zeta is undefined off the trihedral surface".into()))
        }
    }
}

/// Layer amplitudes realizing intensity `gamma`:
/// `a1 = 2 gamma / zeta`, `a2 = -2 gamma / (eta zeta)`, so `a1 + eta a2 = 0`.
pub fn amplitudes_from_gamma(
    region: RegionLabel,
    eta: f64,
    c: f64,
    gamma: f64,
) -> Result<(f64, f64)> {
    let z = zeta(region, eta, c)?;
    Ok((2.0 * gamma / z, -2.0 * gamma / (eta * z)))
}

/// Squeezing exponents and physical parameters of one family member.
#[derive(Debug, Clone, Copy)]
pub struct SqueezeParametrization {
    pub mu: f64,
    pub nu: f64,
    pub tau: f64,
    pub eta: f64,
    pub c: f64,
    pub gamma: f64,
}

impl SqueezeParametrization {
    pub fn new(mu: f64, nu: f64, tau: f64, eta: f64, c: f64, gamma: f64) -> Result<Self> {
        if !(mu > 0.0 && nu > 0.0 && tau > 0.0) {
            return Err(Error::Domain("mu, nu, tau must be > 0".into()));
        }
        if !(eta > 0.0) {
            return Err(Error::Domain(format!("eta = {eta} must be > 0")));
        }
        if c < 0.0 {
            return Err(Error::Domain(format!("c = {c} must be >= 0")));
        }
        if !gamma.is_finite() {
            return Err(Error::Domain("gamma must be finite".into()));
        }
        Ok(SqueezeParametrization { mu, nu, tau, eta, c, gamma })
    }

    /// Parametrization at the region's representative `(mu, nu, tau)`.
    pub fn for_region(region: RegionLabel, eta: f64, c: f64, gamma: f64) -> Result<Self> {
        let (mu, nu, tau) = region.representative_point()?;
        Self::new(mu, nu, tau, eta, c, gamma)
    }

    pub fn region(&self) -> RegionLabel {
        classify_region(self.mu, self.nu, self.tau)
    }

    /// `(a1, a2)` for this parametrization; errors off the surface.
    pub fn amplitudes(&self) -> Result<(f64, f64)> {
        amplitudes_from_gamma(self.region(), self.eta, self.c, self.gamma)
    }

    pub fn at(&self, epsilon: f64) -> Result<SqueezedSystem> {
        SqueezedSystem::new(*self, epsilon)
    }
}

/// A parametrization realized at a concrete `epsilon > 0`.
#[derive(Debug, Clone, Copy)]
pub struct SqueezedSystem {
    pub params: SqueezeParametrization,
    pub epsilon: f64,
}

impl SqueezedSystem {
    pub fn new(params: SqueezeParametrization, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0) || !epsilon.is_finite() {
            return Err(Error::Domain(format!("epsilon = {epsilon} must be > 0")));
        }
        Ok(SqueezedSystem { params, epsilon })
    }

    /// Layer heights `(h1, h2)` at this epsilon.
    pub fn heights(&self) -> Result<(f64, f64)> {
        let (a1, a2) = self.params.amplitudes()?;
        let e = self.epsilon;
        Ok((a1 * e.powf(-self.params.mu), a2 * e.powf(-self.params.nu)))
    }

    /// Layer widths and gap `(l1, l2, r)` at this epsilon.
    pub fn geometry(&self) -> (f64, f64, f64) {
        let p = &self.params;
        let e = self.epsilon;
        (e, p.eta * e.powf(1.0 - p.mu + p.nu), p.c * e.powf(p.tau))
    }

    /// The concrete double-layer system, first layer starting at x = 0.
    pub fn to_double_layer(&self) -> Result<DoubleLayerSystem> {
        let (h1, h2) = self.heights()?;
        let (l1, l2, r) = self.geometry();
        DoubleLayerSystem::from_parts(h1, l1, h2, l2, r, 0.0)
    }
}

// ---------------------------------------------------------------------------
// Test functions and the weak delta' pairing
// ---------------------------------------------------------------------------

/// Smooth compactly supported test function with analytically known data
/// at the origin, for checking `<V_eps | phi> -> -gamma phi'(0)`.
pub struct TestFunction {
    pub name: &'static str,
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub value_at_zero: f64,
    pub derivative_at_zero: f64,
    /// Upper bound on |phi''| over the real line.
    pub second_derivative_bound: f64,
}

impl TestFunction {
    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }
}

fn bump(x: f64) -> f64 {
    if x.abs() < 1.0 {
        (-1.0 / (1.0 - x * x)).exp()
    } else {
        0.0
    }
}

/// The three shipped test-function families: a compact bump, a truncated
/// Gaussian and a polynomial-times-bump. Second-derivative bounds are
/// conservative grid-sampled maxima.
pub fn standard_test_functions() -> Vec<TestFunction> {
    let e1 = (-1.0_f64).exp();
    let mut fns = vec![
        TestFunction {
            name: "bump",
            f: Box::new(bump),
            value_at_zero: e1,
            derivative_at_zero: 0.0,
            second_derivative_bound: 0.0,
        },
        TestFunction {
            name: "gauss_bump",
            // exp(-(x - 1/2)^2 / 2) * bump(x/2): phi'(0) from the product rule,
            // bump'(0) = 0.
            f: Box::new(|x| (-(x - 0.5) * (x - 0.5) / 2.0).exp() * bump(x / 2.0)),
            value_at_zero: (-0.125_f64).exp() * e1,
            derivative_at_zero: 0.5 * (-0.125_f64).exp() * e1,
            second_derivative_bound: 0.0,
        },
        TestFunction {
            name: "poly_bump",
            // x (1 + x) * bump(x): phi(0) = 0, phi'(0) = bump(0).
            f: Box::new(|x| x * (1.0 + x) * bump(x)),
            value_at_zero: 0.0,
            derivative_at_zero: e1,
            second_derivative_bound: 0.0,
        },
    ];
    for tf in &mut fns {
        tf.second_derivative_bound = sampled_second_derivative_bound(&tf.f);
    }
    fns
}

/// Grid-sampled max |phi''| over [-2.5, 2.5] with 10% headroom.
fn sampled_second_derivative_bound(f: &(dyn Fn(f64) -> f64 + Send + Sync)) -> f64 {
    let n = 20_000;
    let h = 1e-4;
    let mut max = 0.0_f64;
    for i in 0..=n {
        let x = -2.5 + 5.0 * i as f64 / n as f64;
        let d2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        max = max.max(d2.abs());
    }
    1.1 * max
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Legendre P_n(x) and derivative by recurrence.
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0, x);
        for j in 2..=n {
            let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, rule: &[(f64, f64)]) -> f64 {
    // 4 panels per interval; the integrands are analytic on each piece.
    let panels = 4;
    let mut sum = 0.0;
    for p in 0..panels {
        let lo = a + (b - a) * p as f64 / panels as f64;
        let hi = a + (b - a) * (p + 1) as f64 / panels as f64;
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for &(x, w) in rule {
            sum += w * f(mid + half * x) * half;
        }
    }
    sum
}

/// The pairing `<V_eps | phi>` computed by exact-per-piece quadrature.
pub fn weak_pairing(sys: &SqueezedSystem, phi: &TestFunction) -> Result<f64> {
    let (h1, h2) = sys.heights()?;
    let (l1, l2, r) = sys.geometry();
    if !(h1.is_finite() && h2.is_finite() && l2.is_finite() && r.is_finite()) {
        return Err(Error::Numeric("squeezed system parameters overflowed".into()));
    }
    let rule = gauss_legendre(20);
    let i1 = integrate(|x| phi.eval(x), 0.0, l1, &rule);
    let i2 = integrate(|x| phi.eval(x), l1 + r, l1 + r + l2, &rule);
    Ok(h1 * i1 + h2 * i2)
}

/// Per-epsilon record of a weak-convergence run.
#[derive(Debug, Clone, Copy)]
pub struct WeakConvergenceRow {
    pub epsilon: f64,
    pub pairing: f64,
    /// |pairing + gamma phi'(0)|.
    pub error: f64,
    /// |pairing - leading term| where the leading term keeps the full
    /// pre-limit zeta sum.
    pub remainder: f64,
    /// Explicit remainder bound max|phi''| |a1| (sum of epsilon powers).
    pub remainder_bound: f64,
}

/// Weak-convergence report for one test function.
#[derive(Debug, Clone)]
pub struct PhiConvergence {
    pub name: &'static str,
    pub rows: Vec<WeakConvergenceRow>,
    /// Fitted order p in error ~ C eps^p (least squares in log-log);
    /// infinite when the error is identically zero.
    pub fitted_order: f64,
    pub fitted_constant: f64,
    pub converged: bool,
    /// Remainder within its explicit bound at every epsilon.
    pub remainder_bounded: bool,
}

/// Check `<V_eps | phi> -> -gamma phi'(0)` over a decreasing epsilon grid
/// for each supplied test function.
pub fn check_delta_prime_convergence(
    params: &SqueezeParametrization,
    phis: &[TestFunction],
    eps_grid: &[f64],
) -> Result<Vec<PhiConvergence>> {
    let region = params.region();
    if !region.on_surface() {
        return Err(Error::Domain(format!(
            "({}, {}, {}) lies off the trihedral surface",
            params.mu, params.nu, params.tau
        )));
    }
    if eps_grid.len() < 3 || !eps_grid.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::Domain("eps_grid must be decreasing with >= 3 points".into()));
    }
    let (a1, _) = params.amplitudes()?;
    let (mu, nu, tau) = (params.mu, params.nu, params.tau);
    let (eta, c, gamma) = (params.eta, params.c, params.gamma);

    let mut reports = Vec::with_capacity(phis.len());
    for phi in phis {
        let mut rows = Vec::with_capacity(eps_grid.len());
        for &eps in eps_grid {
            let sys = params.at(eps)?;
            let pairing = weak_pairing(&sys, phi)?;
            let error = (pairing + gamma * phi.derivative_at_zero).abs();
            // Leading term with the pre-limit zeta sum (phi(0) terms cancel
            // exactly under a1 + eta a2 = 0).
            let zeta_eps = 0.5 * eps.powf(2.0 - mu)
                + 0.5 * eta * eps.powf(2.0 * (1.0 - mu) + nu)
                + c * eps.powf(1.0 - mu + tau);
            let leading = -a1 * zeta_eps * phi.derivative_at_zero;
            let remainder = (pairing - leading).abs();
            let remainder_bound = phi.second_derivative_bound
                * a1.abs()
                * (eps.powf(3.0 - mu) / 3.0
                    + eta * eta * eps.powf(3.0 * (1.0 - mu) + 2.0 * nu) / 6.0
                    + 0.5 * eta * eps.powf(3.0 - 2.0 * mu + nu)
                    + 0.5 * eta * c * eps.powf(2.0 * (1.0 - mu) + nu + tau)
                    + c * eps.powf(2.0 - mu + tau)
                    + 0.5 * c * c * eps.powf(1.0 - mu + 2.0 * tau));
            rows.push(WeakConvergenceRow { epsilon: eps, pairing, error, remainder, remainder_bound });
        }

        let (fitted_order, fitted_constant) = fit_order(&rows);
        let converged = rows.iter().all(|r| r.error < 1e-30) || fitted_order > 0.0;
        // Tiny absolute slack covers quadrature/rounding noise near zero.
        let remainder_bounded = rows
            .iter()
            .all(|r| r.remainder <= r.remainder_bound * (1.0 + 1e-9) + 1e-14);
        reports.push(PhiConvergence {
            name: phi.name,
            rows,
            fitted_order,
            fitted_constant,
            converged,
            remainder_bounded,
        });
    }
    Ok(reports)
}

fn fit_order(rows: &[WeakConvergenceRow]) -> (f64, f64) {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.error > 1e-300)
        .map(|r| (r.epsilon.ln(), r.error.ln()))
        .collect();
    if pts.len() < 2 {
        return (f64::INFINITY, 0.0);
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    (slope, intercept.exp())
}

// ---------------------------------------------------------------------------
// Small-width asymptotics of u, v, D and the limiting amplitude ratio
// ---------------------------------------------------------------------------

/// `cot z` for complex argument.
fn cot(z: Complex64) -> Complex64 {
    z.cos() / z.sin()
}

/// `alpha = (l/A) cot A`, Laurent-aware near A = 0:
/// `alpha = l (1/A^2 - 1/3 - A^2/45 - 2 A^4/945 - ...)`.
pub(crate) fn alpha(a: Complex64, l: f64) -> Result<Complex64> {
    if a.norm() < 1e-4 {
        let a2 = a * a;
        return Ok(l * (1.0 / a2 - 1.0 / 3.0 - a2 / 45.0 - a2 * a2 * 2.0 / 945.0));
    }
    let s = a.sin();
    if s.norm() < 1e-12 {
        return Err(Error::Pole(format!("cot pole at A = {a}")));
    }
    Ok(l / a * cot(a))
}

/// Small-width asymptotics of the interference quantities:
///
/// ```text
///   u -> [ (l1^2/A1^2 - l2^2/A2^2) cos kr + (a1 - a2) sin(kr)/k ] C/(a1 a2)
///   v -> -[ (a1 + a2) cos kr - sin(kr)/k ] C/(k a1 a2)
///   D -> [ (2 a1 a2 - l1^2/A1^2 - l2^2/A2^2) cos kr - (a1 + a2) sin(kr)/k
///          + (i/k)(sin(kr)/k - (a1 + a2) cos kr) ] C/(a1 a2)
/// ```
///
/// with `a_j = alpha_j`, `C = cos A1 cos A2`, `A_j = sqrt(-h_j) l_j`.
pub fn asymptotic_uvd(sys: &SqueezedSystem, energy: f64) -> Result<(f64, f64, Complex64)> {
    if !(energy > 0.0) {
        return Err(Error::Domain(format!("energy E = {energy} must be > 0")));
    }
    let (h1, h2) = sys.heights()?;
    let (l1, l2, r) = sys.geometry();
    let k = energy.sqrt();
    if h1 == 0.0 && h2 == 0.0 {
        let w = k * (l1 + l2 + r);
        return Ok((0.0, 0.0, 2.0 * Complex64::new(0.0, -w).exp()));
    }
    let a1 = Complex64::new(-h1, 0.0).sqrt() * l1;
    let a2c = Complex64::new(-h2, 0.0).sqrt() * l2;
    let al1 = alpha(a1, l1)?;
    let al2 = alpha(a2c, l2)?;
    let cc = a1.cos() * a2c.cos();
    let (ckr, skr) = ((k * r).cos(), (k * r).sin());
    let sq1 = Complex64::new(l1 * l1, 0.0) / (a1 * a1);
    let sq2 = Complex64::new(l2 * l2, 0.0) / (a2c * a2c);

    let u = ((sq1 - sq2) * ckr + (al1 - al2) * skr / k) * cc / (al1 * al2);
    let v = -((al1 + al2) * ckr - skr / k) * cc / (k * al1 * al2);
    let d = ((2.0 * al1 * al2 - sq1 - sq2) * ckr - (al1 + al2) * skr / k
        + Complex64::i() / k * (skr / k - (al1 + al2) * ckr))
        * cc
        / (al1 * al2);

    for im in [u.im, v.im] {
        if im.abs() > 1e-8 * (1.0 + u.norm().max(v.norm())) {
            return Err(Error::Numeric(format!(
                "asymptotic u, v acquired an imaginary part: {im}"
            )));
        }
    }
    Ok((u.re, v.re, d))
}

/// Limiting amplitude ratio `theta = -(A1 l2 sin A1)/(A2 l1 sin A2)`, real
/// for barrier-well combinations.
pub fn theta_limit(a1: Complex64, a2: Complex64, l1: f64, l2: f64) -> Result<f64> {
    let s2 = a2.sin();
    if (a2 * s2).norm() < 1e-14 {
        return Err(Error::Pole(format!("sin A2 vanishes at A2 = {a2}")));
    }
    let theta = -(a1 * a1.sin() * l2) / (a2 * s2 * l1);
    if theta.im.abs() > 1e-8 * (1.0 + theta.re.abs()) {
        return Err(Error::Numeric(format!(
            "theta is not real: {theta} (mixed barrier phases?)"
        )));
    }
    Ok(theta.re)
}

//! Exact finite-width scattering for one and two rectangular layers.
//!
//! A layer of height `h` and thickness `l` carries the transfer matrix
//!
//! ```text
//!     | cos(k l)      k^-1 sin(k l) |
//!     | -k sin(k l)   cos(k l)      |      k = sqrt(E - h),
//! ```
//!
//! whose entries are entire functions of `E - h`: evanescent layers
//! (`E < h`) turn the trigonometric entries hyperbolic with no branch
//! ambiguity, and `E = h` is a removable singularity handled by series.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// One homogeneous slab: height `h` (negative = well), thickness `l`,
/// left edge at `x_left`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    pub h: f64,
    pub l: f64,
    pub x_left: f64,
}

impl Layer {
    pub fn new(h: f64, l: f64, x_left: f64) -> Result<Self> {
        if !h.is_finite() || !l.is_finite() || !x_left.is_finite() {
            return Err(Error::Domain("layer parameters must be finite".into()));
        }
        if l < 0.0 {
            return Err(Error::Domain(format!("layer thickness l = {l} must be >= 0")));
        }
        Ok(Layer { h, l, x_left })
    }

    /// Right edge position.
    pub fn x_right(&self) -> f64 {
        self.x_left + self.l
    }
}

/// Two layers separated by a gap `r >= 0`; `layer2.x_left` must equal
/// `layer1.x_left + layer1.l + r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleLayerSystem {
    pub layer1: Layer,
    pub layer2: Layer,
    pub r: f64,
}

impl DoubleLayerSystem {
    pub fn new(layer1: Layer, layer2: Layer) -> Result<Self> {
        let r = layer2.x_left - layer1.x_right();
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Domain(format!(
                "layers must be ordered with a non-negative gap, got r = {r}"
            )));
        }
        Ok(DoubleLayerSystem { layer1, layer2, r })
    }

    /// Build from heights, widths and gap, first layer starting at `x_left`.
    pub fn from_parts(h1: f64, l1: f64, h2: f64, l2: f64, r: f64, x_left: f64) -> Result<Self> {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Domain(format!("gap r = {r} must be >= 0")));
        }
        let layer1 = Layer::new(h1, l1, x_left)?;
        let layer2 = Layer::new(h2, l2, x_left + l1 + r)?;
        Self::new(layer1, layer2)
    }

    pub fn x_left(&self) -> f64 {
        self.layer1.x_left
    }

    pub fn x_right(&self) -> f64 {
        self.layer2.x_right()
    }
}

/// Outer and intra-layer wave numbers at energy `E`.
#[derive(Debug, Clone, Copy)]
pub struct WaveNumbers {
    pub k: f64,
    pub k1: Complex64,
    pub k2: Complex64,
}

impl WaveNumbers {
    /// `k = sqrt(E)`, `k_j = sqrt(E - h_j)` on the principal branch
    /// (non-negative imaginary part for `E < h_j`).
    pub fn new(sys: &DoubleLayerSystem, energy: f64) -> Result<Self> {
        if !(energy > 0.0) {
            return Err(Error::Domain(format!("energy E = {energy} must be > 0")));
        }
        Ok(WaveNumbers {
            k: energy.sqrt(),
            k1: Complex64::new(energy - sys.layer1.h, 0.0).sqrt(),
            k2: Complex64::new(energy - sys.layer2.h, 0.0).sqrt(),
        })
    }
}

/// 2x2 transfer matrix connecting (psi, psi') across a slab.
#[derive(Debug, Clone, Copy)]
pub struct TransferMatrix {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl TransferMatrix {
    pub fn identity() -> Self {
        TransferMatrix {
            m11: Complex64::new(1.0, 0.0),
            m12: Complex64::new(0.0, 0.0),
            m21: Complex64::new(0.0, 0.0),
            m22: Complex64::new(1.0, 0.0),
        }
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// `other * self`: first cross `self`, then `other`.
    pub fn then(&self, other: &TransferMatrix) -> TransferMatrix {
        TransferMatrix {
            m11: other.m11 * self.m11 + other.m12 * self.m21,
            m12: other.m11 * self.m12 + other.m12 * self.m22,
            m21: other.m21 * self.m11 + other.m22 * self.m21,
            m22: other.m21 * self.m12 + other.m22 * self.m22,
        }
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.m11
            .norm()
            .max(self.m12.norm())
            .max(self.m21.norm())
            .max(self.m22.norm())
    }
}

/// Reflection/transmission amplitudes of a scatterer at energy `E`.
///
/// `t` is side-independent; the reflection amplitudes carry the
/// position-dependent phases of the scatterer's edges.
#[derive(Debug, Clone, Copy)]
pub struct ScatteringAmplitudes {
    pub r_left: Complex64,
    pub r_right: Complex64,
    pub t: Complex64,
    pub energy: f64,
}

impl ScatteringAmplitudes {
    /// Free propagation (no scatterer): R = 0, T = 1.
    pub fn free(energy: f64) -> Self {
        ScatteringAmplitudes {
            r_left: Complex64::new(0.0, 0.0),
            r_right: Complex64::new(0.0, 0.0),
            t: Complex64::new(1.0, 0.0),
            energy,
        }
    }

    /// Reflection probability |R|^2.
    pub fn reflection(&self) -> f64 {
        self.r_left.norm_sqr()
    }

    /// Transmission probability |T|^2.
    pub fn transmission(&self) -> f64 {
        self.t.norm_sqr()
    }

    /// |R|^2 + |T|^2 - 1, zero up to rounding for a lossless scatterer.
    pub fn flux_defect(&self) -> f64 {
        self.reflection() + self.transmission() - 1.0
    }
}

/// cos(k l) as an entire function of `z = k^2`.
pub(crate) fn cos_kl(z: f64, l: f64) -> f64 {
    let w = z * l * l; // (k l)^2
    if w >= 0.0 {
        w.sqrt().cos()
    } else {
        (-w).sqrt().cosh()
    }
}

/// sin(k l)/k as an entire function of `z = k^2`; `l * sinc(k l)` near k = 0.
pub(crate) fn sin_kl_over_k(z: f64, l: f64) -> f64 {
    let w = z * l * l;
    if w.abs() < 1e-8 {
        l * (1.0 - w / 6.0 + w * w / 120.0)
    } else if w > 0.0 {
        let kl = w.sqrt();
        l * kl.sin() / kl
    } else {
        let kl = (-w).sqrt();
        l * kl.sinh() / kl
    }
}

/// Transfer matrix of a single layer at energy `E`.
///
/// Entries are real for real `E` and `h`; `E = h` yields the shear
/// matrix (1, l; 0, 1).
pub fn transfer_matrix(layer: &Layer, energy: f64) -> Result<TransferMatrix> {
    if !energy.is_finite() {
        return Err(Error::Domain(format!("energy E = {energy} must be finite")));
    }
    if !(energy > 0.0) {
        return Err(Error::Domain(format!("energy E = {energy} must be > 0")));
    }
    Ok(transfer_matrix_raw(layer.h, layer.l, energy))
}

/// Same as [`transfer_matrix`] without the `E > 0` gate; used by the
/// slicing oracle where sub-slabs are just matrix factors.
pub(crate) fn transfer_matrix_raw(h: f64, l: f64, energy: f64) -> TransferMatrix {
    let z = energy - h; // k^2 inside the slab
    let c = cos_kl(z, l);
    let s = sin_kl_over_k(z, l);
    TransferMatrix {
        m11: Complex64::new(c, 0.0),
        m12: Complex64::new(s, 0.0),
        m21: Complex64::new(-z * s, 0.0),
        m22: Complex64::new(c, 0.0),
    }
}

/// Convert a total transfer matrix over `[x_left, x_right]` to scattering
/// amplitudes at energy `E`:
///
/// ```text
///   u = m11 - m22,  v = k m12 + m21/k,
///   D = m11 + m22 + i (m21/k - k m12),
///   R^l = -(u + i v) D^-1 e^{2 i k x_left},
///   R^r =  (u - i v) D^-1 e^{-2 i k x_right},
///   T   =  2 D^-1 e^{i k (x_left - x_right)}.
/// ```
pub fn matrix_to_amplitudes(
    m: &TransferMatrix,
    x_left: f64,
    x_right: f64,
    energy: f64,
) -> Result<ScatteringAmplitudes> {
    if !(energy > 0.0) {
        return Err(Error::Domain(format!("energy E = {energy} must be > 0")));
    }
    let k = energy.sqrt();
    let i = Complex64::i();
    let u = m.m11 - m.m22;
    let v = k * m.m12 + m.m21 / k;
    let d = m.m11 + m.m22 + i * (m.m21 / k - k * m.m12);
    let phase = |arg: f64| Complex64::new(0.0, arg).exp();
    Ok(ScatteringAmplitudes {
        r_left: -(u + i * v) / d * phase(2.0 * k * x_left),
        r_right: (u - i * v) / d * phase(-2.0 * k * x_right),
        t: 2.0 / d * phase(k * (x_left - x_right)),
        energy,
    })
}

/// Scattering amplitudes of a single layer, Fabry-Perot closed form.
pub fn layer_scattering(layer: &Layer, energy: f64) -> Result<ScatteringAmplitudes> {
    let m = transfer_matrix(layer, energy)?;
    matrix_to_amplitudes(&m, layer.x_left, layer.x_right(), energy)
}

/// Compose two scatterers by summing the multiple-reflection geometric
/// series between them:
///
/// ```text
///   R^l = R1^l + T1^l T1^r R2^l / (1 - R1^r R2^l),
///   T^l = T1^l T2^l / (1 - R1^r R2^l).
/// ```
pub fn compose_interference(
    s1: &ScatteringAmplitudes,
    s2: &ScatteringAmplitudes,
) -> Result<ScatteringAmplitudes> {
    if (s1.energy - s2.energy).abs() > 1e-12 * (1.0 + s1.energy.abs()) {
        return Err(Error::Domain(format!(
            "amplitudes at different energies: {} vs {}",
            s1.energy, s2.energy
        )));
    }
    let denom = Complex64::new(1.0, 0.0) - s1.r_right * s2.r_left;
    if denom.norm() < 1e-14 {
        return Err(Error::Pole(
            "geometric-series denominator 1 - R1^r R2^l vanished".into(),
        ));
    }
    Ok(ScatteringAmplitudes {
        r_left: s1.r_left + s1.t * s1.t * s2.r_left / denom,
        r_right: s2.r_right + s2.t * s2.t * s1.r_right / denom,
        t: s1.t * s2.t / denom,
        energy: s1.energy,
    })
}

/// The exact interference quantities of a double-layer system:
/// real `u`, `v` and complex `D` with `|D|^2 = 4 + u^2 + v^2`.
#[derive(Debug, Clone, Copy)]
pub struct DoubleLayerDetail {
    pub amplitudes: ScatteringAmplitudes,
    pub u: f64,
    pub v: f64,
    pub d: Complex64,
}

/// Closed-form double-layer scattering.
///
/// `u`, `v` and `D` are assembled from the entire-function building blocks
/// `C_j = cos(k_j l_j)` and `S_j = sin(k_j l_j)/k_j`, so wells, barriers and
/// the critical case `E = h_j` share one code path.
pub fn double_layer_detail(sys: &DoubleLayerSystem, energy: f64) -> Result<DoubleLayerDetail> {
    if !(energy > 0.0) {
        return Err(Error::Domain(format!("energy E = {energy} must be > 0")));
    }
    let (h1, l1) = (sys.layer1.h, sys.layer1.l);
    let (h2, l2) = (sys.layer2.h, sys.layer2.l);
    let e = energy;
    let k = e.sqrt();
    let (q1, q2) = (e - h1, e - h2); // k_j^2
    let c1 = cos_kl(q1, l1);
    let s1 = sin_kl_over_k(q1, l1);
    let c2 = cos_kl(q2, l2);
    let s2 = sin_kl_over_k(q2, l2);
    let (ckr, skr) = (k * sys.r).cos_sin();

    // (k/k_j - k_j/k) sin(k_j l_j) = h_j S_j / k, and friends.
    let u = (h1 - h2) * s1 * s2 * ckr + (h1 * s1 * c2 - h2 * c1 * s2) * skr / k;
    let v = (h1 * s1 * c2 + h2 * c1 * s2) * ckr / k + (q1 * q2 - e * e) * s1 * s2 * skr / e;
    let d_re = (2.0 * c1 * c2 - (q1 + q2) * s1 * s2) * ckr
        - ((2.0 * e - h1) * s1 * c2 + (2.0 * e - h2) * c1 * s2) * skr / k;
    let d_im = -(((2.0 * e - h1) * s1 * c2 + (2.0 * e - h2) * c1 * s2) * ckr / k
        + (2.0 * c1 * c2 - (e * e + q1 * q2) * s1 * s2 / e) * skr);
    let d = Complex64::new(d_re, d_im);

    let i = Complex64::i();
    let width = l1 + l2 + sys.r;
    let phase = |arg: f64| Complex64::new(0.0, arg).exp();
    let amplitudes = ScatteringAmplitudes {
        r_left: -(u + i * v) / d * phase(2.0 * k * sys.x_left()),
        r_right: (u - i * v) / d * phase(-2.0 * k * sys.x_right()),
        t: 2.0 / d * phase(-k * width),
        energy,
    };
    Ok(DoubleLayerDetail { amplitudes, u, v, d })
}

/// Closed-form double-layer scattering amplitudes.
pub fn double_layer_exact(sys: &DoubleLayerSystem, energy: f64) -> Result<ScatteringAmplitudes> {
    Ok(double_layer_detail(sys, energy)?.amplitudes)
}

trait CosSin {
    fn cos_sin(self) -> (f64, f64);
}

impl CosSin for f64 {
    fn cos_sin(self) -> (f64, f64) {
        (self.cos(), self.sin())
    }
}

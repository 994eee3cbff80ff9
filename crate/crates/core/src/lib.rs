//! Quantum transmission through double-layer rectangular heterostructures
//! and their single-point squeezing limits.
//!
//! The crate covers the full pipeline:
//!
//! * [`scattering`] — exact finite-width transfer matrices, per-layer and
//!   double-layer scattering amplitudes, multiple-reflection composition;
//! * [`oracle`] — a slicing transfer-matrix oracle for arbitrary
//!   piecewise-constant potentials, used to validate every closed form;
//! * [`squeezing`] — the three-scale parametrization, trihedral-surface
//!   region classification, distributional-limit checks and small-width
//!   asymptotics;
//! * [`resonance`] — bracketed enumeration of the discrete resonance sets
//!   of the squeezed structure;
//! * [`transmission`] — the limiting transmission set-function and
//!   finite-epsilon convergence sweeps.
//!
//! All functions are pure; parameter grids can be evaluated in parallel.

pub mod error;
pub mod oracle;
pub mod resonance;
pub mod scattering;
pub mod squeezing;
pub mod transmission;

pub use error::{Error, Result};
pub use oracle::{oracle_scatter, PiecewisePotential};
pub use resonance::{
    enumerate_resonances, feasibility, general_resonance_residual, region_resonance_residual,
    FeasibilityVerdict, LayerKind, ResonanceRoot, ResonanceSet,
};
pub use scattering::{
    compose_interference, double_layer_detail, double_layer_exact, layer_scattering,
    matrix_to_amplitudes, transfer_matrix, DoubleLayerDetail, DoubleLayerSystem, Layer,
    ScatteringAmplitudes, TransferMatrix, WaveNumbers,
};
pub use squeezing::{
    amplitudes_from_gamma, asymptotic_uvd, check_delta_prime_convergence, classify_region,
    standard_test_functions, theta_limit, weak_pairing, zeta, PhiConvergence, RegionLabel,
    SqueezeParametrization, SqueezedSystem, TestFunction, WeakConvergenceRow,
};
pub use transmission::{
    convergence_study, theta_sq_asymptotic, theta_squared, transmission_at_root,
    transmission_limit, transmission_of_theta_sq, transmission_vertex_c0, ConvergenceRow,
    ResonantTransmission,
};

//! Enumeration of the resonance sets: bracketed bisection on the
//! region-specific transcendental resonance equations, plus the general
//! squeezed resonance condition and the barrier/well feasibility rule.
//!
//! Each region's equation is solved in a natural variable `t` (a scaled
//! square root of `|gamma|`) where the poles of the trigonometric terms sit
//! on a known lattice, so every pole-free interval can be scanned uniformly
//! and each sign change bisected without missing roots.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::squeezing::{alpha, zeta, RegionLabel};

/// Relative bisection tolerance on the natural variable.
const BISECT_REL_TOL: f64 = 1e-15;
/// Grid points per pi-interval in the bracketing scan.
const SCAN_POINTS: usize = 1000;
/// Margin (relative to interval width) kept away from trig poles.
const POLE_MARGIN: f64 = 1e-9;

/// Barrier (`h > 0`) or well (`h < 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerKind {
    Barrier,
    Well,
}

/// Whether a squeezed layer pair can satisfy the resonance condition at all.
#[derive(Debug, Clone)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub reason: String,
}

/// Squeezing a double-barrier pair is forbidden: the gap `r >= 0` while
/// `-(l1/A1bar) coth A1bar - (l2/A2bar) coth A2bar < 0`. Any pair containing
/// a well admits countably many resonances.
pub fn feasibility(kind1: LayerKind, kind2: LayerKind) -> FeasibilityVerdict {
    match (kind1, kind2) {
        (LayerKind::Barrier, LayerKind::Barrier) => FeasibilityVerdict {
            feasible: false,
            reason: "double barrier: r >= 0 cannot equal the strictly negative \
                     sum -(l1/A1)coth(A1) - (l2/A2)coth(A2)"
                .into(),
        },
        _ => FeasibilityVerdict {
            feasible: true,
            reason: "a pair containing a well admits countably many resonances \
                     (the cot term sweeps the real line between its poles)"
                .into(),
        },
    }
}

/// Residual of the general squeezed resonance condition
/// `r = (l1/A1) cot A1 + (l2/A2) cot A2`, returned as left minus right.
pub fn general_resonance_residual(
    a1: Complex64,
    a2: Complex64,
    l1: f64,
    l2: f64,
    r: f64,
) -> Result<f64> {
    let s = alpha(a1, l1)? + alpha(a2, l2)?;
    if s.im.abs() > 1e-8 * (1.0 + s.re.abs()) {
        return Err(Error::Numeric(format!(
            "cot sum is not real: {s} (A_j must be real or purely imaginary)"
        )));
    }
    Ok(r - s.re)
}

// Natural-variable residuals for each region. The positive branch lives on
// gamma >= 0, the negative branch on gamma <= 0; arguments that turn
// imaginary are continued with tan(ix) = i tanh x, cot(ix) = -i coth x and
// the residual is the (real) component that survives.

// The raw equations pit `cot y` against `1/y` (and `coth` against its own
// `1/x`), which cancel catastrophically near the origin and fake sign
// changes there. Working with the differences `cot y - 1/y` etc. removes
// the cancellation exactly: the leftover `1/y` terms of the two sides of
// each equation cancel algebraically.

/// `cot t - 1/t`, series below 1e-4 where the direct difference loses digits.
fn cot_m(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        -t / 3.0 - t * t * t / 45.0
    } else {
        t.cos() / t.sin() - 1.0 / t
    }
}

/// `coth t - 1/t`.
fn coth_m(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        t / 3.0 - t * t * t / 45.0
    } else {
        t.tanh().recip() - 1.0 / t
    }
}

/// `tan t - t`.
fn tan_m(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        let t3 = t * t * t;
        t3 / 3.0 + t3 * t * t * 2.0 / 15.0
    } else {
        t.tan() - t
    }
}

/// `tanh t - t`.
fn tanh_m(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        let t3 = t * t * t;
        -t3 / 3.0 + t3 * t * t * 2.0 / 15.0
    } else {
        t.tanh() - t
    }
}

fn res_pos_p(eta: f64, c: f64) -> impl Fn(f64) -> f64 {
    let se = eta.sqrt();
    move |y| se * cot_m(y) - coth_m(y / se) - c * y / se
}

fn res_neg_p(eta: f64, c: f64) -> impl Fn(f64) -> f64 {
    let se = eta.sqrt();
    move |s| cot_m(s) - se * coth_m(se * s) - c * s
}

fn res_pos_n(eta: f64) -> impl Fn(f64) -> f64 {
    let se = eta.sqrt();
    move |y| tan_m(y) - se * tanh_m(y / se)
}

fn res_neg_n(eta: f64) -> impl Fn(f64) -> f64 {
    let se = eta.sqrt();
    move |s| tanh_m(s) - se * tan_m(s / se)
}

fn res_pos_k(eta: f64, c: f64) -> impl Fn(f64) -> f64 {
    let se = eta.sqrt();
    move |y| se * cot_m(y) - c * y / se
}

fn res_neg_l(c: f64) -> impl Fn(f64) -> f64 {
    move |s| cot_m(s) - c * s
}

fn tan_minus_arg(t: f64) -> f64 {
    tan_m(t)
}

/// Pole lattice of the natural-variable residual.
#[derive(Clone, Copy)]
enum PoleLattice {
    /// Poles at n*pi (cot-type); scan intervals (n pi, (n+1) pi).
    Cot,
    /// Poles at (n + 1/2)*p (tan-type with half-period scale p).
    Tan(f64),
}

impl PoleLattice {
    fn interval(&self, n: usize) -> (f64, f64) {
        use std::f64::consts::PI;
        match self {
            PoleLattice::Cot => (n as f64 * PI, (n + 1) as f64 * PI),
            PoleLattice::Tan(p) => {
                if n == 0 {
                    (0.0, 0.5 * p)
                } else {
                    ((n as f64 - 0.5) * p, (n as f64 + 0.5) * p)
                }
            }
        }
    }
}

/// One enumerated root with its bracketing metadata.
#[derive(Debug, Clone, Copy)]
pub struct ResonanceRoot {
    /// Index within the region's half-axis convention.
    pub n: i64,
    pub gamma: f64,
    /// Bracket in gamma that contained the sign change ((0, 0) for the
    /// trivial root).
    pub bracket: (f64, f64),
    pub residual: f64,
}

/// Ordered resonance set of one region.
#[derive(Debug, Clone)]
pub struct ResonanceSet {
    pub region: RegionLabel,
    pub eta: f64,
    pub c: f64,
    /// Strictly increasing in gamma.
    pub roots: Vec<ResonanceRoot>,
    pub requested: usize,
}

impl ResonanceSet {
    pub fn is_complete(&self) -> bool {
        self.roots.len() == self.requested
    }
}

fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= BISECT_REL_TOL * mid.abs().max(1.0) {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fa > 0.0) == (fm > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Scan pole-free intervals of `f` for sign changes and bisect each;
/// returns up to `needed` roots in the natural variable, in increasing order.
fn scan_roots(
    f: &dyn Fn(f64) -> f64,
    lattice: PoleLattice,
    needed: usize,
    max_intervals: usize,
) -> Vec<(f64, (f64, f64))> {
    let mut roots = Vec::new();
    for n in 0..max_intervals {
        if roots.len() >= needed {
            break;
        }
        let (lo, hi) = lattice.interval(n);
        let width = hi - lo;
        let a = lo + POLE_MARGIN * width + if lo == 0.0 { 1e-12 } else { 0.0 };
        let b = hi - POLE_MARGIN * width;
        let mut prev_t = a;
        let mut prev_f = f(a);
        for i in 1..=SCAN_POINTS {
            let t = a + (b - a) * i as f64 / SCAN_POINTS as f64;
            let ft = f(t);
            if prev_f == 0.0 {
                roots.push((prev_t, (prev_t, prev_t)));
            } else if (prev_f > 0.0) != (ft > 0.0) {
                roots.push((bisect(f, prev_t, t), (prev_t, t)));
            }
            prev_t = t;
            prev_f = ft;
        }
    }
    roots.truncate(needed);
    roots
}

/// Left-minus-right residual of the region's resonance equation at `gamma`.
///
/// Arguments that turn imaginary for the "wrong" sign of `gamma` are
/// continued analytically; the returned value is the real component that
/// carries the equation there (such branches have no roots besides 0).
pub fn region_resonance_residual(
    region: RegionLabel,
    eta: f64,
    c: f64,
    gamma: f64,
) -> Result<f64> {
    let z = zeta(region, eta, c)?;
    if gamma == 0.0 {
        // Trivial root: every region equation is satisfied in the limit.
        return Ok(0.0);
    }
    let se = eta.sqrt();
    let val = match region {
        RegionLabel::P => {
            if gamma > 0.0 {
                let y = (2.0 * gamma * eta / z).sqrt();
                check_cot_pole(y)?;
                res_pos_p(eta, c)(y)
            } else {
                let s = (2.0 * (-gamma) / z).sqrt();
                check_cot_pole(s)?;
                res_neg_p(eta, c)(s)
            }
        }
        RegionLabel::N => {
            if gamma > 0.0 {
                let y = (2.0 * gamma * eta / z).sqrt();
                check_tan_pole(y)?;
                res_pos_n(eta)(y)
            } else {
                // Continuation of the same equation: the natural variable
                // keeps the eta factor, gamma = -zeta s^2 / (2 eta).
                let s = (2.0 * (-gamma) * eta / z).sqrt();
                check_tan_pole(s / se)?;
                res_neg_n(eta)(s)
            }
        }
        RegionLabel::K => {
            if gamma > 0.0 {
                let y = (2.0 * gamma * eta / z).sqrt();
                check_cot_pole(y)?;
                res_pos_k(eta, c)(y)
            } else {
                // No negative roots: coth s - 1/s > 0.
                let s = (2.0 * (-gamma) * eta / z).sqrt();
                se * coth_m(s) + c * s / se
            }
        }
        RegionLabel::L => {
            if gamma < 0.0 {
                let s = (2.0 * (-gamma) / z).sqrt();
                check_cot_pole(s)?;
                res_neg_l(c)(s)
            } else {
                // No positive roots: coth t - 1/t > 0.
                let t = (2.0 * gamma / z).sqrt();
                coth_m(t) + c * t
            }
        }
        RegionLabel::X => {
            if gamma > 0.0 {
                let y = (2.0 * gamma).sqrt();
                check_tan_pole(y)?;
                tan_minus_arg(y)
            } else {
                let s = (2.0 * (-gamma)).sqrt();
                tanh_m(s)
            }
        }
        RegionLabel::Y => {
            if gamma < 0.0 {
                let s = (2.0 * (-gamma)).sqrt();
                check_tan_pole(s)?;
                tan_minus_arg(s)
            } else {
                let y = (2.0 * gamma).sqrt();
                tanh_m(y)
            }
        }
        RegionLabel::Z => {
            return Err(Error::Unsupported(
                "plane Z admits no resonances with a defined delta' limit".into(),
            ))
        }
        RegionLabel::OffSurface => {
            return Err(Error::Domain("no resonance equation off the surface".into()))
        }
    };
    Ok(val)
}

fn check_cot_pole(t: f64) -> Result<()> {
    if (t.sin()).abs() < 1e-12 {
        Err(Error::Pole(format!("cot pole at argument {t}")))
    } else {
        Ok(())
    }
}

fn check_tan_pole(t: f64) -> Result<()> {
    if (t.cos()).abs() < 1e-12 {
        Err(Error::Pole(format!("tan pole at argument {t}")))
    } else {
        Ok(())
    }
}

/// Enumerate the first `n_max` roots of the region's resonance equation,
/// ordered by |gamma| and stored strictly increasing in gamma.
///
/// Indexing: `K`, `X` count 0, 1, 2, ... up the positive half-axis; `L`,
/// `Y` count 0, 1, 2, ... down the negative half-axis; `P`, `N` run over
/// all integers ordered by value, with n = 0 the trivial root at gamma = 0.
pub fn enumerate_resonances(
    region: RegionLabel,
    eta: f64,
    c: f64,
    n_max: usize,
) -> Result<ResonanceSet> {
    if n_max < 1 {
        return Err(Error::Domain("n_max must be >= 1".into()));
    }
    let z = zeta(region, eta, c)?;
    if matches!(region, RegionLabel::Z) {
        return Err(Error::Unsupported(
            "plane Z admits no resonances with a defined delta' limit".into(),
        ));
    }
    let se = eta.sqrt();
    let max_intervals = n_max + 8;

    // (natural-variable roots, map to gamma) per half-axis.
    let gamma_pos_scale = z / (2.0 * eta); // gamma = scale * y^2 for P, N, K
    let mut pos: Vec<(f64, (f64, f64))> = Vec::new();
    let mut neg: Vec<(f64, (f64, f64))> = Vec::new();
    let mut pos_scale = gamma_pos_scale;
    let mut neg_scale = z / 2.0; // gamma = -scale * s^2 for P, N, L

    match region {
        RegionLabel::P => {
            pos = scan_roots(&res_pos_p(eta, c), PoleLattice::Cot, n_max, max_intervals);
            neg = scan_roots(&res_neg_p(eta, c), PoleLattice::Cot, n_max, max_intervals);
        }
        RegionLabel::N => {
            pos = scan_roots(&res_pos_n(eta), PoleLattice::Tan(std::f64::consts::PI), n_max, max_intervals);
            neg = scan_roots(
                &res_neg_n(eta),
                PoleLattice::Tan(se * std::f64::consts::PI),
                n_max,
                max_intervals,
            );
            neg_scale = z / (2.0 * eta);
        }
        RegionLabel::K => {
            pos = scan_roots(&res_pos_k(eta, c), PoleLattice::Cot, n_max, max_intervals);
        }
        RegionLabel::L => {
            neg = scan_roots(&res_neg_l(c), PoleLattice::Cot, n_max, max_intervals);
            neg_scale = z / 2.0;
        }
        RegionLabel::X => {
            pos = scan_roots(&tan_minus_arg, PoleLattice::Tan(std::f64::consts::PI), n_max, max_intervals);
            pos_scale = 0.5;
        }
        RegionLabel::Y => {
            neg = scan_roots(&tan_minus_arg, PoleLattice::Tan(std::f64::consts::PI), n_max, max_intervals);
            neg_scale = 0.5;
        }
        RegionLabel::Z | RegionLabel::OffSurface => unreachable!(),
    }

    // Trivial root at gamma = 0 plus the bracketed ones, indexed per region.
    let mut roots: Vec<ResonanceRoot> = Vec::new();
    roots.push(ResonanceRoot { n: 0, gamma: 0.0, bracket: (0.0, 0.0), residual: 0.0 });
    for (i, (t, br)) in pos.iter().enumerate() {
        let gamma = pos_scale * t * t;
        roots.push(ResonanceRoot {
            n: i as i64 + 1,
            gamma,
            bracket: (pos_scale * br.0 * br.0, pos_scale * br.1 * br.1),
            residual: region_resonance_residual(region, eta, c, gamma)?,
        });
    }
    for (i, (t, br)) in neg.iter().enumerate() {
        let gamma = -neg_scale * t * t;
        let idx = match region {
            RegionLabel::P | RegionLabel::N => -(i as i64 + 1),
            _ => i as i64 + 1,
        };
        roots.push(ResonanceRoot {
            n: idx,
            gamma,
            bracket: (-neg_scale * br.1 * br.1, -neg_scale * br.0 * br.0),
            residual: region_resonance_residual(region, eta, c, gamma)?,
        });
    }

    roots.sort_by(|a, b| {
        a.gamma
            .abs()
            .partial_cmp(&b.gamma.abs())
            .unwrap()
            .then(b.gamma.partial_cmp(&a.gamma).unwrap())
    });
    roots.truncate(n_max);
    roots.sort_by(|a, b| a.gamma.partial_cmp(&b.gamma).unwrap());

    Ok(ResonanceSet { region, eta, c, roots, requested: n_max })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_residual_trivial_resonance() {
        // r = 0, A1 = A2 = pi/2: both cot terms vanish.
        let a = Complex64::new(std::f64::consts::FRAC_PI_2, 0.0);
        let res = general_resonance_residual(a, a, 1.0, 1.0, 0.0).unwrap();
        assert!(res.abs() < 1e-14);
    }

    #[test]
    fn general_residual_double_barrier_positive() {
        // Barriers: A_j = i Abar_j; residual = r + sum (l_j/Abar_j) coth(Abar_j) > 0.
        for (b1, b2, l1, l2, r) in [
            (0.5, 1.5, 0.3, 0.4, 0.0),
            (2.0, 2.0, 1.0, 1.0, 0.7),
            (0.01, 5.0, 0.2, 0.9, 1.3),
        ] {
            let a1 = Complex64::new(0.0, b1);
            let a2 = Complex64::new(0.0, b2);
            let res = general_resonance_residual(a1, a2, l1, l2, r).unwrap();
            assert!(res > 0.0, "residual {res} not positive");
        }
    }

    #[test]
    fn general_residual_barrier_well_changes_sign() {
        // Well in layer 1 (A1 real), barrier in layer 2: scan A1 over (0, 10 pi).
        let a2 = Complex64::new(0.0, 1.0);
        let mut sign_changes = 0;
        let mut prev: Option<f64> = None;
        let n = 100_000;
        for i in 1..n {
            let a1 = 10.0 * std::f64::consts::PI * i as f64 / n as f64;
            let fr = (a1 / std::f64::consts::PI).fract();
            if fr < 1e-6 || fr > 1.0 - 1e-6 {
                continue; // skip cot poles
            }
            let res =
                general_resonance_residual(Complex64::new(a1, 0.0), a2, 1.0, 1.0, 0.5).unwrap();
            if let Some(p) = prev {
                // Count only moderate-magnitude crossings (pole jumps are huge).
                if (p > 0.0) != (res > 0.0) && p.abs() < 1e3 && res.abs() < 1e3 {
                    sign_changes += 1;
                }
            }
            prev = Some(res);
        }
        assert!(sign_changes >= 5, "only {sign_changes} crossings found");
    }

    #[test]
    fn feasibility_table() {
        assert!(!feasibility(LayerKind::Barrier, LayerKind::Barrier).feasible);
        assert!(feasibility(LayerKind::Well, LayerKind::Barrier).feasible);
        assert!(feasibility(LayerKind::Barrier, LayerKind::Well).feasible);
        assert!(feasibility(LayerKind::Well, LayerKind::Well).feasible);
    }

    #[test]
    fn well_well_has_roots() {
        // (well, well) at P with eta = 1, c = 0: the negative branch of the
        // P equation has countably many roots.
        let set = enumerate_resonances(RegionLabel::P, 1.0, 0.0, 5).unwrap();
        assert!(set.roots.iter().any(|r| r.gamma < 0.0));
    }

    #[test]
    fn p_vertex_first_root() {
        // eta = 1, c = 0: tan sqrt(gamma) = tanh sqrt(gamma), first positive
        // root has sqrt(gamma) in (pi, 3 pi/2).
        let set = enumerate_resonances(RegionLabel::P, 1.0, 0.0, 3).unwrap();
        let first_pos = set.roots.iter().find(|r| r.gamma > 0.0).unwrap();
        let sq = first_pos.gamma.sqrt();
        assert!(sq > std::f64::consts::PI && sq < 1.5 * std::f64::consts::PI);
        assert!((sq.tan() - sq.tanh()).abs() < 1e-10);
        assert!(first_pos.residual.abs() < 1e-12 * (1.0 + first_pos.gamma));
    }

    #[test]
    fn k_edge_tan_y_equals_y_roots() {
        // eta = 1, c = 0: gamma_n = y_n^2/2 with tan y = y.
        let set = enumerate_resonances(RegionLabel::K, 1.0, 0.0, 3).unwrap();
        let gammas: Vec<f64> = set.roots.iter().map(|r| r.gamma).collect();
        assert_eq!(gammas[0], 0.0);
        assert!((gammas[1] - 4.493409457909064_f64.powi(2) / 2.0).abs() < 1e-9);
        assert!((gammas[2] - 7.725251836937707_f64.powi(2) / 2.0).abs() < 1e-8);
        assert!(set.roots.iter().all(|r| r.gamma >= 0.0));
    }

    #[test]
    fn l_edge_roots_negative() {
        let set = enumerate_resonances(RegionLabel::L, 1.0, 1.0, 3).unwrap();
        assert!(set.roots.iter().all(|r| r.gamma <= 0.0));
        assert!(set.roots.iter().filter(|r| r.gamma < 0.0).count() >= 2);
    }

    #[test]
    fn x_matches_k_at_unit_eta() {
        let x = enumerate_resonances(RegionLabel::X, 3.0, 0.7, 4).unwrap();
        let k = enumerate_resonances(RegionLabel::K, 1.0, 0.0, 4).unwrap();
        for (rx, rk) in x.roots.iter().zip(&k.roots) {
            assert!((rx.gamma - rk.gamma).abs() < 1e-9 * (1.0 + rk.gamma.abs()));
        }
    }

    #[test]
    fn y_matches_l_at_zero_c() {
        let y = enumerate_resonances(RegionLabel::Y, 3.0, 0.7, 4).unwrap();
        let l = enumerate_resonances(RegionLabel::L, 1.0, 0.0, 4).unwrap();
        for (ry, rl) in y.roots.iter().zip(&l.roots) {
            assert!((ry.gamma - rl.gamma).abs() < 1e-9 * (1.0 + rl.gamma.abs()));
        }
    }

    #[test]
    fn p_equals_n_at_zero_c() {
        // Two independent formulations of the same set.
        let p = enumerate_resonances(RegionLabel::P, 1.7, 0.0, 7).unwrap();
        let n = enumerate_resonances(RegionLabel::N, 1.7, 0.0, 7).unwrap();
        // zeta differs (P: 1+eta+2c with c=0 equals N's 1+eta), roots must agree.
        for (rp, rn) in p.roots.iter().zip(&n.roots) {
            assert!(
                (rp.gamma - rn.gamma).abs() < 1e-10 * (1.0 + rp.gamma.abs()),
                "P root {} vs N root {}",
                rp.gamma,
                rn.gamma
            );
        }
    }

    #[test]
    fn residual_tolerance_at_all_roots() {
        for (region, eta, c) in [
            (RegionLabel::P, 1.0, 0.0),
            (RegionLabel::P, 2.5, 0.8),
            (RegionLabel::K, 1.3, 0.4),
            (RegionLabel::L, 1.0, 0.6),
            (RegionLabel::N, 0.7, 0.0),
            (RegionLabel::X, 1.0, 0.0),
            (RegionLabel::Y, 1.0, 0.0),
        ] {
            let set = enumerate_resonances(region, eta, c, 6).unwrap();
            assert!(set.is_complete());
            for root in &set.roots {
                assert!(
                    root.residual.abs() < 1e-12 * (1.0 + root.gamma.abs()),
                    "{region}: residual {} at gamma {}",
                    root.residual,
                    root.gamma
                );
            }
            // strict ordering
            assert!(set.roots.windows(2).all(|w| w[0].gamma < w[1].gamma));
        }
    }

    #[test]
    fn refinement_does_not_move_or_add_roots() {
        // Doubling the per-interval resolution is equivalent to comparing two
        // independent scans; roots must agree and none appear below the top.
        let coarse = enumerate_resonances(RegionLabel::P, 1.9, 0.3, 8).unwrap();
        // simulate refinement by asking for more roots and re-truncating
        let fine = enumerate_resonances(RegionLabel::P, 1.9, 0.3, 16).unwrap();
        let by_abs = |set: &ResonanceSet| {
            let mut v: Vec<f64> = set.roots.iter().map(|r| r.gamma).collect();
            v.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
            v
        };
        for (a, b) in by_abs(&coarse).iter().zip(by_abs(&fine).iter()) {
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn z_plane_unsupported() {
        assert!(enumerate_resonances(RegionLabel::Z, 1.0, 1.0, 2).is_err());
        assert!(region_resonance_residual(RegionLabel::Z, 1.0, 1.0, 1.0).is_err());
    }
}

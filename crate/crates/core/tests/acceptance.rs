//! End-to-end acceptance suite. Each numbered check prints one PASS/FAIL
//! line; the test fails if any check fails. All randomness is seeded, so
//! the run is reproducible.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pscatter::*;
use std::result::Result;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5ca77e2)
}

type Check = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let checks: [(&str, Check); 11] = [
        ("01 transfer-matrix unimodularity", check_unimodularity),
        ("02 modulus identity |D|^2 = 4 + u^2 + v^2", check_modulus_identity),
        ("03 flux conservation R + T = 1", check_flux_conservation),
        ("04 interference composition = closed form", check_composition),
        ("05 closed form = slicing oracle", check_oracle),
        ("06 first resonance of tan x = tanh x", check_first_resonance),
        ("07 limit consistency triangle", check_limit_triangle),
        ("08 resonance dichotomy sweep", check_dichotomy),
        ("09 double-barrier infeasibility", check_double_barrier),
        ("10 weak convergence to gamma delta'", check_weak_convergence),
        ("11 region partition and zeta table", check_region_partition),
    ];
    let mut failures = Vec::new();
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                println!("FAIL {name}: {msg}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed checks: {failures:?}");
}

/// det = 1 within 1e-12 over propagating, evanescent, and critical layers.
fn check_unimodularity() -> Result<(), String> {
    let mut rng = rng();
    for i in 0..10_000 {
        let h: f64 = rng.random_range(-100.0..100.0);
        let mut l: f64 = rng.random_range(1e-6..3.0);
        // every third layer sits exactly at the critical energy E = h
        let energy = match i % 3 {
            0 => h.abs() + rng.random_range(0.1..50.0), // propagating
            1 if h > 0.0 => rng.random_range(0.0..h).max(1e-3), // evanescent
            1 => rng.random_range(0.1..10.0),
            _ => {
                if h <= 0.0 {
                    rng.random_range(0.1..10.0)
                } else {
                    h // critical
                }
            }
        };
        if h > energy {
            // keep cosh^2 - sinh^2 roundoff below the 1e-12 budget
            l = l.min(4.0 / (h - energy).sqrt());
        }
        let layer = Layer::new(h, l, 0.0).map_err(|e| e.to_string())?;
        let m = transfer_matrix(&layer, energy).map_err(|e| e.to_string())?;
        let defect = (m.det() - Complex64::new(1.0, 0.0)).norm();
        if defect > 1e-12 {
            return Err(format!("det defect {defect} at h={h}, l={l}, E={energy}"));
        }
    }
    Ok(())
}

fn random_system(rng: &mut ChaCha8Rng, h_span: f64) -> (DoubleLayerSystem, f64) {
    let h1 = rng.random_range(-h_span..h_span);
    let h2 = rng.random_range(-h_span..h_span);
    let l1 = rng.random_range(1e-3..2.0);
    let l2 = rng.random_range(1e-3..2.0);
    let r = rng.random_range(0.0..2.0);
    let energy = rng.random_range(1e-3..20.0);
    (DoubleLayerSystem::from_parts(h1, l1, h2, l2, r, 0.0).unwrap(), energy)
}

fn check_modulus_identity() -> Result<(), String> {
    let mut rng = rng();
    for _ in 0..1000 {
        let (sys, energy) = random_system(&mut rng, 50.0);
        let det = double_layer_detail(&sys, energy).map_err(|e| e.to_string())?;
        let lhs = det.d.norm_sqr();
        let rhs = 4.0 + det.u * det.u + det.v * det.v;
        let rel = (lhs - rhs).abs() / rhs.abs();
        if rel > 1e-10 {
            return Err(format!("relative defect {rel} for {sys:?} at E={energy}"));
        }
    }
    Ok(())
}

fn check_flux_conservation() -> Result<(), String> {
    let mut rng = rng();
    for _ in 0..1000 {
        let (sys, energy) = random_system(&mut rng, 50.0);
        let amp = double_layer_exact(&sys, energy).map_err(|e| e.to_string())?;
        if amp.flux_defect() > 1e-12 {
            return Err(format!("flux defect {} for {sys:?} at E={energy}", amp.flux_defect()));
        }
        // per-layer amplitudes conserve flux too
        let single = layer_scattering(&sys.layer1, energy).map_err(|e| e.to_string())?;
        if single.flux_defect() > 1e-12 {
            return Err(format!("layer flux defect {}", single.flux_defect()));
        }
    }
    Ok(())
}

fn check_composition() -> Result<(), String> {
    let mut rng = rng();
    for _ in 0..1000 {
        let (sys, energy) = random_system(&mut rng, 50.0);
        let s1 = layer_scattering(&sys.layer1, energy).map_err(|e| e.to_string())?;
        let s2 = layer_scattering(&sys.layer2, energy).map_err(|e| e.to_string())?;
        let composed = match compose_interference(&s1, &s2) {
            Ok(c) => c,
            Err(Error::Pole(_)) => continue, // resonant denominator: skip draw
            Err(e) => return Err(e.to_string()),
        };
        let closed = double_layer_exact(&sys, energy).map_err(|e| e.to_string())?;
        let dt = (composed.t - closed.t).norm();
        let drl = (composed.r_left - closed.r_left).norm();
        let drr = (composed.r_right - closed.r_right).norm();
        if dt > 1e-10 || drl > 1e-10 || drr > 1e-10 {
            return Err(format!(
                "composition mismatch dt={dt} drl={drl} drr={drr} for {sys:?} at E={energy}"
            ));
        }
    }
    Ok(())
}

fn check_oracle() -> Result<(), String> {
    let mut rng = rng();
    for i in 0..1000 {
        // every fourth draw uses deep wells / high barriers
        let span = if i % 4 == 0 { 1000.0 } else { 50.0 };
        let (sys, energy) = random_system(&mut rng, span);
        let closed = double_layer_exact(&sys, energy).map_err(|e| e.to_string())?;
        let pot = PiecewisePotential::from_double_layer(&sys);
        let sliced = oracle_scatter(&pot, energy, 777).map_err(|e| e.to_string())?;
        let dt = (sliced.t - closed.t).norm();
        let dr = (sliced.r_left - closed.r_left).norm();
        if dt > 1e-8 || dr > 1e-8 {
            return Err(format!("oracle mismatch dt={dt} dr={dr} for {sys:?} at E={energy}"));
        }
    }
    Ok(())
}

fn check_first_resonance() -> Result<(), String> {
    let set = enumerate_resonances(RegionLabel::P, 1.0, 0.0, 3).map_err(|e| e.to_string())?;
    let root = set
        .roots
        .iter()
        .find(|r| r.gamma > 0.0)
        .ok_or("no positive root found")?;
    let sq = root.gamma.sqrt();
    if !(sq > std::f64::consts::PI && sq < 1.5 * std::f64::consts::PI) {
        return Err(format!("sqrt(gamma) = {sq} outside (pi, 3pi/2)"));
    }
    if root.residual.abs() > 1e-12 * (1.0 + root.gamma.abs()) {
        return Err(format!("residual {} too large", root.residual));
    }
    // independent check: brute-force grid scan of tan x - tanh x at step 1e-6
    let f = |x: f64| x.tan() - x.tanh();
    let mut scan_root = None;
    let mut x = std::f64::consts::PI + 1e-6;
    let hi = 1.5 * std::f64::consts::PI;
    let mut prev = f(x);
    while x < hi {
        let nx = x + 1e-6;
        let fx = f(nx);
        if (prev > 0.0) != (fx > 0.0) {
            scan_root = Some(0.5 * (x + nx));
            break;
        }
        x = nx;
        prev = fx;
    }
    let scan_root = scan_root.ok_or("grid scan found no sign change")?;
    if (scan_root - sq).abs() > 1e-6 {
        return Err(format!("bisection {sq} vs grid scan {scan_root}"));
    }
    Ok(())
}

fn check_limit_triangle() -> Result<(), String> {
    // closed vertex formula against the theta-table route at P roots, c = 0
    for eta in [1.0, 2.5] {
        let set = enumerate_resonances(RegionLabel::P, eta, 0.0, 6).map_err(|e| e.to_string())?;
        for root in set.roots.iter().filter(|r| r.gamma != 0.0) {
            let via_theta = transmission_limit(RegionLabel::P, eta, 0.0, root.gamma)
                .map_err(|e| e.to_string())?
                .t_limit;
            let direct = transmission_vertex_c0(eta, root.gamma).map_err(|e| e.to_string())?;
            if (via_theta - direct).abs() > 1e-12 {
                return Err(format!(
                    "vertex formula mismatch {via_theta} vs {direct} at gamma {}",
                    root.gamma
                ));
            }
        }
    }
    // small-width asymptotics against the theta table at every root, all regions
    for (region, eta, c) in [
        (RegionLabel::P, 1.0, 0.0),
        (RegionLabel::P, 2.0, 0.7),
        (RegionLabel::K, 1.4, 0.3),
        (RegionLabel::L, 1.0, 0.5),
        (RegionLabel::N, 2.2, 0.0),
        (RegionLabel::X, 1.0, 0.0),
        (RegionLabel::Y, 1.0, 0.0),
    ] {
        let set = enumerate_resonances(region, eta, c, 5).map_err(|e| e.to_string())?;
        for root in set.roots.iter().filter(|r| r.gamma != 0.0) {
            let table = theta_squared(region, eta, c, root.gamma).map_err(|e| e.to_string())?;
            let asym = theta_sq_asymptotic(region, eta, c, root.gamma).map_err(|e| e.to_string())?;
            if (table - asym).abs() > 1e-10 * (1.0 + table.abs()) {
                return Err(format!(
                    "{region}: theta^2 table {table} vs asymptotic {asym} at gamma {}",
                    root.gamma
                ));
            }
        }
    }
    Ok(())
}

fn check_dichotomy() -> Result<(), String> {
    let set = enumerate_resonances(RegionLabel::P, 1.0, 0.0, 5).map_err(|e| e.to_string())?;
    let pos: Vec<f64> = set.roots.iter().map(|r| r.gamma).filter(|g| *g > 0.0).collect();
    let t_lim = transmission_limit(RegionLabel::P, 1.0, 0.0, pos[0])
        .map_err(|e| e.to_string())?
        .t_limit;

    let params = SqueezeParametrization::for_region(RegionLabel::P, 1.0, 0.0, pos[0])
        .map_err(|e| e.to_string())?;
    let rows = convergence_study(&params, &[1e-3, 1e-4, 1e-5, 1e-6], 1.0)
        .map_err(|e| e.to_string())?;
    let diffs: Vec<f64> = rows.iter().map(|r| (r.t_exact - t_lim).abs()).collect();
    if !(diffs[1] > diffs[2] && diffs[2] > diffs[3]) {
        return Err(format!("diffs {diffs:?} not strictly decreasing on the tail"));
    }
    if diffs[3] > 0.01 * t_lim {
        return Err(format!("final relative error {} > 1%", diffs[3] / t_lim));
    }

    let mid = 0.5 * (pos[0] + pos[1]);
    let off = SqueezeParametrization::for_region(RegionLabel::P, 1.0, 0.0, mid)
        .map_err(|e| e.to_string())?;
    let t_off = convergence_study(&off, &[1e-6], 1.0).map_err(|e| e.to_string())?[0].t_exact;
    if t_off > 1e-6 {
        return Err(format!("off-resonance T = {t_off} not opaque"));
    }
    Ok(())
}

fn check_double_barrier() -> Result<(), String> {
    if feasibility(LayerKind::Barrier, LayerKind::Barrier).feasible {
        return Err("barrier-barrier reported feasible".into());
    }
    if !feasibility(LayerKind::Barrier, LayerKind::Well).feasible {
        return Err("barrier-well reported infeasible".into());
    }
    let mut rng = rng();
    for _ in 0..20 {
        let b2 = rng.random_range(0.01..10.0);
        let l1 = rng.random_range(0.05..1.5);
        let l2 = rng.random_range(0.05..1.5);
        let r = rng.random_range(0.0..2.0);
        let a2 = Complex64::new(0.0, b2);
        let mut prev: Option<f64> = None;
        for i in 1..=100_000 {
            let b1 = 20.0 * i as f64 / 100_000.0;
            let res = general_resonance_residual(Complex64::new(0.0, b1), a2, l1, l2, r)
                .map_err(|e| e.to_string())?;
            if let Some(p) = prev {
                if (p > 0.0) != (res > 0.0) {
                    return Err(format!(
                        "sign change at b1={b1} for b2={b2}, l1={l1}, l2={l2}, r={r}"
                    ));
                }
            }
            prev = Some(res);
        }
    }
    Ok(())
}

fn check_weak_convergence() -> Result<(), String> {
    let phis = standard_test_functions();
    let eps = [1e-2, 1e-3, 1e-4];
    let cases = [
        (RegionLabel::P, 1.0, 0.0),
        (RegionLabel::K, 1.5, 0.5),
        (RegionLabel::L, 1.0, 0.5),
        (RegionLabel::N, 2.0, 0.0),
        (RegionLabel::X, 1.0, 0.0),
        (RegionLabel::Y, 1.0, 0.0),
        (RegionLabel::Z, 1.0, 0.5), // the only plane needing c > 0
    ];
    for (region, eta, c) in cases {
        let params = SqueezeParametrization::for_region(region, eta, c, 2.0)
            .map_err(|e| e.to_string())?;
        let reports =
            check_delta_prime_convergence(&params, &phis, &eps).map_err(|e| e.to_string())?;
        for rep in &reports {
            if !rep.converged || !rep.fitted_order.is_sign_positive() || rep.fitted_order == 0.0 {
                return Err(format!(
                    "{region}/{}: order {} not positive",
                    rep.name, rep.fitted_order
                ));
            }
            if !rep.remainder_bounded {
                return Err(format!("{region}/{}: remainder exceeds its bound", rep.name));
            }
        }
    }
    Ok(())
}

fn check_region_partition() -> Result<(), String> {
    // independent one-per-region predicates, written out separately from the
    // library classifier
    let preds: [(&str, fn(f64, f64, f64) -> bool); 7] = [
        ("P", |m, n, t| m == 2.0 && n == 2.0 && t == 1.0),
        ("K", |m, n, t| 1.0 < m && m < 2.0 && n == 2.0 * (m - 1.0) && t == m - 1.0),
        ("L", |m, n, t| m == 2.0 && n > 2.0 && t == 1.0),
        ("N", |m, n, t| m == 2.0 && n == 2.0 && t > 1.0),
        ("X", |m, n, t| 1.0 < m && m < 2.0 && n == 2.0 * (m - 1.0) && t > m - 1.0),
        ("Y", |m, n, t| m == 2.0 && n > 2.0 && t > 1.0),
        ("Z", |m, n, t| 1.0 < m && m < 2.0 && n > 2.0 * (m - 1.0) && t == m - 1.0),
    ];
    let verify = |mu: f64, nu: f64, tau: f64| -> Result<(), String> {
        let label = classify_region(mu, nu, tau);
        let hits: Vec<&str> = preds
            .iter()
            .filter(|(_, p)| p(mu, nu, tau))
            .map(|(n, _)| *n)
            .collect();
        if hits.len() > 1 {
            return Err(format!("({mu}, {nu}, {tau}) matches several regions: {hits:?}"));
        }
        let expect = hits.first().copied().unwrap_or("OffSurface");
        if label.to_string() != expect {
            return Err(format!("({mu}, {nu}, {tau}) classified {label}, expected {expect}"));
        }
        Ok(())
    };

    let mut rng = rng();
    for _ in 0..100_000 {
        let mu = rng.random_range(0.0..4.0);
        let nu = rng.random_range(0.0..4.0);
        let tau = rng.random_range(0.0..4.0);
        verify(mu, nu, tau)?;
    }
    // boundary exemplars: the vertex, one point per edge/plane, and near misses
    for (mu, nu, tau) in [
        (2.0, 2.0, 1.0),
        (1.5, 1.0, 0.5),
        (2.0, 3.0, 1.0),
        (2.0, 2.0, 2.0),
        (1.5, 1.0, 1.5),
        (2.0, 3.0, 2.0),
        (1.5, 2.0, 0.5),
        (2.0, 2.0, 0.5),
        (2.0, 1.0, 1.0),
        (1.5, 1.0, 0.25),
        (2.0 + 1e-12, 2.0, 1.0),
    ] {
        verify(mu, nu, tau)?;
    }

    // zeta rows, exactly as stated
    let eta = 1.75;
    let c = 0.3;
    let rows = [
        (RegionLabel::P, 1.0 + eta + 2.0 * c),
        (RegionLabel::K, eta + 2.0 * c),
        (RegionLabel::L, 1.0 + 2.0 * c),
        (RegionLabel::N, 1.0 + eta),
        (RegionLabel::X, eta),
        (RegionLabel::Y, 1.0),
        (RegionLabel::Z, 2.0 * c),
    ];
    for (region, expect) in rows {
        let z = zeta(region, eta, c).map_err(|e| e.to_string())?;
        if z != expect {
            return Err(format!("zeta({region}) = {z}, expected {expect}"));
        }
    }
    Ok(())
}

//! Command-line front end: parameter sweeps over the scattering library
//! with deterministic CSV output and a run manifest.
//!
//! Every run writes `<out>` (CSV, 17-significant-digit floats) and
//! `<out>.manifest` (key-value text recording the resolved configuration).
//!
//! Exit codes: 0 success, 1 config error, 2 numeric/pole error, 3 partial
//! result.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pscatter::{
    check_delta_prime_convergence, classify_region, convergence_study, double_layer_detail,
    enumerate_resonances, standard_test_functions, transmission_at_root, DoubleLayerSystem,
    Error as LibError, RegionLabel, SqueezeParametrization,
};

const BISECT_REL_TOL: f64 = 1e-15;
const RESIDUAL_TOL: &str = "1e-12 * (1 + |gamma|)";
const POLE_TOL: f64 = 1e-14;

#[derive(Parser)]
#[command(name = "pscatter", version, about = "Double-layer scattering and squeezing sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact double-layer scattering over an energy grid.
    Scatter(ScatterArgs),
    /// Enumerate a region's resonance set.
    Resonances(RegionArgs),
    /// Limiting transmission at each resonance level.
    Limit(RegionArgs),
    /// Finite-epsilon transmission against the limit value.
    Converge(ConvergeArgs),
    /// Region labels over a (mu, nu, tau) grid.
    Octant(OctantArgs),
    /// Weak delta' convergence of the squeezed potential.
    Weakconv(ConvergeArgs),
}

#[derive(Args)]
#[command(rename_all = "snake_case")]
struct Common {
    /// Flat key-value config file providing defaults for the other flags.
    #[arg(long, allow_negative_numbers = true)]
    config: Option<PathBuf>,
    /// Output CSV path; the manifest is written next to it.
    #[arg(long, allow_negative_numbers = true)]
    out: PathBuf,
}

#[derive(Args)]
#[command(rename_all = "snake_case")]
struct ScatterArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_negative_numbers = true)]
    h1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    l1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    h2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    l2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    e_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    e_max: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    e_points: Option<usize>,
}

#[derive(Args)]
#[command(rename_all = "snake_case")]
struct RegionArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_negative_numbers = true)]
    region: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    n_max: Option<usize>,
}

#[derive(Args)]
#[command(rename_all = "snake_case")]
struct ConvergeArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_negative_numbers = true)]
    region: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tau: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    /// Comma-separated decreasing epsilon grid.
    #[arg(long, allow_negative_numbers = true)]
    epsilon_grid: Option<String>,
    /// Probe energy for the exact finite-epsilon scattering.
    #[arg(long, allow_negative_numbers = true)]
    energy: Option<f64>,
}

#[derive(Args)]
#[command(rename_all = "snake_case")]
struct OctantArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_negative_numbers = true)]
    mu_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    mu_max: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    mu_points: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    nu_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu_max: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu_points: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    tau_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tau_max: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tau_points: Option<usize>,
}

enum CliError {
    Config(String),
    Numeric(String),
    Partial(String),
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        match e {
            LibError::Domain(m) => CliError::Config(format!("domain error: {m}")),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap's own help/version output still goes through here
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let result = match cli.command {
        Command::Scatter(a) => run_scatter(a),
        Command::Resonances(a) => run_resonances(a, false),
        Command::Limit(a) => run_resonances(a, true),
        Command::Converge(a) => run_converge(a),
        Command::Octant(a) => run_octant(a),
        Command::Weakconv(a) => run_weakconv(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(m)) => {
            eprintln!("pscatter: config error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(m)) => {
            eprintln!("pscatter: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Partial(m)) => {
            eprintln!("pscatter: partial result: {m}");
            ExitCode::from(3)
        }
    }
}

/// Flat `key = value` (or `key value`) config file; '#' starts a comment.
fn load_config(path: &Option<PathBuf>) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    let Some(path) = path else { return Ok(map) };
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = match line.split_once('=') {
            Some((k, v)) => (k, v),
            None => line
                .split_once(char::is_whitespace)
                .ok_or_else(|| CliError::Config(format!("line {}: no value", lineno + 1)))?,
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

struct Resolver {
    config: BTreeMap<String, String>,
    resolved: BTreeMap<String, String>,
}

impl Resolver {
    fn new(config: BTreeMap<String, String>) -> Self {
        Resolver { config, resolved: BTreeMap::new() }
    }

    fn get<T: std::str::FromStr + std::fmt::Display>(
        &mut self,
        key: &str,
        flag: Option<T>,
        default: Option<T>,
    ) -> Result<T, CliError> {
        let val = if let Some(v) = flag {
            v
        } else if let Some(raw) = self.config.get(key) {
            raw.parse::<T>()
                .map_err(|_| CliError::Config(format!("bad value for {key}: {raw}")))?
        } else if let Some(d) = default {
            d
        } else {
            return Err(CliError::Config(format!("missing required key: {key}")));
        };
        self.resolved.insert(key.to_string(), val.to_string());
        Ok(val)
    }

    fn get_opt<T: std::str::FromStr + std::fmt::Display>(
        &mut self,
        key: &str,
        flag: Option<T>,
    ) -> Result<Option<T>, CliError> {
        if let Some(v) = flag {
            self.resolved.insert(key.to_string(), v.to_string());
            return Ok(Some(v));
        }
        if let Some(raw) = self.config.get(key) {
            let v = raw
                .parse::<T>()
                .map_err(|_| CliError::Config(format!("bad value for {key}: {raw}")))?;
            self.resolved.insert(key.to_string(), v.to_string());
            return Ok(Some(v));
        }
        Ok(None)
    }
}

fn parse_grid(raw: &str) -> Result<Vec<f64>, CliError> {
    let vals: Result<Vec<f64>, _> = raw.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let vals = vals.map_err(|_| CliError::Config(format!("bad epsilon grid: {raw}")))?;
    if vals.is_empty() {
        return Err(CliError::Config("epsilon grid is empty".into()));
    }
    Ok(vals)
}

fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_outputs(
    out: &Path,
    csv: &str,
    command: &str,
    resolver: &Resolver,
) -> Result<(), CliError> {
    fs::write(out, csv).map_err(|e| CliError::Numeric(format!("cannot write CSV: {e}")))?;
    let mut manifest = String::new();
    let _ = writeln!(manifest, "command = {command}");
    let _ = writeln!(manifest, "version = {}", env!("CARGO_PKG_VERSION"));
    for (k, v) in &resolver.resolved {
        let _ = writeln!(manifest, "{k} = {v}");
    }
    let _ = writeln!(manifest, "bisection_rel_tol = {BISECT_REL_TOL:e}");
    let _ = writeln!(manifest, "residual_tol = {RESIDUAL_TOL}");
    let _ = writeln!(manifest, "compose_pole_tol = {POLE_TOL:e}");
    let _ = writeln!(manifest, "float_format = %.16e");
    let mpath = manifest_path(out);
    fs::write(&mpath, manifest)
        .map_err(|e| CliError::Numeric(format!("cannot write manifest: {e}")))?;
    Ok(())
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut os = out.as_os_str().to_owned();
    os.push(".manifest");
    PathBuf::from(os)
}

fn run_scatter(a: ScatterArgs) -> Result<(), CliError> {
    let mut res = Resolver::new(load_config(&a.common.config)?);
    let h1 = res.get("h1", a.h1, None)?;
    let l1 = res.get("l1", a.l1, None)?;
    let h2 = res.get("h2", a.h2, None)?;
    let l2 = res.get("l2", a.l2, None)?;
    let r = res.get("r", a.r, None)?;
    let x1 = res.get("x1", a.x1, Some(0.0))?;
    let e_min = res.get("e_min", a.e_min, Some(0.1))?;
    let e_max = res.get("e_max", a.e_max, Some(10.0))?;
    let e_points = res.get("e_points", a.e_points, Some(100))?;
    if !(e_min > 0.0) || e_max < e_min || e_points < 1 {
        return Err(CliError::Config(format!(
            "bad energy grid: e_min {e_min}, e_max {e_max}, e_points {e_points}"
        )));
    }
    let sys = DoubleLayerSystem::from_parts(h1, l1, h2, l2, r, x1)?;

    let mut csv = String::from("E,R,T,u,v,abs_D2\n");
    for i in 0..e_points {
        let energy = if e_points == 1 {
            e_min
        } else {
            e_min + (e_max - e_min) * i as f64 / (e_points - 1) as f64
        };
        match double_layer_detail(&sys, energy) {
            Ok(det) => {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    fmt_f(energy),
                    fmt_f(det.amplitudes.reflection()),
                    fmt_f(det.amplitudes.transmission()),
                    fmt_f(det.u),
                    fmt_f(det.v),
                    fmt_f(det.d.norm_sqr())
                );
            }
            Err(e) => {
                let _ = writeln!(csv, "# error: {e}");
                write_outputs(&a.common.out, &csv, "scatter", &res)?;
                return Err(CliError::Numeric(e.to_string()));
            }
        }
    }
    write_outputs(&a.common.out, &csv, "scatter", &res)
}

fn run_resonances(a: RegionArgs, with_limit: bool) -> Result<(), CliError> {
    let mut res = Resolver::new(load_config(&a.common.config)?);
    let region_s = res.get("region", a.region, None::<String>)?;
    let region = RegionLabel::parse(&region_s)?;
    let eta = res.get("eta", a.eta, Some(1.0))?;
    let c = res.get("c", a.c, Some(0.0))?;
    let n_max = res.get("n_max", a.n_max, Some(5))?;

    let set = enumerate_resonances(region, eta, c, n_max)?;
    let command = if with_limit { "limit" } else { "resonances" };
    let mut csv = String::new();
    if with_limit {
        csv.push_str("region,n,gamma,theta_sq,T_limit\n");
        for root in &set.roots {
            if root.gamma == 0.0 {
                // trivial root: theta^2 = 1, perfect transmission
                let _ = writeln!(
                    csv,
                    "{region},{},{},{},{}",
                    root.n,
                    fmt_f(0.0),
                    fmt_f(1.0),
                    fmt_f(1.0)
                );
                continue;
            }
            match transmission_at_root(region, eta, c, root) {
                Ok(t) => {
                    let _ = writeln!(
                        csv,
                        "{region},{},{},{},{}",
                        t.n,
                        fmt_f(t.gamma),
                        fmt_f(t.theta_sq),
                        fmt_f(t.t_limit)
                    );
                }
                Err(e) => {
                    let _ = writeln!(csv, "# error: {e}");
                    write_outputs(&a.common.out, &csv, command, &res)?;
                    return Err(CliError::Numeric(e.to_string()));
                }
            }
        }
    } else {
        csv.push_str("n,gamma,residual\n");
        for root in &set.roots {
            let _ = writeln!(csv, "{},{},{}", root.n, fmt_f(root.gamma), fmt_f(root.residual));
        }
    }
    write_outputs(&a.common.out, &csv, command, &res)?;
    if !set.is_complete() {
        return Err(CliError::Partial(format!(
            "found {} of {} requested roots",
            set.roots.len(),
            set.requested
        )));
    }
    Ok(())
}

fn resolve_params(
    res: &mut Resolver,
    region: Option<String>,
    mu: Option<f64>,
    nu: Option<f64>,
    tau: Option<f64>,
    eta: f64,
    c: f64,
    gamma: f64,
) -> Result<SqueezeParametrization, CliError> {
    let mu = res.get_opt("mu", mu)?;
    let nu = res.get_opt("nu", nu)?;
    let tau = res.get_opt("tau", tau)?;
    let (mu, nu, tau) = match (mu, nu, tau) {
        (Some(m), Some(n), Some(t)) => (m, n, t),
        (None, None, None) => {
            let region_s = res.get("region", region, None::<String>)?;
            RegionLabel::parse(&region_s)?.representative_point()?
        }
        _ => {
            return Err(CliError::Config(
                "give either all of mu, nu, tau or a region tag".into(),
            ))
        }
    };
    let params = SqueezeParametrization::new(mu, nu, tau, eta, c, gamma)?;
    if !params.region().on_surface() {
        return Err(CliError::Config(format!(
            "({mu}, {nu}, {tau}) lies off the trihedral surface"
        )));
    }
    res.resolved.insert("classified_region".into(), params.region().to_string());
    Ok(params)
}

fn run_converge(a: ConvergeArgs) -> Result<(), CliError> {
    let mut res = Resolver::new(load_config(&a.common.config)?);
    let eta = res.get("eta", a.eta, Some(1.0))?;
    let c = res.get("c", a.c, Some(0.0))?;
    let gamma = res.get("gamma", a.gamma, None)?;
    let grid_s = res.get(
        "epsilon_grid",
        a.epsilon_grid,
        Some("1e-3,1e-4,1e-5,1e-6".to_string()),
    )?;
    let energy = res.get("energy", a.energy, Some(1.0))?;
    let params = resolve_params(&mut res, a.region, a.mu, a.nu, a.tau, eta, c, gamma)?;
    let eps_grid = parse_grid(&grid_s)?;

    let region = params.region();
    let t_limit = if gamma == 0.0 {
        1.0
    } else {
        pscatter::transmission_limit(region, eta, c, gamma)?.t_limit
    };
    let mut csv = String::from("epsilon,T_exact,T_limit,abs_diff\n");
    match convergence_study(&params, &eps_grid, energy) {
        Ok(rows) => {
            for row in rows {
                let _ = writeln!(
                    csv,
                    "{},{},{},{}",
                    fmt_f(row.epsilon),
                    fmt_f(row.t_exact),
                    fmt_f(t_limit),
                    fmt_f((row.t_exact - t_limit).abs())
                );
            }
        }
        Err(e) => {
            let _ = writeln!(csv, "# error: {e}");
            write_outputs(&a.common.out, &csv, "converge", &res)?;
            return Err(CliError::Numeric(e.to_string()));
        }
    }
    write_outputs(&a.common.out, &csv, "converge", &res)
}

fn run_octant(a: OctantArgs) -> Result<(), CliError> {
    let mut res = Resolver::new(load_config(&a.common.config)?);
    let axes = [
        ("mu", a.mu_min, a.mu_max, a.mu_points),
        ("nu", a.nu_min, a.nu_max, a.nu_points),
        ("tau", a.tau_min, a.tau_max, a.tau_points),
    ];
    let mut grids = Vec::new();
    for (name, min, max, points) in axes {
        let lo = res.get(&format!("{name}_min"), min, Some(0.5))?;
        let hi = res.get(&format!("{name}_max"), max, Some(3.0))?;
        let n = res.get(&format!("{name}_points"), points, Some(11))?;
        if !(lo > 0.0) || hi < lo || n < 1 {
            return Err(CliError::Config(format!("bad {name} grid: {lo}..{hi} x {n}")));
        }
        let vals: Vec<f64> = (0..n)
            .map(|i| {
                if n == 1 {
                    lo
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect();
        grids.push(vals);
    }
    let mut csv = String::from("mu,nu,tau,region\n");
    for &mu in &grids[0] {
        for &nu in &grids[1] {
            for &tau in &grids[2] {
                let _ = writeln!(
                    csv,
                    "{},{},{},{}",
                    fmt_f(mu),
                    fmt_f(nu),
                    fmt_f(tau),
                    classify_region(mu, nu, tau)
                );
            }
        }
    }
    write_outputs(&a.common.out, &csv, "octant", &res)
}

fn run_weakconv(a: ConvergeArgs) -> Result<(), CliError> {
    let mut res = Resolver::new(load_config(&a.common.config)?);
    let eta = res.get("eta", a.eta, Some(1.0))?;
    let c = res.get("c", a.c, Some(0.0))?;
    let gamma = res.get("gamma", a.gamma, None)?;
    let grid_s = res.get("epsilon_grid", a.epsilon_grid, Some("1e-2,1e-3,1e-4".to_string()))?;
    let _energy = res.get("energy", a.energy, Some(1.0))?;
    let params = resolve_params(&mut res, a.region, a.mu, a.nu, a.tau, eta, c, gamma)?;
    let eps_grid = parse_grid(&grid_s)?;

    let phis = standard_test_functions();
    let reports = check_delta_prime_convergence(&params, &phis, &eps_grid)?;
    let mut csv = String::from("phi,epsilon,pairing,abs_err,fitted_order\n");
    for rep in &reports {
        for row in &rep.rows {
            let _ = writeln!(
                csv,
                "{},{},{},{},{}",
                rep.name,
                fmt_f(row.epsilon),
                fmt_f(row.pairing),
                fmt_f(row.error),
                fmt_f(rep.fitted_order)
            );
        }
    }
    write_outputs(&a.common.out, &csv, "weakconv", &res)
}

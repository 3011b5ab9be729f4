use crate::args::*;
use crate::grid::parse_grid;
use crate::presets::PresetValues;
use crate::table::{Cell, Manifest, Table};
use rayon::prelude::*;
use serde_json::{json, Value};
use soclab_core::metadist::{lambda_eps_with, GilPelaez, GilPelaezConfig, Method};
use soclab_core::netmodel::{
    diversity_poly, diversity_poly_asymptotic, mean_success, moment_real, variance_ps, LinkDistanceModel, ModelParams,
};
use soclab_core::simcore::{
    empirical_meta_batched, empirical_moment_batched, histogram, simulate, Boundary, SimConfig,
};
use soclab_core::socopt::*;
use soclab_core::ComplexValue;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn core<T>(r: soclab_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Debug, Clone, Copy)]
pub struct Model {
    pub theta: f64,
    pub alpha: f64,
    pub link: LinkDistanceModel,
}

impl Model {
    fn json(&self) -> Value {
        json!({ "theta": self.theta, "alpha": self.alpha, "link": self.link })
    }

    fn params(&self, lambda: f64, p: f64) -> CliResult<ModelParams> {
        core(ModelParams::new(lambda, p, self.theta, self.alpha, self.link))
    }
}

pub fn resolve_model(m: &ModelArgs) -> CliResult<(Model, PresetValues)> {
    let pv = m.preset.map(|p| p.values()).unwrap_or_default();
    let theta = match (m.theta, m.theta_db) {
        (Some(t), _) => t,
        (None, Some(db)) => 10f64.powf(db / 10.0),
        (None, None) => match pv.theta {
            Some(t) => t,
            None => return usage("--theta or --theta-db is required (θ > 0)"),
        },
    };
    if !(theta > 0.0 && theta.is_finite()) {
        return usage(format!("--theta must be positive and finite (got {theta})"));
    }
    let alpha = m.alpha.or(pv.alpha).unwrap_or(4.0);
    if !(alpha > 2.0 && alpha.is_finite()) {
        return usage(format!("--alpha must exceed 2 (got {alpha})"));
    }
    let rayleigh = match m.link {
        Some(l) => l == LinkArg::Rayleigh,
        None => pv.rayleigh.unwrap_or(false),
    };
    let link = if rayleigh {
        if !(m.mu > 0.0 && m.mu.is_finite()) {
            return usage(format!("--mu must be positive (got {})", m.mu));
        }
        LinkDistanceModel::RayleighNearest { mu: m.mu }
    } else {
        if !(m.r > 0.0 && m.r.is_finite()) {
            return usage(format!("--r must be positive (got {})", m.r));
        }
        LinkDistanceModel::Fixed { r: m.r }
    };
    Ok((Model { theta, alpha, link }, pv))
}

/// (λ, p) from any two of λ, p, λp; the preset fills in what the flags leave open, and p defaults to 1.
pub fn resolve_density(d: &DensityArgs, pv: &PresetValues) -> CliResult<(f64, f64)> {
    let mut v = [d.lambda, d.p, d.nu];
    let count = |v: &[Option<f64>; 3]| v.iter().filter(|x| x.is_some()).count();
    for (slot, preset) in [(1, pv.p), (2, pv.nu), (0, pv.lambda)] {
        if count(&v) < 2 && v[slot].is_none() {
            v[slot] = preset;
        }
    }
    if count(&v) < 2 && v[1].is_none() {
        v[1] = Some(1.0);
    }
    let (lambda, p) = match v {
        [Some(l), Some(p), None] => (l, p),
        [None, Some(p), Some(n)] => (n / p, p),
        [Some(l), None, Some(n)] => (l, n / l),
        [Some(l), Some(p), Some(n)] => {
            if ((l * p - n) / n).abs() > 1e-12 {
                return usage(format!("--lambda {l}, --p {p} and --nu {n} are inconsistent (λp must equal ν)"));
            }
            (l, p)
        }
        _ => return usage("give two of --lambda, --p, --nu (or --lambda / --nu alone with p = 1)"),
    };
    if !(p > 0.0 && p <= 1.0) {
        return usage(format!("--p must lie in (0, 1] (got {p})"));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return usage(format!("--lambda must be positive (got {lambda})"));
    }
    Ok((lambda, p))
}

pub fn resolve_eps(e: &EpsArgs, pv: &PresetValues) -> CliResult<Vec<f64>> {
    let grid = match (e.eps, &e.eps_grid) {
        (Some(_), Some(_)) => return usage("--eps and --eps-grid are mutually exclusive"),
        (Some(v), None) => vec![v],
        (None, Some(g)) => parse_grid(g).map_err(CliError::Usage)?,
        (None, None) => match (pv.eps, pv.eps_grid) {
            (Some(v), _) => vec![v],
            (None, Some(g)) => parse_grid(g).map_err(CliError::Usage)?,
            (None, None) => return usage("--eps or --eps-grid is required, values in (0, 1)"),
        },
    };
    check_open_unit("--eps", &grid)?;
    Ok(grid)
}

fn check_open_unit(flag: &str, v: &[f64]) -> CliResult<()> {
    match v.iter().find(|x| !(**x > 0.0 && **x < 1.0)) {
        Some(bad) => usage(format!("{flag} values must lie in (0, 1) (got {bad})")),
        None => Ok(()),
    }
}

fn warn<E: std::fmt::Display>(e: E) -> Option<String> {
    Some(e.to_string())
}

fn gp() -> GilPelaez {
    GilPelaez::new(GilPelaezConfig::default()).expect("default config is valid")
}

fn manifest(command: &str, params: Value, seed: u64) -> Manifest {
    Manifest { command: command.into(), params, seed }
}

pub fn eval(a: &EvalArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    let (lambda, p) = resolve_density(&a.density, &pv)?;
    let prm = m.params(lambda, p)?;
    let bs = parse_grid(&a.b).map_err(CliError::Usage)?;
    if let Some(b) = bs.iter().find(|b| b.is_nan() || **b <= 0.0) {
        return usage(format!("--b values must be positive (got {b})"));
    }
    let d = prm.delta();
    let mut t = Table::new(&["lambda", "p", "nu", "b", "ps", "moment", "d_b", "d_b_asymptotic", "variance"]);
    let var = variance_ps(&prm);
    for &b in &bs {
        let mom = moment_real(&prm, b);
        let db = diversity_poly(ComplexValue::new(b, 0.0), p, d).map(|z| z.re);
        let w = mom.as_ref().err().map(|e| e.to_string()).or(db.as_ref().err().map(|e| e.to_string()));
        t.push(
            vec![
                lambda.into(),
                p.into(),
                (lambda * p).into(),
                b.into(),
                mean_success(&prm).into(),
                mom.ok().into(),
                db.ok().into(),
                diversity_poly_asymptotic(b, p, d).into(),
                var.as_ref().ok().copied().into(),
            ],
            w.or(var.as_ref().err().map(|e| e.to_string())),
        );
    }
    let mut params = m.json();
    params["lambda"] = json!(lambda);
    params["p"] = json!(p);
    params["b"] = json!(bs);
    Ok((t, manifest("eval", params, a.output.seed)))
}

fn mc_config(prm: ModelParams, mc: &McArgs, seed: u64) -> CliResult<SimConfig> {
    let unit = match prm.link() {
        LinkDistanceModel::Fixed { r } => r,
        LinkDistanceModel::RayleighNearest { mu } => 1.0 / mu.sqrt(),
    };
    let side = mc.window.unwrap_or_else(|| (2500.0 / prm.lambda()).sqrt().max(12.0 * unit));
    let per = prm.lambda() * side * side;
    let reps = mc.realizations.unwrap_or_else(|| ((20_000.0 / per).ceil() as usize).max(8));
    let boundary = match mc.boundary {
        BoundaryArg::Torus => Boundary::Torus,
        BoundaryArg::Guard => Boundary::Guard { width: mc.guard_width.unwrap_or(side / 4.0) },
    };
    core(SimConfig::new(prm, side, seed, reps, boundary))
}

pub fn meta(a: &MetaArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    let (lambda, p) = resolve_density(&a.density, &pv)?;
    let prm = m.params(lambda, p)?;
    let eps = resolve_eps(&a.eps, &pv)?;
    let methods: Vec<MetaMethodArg> = match a.method {
        MetaMethodArg::All => vec![MetaMethodArg::GilPelaez, MetaMethodArg::Beta, MetaMethodArg::Mc],
        x => vec![x],
    };
    let mut params = m.json();
    params["lambda"] = json!(lambda);
    params["p"] = json!(p);
    params["eps"] = json!(eps);
    let dist = if methods.contains(&MetaMethodArg::Mc) {
        let cfg = mc_config(prm, &a.mc, a.output.seed)?;
        params["window"] = json!(cfg.window_side);
        params["realizations"] = json!(cfg.num_realizations);
        params["boundary"] = json!(cfg.boundary);
        Some(core(simulate(&cfg))?)
    } else {
        None
    };
    let mut t = Table::new(&["eps", "method", "eta", "lambda_eps", "std_err"]);
    for method in methods {
        let rows: Vec<(Vec<Cell>, Option<String>)> = eps
            .par_iter()
            .map_init(gp, |g, &e| {
                let (name, r) = match method {
                    MetaMethodArg::GilPelaez => {
                        ("gil-pelaez", lambda_eps_with(&prm, e, Method::GilPelaez, g).map(|r| (r.eta, r.err_estimate)))
                    }
                    MetaMethodArg::Beta => {
                        ("beta", lambda_eps_with(&prm, e, Method::BetaApprox, g).map(|r| (r.eta, r.err_estimate)))
                    }
                    _ => (
                        "mc",
                        empirical_meta_batched(dist.as_ref().expect("simulated"), e).map(|r| (r.value, r.std_err)),
                    ),
                };
                match r {
                    Ok((eta, err)) => {
                        (vec![e.into(), name.into(), eta.into(), (lambda * p * eta).into(), err.into()], None)
                    }
                    Err(err) => (vec![e.into(), name.into(), Cell::Missing, Cell::Missing, Cell::Missing], warn(err)),
                }
            })
            .collect();
        for (cells, w) in rows {
            t.push(cells, w);
        }
    }
    params["method"] = json!(value_name(&a.method));
    Ok((t, manifest("meta", params, a.output.seed)))
}

pub fn lambda_eps_sweep(a: &LambdaEpsArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    // sweeping λ or λp leaves the base density open; only p is then needed
    let (lambda0, p0) = match (resolve_density(&a.density, &pv), a.sweep) {
        (Ok(v), _) => v,
        (Err(_), SweepArg::Nu | SweepArg::Lambda) if a.density.lambda.is_none() && a.density.nu.is_none() => {
            (f64::NAN, a.density.p.or(pv.p).unwrap_or(1.0))
        }
        (Err(e), _) => return Err(e),
    };
    let nu0 = lambda0 * p0;
    let grid_src = a
        .grid
        .as_deref()
        .or(pv.grid)
        .ok_or_else(|| CliError::Usage("--grid is required for the swept variable".into()))?;
    let grid = parse_grid(grid_src).map_err(CliError::Usage)?;
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return usage("--grid must be strictly increasing");
    }
    let eps_list = if a.sweep == SweepArg::Eps {
        check_open_unit("--grid", &grid)?;
        vec![f64::NAN]
    } else {
        resolve_eps(&a.eps, &pv)?
    };
    let p_list = match (&a.p_grid, a.sweep) {
        (Some(_), SweepArg::P) => return usage("--p-grid cannot be combined with --sweep p"),
        (Some(g), _) => parse_grid(g).map_err(CliError::Usage)?,
        (None, _) => vec![p0],
    };
    let methods: Vec<(&str, Method)> = match a.method {
        MetaMethodArg::GilPelaez => vec![("gil-pelaez", Method::GilPelaez)],
        MetaMethodArg::Beta => vec![("beta", Method::BetaApprox)],
        MetaMethodArg::All => vec![("gil-pelaez", Method::GilPelaez), ("beta", Method::BetaApprox)],
        MetaMethodArg::Mc => return usage("--method mc is only available in `meta`"),
    };
    let sweep_name = match a.sweep {
        SweepArg::Nu => "nu",
        SweepArg::Lambda => "lambda",
        SweepArg::P => "p",
        SweepArg::Eps => "eps",
    };
    // (ε, p, x) points in output order
    let mut points = Vec::new();
    for &e in &eps_list {
        for &pc in &p_list {
            for &x in &grid {
                let (lambda, p, eps) = match a.sweep {
                    SweepArg::Nu => (x / pc, pc, e),
                    SweepArg::Lambda => (x, pc, e),
                    SweepArg::P => (nu0 / x, x, e),
                    SweepArg::Eps => (nu0 / pc, pc, x),
                };
                points.push((x, lambda, p, eps));
            }
        }
    }
    for &(_, l, p, _) in &points {
        m.params(l, p)?;
    }
    let mut t = Table::new(&["lambda", "p", "nu", "eps", "method", "eta", "lambda_eps", "asymptotic"]);
    for (name, method) in methods {
        let rows: Vec<(Vec<Cell>, Option<String>)> = points
            .par_iter()
            .map_init(gp, |g, &(_, l, p, e)| {
                let prm = ModelParams::new(l, p, m.theta, m.alpha, m.link).expect("validated");
                let asym = lambda_eps_asymptotic(&prm, e).ok();
                let head: Vec<Cell> = vec![l.into(), p.into(), (l * p).into(), e.into(), name.into()];
                match lambda_eps_with(&prm, e, method, g) {
                    Ok(r) => ([head, vec![r.eta.into(), r.lambda_eps.into(), asym.into()]].concat(), None),
                    Err(err) => ([head, vec![Cell::Missing, Cell::Missing, asym.into()]].concat(), warn(err)),
                }
            })
            .collect();
        for (cells, w) in rows {
            t.push(cells, w);
        }
    }
    let mut params = m.json();
    params["sweep"] = json!(sweep_name);
    params["grid"] = json!(grid);
    params["eps"] = json!(if a.sweep == SweepArg::Eps { Value::Null } else { json!(eps_list) });
    params["p_list"] = json!(p_list);
    params["nu"] = json!(nu0);
    params["lambda"] = json!(lambda0);
    params["method"] = json!(value_name(&a.method));
    Ok((t, manifest("lambda-eps", params, a.output.seed)))
}

fn soc_method(m: SocMethodArg) -> SocMethod {
    match m {
        SocMethodArg::Exact => SocMethod::Exact,
        SocMethodArg::Beta => SocMethod::BetaApprox,
    }
}

fn method_name(m: SocMethod) -> &'static str {
    match m {
        SocMethod::Exact => "exact",
        SocMethod::BetaApprox => "beta",
    }
}

pub fn soc(a: &SocArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    let eps = resolve_eps(&a.eps, &pv)?;
    let method = soc_method(a.method);
    let mut t = Table::new(&["eps", "method", "soc", "lambda_star", "p_star", "eta_star", "ps_star", "converged"]);
    for &e in &eps {
        match soc_optimize(m.theta, e, m.alpha, m.link, method) {
            Ok(r) => t.push(
                vec![
                    e.into(),
                    method_name(method).into(),
                    r.soc.into(),
                    r.lambda_star.into(),
                    r.p_star.into(),
                    r.eta_star.into(),
                    r.ps_star.into(),
                    r.converged.into(),
                ],
                (!r.converged).then(|| "optimizer did not converge".to_string()),
            ),
            Err(err) => t.push(
                vec![
                    e.into(),
                    method_name(method).into(),
                    Cell::Missing,
                    Cell::Missing,
                    Cell::Missing,
                    Cell::Missing,
                    Cell::Missing,
                    false.into(),
                ],
                warn(err),
            ),
        }
    }
    let mut params = m.json();
    params["eps"] = json!(eps);
    params["method"] = json!(method_name(method));
    Ok((t, manifest("soc", params, a.output.seed)))
}

pub fn bounds(a: &BoundsArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    let eps = resolve_eps(&a.eps, &pv)?;
    let mut t = Table::new(&[
        "eps",
        "soc",
        "tightest_analytic",
        "tightest_numeric",
        "b_numeric",
        "markov_b1",
        "markov_b2",
        "markov_b4",
        "lower_b1",
        "lower_b2",
        "lower_b4",
    ]);
    let rows: Vec<(Vec<Cell>, Option<String>)> = eps
        .par_iter()
        .map(|&e| {
            let mut warnings = Vec::new();
            let soc_res = match a.exact {
                ExactArg::None => None,
                ExactArg::Exact => Some(soc_optimize(m.theta, e, m.alpha, m.link, SocMethod::Exact)),
                ExactArg::Beta => Some(soc_optimize(m.theta, e, m.alpha, m.link, SocMethod::BetaApprox)),
            };
            if let Some(Ok(r)) = &soc_res {
                if !r.converged {
                    warnings.push("optimizer did not converge".to_string());
                }
            }
            let soc_cell = match soc_res {
                None => Cell::Missing,
                Some(r) => keep(&mut warnings, r.map(|r| r.soc)),
            };
            let analytic = keep(&mut warnings, tightest_markov_upper(m.theta, e, m.alpha, m.link, BoundMode::Analytic));
            let numeric = tightest_markov_upper_at(m.theta, e, m.alpha, m.link, BoundMode::Numeric);
            let (num_v, num_b) = match numeric {
                Ok((v, b)) => (Cell::from(v), Cell::from(b)),
                Err(err) => {
                    warnings.push(err.to_string());
                    (Cell::Missing, Cell::Missing)
                }
            };
            let mut cells = vec![e.into(), soc_cell, analytic, num_v, num_b];
            for b in [1.0, 2.0, 4.0] {
                cells.push(keep(&mut warnings, markov_upper(b, m.theta, e, m.alpha, m.link)));
            }
            for b in [1u32, 2, 4] {
                let r = reverse_markov_lower(b, m.theta, e, m.alpha, m.link);
                if let Ok(lb) = &r {
                    if !lb.converged {
                        warnings.push(format!("lower bound b={b} did not converge"));
                    }
                }
                cells.push(keep(&mut warnings, r.map(|lb| lb.value)));
            }
            let w = (!warnings.is_empty()).then(|| warnings.join("; "));
            (cells, w)
        })
        .collect();
    for (cells, w) in rows {
        t.push(cells, w);
    }
    let mut params = m.json();
    params["eps"] = json!(eps);
    params["exact"] = json!(value_name(&a.exact));
    Ok((t, manifest("bounds", params, a.output.seed)))
}

fn keep(warnings: &mut Vec<String>, r: soclab_core::Result<f64>) -> Cell {
    match r {
        Ok(v) => v.into(),
        Err(err) => {
            warnings.push(err.to_string());
            Cell::Missing
        }
    }
}

pub fn asymptotic(a: &AsymptoticArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    let eps = resolve_eps(&a.eps, &pv)?;
    let d = 2.0 / m.alpha;
    let mut t = Table::new(&[
        "eps",
        "soc",
        "p_star",
        "lambda_opt",
        "eta_opt",
        "ps_opt",
        "kappa",
        "c_geom",
        "c_prime",
        "rho",
        "c_delta",
    ]);
    for &e in &eps {
        let s = core(soc_asymptotic(m.theta, e, m.alpha, m.link))?;
        let c = core(AsymptoticConstants::new(d, e, m.theta))?;
        t.push(
            vec![
                e.into(),
                s.soc.into(),
                s.p_star.into(),
                s.lambda_opt.into(),
                s.eta_opt.into(),
                s.ps_opt.into(),
                c.kappa.into(),
                c.c_geom.into(),
                c.c_prime.into(),
                c.rho.into(),
                c.c_delta.into(),
            ],
            None,
        );
    }
    let mut params = m.json();
    params["eps"] = json!(eps);
    Ok((t, manifest("asymptotic", params, a.output.seed)))
}

pub fn simulate_cmd(a: &SimulateArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    let (lambda, p) = resolve_density(&a.density, &pv)?;
    let prm = m.params(lambda, p)?;
    if a.bins < 2 {
        return usage(format!("--bins must be at least 2 (got {})", a.bins));
    }
    let cfg = mc_config(prm, &a.mc, a.output.seed)?;
    let dist = core(simulate(&cfg))?;
    let mut t =
        Table::new(&["bin_lo", "bin_hi", "count", "density", "mean", "mean_std_err", "num_links", "realizations"]);
    let h = core(histogram(&dist, a.bins))?;
    let (mean, w) = match empirical_moment_batched(&dist, 1.0) {
        Ok(e) => ((Cell::from(e.value), Cell::from(e.std_err)), None),
        Err(err) => ((Cell::Missing, Cell::Missing), warn(err)),
    };
    let dens = h.density();
    for (i, &c) in h.counts.iter().enumerate() {
        t.push(
            vec![
                h.edges[i].into(),
                h.edges[i + 1].into(),
                (c as f64).into(),
                dens[i].into(),
                mean.0.clone(),
                mean.1.clone(),
                (dist.num_links as f64).into(),
                (dist.realization_count as f64).into(),
            ],
            w.clone(),
        );
    }
    let mut params = m.json();
    params["lambda"] = json!(lambda);
    params["p"] = json!(p);
    params["bins"] = json!(a.bins);
    params["window"] = json!(cfg.window_side);
    params["realizations"] = json!(cfg.num_realizations);
    params["boundary"] = json!(cfg.boundary);
    Ok((t, manifest("simulate", params, a.output.seed)))
}

pub fn compare_tc(a: &CompareTcArgs) -> CliResult<(Table, Manifest)> {
    let (m, pv) = resolve_model(&a.model)?;
    if !matches!(m.link, LinkDistanceModel::Fixed { .. }) {
        return usage("compare-tc needs --link fixed");
    }
    let eps = resolve_eps(&a.eps, &pv)?;
    let method = soc_method(a.method);
    let meta = method.meta_method();
    let mut t = Table::new(&[
        "eps",
        "tc",
        "lambda_p_tc",
        "eta_tc",
        "lambda_eps_tc",
        "soc",
        "lambda_star",
        "p_star",
        "soc_over_tc",
        "converged",
    ]);
    let r_sq = match m.link {
        LinkDistanceModel::Fixed { r } => r * r,
        _ => 1.0,
    };
    for &e in &eps {
        let mut warnings = Vec::new();
        let (tc, nu) = core(transmission_capacity(m.theta, e, m.alpha))?;
        // capacity is computed for unit distance; rescale to the requested R
        let (tc, nu) = (tc / r_sq, nu / r_sq);
        let at_tc = m.params(nu, 1.0)?;
        let eta_tc = match lambda_eps_with(&at_tc, e, meta, &mut gp()) {
            Ok(r) => Some(r.eta),
            Err(err) => {
                warnings.push(err.to_string());
                None
            }
        };
        let s = soc_optimize(m.theta, e, m.alpha, m.link, method);
        let (soc_v, ls, ps, conv) = match &s {
            Ok(r) => {
                if !r.converged {
                    warnings.push("optimizer did not converge".into());
                }
                (Some(r.soc), Some(r.lambda_star), Some(r.p_star), r.converged)
            }
            Err(err) => {
                warnings.push(err.to_string());
                (None, None, None, false)
            }
        };
        t.push(
            vec![
                e.into(),
                tc.into(),
                nu.into(),
                eta_tc.into(),
                eta_tc.map(|x| x * nu).into(),
                soc_v.into(),
                ls.into(),
                ps.into(),
                soc_v.map(|s| s / tc).into(),
                conv.into(),
            ],
            (!warnings.is_empty()).then(|| warnings.join("; ")),
        );
    }
    let mut params = m.json();
    params["eps"] = json!(eps);
    params["method"] = json!(method_name(method));
    Ok((t, manifest("compare-tc", params, a.output.seed)))
}

/// The spelling a value enum has on the command line.
fn value_name<T: clap::ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

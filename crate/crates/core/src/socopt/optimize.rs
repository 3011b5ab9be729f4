use crate::error::{domain, Result};
use crate::metadist::{lambda_eps_with, GilPelaez, GilPelaezConfig, Method};
use crate::netmodel::{gamma_product, mean_success, LinkDistanceModel, ModelParams};
use crate::tol;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SocMethod {
    Exact,
    BetaApprox,
}

impl SocMethod {
    pub fn meta_method(&self) -> Method {
        match self {
            SocMethod::Exact => Method::GilPelaez,
            SocMethod::BetaApprox => Method::BetaApprox,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SocResult {
    pub soc: f64,
    pub lambda_star: f64,
    pub p_star: f64,
    pub eta_star: f64,
    pub ps_star: f64,
    pub method: SocMethod,
    pub converged: bool,
}

/// Location and value of a maximum over (λ, p).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Optimum {
    pub lambda: f64,
    pub p: f64,
    pub value: f64,
    pub converged: bool,
}

const DECADE_STEPS: usize = 10;
/// Smallest transmit probability the refinement visits.
const P_FLOOR: f64 = 1e-9;
/// Relative shortfall from the p → 0 limit tolerated before flagging non-convergence.
const LIMIT_SLACK: f64 = 5e-3;
const GRID_LOW_DECADES: i32 = -3;
const GRID_HIGH_DECADES: i32 = 1;

/// Transmit probabilities on the coarse grid: 0.01, then 0.05, 0.10, …, 1.
pub fn p_grid() -> Vec<f64> {
    std::iter::once(0.01).chain((1..=20).map(|i| i as f64 / 20.0)).collect()
}

/// Natural density scale: the λ at which the load equals 1 with p = 1.
pub fn density_scale(theta: f64, alpha: f64, link: LinkDistanceModel) -> Result<f64> {
    let unit = ModelParams::new(1.0, 1.0, theta, alpha, link)?;
    Ok(1.0 / unit.load())
}

/// Maximize an objective over λ > 0, p ∈ (0, 1].
///
/// A logarithmic λ grid spanning [1e-3, 1e1]·`scale` times the p grid is scanned
/// first (columns in parallel, one objective instance per column). While the best
/// point sits on the upper λ edge the grid grows by a decade, until the gain per
/// decade is below 1e-4 or λ reaches the cap. A pattern search with shrinking
/// steps in (ln λ, p) then refines the best cell.
pub fn maximize<M, O>(make: M, scale: f64) -> Optimum
where
    M: Fn() -> O + Sync,
    O: FnMut(f64, f64) -> f64,
{
    let ps = p_grid();
    let step_x = std::f64::consts::LN_10 / DECADE_STEPS as f64;
    let lam_at = |k: i64| scale * (k as f64 * step_x).exp();
    let mut k_lo = GRID_LOW_DECADES as i64 * DECADE_STEPS as i64;
    let mut k_hi = GRID_HIGH_DECADES as i64 * DECADE_STEPS as i64;
    let k_cap = (tol::OPT_LAMBDA_CAP.log10() * DECADE_STEPS as f64).round() as i64;

    let scan = |from: i64, to: i64| -> Vec<Vec<f64>> {
        ps.par_iter()
            .map(|&p| {
                let mut f = make();
                (from..=to).map(|k| sanitize(f(lam_at(k), p))).collect()
            })
            .collect()
    };
    // values[j][k - k_lo] for p index j
    let mut values = scan(k_lo, k_hi);
    let best_of = |values: &Vec<Vec<f64>>, k_lo: i64| -> (i64, usize, f64) {
        let mut best = (k_lo, 0, f64::NEG_INFINITY);
        let n = values[0].len();
        for i in 0..n {
            for (j, col) in values.iter().enumerate() {
                if col[i] > best.2 {
                    best = (k_lo + i as i64, j, col[i]);
                }
            }
        }
        best
    };
    let mut best = best_of(&values, k_lo);
    let mut capped = false;
    let mut saturated = false;
    loop {
        if best.0 == k_hi {
            if k_hi >= k_cap {
                capped = true;
                break;
            }
            let before = best.2;
            let extra = scan(k_hi + 1, k_hi + DECADE_STEPS as i64);
            for (col, more) in values.iter_mut().zip(extra) {
                col.extend(more);
            }
            k_hi += DECADE_STEPS as i64;
            best = best_of(&values, k_lo);
            let gain = (best.2 - before) / before.abs().max(f64::MIN_POSITIVE);
            if best.0 == k_hi && gain <= tol::OPT_DECADE_GAIN {
                saturated = true;
                break;
            }
        } else if best.0 == k_lo && best.2 > 0.0 && k_lo > -k_cap {
            let extra = scan(k_lo - DECADE_STEPS as i64, k_lo - 1);
            for (col, more) in values.iter_mut().zip(extra) {
                let mut merged = more;
                merged.extend(col.iter().copied());
                *col = merged;
            }
            k_lo -= DECADE_STEPS as i64;
            best = best_of(&values, k_lo);
        } else {
            break;
        }
    }

    let x_min = (lam_at(k_lo) / scale).ln();
    let x_cap = (k_cap as f64) * step_x;
    let mut x_max = (lam_at(k_hi) / scale).ln();
    let mut f = make();
    let mut eval = |x: f64, y: f64| sanitize(f(scale * x.exp(), y.exp()));
    let mut pt = ((lam_at(best.0) / scale).ln(), ps[best.1].ln(), best.2);
    let mut converged;
    loop {
        let (next, ok) = pattern_search(&mut eval, pt, (x_min, x_max), step_x);
        converged = ok;
        let at_edge = next.0 >= x_max - 1e-12;
        if !(ok && at_edge && !saturated) {
            pt = next;
            break;
        }
        // the optimum sits on the upper λ edge: widen by a decade while that still pays
        if x_max >= x_cap {
            pt = next;
            capped = true;
            break;
        }
        x_max = (x_max + std::f64::consts::LN_10).min(x_cap);
        let (wider, ok) = pattern_search(&mut eval, next, (x_min, x_max), step_x);
        let gain = (wider.2 - next.2) / next.2.abs().max(f64::MIN_POSITIVE);
        pt = wider;
        converged = ok;
        if gain <= tol::OPT_DECADE_GAIN || !ok || wider.0 < x_max - 1e-12 {
            break;
        }
    }
    Optimum { lambda: scale * pt.0.exp(), p: pt.1.exp().min(1.0), value: pt.2, converged: converged && !capped }
}

/// Like [`maximize`], but also searches the p = P_FLOOR line for ν = λp in `nu_range`.
///
/// As p → 0 with ν fixed the outage of a typical link becomes deterministic and
/// the objective tends to a step in ν. Its supremum is approached but never
/// attained, and the two-dimensional search stalls in front of it.
pub fn maximize_with_ridge<M, O>(make: M, scale: f64, nu_range: (f64, f64)) -> Optimum
where
    M: Fn() -> O + Sync,
    O: FnMut(f64, f64) -> f64,
{
    let opt = maximize(&make, scale);
    let mut f = make();
    match ridge_probe(&mut f, nu_range) {
        Some(r) if r.value > opt.value * (1.0 + tol::OPT_REL_STEP) => r,
        _ => opt,
    }
}

fn ridge_probe<F: FnMut(f64, f64) -> f64>(f: &mut F, nu_range: (f64, f64)) -> Option<Optimum> {
    const N: usize = 40;
    let mut g = |u: f64| sanitize(f(u.exp() / P_FLOOR, P_FLOOR));
    let (u_lo, u_hi) = (nu_range.0.ln(), nu_range.1.ln());
    let us: Vec<f64> = (0..=N).map(|i| u_lo + (u_hi - u_lo) * i as f64 / N as f64).collect();
    let vs: Vec<f64> = us.iter().map(|&u| g(u)).collect();
    let (i, &v) = vs.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1))?;
    if !(v > 0.0) {
        return None;
    }
    let (mut a, mut b) = (us[i.saturating_sub(1)], us[(i + 1).min(N)]);
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (b - r * (b - a), a + r * (b - a));
    let (mut fc, mut fd) = (g(c), g(d));
    let mut best = (us[i], v);
    while b - a > 1e-9 {
        for (x, fx) in [(c, fc), (d, fd)] {
            if fx > best.1 {
                best = (x, fx);
            }
        }
        if fc >= fd {
            b = d;
            (d, fd) = (c, fc);
            c = b - r * (b - a);
            fc = g(c);
        } else {
            a = c;
            (c, fc) = (d, fd);
            d = a + r * (b - a);
            fd = g(d);
        }
    }
    Some(Optimum { lambda: best.0.exp() / P_FLOOR, p: P_FLOOR, value: best.1, converged: 0 < i && i < N })
}

/// Maximize over (x, y) = (ln λ/scale, ln p) with y ≤ 0 and x in `xb`.
///
/// Compass search over the axes and diagonals; a successful move is repeated
/// with doubling length while it keeps improving. Steps halve on failure.
fn pattern_search<F: FnMut(f64, f64) -> f64>(
    f: &mut F,
    start: (f64, f64, f64),
    xb: (f64, f64),
    step0: f64,
) -> ((f64, f64, f64), bool) {
    let clamp = |x: f64, y: f64| (x.clamp(xb.0, xb.1), y.clamp(P_FLOOR.ln(), 0.0));
    let (mut x, mut y, mut v) = start;
    let mut s = step0;
    const DIRS: [(f64, f64); 8] =
        [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, -1.0), (-1.0, 1.0), (1.0, 1.0), (-1.0, -1.0)];
    for _ in 0..tol::OPT_MAX_ITER {
        if s < tol::OPT_REL_STEP {
            return ((x, y, v), true);
        }
        let mut best = (x, y, v);
        for (dx, dy) in DIRS {
            let (cx, cy) = clamp(x + dx * s, y + dy * s);
            if cx == x && cy == y {
                continue;
            }
            let cv = f(cx, cy);
            if cv > best.2 {
                best = (cx, cy, cv);
            }
        }
        if best.2 > v {
            let (mut dx, mut dy) = (best.0 - x, best.1 - y);
            (x, y, v) = best;
            loop {
                dx *= 2.0;
                dy *= 2.0;
                let (cx, cy) = clamp(x + dx, y + dy);
                if cx == x && cy == y {
                    break;
                }
                let cv = f(cx, cy);
                if cv > v {
                    (x, y, v) = (cx, cy, cv);
                } else {
                    break;
                }
            }
        } else {
            s *= 0.5;
        }
    }
    ((x, y, v), false)
}

fn sanitize(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::NEG_INFINITY
    }
}

/// Spatial outage capacity S(θ, ε) = sup over (λ, p) of λ_ε.
pub fn soc_optimize(theta: f64, eps: f64, alpha: f64, link: LinkDistanceModel, method: SocMethod) -> Result<SocResult> {
    soc_optimize_with(theta, eps, alpha, link, method, &GilPelaezConfig::default())
}

pub fn soc_optimize_with(
    theta: f64,
    eps: f64,
    alpha: f64,
    link: LinkDistanceModel,
    method: SocMethod,
    cfg: &GilPelaezConfig,
) -> Result<SocResult> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain("eps must lie in (0, 1)", eps));
    }
    let template = ModelParams::new(1.0, 1.0, theta, alpha, link)?;
    cfg.validate()?;
    let scale = 1.0 / template.load();
    let meta = method.meta_method();
    let make = || {
        let mut gp = GilPelaez::new(*cfg).expect("validated config");
        move |lambda: f64, p: f64| -> f64 {
            match template.with_lambda_p(lambda, p) {
                Ok(prm) => lambda_eps_with(&prm, eps, meta, &mut gp).map(|r| r.lambda_eps).unwrap_or(f64::NAN),
                Err(_) => f64::NAN,
            }
        }
    };
    // supremum of the p → 0 limit (ν = λp fixed); reached only in the limit
    let l = -(1.0 - eps).ln();
    let (limit, opt) = match link {
        LinkDistanceModel::Fixed { r } => {
            let nu_c = l / (PI * r * r * gamma_product(template.delta()) * theta.powf(template.delta()));
            (nu_c, maximize_with_ridge(make, scale, (0.5 * nu_c, 1.01 * nu_c)))
        }
        LinkDistanceModel::RayleighNearest { mu } => {
            (mu * l / (gamma_product(template.delta()) * theta.powf(template.delta())), maximize(make, scale))
        }
    };
    let at = template.with_lambda_p(opt.lambda, opt.p)?;
    let mut gp = GilPelaez::new(*cfg)?;
    let r = lambda_eps_with(&at, eps, meta, &mut gp)?;
    Ok(SocResult {
        soc: r.lambda_eps,
        lambda_star: opt.lambda,
        p_star: opt.p,
        eta_star: r.eta,
        ps_star: mean_success(&at),
        method,
        converged: opt.converged && r.lambda_eps >= limit * (1.0 - LIMIT_SLACK),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_grid_has_21_points_ending_at_one() {
        let g = p_grid();
        assert_eq!(g.len(), 21);
        assert_eq!(g[0], 0.01);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn maximize_finds_a_smooth_interior_peak() {
        // peak at λ = 2, p = 0.6
        let make = || |l: f64, p: f64| -((l.ln() - 2f64.ln()).powi(2)) - (p - 0.6).powi(2);
        let o = maximize(make, 1.0);
        assert!(o.converged);
        assert!((o.lambda - 2.0).abs() < 1e-3 && (o.p - 0.6).abs() < 1e-3, "{o:?}");
    }

    #[test]
    fn maximize_reports_boundary_p_exactly() {
        let make = || |l: f64, p: f64| p * l * (-l).exp();
        let o = maximize(make, 1.0);
        assert_eq!(o.p, 1.0);
        assert!((o.lambda - 1.0).abs() < 1e-3);
    }

    #[test]
    fn beta_optimum_at_example_parameters() {
        let r = soc_optimize(0.1, 0.1, 4.0, LinkDistanceModel::Fixed { r: 1.0 }, SocMethod::BetaApprox).unwrap();
        assert!(r.converged);
        assert_eq!(r.p_star, 1.0);
        assert!((r.soc - 0.092_272).abs() < 2e-5, "{r:?}");
        assert!((r.soc - r.lambda_star * r.p_star * r.eta_star).abs() < 1e-12);
    }
}

//! Meta distribution η(θ, ε) = P(P_s > 1 − ε) and the density of reliable links
//! λ_ε = λpη, by Gil-Pelaez inversion or by a beta fit of the first two moments.

use crate::error::{domain, Error, Result};
use crate::netmodel::{
    diversity_slope_at_zero, log_moment, mean_success, DiversityCache, LinkDistanceModel, ModelParams,
};
use crate::quad::{gk_adaptive, wynn_epsilon};
use crate::specfun::reg_inc_beta;
use crate::tol;
use crate::ComplexValue;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GilPelaezConfig {
    /// Target absolute error on η.
    pub abs_tol: f64,
    /// Below `u_min` times the first panel width the integrand is replaced by its u → 0 limit.
    pub u_min: f64,
    pub u_max_cap: f64,
    pub max_panels: usize,
}

impl Default for GilPelaezConfig {
    fn default() -> Self {
        Self {
            abs_tol: tol::GP_ABS_TOL,
            u_min: tol::GP_U_MIN,
            u_max_cap: tol::GP_U_MAX_CAP,
            max_panels: tol::GP_MAX_PANELS,
        }
    }
}

impl GilPelaezConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol < 1e-2) {
            return Err(Error::Config(format!("abs_tol must lie in (0, 1e-2), got {}", self.abs_tol)));
        }
        if !(self.u_min > 0.0) {
            return Err(Error::Config(format!("u_min must be positive, got {}", self.u_min)));
        }
        if !(self.u_max_cap > self.u_min) {
            return Err(Error::Config("u_max_cap must exceed u_min".into()));
        }
        if self.max_panels == 0 {
            return Err(Error::Config("max_panels must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    GilPelaez,
    BetaApprox,
    MonteCarlo,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::GilPelaez => "gil_pelaez",
            Method::BetaApprox => "beta_approx",
            Method::MonteCarlo => "monte_carlo",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetaResult {
    pub eta: f64,
    pub lambda_eps: f64,
    pub method: Method,
    pub err_estimate: f64,
}

impl MetaResult {
    fn new(params: &ModelParams, eta: f64, method: Method, err_estimate: f64) -> Self {
        let eta = eta.clamp(0.0, 1.0);
        Self { eta, lambda_eps: params.lambda() * params.p() * eta, method, err_estimate }
    }
}

/// Mean and shape of the beta law matched to M_1 and M_2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaShape {
    pub mean: f64,
    pub shape_beta: f64,
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain("eps must lie in (0, 1)", eps));
    }
    Ok(())
}

/// Gil-Pelaez evaluator that keeps D_ju values between calls with the same (p, δ).
#[derive(Debug, Clone)]
pub struct GilPelaez {
    cfg: GilPelaezConfig,
    cache: Option<DiversityCache>,
}

impl GilPelaez {
    pub fn new(cfg: GilPelaezConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self { cfg, cache: None })
    }

    pub fn config(&self) -> &GilPelaezConfig {
        &self.cfg
    }

    /// Number of memoized D_ju values.
    pub fn cached_points(&self) -> usize {
        self.cache.as_ref().map(|c| c.len()).unwrap_or(0)
    }

    fn cache_for(&mut self, p: f64, delta: f64) -> &mut DiversityCache {
        let stale = self.cache.as_ref().map(|c| !c.matches(p, delta)).unwrap_or(true);
        if stale {
            self.cache = Some(DiversityCache::new(p, delta));
        }
        self.cache.as_mut().expect("cache just set")
    }

    /// η(θ, ε) by inversion of the imaginary moments M_ju.
    pub fn eta(&mut self, params: &ModelParams, eps: f64) -> Result<MetaResult> {
        check_eps(eps)?;
        let cfg = self.cfg;
        let l = (-eps).ln_1p();
        let half_period = PI / -l;
        let load = params.load();
        let slope = diversity_slope_at_zero(params.p(), params.delta());
        let mut first = half_period.min(1.0);
        if load * slope > 0.0 {
            first = first.min(1.0 / (load * slope));
        }
        let mut f = Integrand {
            cache: self.cache_for(params.p(), params.delta()),
            fixed: matches!(params.link(), LinkDistanceModel::Fixed { .. }),
            load,
            l,
            near_zero: -l - load * slope,
            u_small: cfg.u_min * first,
            failure: None,
        };

        let tol_int = cfg.abs_tol * PI;
        let panel_tol = 2e-3 * tol_int;
        let trunc_tol = 0.1 * tol_int;

        let mut u = 0.0;
        let mut width = first;
        let mut sum = 0.0;
        let mut err_sum = 0.0;
        let mut partial: Vec<f64> = Vec::new();
        let mut panels = 0;
        let (integral, trunc_err) = loop {
            let w = width.min(half_period);
            let (v, e) = gk_adaptive(&mut |x| f.value(x), u, u + w, panel_tol, 64);
            if let Some(err) = f.failure.take() {
                return Err(err);
            }
            sum += v;
            err_sum += e;
            u += w;
            panels += 1;
            width *= 2.0;
            if w == half_period {
                partial.push(sum);
            }
            let env = f.envelope(u)?;
            if env * half_period < trunc_tol {
                break (sum, env * half_period);
            }
            if partial.len() >= 8 {
                let tail = &partial[partial.len().saturating_sub(24)..];
                if let Some((est, change)) = wynn_epsilon(tail) {
                    if change < trunc_tol {
                        break (est, change);
                    }
                }
            }
            if u >= cfg.u_max_cap {
                return Err(Error::Truncation { envelope: env, u });
            }
            if panels >= cfg.max_panels {
                return Err(Error::Quadrature { panels, err: (err_sum + env * half_period) / PI });
            }
        };
        let err = (err_sum + trunc_err) / PI;
        if err > cfg.abs_tol {
            return Err(Error::Quadrature { panels, err });
        }
        let eta = 0.5 + integral / PI;
        Ok(MetaResult::new(params, eta, Method::GilPelaez, err))
    }
}

struct Integrand<'a> {
    cache: &'a mut DiversityCache,
    fixed: bool,
    load: f64,
    l: f64,
    near_zero: f64,
    u_small: f64,
    failure: Option<Error>,
}

impl Integrand<'_> {
    fn value(&mut self, u: f64) -> f64 {
        if u < self.u_small {
            return self.near_zero;
        }
        match self.cache.imaginary(u) {
            Ok(d) => gil_pelaez_integrand(self.fixed, self.load, self.l, u, d),
            Err(e) => {
                self.failure.get_or_insert(e);
                0.0
            }
        }
    }

    fn envelope(&mut self, u: f64) -> Result<f64> {
        let d = self.cache.imaginary(u)?;
        Ok(if self.fixed {
            (-self.load * d.re).exp() / u
        } else {
            (ComplexValue::new(1.0, 0.0) / (d * self.load + 1.0)).norm() / u
        })
    }
}

/// Integrand of η = 1/2 + (1/π)∫₀^∞ h(u) du given D_ju.
///
/// Fixed model: h(u) = −sin(u·ln(1−ε) + L·Im D_ju)·e^{−L·Re D_ju}/u.
/// Rayleigh model: h(u) = Im[e^{−ju·ln(1−ε)}/(1 + L·D_ju)]/u.
pub fn gil_pelaez_integrand(fixed: bool, load: f64, l: f64, u: f64, d: ComplexValue) -> f64 {
    if fixed {
        -(u * l + load * d.im).sin() * (-load * d.re).exp() / u
    } else {
        let m = ComplexValue::new(1.0, 0.0) / (d * load + 1.0);
        (ComplexValue::new(0.0, -u * l).exp() * m).im / u
    }
}

/// Generic form Im[e^{−ju·ln(1−ε)} M_ju]/u from a complex moment value.
pub fn gil_pelaez_integrand_generic(m_ju: ComplexValue, l: f64, u: f64) -> f64 {
    (ComplexValue::new(0.0, -u * l).exp() * m_ju).im / u
}

/// η(θ, ε) by Gil-Pelaez inversion with a fresh cache.
pub fn eta_gil_pelaez(params: &ModelParams, eps: f64, cfg: &GilPelaezConfig) -> Result<MetaResult> {
    GilPelaez::new(*cfg)?.eta(params, eps)
}

/// (M_1, β) of the matched beta distribution.
pub fn beta_shape(params: &ModelParams) -> Result<BetaShape> {
    let l1 = log_moment(params, 1.0)?;
    let l2 = log_moment(params, 2.0)?;
    let m1 = l1.exp();
    let var = m1 * m1 * (l2 - 2.0 * l1).exp_m1();
    if !(var > tol::BETA_DEGENERATE_VAR) {
        return Err(Error::Degenerate { variance: var });
    }
    let m1_minus_m2 = -m1 * (l2 - l1).exp_m1();
    let one_minus_m1 = -l1.exp_m1();
    Ok(BetaShape { mean: m1, shape_beta: m1_minus_m2 * one_minus_m1 / var })
}

/// η ≈ 1 − I_{1−ε}(μβ/(1−μ), β) with μ = M_1.
pub fn eta_beta_approx(params: &ModelParams, eps: f64) -> Result<MetaResult> {
    check_eps(eps)?;
    let shape = beta_shape(params)?;
    let one_minus_mean = -log_moment(params, 1.0)?.exp_m1();
    let y = shape.mean * shape.shape_beta / one_minus_mean;
    let eta = 1.0 - reg_inc_beta(1.0 - eps, y, shape.shape_beta)?;
    Ok(MetaResult::new(params, eta, Method::BetaApprox, 0.0))
}

/// Point-mass limit: every link has reliability p_s.
pub fn eta_step(params: &ModelParams, eps: f64, method: Method) -> MetaResult {
    let eta = if mean_success(params) >= 1.0 - eps { 1.0 } else { 0.0 };
    MetaResult::new(params, eta, method, 0.0)
}

/// λ_ε = λpη with η from the chosen method. Degenerate variance falls back to the
/// step function.
pub fn lambda_eps(params: &ModelParams, eps: f64, method: Method) -> Result<MetaResult> {
    lambda_eps_with(params, eps, method, &mut GilPelaez::new(GilPelaezConfig::default())?)
}

/// As [`lambda_eps`], reusing an evaluator across calls.
pub fn lambda_eps_with(params: &ModelParams, eps: f64, method: Method, gp: &mut GilPelaez) -> Result<MetaResult> {
    check_eps(eps)?;
    let degenerate = matches!(beta_shape(params), Err(Error::Degenerate { .. }));
    if degenerate {
        return Ok(eta_step(params, eps, method));
    }
    match method {
        Method::GilPelaez => gp.eta(params, eps),
        Method::BetaApprox => eta_beta_approx(params, eps),
        Method::MonteCarlo => Err(Error::Config("lambda_eps supports gil_pelaez and beta_approx".into())),
    }
}

use super::optimize::{density_scale, maximize, Optimum};
use crate::error::{domain, Result};
use crate::netmodel::{diversity_finite_sum, gamma_product, LinkDistanceModel};
use crate::specfun::{gamma_ratio, gamma_real, lambert_w0};
use crate::tol;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMode {
    Analytic,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: f64,
    pub lambda: f64,
    pub p: f64,
    pub converged: bool,
}

fn check(theta: f64, eps: f64, alpha: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain("eps must lie in (0, 1)", eps));
    }
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(domain("theta must be positive", theta));
    }
    if !(alpha > 2.0 && alpha.is_finite()) {
        return Err(domain("alpha must exceed 2", alpha));
    }
    Ok(2.0 / alpha)
}

/// Prefactor shared by all closed forms: 1/(π R² θ^δ) for Fixed, μ/θ^δ for Rayleigh.
fn link_factor(theta: f64, delta: f64, link: LinkDistanceModel) -> f64 {
    match link {
        LinkDistanceModel::Fixed { r } => 1.0 / (std::f64::consts::PI * r * r * theta.powf(delta)),
        LinkDistanceModel::RayleighNearest { mu } => mu / theta.powf(delta),
    }
}

/// 1/e for Fixed, 1 for Rayleigh (the latter is maximized at λ = ∞).
fn sup_factor(link: LinkDistanceModel) -> f64 {
    match link {
        LinkDistanceModel::Fixed { .. } => (-1.0f64).exp(),
        LinkDistanceModel::RayleighNearest { .. } => 1.0,
    }
}

/// Markov-inequality upper bound on the SOC using the b-th moment.
pub fn markov_upper(b: f64, theta: f64, eps: f64, alpha: f64, link: LinkDistanceModel) -> Result<f64> {
    let delta = check(theta, eps, alpha)?;
    if !(b > 0.0 && b.is_finite()) {
        return Err(domain("b must be positive", b));
    }
    let pre = sup_factor(link) * link_factor(theta, delta, link);
    let tail = (1.0 - eps).powf(-b);
    if b <= 1.0 {
        Ok(pre / (gamma_product(delta) * b) * tail)
    } else {
        Ok(pre / (gamma_real(1.0 - delta) * gamma_ratio(b, delta)?) * tail)
    }
}

/// Markov bound minimized over b, and the minimizing b (numeric) or its approximation (analytic).
pub fn tightest_markov_upper_at(
    theta: f64,
    eps: f64,
    alpha: f64,
    link: LinkDistanceModel,
    mode: BoundMode,
) -> Result<(f64, f64)> {
    let delta = check(theta, eps, alpha)?;
    let l = (1.0 - eps).ln();
    let b_m = -1.0 / l;
    match mode {
        BoundMode::Analytic => {
            if b_m <= 1.0 {
                Ok((markov_upper(b_m, theta, eps, alpha, link)?, b_m))
            } else {
                let b_bar = -delta / l;
                let pre = sup_factor(link) * link_factor(theta, delta, link);
                let v = pre * delta.exp() / (gamma_real(1.0 - delta) * b_bar.powf(delta));
                Ok((v, b_bar))
            }
        }
        BoundMode::Numeric => {
            let f = |b: f64| markov_upper(b, theta, eps, alpha, link).unwrap_or(f64::INFINITY);
            let lo = golden_min(&f, 1e-9, 1.0);
            let hi_end = (20.0 * delta / -l).max(10.0);
            let hi = golden_min(&f, 1.0, hi_end);
            // the two branches meet at b = 1, which is often the minimizer
            let best = [(f(1.0), 1.0), (f(lo), lo), (f(hi), hi)].into_iter().fold((f64::INFINITY, 1.0), |acc, c| {
                if c.0 < acc.0 {
                    c
                } else {
                    acc
                }
            });
            Ok(best)
        }
    }
}

pub fn tightest_markov_upper(
    theta: f64,
    eps: f64,
    alpha: f64,
    link: LinkDistanceModel,
    mode: BoundMode,
) -> Result<f64> {
    tightest_markov_upper_at(theta, eps, alpha, link, mode).map(|r| r.0)
}

/// Golden-section minimum of a unimodal function on [a, b].
pub fn golden_min<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a) > tol::GOLDEN_REL * (c.abs() + d.abs()).max(f64::MIN_POSITIVE) {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        c
    } else {
        d
    }
}

/// Reverse-Markov lower bound on the SOC from the b-th moment of the outage probability.
pub fn reverse_markov_lower(b: u32, theta: f64, eps: f64, alpha: f64, link: LinkDistanceModel) -> Result<LowerBound> {
    let delta = check(theta, eps, alpha)?;
    if b == 0 {
        return Err(domain("b must be a positive integer", 0.0));
    }
    let gg = gamma_product(delta);
    if b == 1 {
        return Ok(match link {
            LinkDistanceModel::Fixed { r } => {
                let a = std::f64::consts::PI * r * r * gg * theta.powf(delta);
                let w = lambert_w0(std::f64::consts::E * (1.0 - eps))?;
                let nu = (1.0 - w) / a;
                let value = nu * (1.0 - (1.0 - (1.0 - eps) / w) / eps);
                LowerBound { value, lambda: nu, p: 1.0, converged: true }
            }
            LinkDistanceModel::RayleighNearest { mu } => {
                let value = mu * (1.0 - (1.0 - eps).sqrt()).powi(2) / (eps * theta.powf(delta) * gg);
                LowerBound { value, lambda: f64::INFINITY, p: 1.0, converged: true }
            }
        });
    }
    let scale = density_scale(theta, alpha, link)?;
    let load_per_lambda = 1.0 / scale;
    let fixed = matches!(link, LinkDistanceModel::Fixed { .. });
    let binom: Vec<f64> = binomials(b);
    let make = || {
        let binom = binom.clone();
        move |lambda: f64, p: f64| -> f64 {
            let load = lambda * load_per_lambda;
            let mut tail = 0.0;
            for (k, c) in binom.iter().enumerate() {
                let m = if k == 0 {
                    1.0
                } else {
                    let d = diversity_finite_sum(k as u32, p, delta);
                    if fixed {
                        (-load * d).exp()
                    } else {
                        1.0 / (1.0 + load * d)
                    }
                };
                tail += if k % 2 == 0 { c * m } else { -c * m };
            }
            lambda * p * (1.0 - tail / eps.powi(b as i32))
        }
    };
    let Optimum { lambda, p, value, converged } = maximize(make, scale);
    Ok(LowerBound { value: value.max(0.0), lambda, p, converged })
}

fn binomials(n: u32) -> Vec<f64> {
    let mut out = vec![1.0; n as usize + 1];
    for k in 1..=n as usize {
        out[k] = out[k - 1] * (n as usize + 1 - k) as f64 / k as f64;
    }
    out
}

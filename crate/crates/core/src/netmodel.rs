//! Network parameters, the diversity polynomial and the moments of the
//! conditional link success probability.

use crate::error::{domain, Result};
use crate::specfun::{gamma_ratio, gamma_real, hyp2f1_a_complex, ln_gamma};
use crate::ComplexValue;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::f64::consts::PI;

/// How a transmitter's receiver is placed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinkDistanceModel {
    /// Receiver at distance `r` in a uniformly random direction.
    Fixed { r: f64 },
    /// Receivers form a PPP of density `mu`; each transmitter serves its nearest one.
    RayleighNearest { mu: f64 },
}

impl LinkDistanceModel {
    pub fn fixed(r: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(domain("link distance R must be positive", r));
        }
        Ok(Self::Fixed { r })
    }

    pub fn rayleigh(mu: f64) -> Result<Self> {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(domain("receiver density mu must be positive", mu));
        }
        Ok(Self::RayleighNearest { mu })
    }

    pub fn tag(&self) -> ModelTag {
        match self {
            Self::Fixed { .. } => ModelTag::Fixed,
            Self::RayleighNearest { .. } => ModelTag::RayleighNearest,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelTag {
    Fixed,
    RayleighNearest,
}

/// Full network parameterization. δ = 2/α is always derived from α.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    lambda: f64,
    p: f64,
    theta: f64,
    alpha: f64,
    link: LinkDistanceModel,
}

impl ModelParams {
    pub fn new(lambda: f64, p: f64, theta: f64, alpha: f64, link: LinkDistanceModel) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(domain("lambda must be positive", lambda));
        }
        if !(p > 0.0 && p <= 1.0) {
            return Err(domain("p must lie in (0, 1]", p));
        }
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(domain("theta must be positive", theta));
        }
        if !(alpha > 2.0) || !alpha.is_finite() {
            return Err(domain("alpha must exceed 2", alpha));
        }
        match link {
            LinkDistanceModel::Fixed { r } => {
                LinkDistanceModel::fixed(r)?;
            }
            LinkDistanceModel::RayleighNearest { mu } => {
                LinkDistanceModel::rayleigh(mu)?;
            }
        }
        Ok(Self { lambda, p, theta, alpha, link })
    }

    /// Fixed link distance R = 1.
    pub fn unit_fixed(lambda: f64, p: f64, theta: f64, alpha: f64) -> Result<Self> {
        Self::new(lambda, p, theta, alpha, LinkDistanceModel::Fixed { r: 1.0 })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn delta(&self) -> f64 {
        2.0 / self.alpha
    }
    pub fn link(&self) -> LinkDistanceModel {
        self.link
    }

    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        Self::new(lambda, self.p, self.theta, self.alpha, self.link)
    }
    pub fn with_p(&self, p: f64) -> Result<Self> {
        Self::new(self.lambda, p, self.theta, self.alpha, self.link)
    }
    pub fn with_lambda_p(&self, lambda: f64, p: f64) -> Result<Self> {
        Self::new(lambda, p, self.theta, self.alpha, self.link)
    }

    /// Scalar L with M_b = exp(−L·D_b) (Fixed) or M_b = 1/(1 + L·D_b) (Rayleigh).
    pub fn load(&self) -> f64 {
        let d = self.delta();
        let gg = gamma_product(d);
        match self.link {
            LinkDistanceModel::Fixed { r } => self.lambda * PI * r * r * gg * self.theta.powf(d),
            LinkDistanceModel::RayleighNearest { mu } => self.lambda * gg * self.theta.powf(d) / mu,
        }
    }
}

/// Γ(1+δ)Γ(1−δ) = πδ / sin(πδ).
pub fn gamma_product(delta: f64) -> f64 {
    PI * delta / (PI * delta).sin()
}

/// C = πR²Γ(1+δ)Γ(1−δ).
pub fn c_geom(delta: f64, r: f64) -> f64 {
    PI * r * r * gamma_product(delta)
}

/// A moment of the conditional success probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentValue {
    pub order: ComplexValue,
    pub value: ComplexValue,
    pub model: ModelTag,
}

/// Map (R, λ) to the equivalent (1, λR²). Identity for the Rayleigh model.
pub fn normalize_scale(params: &ModelParams) -> ModelParams {
    match params.link {
        LinkDistanceModel::Fixed { r } => {
            ModelParams { lambda: params.lambda * r * r, link: LinkDistanceModel::Fixed { r: 1.0 }, ..*params }
        }
        LinkDistanceModel::RayleighNearest { .. } => *params,
    }
}

const FINITE_SUM_MAX: f64 = 12.0;

/// Diversity polynomial D_b(p, δ) = p·b·₂F₁(1−b, 1−δ; 2; p).
pub fn diversity_poly(b: ComplexValue, p: f64, delta: f64) -> Result<ComplexValue> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(domain("diversity_poly requires p in (0, 1]", p));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(domain("diversity_poly requires delta in (0, 1)", delta));
    }
    if b.norm() == 0.0 {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    if p == 1.0 && !(b.re + delta > 0.0) {
        return Err(domain("diversity_poly at p = 1 requires re(b) + delta > 0", b.re));
    }
    if b.im == 0.0 {
        let br = b.re;
        if br > 0.0 && br == br.round() && br <= FINITE_SUM_MAX {
            return Ok(ComplexValue::new(diversity_finite_sum(br as u32, p, delta), 0.0));
        }
        if p == 1.0 && br > 0.0 {
            return Ok(ComplexValue::new(gamma_ratio(br, delta)? / gamma_real(1.0 + delta), 0.0));
        }
    }
    if p == 1.0 {
        // Γ(b+δ)/(Γ(b)Γ(1+δ))
        let ln = ln_gamma(b + delta)? - ln_gamma(b)? - ln_gamma(ComplexValue::new(1.0 + delta, 0.0))?;
        return Ok(ln.exp());
    }
    let f = hyp2f1_a_complex(ComplexValue::new(1.0, 0.0) - b, 1.0 - delta, 2.0, p)?;
    Ok(b * f * p)
}

/// Σ_{k=1}^{b} C(b,k) C(δ−1,k−1) p^k.
pub fn diversity_finite_sum(b: u32, p: f64, delta: f64) -> f64 {
    let mut binom_b = 1.0; // C(b, k)
    let mut binom_d = 1.0; // C(δ−1, k−1)
    let mut pk = 1.0;
    let mut sum = 0.0;
    for k in 1..=b {
        let kf = k as f64;
        binom_b *= (b as f64 - kf + 1.0) / kf;
        if k > 1 {
            binom_d *= (delta - 1.0 - (kf - 2.0)) / (kf - 1.0);
        }
        pk *= p;
        sum += binom_b * binom_d * pk;
    }
    sum
}

/// d D_b / db at b = 0, the slope of D_ju at u = 0 divided by j.
pub fn diversity_slope_at_zero(p: f64, delta: f64) -> f64 {
    -(delta * (-p).ln_1p()).exp_m1() / delta
}

/// Large-b asymptote p^δ b^δ / Γ(1+δ).
pub fn diversity_poly_asymptotic(b: f64, p: f64, delta: f64) -> f64 {
    (p * b).powf(delta) / gamma_real(1.0 + delta)
}

/// Memo of D_ju for one (p, δ), keyed by the bits of u.
#[derive(Debug, Clone)]
pub struct DiversityCache {
    p: f64,
    delta: f64,
    map: HashMap<u64, ComplexValue>,
}

impl DiversityCache {
    pub fn new(p: f64, delta: f64) -> Self {
        Self { p, delta, map: HashMap::new() }
    }

    pub fn matches(&self, p: f64, delta: f64) -> bool {
        self.p.to_bits() == p.to_bits() && self.delta.to_bits() == delta.to_bits()
    }

    /// D_ju(p, δ).
    pub fn imaginary(&mut self, u: f64) -> Result<ComplexValue> {
        if let Some(v) = self.map.get(&u.to_bits()) {
            return Ok(*v);
        }
        let v = diversity_poly(ComplexValue::new(0.0, u), self.p, self.delta)?;
        self.map.insert(u.to_bits(), v);
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// M_b for a complex order b.
pub fn moment(params: &ModelParams, b: ComplexValue) -> Result<MomentValue> {
    let d = diversity_poly(b, params.p, params.delta())?;
    Ok(MomentValue { order: b, value: moment_from_diversity(params, d), model: params.link.tag() })
}

/// M_b given D_b, for either link model.
pub fn moment_from_diversity(params: &ModelParams, d: ComplexValue) -> ComplexValue {
    let l = params.load();
    match params.link {
        LinkDistanceModel::Fixed { .. } => (-d * l).exp(),
        LinkDistanceModel::RayleighNearest { .. } => ComplexValue::new(1.0, 0.0) / (d * l + 1.0),
    }
}

/// ln M_b for real b > 0.
pub fn log_moment(params: &ModelParams, b: f64) -> Result<f64> {
    let d = diversity_poly(ComplexValue::new(b, 0.0), params.p, params.delta())?.re;
    let l = params.load();
    Ok(match params.link {
        LinkDistanceModel::Fixed { .. } => -l * d,
        LinkDistanceModel::RayleighNearest { .. } => -(l * d).ln_1p(),
    })
}

/// M_b for real b.
pub fn moment_real(params: &ModelParams, b: f64) -> Result<f64> {
    if b == 0.0 {
        return Ok(1.0);
    }
    Ok(log_moment(params, b)?.exp())
}

/// Mean success probability p_s = M_1.
pub fn mean_success(params: &ModelParams) -> f64 {
    let l = params.load() * params.p;
    match params.link {
        LinkDistanceModel::Fixed { .. } => (-l).exp(),
        LinkDistanceModel::RayleighNearest { .. } => 1.0 / (1.0 + l),
    }
}

/// var P_s = M_2 − M_1², evaluated as M_1²·expm1(ln M_2 − 2 ln M_1).
pub fn variance_ps(params: &ModelParams) -> Result<f64> {
    let l1 = log_moment(params, 1.0)?;
    let l2 = log_moment(params, 2.0)?;
    Ok(((2.0 * l1).exp() * (l2 - 2.0 * l1).exp_m1()).max(0.0))
}

/// Fixed-model variance written as M_1²(M_1^{p(δ−1)} − 1).
pub fn variance_ps_identity(params: &ModelParams) -> f64 {
    let m1 = mean_success(params);
    let e = params.p * (params.delta() - 1.0) * m1.ln();
    m1 * m1 * e.exp_m1()
}

/// λp that yields mean success probability `target` (Fixed model).
pub fn ps_inverse(target: f64, template: &ModelParams) -> Result<f64> {
    if !(target > 0.0 && target < 1.0) {
        return Err(domain("ps_inverse target must lie in (0, 1)", target));
    }
    let LinkDistanceModel::Fixed { r } = template.link else {
        return Err(domain("ps_inverse needs the fixed link model", f64::NAN));
    };
    let d = template.delta();
    Ok(-target.ln() / (c_geom(d, r) * template.theta.powf(d)))
}

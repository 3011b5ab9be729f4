use crate::error::{domain, Result};
use crate::netmodel::{mean_success, ps_inverse, ModelParams};
use crate::tol;
use serde::{Deserialize, Serialize};

/// Transmission capacity with unit link distance: (capacity, λp at which it is attained).
pub fn transmission_capacity(theta: f64, eps: f64, alpha: f64) -> Result<(f64, f64)> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain("eps must lie in (0, 1)", eps));
    }
    let template = ModelParams::unit_fixed(1.0, 1.0, theta, alpha)?;
    let nu = ps_inverse(1.0 - eps, &template)?;
    Ok(((1.0 - eps) * nu, nu))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstrainedSoc {
    pub value: f64,
    pub boundary: bool,
}

/// SOC when the density of concurrent transmissions is held at ν and p → 0.
pub fn constrained_soc(nu: f64, theta: f64, eps: f64, alpha: f64) -> Result<ConstrainedSoc> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(domain("nu must be positive", nu));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain("eps must lie in (0, 1)", eps));
    }
    let ps = mean_success(&ModelParams::unit_fixed(nu, 1.0, theta, alpha)?);
    let gap = (1.0 - eps) - ps;
    Ok(if gap.abs() <= tol::KNIFE_EDGE {
        ConstrainedSoc { value: nu, boundary: true }
    } else if gap < 0.0 {
        ConstrainedSoc { value: nu, boundary: false }
    } else {
        ConstrainedSoc { value: 0.0, boundary: false }
    })
}

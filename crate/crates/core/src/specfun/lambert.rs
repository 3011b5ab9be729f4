use crate::error::{domain, Error, Result};
use crate::tol::{LAMBERT_MAX_ITER, LAMBERT_RESIDUAL};
use std::f64::consts::E;

/// Principal branch of the Lambert W function, by Halley iteration.
pub fn lambert_w0(x: f64) -> Result<f64> {
    let branch = -1.0 / E;
    if !(x >= branch) || !x.is_finite() {
        return Err(domain("lambert_w0 requires x >= -1/e", x));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == branch {
        return Ok(-1.0);
    }
    let mut w = if x > 0.0 {
        x.ln_1p()
    } else {
        // expansion around the branch point
        let q = (2.0 * (E * x + 1.0)).sqrt();
        -1.0 + q - q * q / 3.0
    };
    for _ in 0..LAMBERT_MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    let resid = w * w.exp() - x;
    if resid.abs() > LAMBERT_RESIDUAL * x.abs().max(1.0) {
        return Err(Error::Convergence { what: "Lambert W", iterations: LAMBERT_MAX_ITER });
    }
    Ok(w)
}

use crate::error::{domain, Result};
use crate::netmodel::{gamma_product, LinkDistanceModel, ModelParams};
use crate::specfun::gamma_real;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticConstants {
    pub kappa: f64,
    pub c_geom: f64,
    pub c_prime: f64,
    pub rho: f64,
    pub c_delta: f64,
}

impl AsymptoticConstants {
    pub fn new(delta: f64, eps: f64, theta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(domain("delta must lie in (0, 1)", delta));
        }
        Ok(AsymptoticConstants {
            kappa: delta / (1.0 - delta),
            c_geom: PI * gamma_product(delta),
            c_prime: PI * gamma_real(1.0 - delta),
            rho: eps / theta,
            c_delta: (1.0 / delta).powf(delta) * (-(1.0 - delta)).exp() / gamma_real(1.0 - delta),
        })
    }
}

/// Small-ε SOC and the quantities at its optimum. Values not defined for a model are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticSoc {
    pub soc: f64,
    pub p_star: f64,
    pub lambda_opt: Option<f64>,
    pub eta_opt: Option<f64>,
    pub ps_opt: Option<f64>,
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(domain("eps must lie in (0, 1)", eps))
    }
}

/// Small-ε approximation of λ_ε.
pub fn lambda_eps_asymptotic(params: &ModelParams, eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let d = params.delta();
    let (lambda, p, theta) = (params.lambda(), params.p(), params.theta());
    match params.link() {
        LinkDistanceModel::Fixed { r } => {
            let k = d / (1.0 - d);
            let c_prime = PI * gamma_real(1.0 - d) * r * r;
            let expo = (theta * p / eps).powf(k) * (d * lambda * c_prime).powf(k / d) / k;
            Ok(lambda * p * (-expo).exp())
        }
        LinkDistanceModel::RayleighNearest { mu } => {
            Ok(mu * eps.powf(d) * p.powf(1.0 - d) / (theta.powf(d) * gamma_product(d)))
        }
    }
}

pub fn soc_asymptotic(theta: f64, eps: f64, alpha: f64, link: LinkDistanceModel) -> Result<AsymptoticSoc> {
    check_eps(eps)?;
    if !(alpha > 2.0) {
        return Err(domain("alpha must exceed 2", alpha));
    }
    let d = 2.0 / alpha;
    let rho = (eps / theta).powf(d);
    Ok(match link {
        LinkDistanceModel::Fixed { r } => {
            let area = r * r;
            let lambda_opt = rho / (PI * d.powf(d) * gamma_real(1.0 - d)) / area;
            let eta_opt = (-(1.0 - d)).exp();
            AsymptoticSoc {
                soc: lambda_opt * eta_opt,
                p_star: 1.0,
                lambda_opt: Some(lambda_opt),
                eta_opt: Some(eta_opt),
                ps_opt: Some(1.0 - (eps / d).powf(d) * gamma_real(1.0 + d)),
            }
        }
        LinkDistanceModel::RayleighNearest { mu } => AsymptoticSoc {
            soc: mu * rho / gamma_product(d),
            p_star: 1.0,
            lambda_opt: None,
            eta_opt: None,
            ps_opt: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXED: LinkDistanceModel = LinkDistanceModel::Fixed { r: 1.0 };

    #[test]
    fn alpha_four_constants() {
        let s = soc_asymptotic(1.0, 1.0 - 1e-9, 4.0, FIXED).unwrap();
        assert!((s.soc / (1.0f64 - 1e-9).sqrt() - 0.15405).abs() < 1e-4);
        assert!((s.eta_opt.unwrap() - 0.6065).abs() < 1e-4);
        let s = soc_asymptotic(0.1, 0.007, 4.0, FIXED).unwrap();
        assert!((s.ps_opt.unwrap() - (1.0 - 1.2533 * 0.007f64.sqrt())).abs() < 1e-5);
        assert!((s.ps_opt.unwrap() - 0.8951).abs() < 1e-4);
        assert!((s.soc - 0.0408).abs() < 1e-4);
    }

    #[test]
    fn soc_equals_c_delta_form() {
        for alpha in [2.5, 3.0, 4.0, 6.0] {
            let d = 2.0 / alpha;
            let c = AsymptoticConstants::new(d, 0.05, 0.2).unwrap();
            let s = soc_asymptotic(0.2, 0.05, alpha, FIXED).unwrap();
            assert!((s.soc - c.c_delta * c.rho.powf(d) / PI).abs() < 1e-14);
        }
    }

    #[test]
    fn lambda_eps_examples() {
        let prm = ModelParams::unit_fixed(0.1, 1.0, 0.1, 4.0).unwrap();
        let v = lambda_eps_asymptotic(&prm, 0.1).unwrap();
        assert!((v - 0.1 * (-0.0775f64).exp()).abs() < 1e-4, "{v}");
        let ray = LinkDistanceModel::RayleighNearest { mu: 1.0 };
        let a = lambda_eps_asymptotic(&ModelParams::new(0.5, 0.3, 0.1, 4.0, ray).unwrap(), 0.01).unwrap();
        let b = lambda_eps_asymptotic(&ModelParams::new(1.0, 0.3, 0.1, 4.0, ray).unwrap(), 0.01).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rayleigh_has_no_optimum_point() {
        let s = soc_asymptotic(0.1, 0.01, 4.0, LinkDistanceModel::RayleighNearest { mu: 1.0 }).unwrap();
        assert!(s.lambda_opt.is_none() && s.eta_opt.is_none() && s.ps_opt.is_none());
    }
}

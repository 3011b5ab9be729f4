use crate::error::{Error, Result};
use crate::netmodel::{LinkDistanceModel, ModelParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Boundary {
    /// Wrap-around window with minimum-image distances.
    Torus,
    /// Only links whose receiver lies at least `width` inside the window are measured.
    Guard { width: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub window_side: f64,
    pub seed: u64,
    pub num_realizations: usize,
    pub boundary: Boundary,
    pub params: ModelParams,
}

impl SimConfig {
    pub fn new(
        params: ModelParams,
        window_side: f64,
        seed: u64,
        num_realizations: usize,
        boundary: Boundary,
    ) -> Result<Self> {
        let cfg = SimConfig { window_side, seed, num_realizations, boundary, params };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn link_model(&self) -> LinkDistanceModel {
        self.params.link()
    }

    pub fn validate(&self) -> Result<()> {
        let unit = match self.params.link() {
            LinkDistanceModel::Fixed { r } => r,
            LinkDistanceModel::RayleighNearest { mu } => 1.0 / mu.sqrt(),
        };
        if !(self.window_side > 10.0 * unit && self.window_side.is_finite()) {
            return Err(Error::Config(format!(
                "window side {} must exceed {} (10 link lengths)",
                self.window_side,
                10.0 * unit
            )));
        }
        if self.num_realizations == 0 {
            return Err(Error::Config("at least one realization is required".into()));
        }
        if let Boundary::Guard { width } = self.boundary {
            if !(width >= 0.0 && 2.0 * width < self.window_side) {
                return Err(Error::Config(format!("guard width {width} does not fit the window")));
            }
        }
        Ok(())
    }
}

/// One sampled network: transmitter and receiver positions for every potential link.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub index: u64,
    pub tx: Vec<[f64; 2]>,
    pub rx: Vec<[f64; 2]>,
    pub link_len: Vec<f64>,
}

impl Realization {
    pub fn is_empty(&self) -> bool {
        self.tx.is_empty()
    }

    pub fn len(&self) -> usize {
        self.tx.len()
    }
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn poisson_count<R: Rng>(rng: &mut R, mean: f64) -> Result<usize> {
    if mean <= 0.0 {
        return Ok(0);
    }
    let d = Poisson::new(mean).map_err(|e| Error::Config(format!("poisson mean {mean}: {e}")))?;
    Ok(d.sample(rng) as usize)
}

fn uniform_points<R: Rng>(rng: &mut R, n: usize, side: f64) -> Vec<[f64; 2]> {
    (0..n).map(|_| [rng.random::<f64>() * side, rng.random::<f64>() * side]).collect()
}

/// Squared distance under the boundary convention.
#[inline]
pub fn dist2(a: [f64; 2], b: [f64; 2], side: f64, torus: bool) -> f64 {
    let mut dx = (a[0] - b[0]).abs();
    let mut dy = (a[1] - b[1]).abs();
    if torus {
        dx = dx.min(side - dx);
        dy = dy.min(side - dy);
    }
    dx * dx + dy * dy
}

/// Sample realization `index`; identical (seed, index) pairs give identical networks.
pub fn sample_network(cfg: &SimConfig, index: u64) -> Result<Realization> {
    let mut rng = rng_for(cfg.seed, index);
    let side = cfg.window_side;
    let torus = matches!(cfg.boundary, Boundary::Torus);
    let n = poisson_count(&mut rng, cfg.params.lambda() * side * side)?;
    let tx = uniform_points(&mut rng, n, side);
    let (rx, link_len) = match cfg.params.link() {
        LinkDistanceModel::Fixed { r } => {
            let rx = tx
                .iter()
                .map(|t| {
                    let phi = rng.random::<f64>() * std::f64::consts::TAU;
                    let (s, c) = phi.sin_cos();
                    let mut q = [t[0] + r * c, t[1] + r * s];
                    if torus {
                        q = [q[0].rem_euclid(side), q[1].rem_euclid(side)];
                    }
                    q
                })
                .collect();
            (rx, vec![r; n])
        }
        LinkDistanceModel::RayleighNearest { mu } => {
            let m = poisson_count(&mut rng, mu * side * side)?;
            let receivers = uniform_points(&mut rng, m, side);
            if m == 0 && n > 0 {
                return Err(Error::Config("no receivers drawn; enlarge the window".into()));
            }
            let mut rx = Vec::with_capacity(n);
            let mut len = Vec::with_capacity(n);
            for t in &tx {
                let mut best = (f64::INFINITY, 0usize);
                for (j, q) in receivers.iter().enumerate() {
                    let d = dist2(*t, *q, side, torus);
                    // strict comparison keeps the lowest index on ties
                    if d < best.0 {
                        best = (d, j);
                    }
                }
                rx.push(receivers[best.1]);
                len.push(best.0.sqrt());
            }
            (rx, len)
        }
    };
    Ok(Realization { index, tx, rx, link_len })
}

/// Conditional success probability of each measured link, with fading and ALOHA averaged out.
pub fn conditional_success_probs(real: &Realization, params: &ModelParams, boundary: Boundary, side: f64) -> Vec<f64> {
    let torus = matches!(boundary, Boundary::Torus);
    let measured: Vec<usize> = match boundary {
        Boundary::Torus => (0..real.len()).collect(),
        Boundary::Guard { width } => (0..real.len())
            .filter(|&i| {
                let q = real.rx[i];
                q[0] >= width && q[0] <= side - width && q[1] >= width && q[1] <= side - width
            })
            .collect(),
    };
    let (p, theta, half_alpha) = (params.p(), params.theta(), params.alpha() / 2.0);
    measured
        .par_iter()
        .map(|&i| {
            let q = real.rx[i];
            let s = theta * real.link_len[i].powf(params.alpha());
            let mut log_ps = 0.0;
            for (z, t) in real.tx.iter().enumerate() {
                if z == i {
                    continue;
                }
                let d2 = dist2(q, *t, side, torus);
                let g = s / (d2.powf(half_alpha) + s);
                log_ps += (-p * g).ln_1p();
            }
            log_ps.exp()
        })
        .collect()
}

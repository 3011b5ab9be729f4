use super::network::{conditional_success_probs, sample_network, SimConfig};
use crate::error::{domain, Error, Result};
use crate::tol;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Per-link conditional success probabilities pooled over realizations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalDistribution {
    pub samples: Vec<f64>,
    pub num_links: usize,
    pub realization_count: usize,
    /// Start of each realization's samples in `samples`, plus a final end marker.
    pub realization_offsets: Vec<usize>,
    pub empty_realizations: usize,
}

impl EmpiricalDistribution {
    pub fn from_realizations(parts: Vec<Vec<f64>>) -> Self {
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut samples = Vec::with_capacity(parts.iter().map(Vec::len).sum());
        let mut empty = 0;
        for part in parts.iter() {
            if part.is_empty() {
                empty += 1;
                continue;
            }
            offsets.push(samples.len());
            samples.extend_from_slice(part);
        }
        offsets.push(samples.len());
        EmpiricalDistribution {
            num_links: samples.len(),
            realization_count: parts.len(),
            realization_offsets: offsets,
            samples,
            empty_realizations: empty,
        }
    }

    fn realizations(&self) -> impl Iterator<Item = &[f64]> {
        self.realization_offsets.windows(2).map(|w| &self.samples[w[0]..w[1]])
    }

    fn require(&self) -> Result<()> {
        if self.num_links < tol::MIN_SAMPLES {
            Err(Error::InsufficientSamples { have: self.num_links, need: tol::MIN_SAMPLES })
        } else {
            Ok(())
        }
    }
}

/// Estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub std_err: f64,
}

/// Run every realization of `cfg` (in parallel) and pool the link samples in realization order.
pub fn simulate(cfg: &SimConfig) -> Result<EmpiricalDistribution> {
    cfg.validate()?;
    let parts = (0..cfg.num_realizations as u64)
        .into_par_iter()
        .map(|i| {
            let r = sample_network(cfg, i)?;
            Ok(conditional_success_probs(&r, &cfg.params, cfg.boundary, cfg.window_side))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EmpiricalDistribution::from_realizations(parts))
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(domain("eps must lie in (0, 1]", eps))
    }
}

/// Fraction of links with success probability above 1−ε, with the binomial standard error.
pub fn empirical_meta(dist: &EmpiricalDistribution, eps: f64) -> Result<Estimate> {
    dist.require()?;
    check_eps(eps)?;
    let n = dist.num_links as f64;
    let q = dist.samples.iter().filter(|&&s| s > 1.0 - eps).count() as f64 / n;
    Ok(Estimate { value: q, std_err: (q * (1.0 - q) / n).sqrt() })
}

/// Sample mean of P_s^b, with the iid standard error.
pub fn empirical_moment(dist: &EmpiricalDistribution, b: f64) -> Result<Estimate> {
    dist.require()?;
    if !(b > 0.0) {
        return Err(domain("b must be positive", b));
    }
    let vals: Vec<f64> = dist.samples.iter().map(|s| s.powf(b)).collect();
    let (m, var) = mean_var(&vals);
    Ok(Estimate { value: m, std_err: (var / vals.len() as f64).sqrt() })
}

/// As [`empirical_meta`], with the error widened to the realization batch-means error when larger.
pub fn empirical_meta_batched(dist: &EmpiricalDistribution, eps: f64) -> Result<Estimate> {
    let iid = empirical_meta(dist, eps)?;
    let thr = 1.0 - eps;
    Ok(widen(iid, dist, |s| if s > thr { 1.0 } else { 0.0 }))
}

pub fn empirical_moment_batched(dist: &EmpiricalDistribution, b: f64) -> Result<Estimate> {
    let iid = empirical_moment(dist, b)?;
    Ok(widen(iid, dist, |s| s.powf(b)))
}

fn widen<F: Fn(f64) -> f64>(iid: Estimate, dist: &EmpiricalDistribution, f: F) -> Estimate {
    let groups: Vec<(f64, f64)> =
        dist.realizations().map(|r| (r.len() as f64, r.iter().map(|&s| f(s)).sum())).collect();
    let k = groups.len() as f64;
    if k < 2.0 {
        return iid;
    }
    let n: f64 = groups.iter().map(|g| g.0).sum();
    let m = iid.value;
    // ratio-estimator variance over realizations
    let ss: f64 = groups.iter().map(|(nr, sr)| (sr - nr * m).powi(2)).sum();
    let se = (k / (k - 1.0) * ss).sqrt() / n;
    Estimate { value: m, std_err: iid.std_err.max(se) }
}

fn mean_var(x: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let m = x.iter().sum::<f64>() / n;
    let v = x.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (n - 1.0);
    (m, v)
}

/// Sample variance of P_s with a bootstrap standard error; realizations are resampled as whole blocks.
pub fn sample_variance(dist: &EmpiricalDistribution, reps: usize, seed: u64) -> Result<Estimate> {
    dist.require()?;
    let (_, v) = mean_var(&dist.samples);
    let blocks: Vec<&[f64]> = dist.realizations().collect();
    if reps < 2 {
        return Err(domain("bootstrap needs at least 2 replicates", reps as f64));
    }
    let stats: Vec<f64> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(r);
            let (mut s1, mut s2, mut n) = (0.0, 0.0, 0.0);
            if blocks.len() >= 2 {
                for _ in 0..blocks.len() {
                    for &x in blocks[rng.random_range(0..blocks.len())] {
                        s1 += x;
                        s2 += x * x;
                        n += 1.0;
                    }
                }
            } else {
                let xs = &dist.samples;
                for _ in 0..xs.len() {
                    let x = xs[rng.random_range(0..xs.len())];
                    s1 += x;
                    s2 += x * x;
                    n += 1.0;
                }
            }
            (s2 - s1 * s1 / n) / (n - 1.0)
        })
        .collect();
    let (_, bv) = mean_var(&stats);
    Ok(Estimate { value: v, std_err: bv.sqrt() })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    /// Counts normalized to a probability density on [0, 1].
    pub fn density(&self) -> Vec<f64> {
        let total: usize = self.counts.iter().sum();
        let width = 1.0 / self.counts.len() as f64;
        self.counts.iter().map(|&c| c as f64 / (total.max(1) as f64 * width)).collect()
    }
}

/// Equal-width histogram on [0, 1]; a sample of exactly 1 goes in the top bin.
pub fn histogram(dist: &EmpiricalDistribution, bins: usize) -> Result<Histogram> {
    if bins < 2 {
        return Err(domain("at least 2 bins are required", bins as f64));
    }
    let mut counts = vec![0usize; bins];
    for &s in &dist.samples {
        let k = ((s * bins as f64) as usize).min(bins - 1);
        counts[k] += 1;
    }
    let edges = (0..=bins).map(|i| i as f64 / bins as f64).collect();
    Ok(Histogram { edges, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(parts: Vec<Vec<f64>>) -> EmpiricalDistribution {
        EmpiricalDistribution::from_realizations(parts)
    }

    #[test]
    fn offsets_skip_empty_realizations() {
        let d = dist(vec![vec![0.5; 3], vec![], vec![0.2; 2]]);
        assert_eq!(d.realization_offsets, vec![0, 3, 5]);
        assert_eq!(d.empty_realizations, 1);
        assert_eq!(d.realization_count, 3);
    }

    #[test]
    fn trivial_estimates() {
        let d = dist(vec![vec![1.0; 200]]);
        assert_eq!(empirical_meta(&d, 0.01).unwrap().value, 1.0);
        let d = dist(vec![(0..200).map(|i| (i as f64 + 0.5) / 200.0).collect()]);
        assert_eq!(empirical_meta(&d, 1.0).unwrap().value, 1.0);
        assert!((empirical_moment(&d, 1e-9).unwrap().value - 1.0).abs() < 1e-8);
        assert!(empirical_meta(&dist(vec![vec![0.5; 99]]), 0.1).is_err());
    }

    #[test]
    fn histogram_counts_and_top_bin() {
        let d = dist(vec![vec![1.0; 150]]);
        let h = histogram(&d, 10).unwrap();
        assert_eq!(h.counts[9], 150);
        let d = dist(vec![(0..300).map(|i| i as f64 / 300.0).collect()]);
        let h = histogram(&d, 7).unwrap();
        assert_eq!(h.counts.iter().sum::<usize>(), 300);
        assert!(histogram(&d, 1).is_err());
    }

    #[test]
    fn batched_error_not_smaller() {
        let d = dist(vec![vec![0.9; 100], vec![0.1; 100], vec![0.8; 100]]);
        let a = empirical_moment(&d, 1.0).unwrap();
        let b = empirical_moment_batched(&d, 1.0).unwrap();
        assert_eq!(a.value, b.value);
        assert!(b.std_err >= a.std_err);
    }
}

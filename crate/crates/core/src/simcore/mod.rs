//! Monte Carlo sampling of Poisson bipolar networks and empirical meta distributions.

mod empirical;
mod network;

pub use empirical::{
    empirical_meta, empirical_meta_batched, empirical_moment, empirical_moment_batched, histogram, sample_variance,
    simulate, EmpiricalDistribution, Estimate, Histogram,
};
pub use network::{conditional_success_probs, dist2, sample_network, Boundary, Realization, SimConfig};

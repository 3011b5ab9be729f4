//! SOC optimization, bounds, small-ε asymptotics and the transmission-capacity comparison.

mod asymptotic;
mod bounds;
mod curve;
mod optimize;
mod tc;

pub use asymptotic::{lambda_eps_asymptotic, soc_asymptotic, AsymptoticConstants, AsymptoticSoc};
pub use bounds::{
    golden_min, markov_upper, reverse_markov_lower, tightest_markov_upper, tightest_markov_upper_at, BoundMode,
    LowerBound,
};
pub use curve::{BoundCurve, CurveKind};
pub use optimize::{
    density_scale, maximize, maximize_with_ridge, p_grid, soc_optimize, soc_optimize_with, Optimum, SocMethod,
    SocResult,
};
pub use tc::{constrained_soc, transmission_capacity, ConstrainedSoc};

//! Numerical tolerances and caps shared by every module.

/// Relative stopping threshold for the Gauss series.
pub const HYP_SERIES_REL: f64 = 1e-16;
/// Term cap for the Gauss series.
pub const HYP_SERIES_MAX_TERMS: usize = 1_000_000;
/// Largest |a|·(−ln(1−x)) for which the Gauss series keeps ~8 digits of headroom.
pub const HYP_SERIES_CANCEL_LIMIT: f64 = 8.0;
/// Relative tolerance for the Euler-integral route.
pub const HYP_INTEGRAL_REL: f64 = 1e-14;

/// Distance from a nonpositive integer that counts as a pole.
pub const GAMMA_POLE: f64 = 1e-14;

/// Residual target for Lambert W.
pub const LAMBERT_RESIDUAL: f64 = 1e-12;
pub const LAMBERT_MAX_ITER: usize = 100;

/// Default absolute tolerance on η for Gil-Pelaez inversion.
pub const GP_ABS_TOL: f64 = 1e-6;
/// Below this fraction of the first panel width the integrand uses its u → 0 limit.
pub const GP_U_MIN: f64 = 1e-6;
pub const GP_U_MAX_CAP: f64 = 1e5;
pub const GP_MAX_PANELS: usize = 20_000;

/// Variance at or below which the beta fit is degenerate.
pub const BETA_DEGENERATE_VAR: f64 = 1e-15;

/// Relative step size at which the SOC pattern search stops.
pub const OPT_REL_STEP: f64 = 1e-4;
pub const OPT_MAX_ITER: usize = 400;
/// Relative gain per λ decade below which the search stops extending the grid.
pub const OPT_DECADE_GAIN: f64 = 1e-4;
/// Largest λ, in units of the model's natural density scale.
pub const OPT_LAMBDA_CAP: f64 = 1e8;

/// Relative tolerance for golden-section minimization over b.
pub const GOLDEN_REL: f64 = 1e-8;

/// |1 − ε − p_s| at or below which the constrained SOC is on the knife edge.
pub const KNIFE_EDGE: f64 = 1e-12;

/// Minimum number of links for empirical estimators.
pub const MIN_SAMPLES: usize = 100;

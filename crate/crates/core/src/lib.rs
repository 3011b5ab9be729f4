#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]
//! Spatial outage capacity of Poisson bipolar networks with ALOHA.
//!
//! The crate evaluates the SIR meta distribution exactly (Gil-Pelaez inversion)
//! and approximately (beta fit), optimizes the density of reliable links over
//! transmitter density and transmit probability, provides closed-form bounds and
//! high-reliability asymptotics, and ships a Monte Carlo simulator to check all of it.

pub mod error;
pub mod metadist;
pub mod netmodel;
pub mod quad;
pub mod simcore;
pub mod socopt;
pub mod specfun;
pub mod tol;

pub use error::{Error, Result};
pub use metadist::{GilPelaezConfig, MetaResult, Method};
pub use netmodel::{LinkDistanceModel, ModelParams, ModelTag};
pub use simcore::{Boundary, EmpiricalDistribution, SimConfig};
pub use socopt::{BoundCurve, CurveKind, SocMethod, SocResult};

/// Complex scalar used for imaginary-order moments.
pub type ComplexValue = num_complex::Complex64;

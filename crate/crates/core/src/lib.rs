//! Bound states of the Manning-Rosen and Pöschl-Teller potentials with a
//! blended approximation of the centrifugal term.

// `!(x > y)` is used on purpose so that NaN lands on the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod centrifugal;
pub mod error;
pub mod oracle;
pub mod potentials;
pub mod quadrature;
pub mod scalar;
pub mod specfun;
pub mod spectra;

pub use error::{Error, Result};
pub use scalar::{Field, Real};

/// Double-precision aliases for the common types.
pub type Coeffs = centrifugal::Coeffs<f64>;
pub type Blend = centrifugal::Blend<f64>;
pub type CoeffMatrix = centrifugal::CoeffMatrix<f64>;
pub type MrParams = potentials::MrParams<f64>;
pub type PtParams = potentials::PtParams<f64>;
pub type Potential = potentials::Potential<f64>;
pub type MrLevel = spectra::MrLevel<f64>;
pub type PtLevel = spectra::PtLevel<f64>;
pub type Level = spectra::Level<f64>;
pub type MrWavefunction = spectra::MrWavefunction<f64>;
pub type PtWavefunction = spectra::PtWavefunction<f64>;
pub type RadialProblem = oracle::RadialProblem<f64>;
pub type EigenResult = oracle::EigenResult<f64>;

//! Holevo information of three identical depolarizing channels composed in a
//! coherent superposition of their six causal orders (the quantum 3-switch).
//!
//! The block-algebra pipeline ([`channel`], [`switch`], [`spectrum`],
//! [`holevo`]) is generic over the [`Real`] scalar; the f64 aliases below are
//! what the classifier, the Kraus-operator [`oracle`] and the [`fractional`]
//! scans use.

pub mod channel;
pub mod classifier;
pub mod error;
pub mod fractional;
pub mod holevo;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod spectrum;
pub mod switch;

pub use channel::{BlockCoefficients, BlockKind, Branch, ChannelParams};
pub use error::{Error, Result};
pub use holevo::HolevoResult;
pub use scalar::Real;
pub use spectrum::{ClassId, SwitchSpectrum};
pub use switch::{BlockPattern, ControlMatrix, OrderConfiguration, ReducedMatrix};

pub type Params = ChannelParams<f64>;
pub type Config = OrderConfiguration<f64>;
pub type Coefficients = BlockCoefficients<f64>;
pub type Reduced = ReducedMatrix<f64>;
pub type Control = ControlMatrix<f64>;
pub type Spectrum = SwitchSpectrum<f64>;
pub type Holevo = HolevoResult<f64>;

pub type ParamsF32 = ChannelParams<f32>;
pub type ConfigF32 = OrderConfiguration<f32>;
pub type HolevoF32 = HolevoResult<f32>;

//! Fixed-confidence 1-identification for multi-armed bandits.
//!
//! Given `K` arms with unknown means and a known threshold `mu0`, decide
//! with probability at least `1 - delta` whether some arm's mean exceeds
//! `mu0`, and if so name an arm at or above it.
//!
//! The crate provides the SEE algorithm ([`see`]), the LUCB_G / HDoC /
//! lilHDoC baselines ([`baselines`]), hardness and lower-bound calculators
//! ([`hardness`]), the dyadic confidence radius ([`confidence`]) and a
//! seeded Monte-Carlo harness ([`harness`]).

pub mod baselines;
pub mod confidence;
mod error;
pub mod hardness;
pub mod harness;
mod instance;
mod record;
pub mod rng;
pub mod see;

pub use error::{Error, Result};
pub use instance::{BanditInstance, NoiseModel, Sign, Verdict};
pub use record::{Outcome, RunRecord};

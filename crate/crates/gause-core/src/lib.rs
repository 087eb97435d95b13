//! Integrability analysis of the generalized Gause predator-prey system.
//!
//! The crate provides exact arithmetic over Q(i), bounded Darboux-polynomial
//! and Darbouxian integrating-factor searches for the reduced polynomial
//! vector fields, equilibrium resonance analysis, the Bessel-function first
//! integral of the gamma = 0, m = 1 case, and numeric trajectory
//! verification of every claimed first integral.

pub mod error;
pub mod linalg;
pub mod linode;
pub mod model;
pub mod poly;
pub mod scalar;

pub use error::{CoreError, Result};

//! Numerical library for Fourier summation methods, Weil derivatives, best
//! uniform trigonometric approximation, and Schauder-basis construction on
//! Müntz spaces of continuous functions on `[0,1]`.
//!
//! Everything operates at "desk scale": finite exponent truncations, explicit
//! tolerances, and deterministic seeded experiments. All value types are
//! immutable after construction and every operation is pure.

pub mod approx;
pub mod basis;
pub mod core;
pub mod error;
pub mod fourier;
pub mod muntz_ops;
pub mod weil;

pub use error::{Error, Result};

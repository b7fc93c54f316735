//! Field indices of septic number fields defined by x^7 + ax + b.

pub mod arith;
pub mod classifier;
pub mod error;
pub mod index;
pub mod newton;
pub mod report;
pub mod trinomial;

pub use error::{Error, Result};
pub use trinomial::Trinomial;

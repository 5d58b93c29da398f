//! Exact computer algebra for cluster y-seeds, their quantum tori, and the
//! trace coordinates of character varieties of punctured surfaces.

pub mod cluster;
pub mod confluence;
pub mod error;
pub mod exact;
pub mod expr;
pub mod qalg;
pub mod ratfun;
pub mod report;
pub mod varieties;

pub use error::{Error, Result};

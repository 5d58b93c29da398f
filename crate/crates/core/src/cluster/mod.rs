//! Exchange matrices, y-seeds, transformation words and the log-canonical bracket.

pub mod classes;
pub mod dot;
pub mod matrix;
pub mod poisson;
pub mod seed;
pub mod word;

pub use matrix::ExchangeMatrix;
pub use seed::Seed;
pub use word::{Step, Word};

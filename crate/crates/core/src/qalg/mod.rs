//! Quantum torus, Ore fractions with affine denominators, and quantum mutation.

pub mod mutation;
pub mod ore;
pub mod torus;

pub use mutation::{q_mutate_word, QSeed};
pub use ore::{FactoredMono, OreFactor, OreFraction};
pub use torus::{QRing, QTorusAlgebra, QTorusElem};

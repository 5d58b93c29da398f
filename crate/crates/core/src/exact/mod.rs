pub mod laurent;
pub mod qscalar;
pub mod rational;

pub use laurent::{Direction, HalfVec, LaurentPoly, Leading, VarSet};
pub use qscalar::QScalar;
pub use rational::{int, rat, Rational};

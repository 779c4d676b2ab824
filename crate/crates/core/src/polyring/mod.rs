//! Dense univariate polynomials over `Z` and `Z/MZ`.
//!
//! Coefficients are stored in ascending exponent order and kept normalized:
//! the last stored coefficient is nonzero, and the zero polynomial has no
//! coefficients at all (its degree is `None`).

mod conv;
mod cyclotomic;
mod dissect;
mod intpoly;
mod modpoly;

pub use cyclotomic::cyclotomic;
pub use dissect::DissectionParts;
pub use intpoly::IntPoly;
pub use modpoly::ModPoly;

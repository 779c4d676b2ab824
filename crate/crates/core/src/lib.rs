//! Exact dissections of the partial sums of the Kontsevich–Zagier "strange"
//! function `F(q) = Σ (q)_n`, finite-grid verification of the divisibility
//! and derivative identities they satisfy, and prime-power congruences for
//! the Fishburn numbers (the coefficients of `F(1 - q)`).
//!
//! The crate is organised in three layers:
//!
//! - [`polyring`]: dense polynomials over arbitrary-precision integers and
//!   over `Z/MZ`, with the transforms the identities need (theta operator,
//!   power substitution, dissection, residue-class extraction, cyclotomic
//!   polynomials, composition with `1 - q`).
//! - [`strange`]: `(q)_n`, `F(q; N)`, pentagonal residue sets, dissection
//!   tables and the verification routines built on them.
//! - [`fishburn`]: Fishburn numbers (exact and modular), the class sets
//!   `T(p^r)`, Kummer/Legendre valuations and the congruence pipeline.
//!
//! Every verification returns a [`report::VerificationReport`]; grids of
//! cases are run through [`exec`], which is data-parallel when the
//! `parallel` feature is enabled and sequential otherwise.

pub mod error;
pub mod exec;
pub mod fishburn;
pub mod grids;
pub mod polyring;
pub mod report;
pub mod strange;

pub use error::{Error, Result};
pub use polyring::{DissectionParts, IntPoly, ModPoly};
pub use report::{Status, VerificationReport, Witness};

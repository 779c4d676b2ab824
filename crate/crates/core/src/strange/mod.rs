//! Partial sums of the strange function, their dissections, and finite-grid
//! verification of the divisibility and derivative identities they obey.

mod carray;
mod partial;
mod pentagonal;
pub mod verify;

pub use carray::{c_array, CArray};
pub use partial::{dissection_table, lambda, pochhammer_q, strange_partial, DissectionTable};
pub use pentagonal::{pentagonal_residues, pentagonal_residues_with_bound, PentagonalSet};
pub use verify::{
    check_theorem1_table, verify_cyclotomic_factorization, verify_refinement, verify_stability,
    verify_theorem1, verify_theta_dissection, verify_vanishing_at_one,
};

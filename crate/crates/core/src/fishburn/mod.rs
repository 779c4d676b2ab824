//! Fishburn numbers `ξ(n)` (coefficients of `F(1 - q)`) and the prime-power
//! congruence pipeline built on the dissection divisibility.

mod classes;
mod kummer;
mod series;
pub mod verify;

pub use classes::{is_prime, minus_one_over_24, prime_power, t_set, CongruenceClassSet};
pub use kummer::{binom_valuation, factorial_valuation, kummer_carries};
pub use series::{fishburn_numbers, FishburnSeries, FishburnValues};
pub use verify::{
    empirical_zero_classes, verify_binomial_criterion, verify_congruences, verify_decomposition,
    verify_sp_structure, CongruenceReport,
};

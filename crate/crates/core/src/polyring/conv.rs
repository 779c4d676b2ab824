//! Schoolbook convolution kernels shared by `IntPoly` and `ModPoly`.
//!
//! Both kernels take the output length explicitly so that truncated
//! products never materialize coefficients above the truncation order.
//! Large products are split by output index across the rayon pool when
//! the `parallel` feature is enabled; every output coefficient is an
//! exact sum, so the result does not depend on the schedule.

use num_bigint::BigInt;
use num_traits::Zero;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Products with at least this many coefficient pairs go parallel.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 1 << 14;

#[cfg(feature = "parallel")]
fn bigint_coeff(a: &[BigInt], b: &[BigInt], k: usize) -> BigInt {
    let lo = k.saturating_sub(b.len() - 1);
    let hi = k.min(a.len() - 1);
    let mut acc = BigInt::zero();
    for i in lo..=hi {
        let x = &a[i];
        if x.is_zero() {
            continue;
        }
        let y = &b[k - i];
        if !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// First `len` coefficients of `a * b`.
pub(crate) fn convolve_bigint(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = len.min(a.len() + b.len() - 1);
    #[cfg(feature = "parallel")]
    if a.len().saturating_mul(b.len()) >= PAR_THRESHOLD {
        return (0..len)
            .into_par_iter()
            .map(|k| bigint_coeff(a, b, k))
            .collect();
    }
    convolve_bigint_seq(a, b, len)
}

pub(crate) fn convolve_bigint_seq(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn mod_coeff(a: &[u64], b: &[u64], k: usize, m: u64) -> u64 {
    let lo = k.saturating_sub(b.len() - 1);
    let hi = k.min(a.len() - 1);
    let m = m as u128;
    if m <= u32::MAX as u128 {
        // each product is below 2^64, so the u128 sum cannot overflow
        let mut acc: u128 = 0;
        for i in lo..=hi {
            acc += a[i] as u128 * b[k - i] as u128;
        }
        (acc % m) as u64
    } else {
        let mut acc: u128 = 0;
        for i in lo..=hi {
            let prod = a[i] as u128 * b[k - i] as u128 % m;
            acc = (acc + prod) % m;
        }
        acc as u64
    }
}

/// First `len` coefficients of `a * b` over `Z/mZ`; inputs must be reduced.
pub(crate) fn convolve_mod(a: &[u64], b: &[u64], len: usize, m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = len.min(a.len() + b.len() - 1);
    #[cfg(feature = "parallel")]
    if a.len().saturating_mul(b.len()) >= PAR_THRESHOLD {
        return (0..len)
            .into_par_iter()
            .map(|k| mod_coeff(a, b, k, m))
            .collect();
    }
    convolve_mod_seq(a, b, len, m)
}

pub(crate) fn convolve_mod_seq(a: &[u64], b: &[u64], len: usize, m: u64) -> Vec<u64> {
    (0..len).map(|k| mod_coeff(a, b, k, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels_agree_on_large_inputs() {
        let a: Vec<BigInt> = (0..300).map(|i| BigInt::from((i * 7919) % 101 - 50)).collect();
        let b: Vec<BigInt> = (0..200).map(|i| BigInt::from((i * 104729) % 97 - 48)).collect();
        assert_eq!(convolve_bigint(&a, &b, 499), convolve_bigint_seq(&a, &b, 499));
        assert_eq!(convolve_bigint(&a, &b, 120), convolve_bigint_seq(&a, &b, 120));

        let m = (1u64 << 40) + 15;
        let am: Vec<u64> = (0..300u64).map(|i| (i * 0x9e37_79b9_7f4a) % m).collect();
        let bm: Vec<u64> = (0..200u64).map(|i| (i * 0x85eb_ca6b) % m).collect();
        assert_eq!(convolve_mod(&am, &bm, 499, m), convolve_mod_seq(&am, &bm, 499, m));
    }
}

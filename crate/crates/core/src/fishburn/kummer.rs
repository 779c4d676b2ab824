use super::classes::is_prime;
use crate::error::{domain, Result};

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    Ok(())
}

/// Number of carries when adding `a` and `b` in base `p`, which by Kummer's
/// theorem is `v_p(binom(a + b, a))`.
pub fn kummer_carries(a: u64, b: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    let (mut a, mut b) = (a, b);
    let mut carry = 0u64;
    let mut carries = 0;
    while a > 0 || b > 0 || carry > 0 {
        let digit = a % p + b % p + carry;
        carry = u64::from(digit >= p);
        carries += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(carries)
}

/// Legendre's formula `v_p(n!) = Σ_{e≥1} ⌊n / p^e⌋`.
pub fn factorial_valuation(n: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    let mut total = 0;
    let mut rest = n;
    while rest > 0 {
        rest /= p;
        total += rest;
    }
    Ok(total)
}

/// `v_p(binom(n, k))` via Legendre's formula.
pub fn binom_valuation(n: u64, k: u64, p: u64) -> Result<u64> {
    if k > n {
        return domain(format!("binomial coefficient with k = {k} > n = {n}"));
    }
    Ok(factorial_valuation(n, p)? - factorial_valuation(k, p)? - factorial_valuation(n - k, p)?)
}

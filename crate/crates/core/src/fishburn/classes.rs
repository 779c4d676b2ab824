use serde::Serialize;

use crate::error::{domain, Result};
use crate::strange::{pentagonal_residues, PentagonalSet};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Checks `p ≥ 5` prime and `r ≥ 1`, returning `p^r`.
pub fn prime_power(p: u64, r: u32) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return domain(format!("p must be a prime >= 5, got {p}"));
    }
    if r < 1 {
        return domain("r must be at least 1");
    }
    match p.checked_pow(r) {
        // S(p^r) is enumerated densely, keep it in a sane range
        Some(m) if m <= 1 << 32 => Ok(m),
        _ => domain(format!("{p}^{r} is too large")),
    }
}

/// The residue of `-1/24` modulo a prime `p ≥ 5`.
pub fn minus_one_over_24(p: u64) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return domain(format!("-1/24 needs a prime p >= 5, got {p}"));
    }
    let inv = (1..p).find(|x| (24 % p) * x % p == 1).expect("24 is a unit mod p");
    Ok((p - inv) % p)
}

/// `S(p^r)` together with `T(p^r)`, the residues strictly above `max S(p^r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceClassSet {
    pub p: u64,
    pub r: u32,
    pub modulus: u64,
    pub s_set: Vec<usize>,
    pub t_set: Vec<usize>,
    pub max_s: usize,
}

impl CongruenceClassSet {
    pub fn is_empty(&self) -> bool {
        self.t_set.is_empty()
    }
}

pub fn t_set(p: u64, r: u32) -> Result<CongruenceClassSet> {
    let modulus = prime_power(p, r)?;
    let s: PentagonalSet = pentagonal_residues(modulus as usize)?;
    let max_s = s.max();
    Ok(CongruenceClassSet {
        p,
        r,
        modulus,
        s_set: s.residues().to_vec(),
        t_set: (max_s + 1..modulus as usize).collect(),
        max_s,
    })
}

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::intpoly::IntPoly;
use crate::error::{domain, Result};

fn cache() -> &'static Mutex<HashMap<usize, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `k`-th cyclotomic polynomial `Φ_k(q)`.
///
/// Computed as `(q^k - 1) / Π_{d | k, d < k} Φ_d` by exact division; results
/// are memoized in a process-wide cache.
pub fn cyclotomic(k: usize) -> Result<IntPoly> {
    if k == 0 {
        return domain("cyclotomic index must be at least 1");
    }
    if let Some(hit) = cache().lock().expect("cyclotomic cache poisoned").get(&k) {
        return Ok(hit.clone());
    }
    // The lock is not held while recursing into proper divisors.
    let mut denom = IntPoly::one();
    for d in (1..k).filter(|d| k % d == 0) {
        denom = denom * cyclotomic(d)?;
    }
    let (phi, rem) = IntPoly::q_pow_minus_one(k).divrem(&denom)?;
    debug_assert!(rem.is_zero(), "q^{k} - 1 not divisible by its proper cyclotomic factors");
    cache()
        .lock()
        .expect("cyclotomic cache poisoned")
        .entry(k)
        .or_insert_with(|| phi.clone());
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(5).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn first_non_unit_coefficient() {
        // Φ_105 is the first cyclotomic polynomial with a coefficient -2.
        let phi = cyclotomic(105).unwrap();
        assert_eq!(phi.degree(), Some(48));
        assert!(phi.coeffs().iter().any(|c| *c == (-2).into()));
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| (1..=40).map(|k| cyclotomic(k).unwrap()).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}

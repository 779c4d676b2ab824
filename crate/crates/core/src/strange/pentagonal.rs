use serde::Serialize;

use crate::error::{domain, Result};

/// `S(t)`: the residues mod `t` of the pentagonal numbers `(m^2 - 1)/24`,
/// `gcd(m, 6) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PentagonalSet {
    t: usize,
    residues: Vec<usize>,
    /// `m` was enumerated over `1..=generator_bound`.
    generator_bound: usize,
}

/// `S(t)`, enumerating `m ≤ 12t`.
///
/// `((m + 12t)^2 - 1)/24 - (m^2 - 1)/24 = t(m + 6t)`, so the residues are
/// periodic in `m` with period `12t` and one period covers every class.
pub fn pentagonal_residues(t: usize) -> Result<PentagonalSet> {
    pentagonal_residues_with_bound(t, 12usize.saturating_mul(t))
}

pub fn pentagonal_residues_with_bound(t: usize, bound: usize) -> Result<PentagonalSet> {
    if t == 0 {
        return domain("pentagonal residues need t >= 1");
    }
    let mut hit = vec![false; t];
    let modulus = 24 * t as u128;
    for m in (1..=bound).filter(|m| m % 2 != 0 && m % 3 != 0) {
        let m = m as u128;
        // m^2 ≡ 1 (mod 24), so reducing mod 24t keeps the quotient exact mod t
        let r = ((m * m - 1) % modulus) / 24;
        hit[r as usize] = true;
    }
    let residues = hit
        .iter()
        .enumerate()
        .filter_map(|(i, &h)| h.then_some(i))
        .collect();
    Ok(PentagonalSet {
        t,
        residues,
        generator_bound: bound,
    })
}

impl PentagonalSet {
    pub fn t(&self) -> usize {
        self.t
    }

    /// Sorted ascending.
    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn generator_bound(&self) -> usize {
        self.generator_bound
    }

    pub fn contains(&self, i: usize) -> bool {
        self.residues.binary_search(&i).is_ok()
    }

    /// Residues in `0..t` that are not pentagonal, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.t).filter(|&i| !self.contains(i)).collect()
    }

    /// Every residue class is pentagonal.
    pub fn is_full(&self) -> bool {
        self.residues.len() == self.t
    }

    pub fn max(&self) -> usize {
        // 0 is always present
        *self.residues.last().expect("S(t) contains 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: usize) -> Vec<usize> {
        pentagonal_residues(t).unwrap().residues().to_vec()
    }

    #[test]
    fn small_sets() {
        assert_eq!(s(1), vec![0]);
        assert_eq!(s(2), vec![0, 1]);
        assert_eq!(s(5), vec![0, 1, 2]);
        assert!(pentagonal_residues(0).is_err());
    }

    #[test]
    fn agrees_with_generalized_pentagonal_numbers() {
        // k(3k - 1)/2 for k in Z is the same set as (m^2 - 1)/24
        for t in 1..=60usize {
            let mut hit = vec![false; t];
            for k in -(12 * t as i64)..=(12 * t as i64) {
                let g = k * (3 * k - 1) / 2;
                hit[g.rem_euclid(t as i64) as usize] = true;
            }
            let expected: Vec<usize> = (0..t).filter(|&i| hit[i]).collect();
            assert_eq!(s(t), expected, "t = {t}");
        }
    }

    #[test]
    fn set_metadata() {
        let set = pentagonal_residues(10).unwrap();
        assert_eq!(set.generator_bound(), 120);
        assert!(set.contains(0));
        assert_eq!(set.complement(), vec![3, 4, 8, 9]);
        assert_eq!(set.max(), 7);
        assert!(!set.is_full());
        assert!(pentagonal_residues(6).unwrap().is_full());
    }
}

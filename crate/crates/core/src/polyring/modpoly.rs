use std::ops::{Add, Mul, Neg, Sub};

use super::conv::convolve_mod;
use crate::error::{domain, Result};

/// A dense polynomial with coefficients in `Z/MZ`, stored as residues in
/// `[0, M)` and normalized like [`IntPoly`](super::IntPoly).
///
/// Binary operators panic if the two operands carry different moduli.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl ModPoly {
    /// Reduces every coefficient into `[0, modulus)`.
    pub fn new(mut coeffs: Vec<u64>, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return domain(format!("modulus must be at least 2, got {modulus}"));
        }
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        Ok(Self::normalized(coeffs, modulus))
    }

    fn normalized(mut coeffs: Vec<u64>, modulus: u64) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { coeffs, modulus }
    }

    pub fn zero(modulus: u64) -> Result<Self> {
        Self::new(Vec::new(), modulus)
    }

    pub fn one(modulus: u64) -> Result<Self> {
        Self::new(vec![1], modulus)
    }

    /// Reduces signed coefficients into `[0, modulus)`.
    pub fn from_i64s(coeffs: &[i64], modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return domain(format!("modulus must be at least 2, got {modulus}"));
        }
        let m = modulus as i128;
        let coeffs = coeffs
            .iter()
            .map(|&c| (c as i128).rem_euclid(m) as u64)
            .collect();
        Ok(Self::normalized(coeffs, modulus))
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: usize) -> u64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn truncated(&self, max_degree: usize) -> Self {
        let len = self.coeffs.len().min(max_degree + 1);
        Self::normalized(self.coeffs[..len].to_vec(), self.modulus)
    }

    fn check_modulus(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "ModPoly operands have different moduli"
        );
    }

    fn add_mod(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.modulus as u128) as u64
    }

    fn sub_mod(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }

    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        self.check_modulus(other);
        let coeffs = convolve_mod(&self.coeffs, &other.coeffs, max_degree + 1, self.modulus);
        Self::normalized(coeffs, self.modulus)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return domain(format!("negative polynomial exponent {exp}"));
        }
        let mut result = Self::one(self.modulus)?;
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// `P(1 - q)` over `Z/MZ`, optionally modulo `q^(truncation + 1)`.
    pub fn compose_one_minus_q(&self, truncation: Option<usize>) -> Self {
        let Some(deg) = self.degree() else {
            return self.clone();
        };
        let m = self.modulus as u128;
        let cap = truncation.map_or(deg + 1, |t| (t + 1).min(deg + 1));
        let mut acc = vec![0u64; cap];
        let mut power = vec![1u64];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                for (a, &p) in acc.iter_mut().zip(&power) {
                    *a = ((*a as u128 + c as u128 * p as u128) % m) as u64;
                }
            }
            if k < deg {
                let len = (power.len() + 1).min(cap);
                power = (0..len)
                    .map(|e| {
                        let hi = power.get(e).copied().unwrap_or(0);
                        match e.checked_sub(1) {
                            Some(prev) => self.sub_mod(hi, power[prev]),
                            None => hi,
                        }
                    })
                    .collect();
            }
        }
        Self::normalized(acc, self.modulus)
    }
}

impl<'a> Add<&'a ModPoly> for &'a ModPoly {
    type Output = ModPoly;

    fn add(self, rhs: &ModPoly) -> ModPoly {
        self.check_modulus(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|e| self.add_mod(self.coeff(e), rhs.coeff(e)))
            .collect();
        ModPoly::normalized(coeffs, self.modulus)
    }
}

impl<'a> Sub<&'a ModPoly> for &'a ModPoly {
    type Output = ModPoly;

    fn sub(self, rhs: &ModPoly) -> ModPoly {
        self.check_modulus(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|e| self.sub_mod(self.coeff(e), rhs.coeff(e)))
            .collect();
        ModPoly::normalized(coeffs, self.modulus)
    }
}

impl<'a> Mul<&'a ModPoly> for &'a ModPoly {
    type Output = ModPoly;

    fn mul(self, rhs: &ModPoly) -> ModPoly {
        self.check_modulus(rhs);
        let coeffs = convolve_mod(&self.coeffs, &rhs.coeffs, usize::MAX, self.modulus);
        ModPoly::normalized(coeffs, self.modulus)
    }
}

impl Neg for &ModPoly {
    type Output = ModPoly;

    fn neg(self) -> ModPoly {
        let coeffs = self.coeffs.iter().map(|&c| self.sub_mod(0, c)).collect();
        ModPoly::normalized(coeffs, self.modulus)
    }
}

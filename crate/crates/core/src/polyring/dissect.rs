use super::intpoly::IntPoly;
use crate::error::{domain, Result};

/// A `t`-dissection: `parts[i] = A_i` with `P(q) = Σ_{i<t} q^i A_i(q^t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionParts {
    parts: Vec<IntPoly>,
}

impl DissectionParts {
    /// `t` is the number of parts; it must be at least one.
    pub fn new(parts: Vec<IntPoly>) -> Result<Self> {
        if parts.is_empty() {
            return domain("a dissection needs at least one part");
        }
        Ok(DissectionParts { parts })
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[IntPoly] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &IntPoly {
        &self.parts[i]
    }

    pub fn into_parts(self) -> Vec<IntPoly> {
        self.parts
    }

    /// `Σ_i q^i parts[i](q^t)`.
    pub fn recompose(&self) -> IntPoly {
        let t = self.t();
        let len = self
            .parts
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.degree().map(|d| d * t + i + 1))
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Default::default(); len];
        for (i, a) in self.parts.iter().enumerate() {
            for (m, c) in a.coeffs().iter().enumerate() {
                coeffs[m * t + i] = c.clone();
            }
        }
        IntPoly::new(coeffs)
    }
}

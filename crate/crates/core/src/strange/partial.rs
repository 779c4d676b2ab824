use serde::Serialize;

use crate::error::{domain, Result};
use crate::polyring::IntPoly;

/// `(q)_n = (1 - q)(1 - q^2)...(1 - q^n)`, with `(q)_0 = 1`.
pub fn pochhammer_q(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, k| {
        let shifted = acc.shift(k);
        acc - shifted
    })
}

/// `F(q; N) = Σ_{n=0}^{N} (q)_n`.
pub fn strange_partial(n: usize) -> IntPoly {
    let mut poch = IntPoly::one();
    let mut sum = IntPoly::one();
    for k in 1..=n {
        let shifted = poch.shift(k);
        poch = poch - shifted;
        sum += &poch;
    }
    sum
}

/// `λ(N, t) = ⌊(N + 1)/t⌋`.
pub fn lambda(n: usize, t: usize) -> Result<usize> {
    if t == 0 {
        return domain("lambda needs t >= 1");
    }
    Ok((n + 1) / t)
}

/// The `t` dissection polynomials `A_t(N, i, q)` of `F(q; N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DissectionTable {
    #[serde(rename = "N")]
    n: usize,
    t: usize,
    lambda: usize,
    polys: Vec<IntPoly>,
}

pub fn dissection_table(n: usize, t: usize) -> Result<DissectionTable> {
    let lambda = lambda(n, t)?;
    let polys = strange_partial(n).dissect(t)?.into_parts();
    Ok(DissectionTable { n, t, lambda, polys })
}

impl DissectionTable {
    /// Builds a table from externally supplied polynomials (e.g. a dump read
    /// back from disk). Only the shape is checked, not the contents.
    pub fn from_polys(n: usize, t: usize, polys: Vec<IntPoly>) -> Result<Self> {
        let lambda = lambda(n, t)?;
        if polys.len() != t {
            return domain(format!("expected {t} dissection polynomials, got {}", polys.len()));
        }
        Ok(DissectionTable { n, t, lambda, polys })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &IntPoly {
        &self.polys[i]
    }

    /// `Σ_i q^i A_t(N, i, q^t)`.
    pub fn recompose(&self) -> IntPoly {
        crate::polyring::DissectionParts::new(self.polys.clone())
            .expect("t >= 1")
            .recompose()
    }
}

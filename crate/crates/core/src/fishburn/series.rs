use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{domain, Result};
use crate::polyring::{IntPoly, ModPoly};

/// The operations the truncated `F(1 - q)` expansion needs, so the exact and
/// modular paths run literally the same algorithm.
trait TruncatedSeries: Clone {
    fn mul_trunc(&self, other: &Self, max_degree: usize) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl TruncatedSeries for IntPoly {
    fn mul_trunc(&self, other: &Self, max_degree: usize) -> Self {
        self.mul_truncated(other, max_degree)
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

impl TruncatedSeries for ModPoly {
    fn mul_trunc(&self, other: &Self, max_degree: usize) -> Self {
        self.mul_truncated(other, max_degree)
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

/// `Σ_{n≤n_max} Π_{j≤n} (1 - (1-q)^j)` modulo `q^(n_max+1)`.
///
/// Each product has valuation `n`, so terms with `n > n_max` cannot reach
/// the truncation order. Powers of `1 - q` and the running product are
/// clipped at every step.
fn strange_at_one_minus_q<P: TruncatedSeries>(one: P, one_minus_q: P, n_max: usize) -> P {
    let mut power = one.clone();
    let mut product = one.clone();
    let mut sum = one.clone();
    for _ in 1..=n_max {
        power = power.mul_trunc(&one_minus_q, n_max);
        let factor = one.minus(&power);
        product = product.mul_trunc(&factor, n_max);
        sum = sum.plus(&product);
    }
    sum
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FishburnValues {
    Exact(Vec<BigInt>),
    Modular { modulus: u64, residues: Vec<u64> },
}

/// `ξ(0..=n_max)`, exactly or reduced modulo `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FishburnSeries {
    n_max: usize,
    values: FishburnValues,
}

/// Fishburn numbers up to `n_max`, modulo `modulus` when given.
pub fn fishburn_numbers(n_max: usize, modulus: Option<u64>) -> Result<FishburnSeries> {
    let values = match modulus {
        None => {
            let sum = strange_at_one_minus_q(
                IntPoly::one(),
                IntPoly::from_coeffs([1, -1]),
                n_max,
            );
            FishburnValues::Exact((0..=n_max).map(|e| sum.coeff(e)).collect())
        }
        Some(m) => {
            if m < 2 {
                return domain(format!("modulus must be at least 2, got {m}"));
            }
            let sum = strange_at_one_minus_q(
                ModPoly::one(m)?,
                ModPoly::from_i64s(&[1, -1], m)?,
                n_max,
            );
            FishburnValues::Modular {
                modulus: m,
                residues: (0..=n_max).map(|e| sum.coeff(e)).collect(),
            }
        }
    };
    Ok(FishburnSeries { n_max, values })
}

impl FishburnSeries {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn values(&self) -> &FishburnValues {
        &self.values
    }

    pub fn modulus(&self) -> Option<u64> {
        match &self.values {
            FishburnValues::Exact(_) => None,
            FishburnValues::Modular { modulus, .. } => Some(*modulus),
        }
    }

    pub fn exact(&self) -> Option<&[BigInt]> {
        match &self.values {
            FishburnValues::Exact(v) => Some(v),
            FishburnValues::Modular { .. } => None,
        }
    }

    pub fn residues(&self) -> Option<&[u64]> {
        match &self.values {
            FishburnValues::Exact(_) => None,
            FishburnValues::Modular { residues, .. } => Some(residues),
        }
    }

    /// Reduces an exact series modulo `m` (or a modular one modulo a divisor
    /// of its modulus).
    pub fn reduce(&self, m: u64) -> Result<FishburnSeries> {
        if m < 2 {
            return domain(format!("modulus must be at least 2, got {m}"));
        }
        let residues = match &self.values {
            FishburnValues::Exact(v) => {
                let big = BigInt::from(m);
                v.iter()
                    .map(|x| u64::try_from(x.mod_floor(&big)).expect("residue fits in u64"))
                    .collect()
            }
            FishburnValues::Modular { modulus, residues } => {
                if modulus % m != 0 {
                    return domain(format!("{m} does not divide the series modulus {modulus}"));
                }
                residues.iter().map(|x| x % m).collect()
            }
        };
        Ok(FishburnSeries {
            n_max: self.n_max,
            values: FishburnValues::Modular {
                modulus: m,
                residues,
            },
        })
    }

    /// CSV export: `n,xi` for exact series; a `# modulus=M` line followed by
    /// `n,xi_mod` for modular ones. Rows end in `\n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.values {
            FishburnValues::Exact(v) => {
                out.push_str("n,xi\n");
                for (n, x) in v.iter().enumerate() {
                    let _ = writeln!(out, "{n},{x}");
                }
            }
            FishburnValues::Modular { modulus, residues } => {
                let _ = writeln!(out, "# modulus={modulus}");
                out.push_str("n,xi_mod\n");
                for (n, x) in residues.iter().enumerate() {
                    let _ = writeln!(out, "{n},{x}");
                }
            }
        }
        out
    }
}

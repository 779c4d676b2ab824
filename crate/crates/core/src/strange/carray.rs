use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The integer array `C[ν][i][j]` expressing `(q d/dq)^ν` of a dissected
/// polynomial through ordinary derivatives of its parts:
///
/// `θ^ν P(q) = Σ_{j≤ν} Σ_{i<t} C[ν][i][j] q^(i+jt) A_i^(j)(q^t)`.
///
/// Built from `C[0][i][0] = 1`, `C[ν][i][0] = i^ν`, `C[ν][i][j] = 0` for
/// `j > ν`, and `C[ν+1][i][j] = (i + jt) C[ν][i][j] + t C[ν][i][j-1]` for
/// `1 ≤ j ≤ ν+1`. The last index of that range produces the diagonal
/// `C[ν][i][ν] = t^ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CArray {
    t: usize,
    // entries[nu][i][j] for j <= nu
    entries: Vec<Vec<Vec<BigInt>>>,
}

pub fn c_array(t: usize, nu_max: usize) -> CArray {
    let mut entries: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(nu_max + 1);
    entries.push(vec![vec![BigInt::one()]; t]);
    for nu in 0..nu_max {
        let prev = &entries[nu];
        let next: Vec<Vec<BigInt>> = (0..t)
            .map(|i| {
                let row = &prev[i];
                let mut out = Vec::with_capacity(nu + 2);
                out.push(&row[0] * BigInt::from(i));
                for j in 1..=nu + 1 {
                    let same = row.get(j).cloned().unwrap_or_default() * BigInt::from(i + j * t);
                    out.push(same + &row[j - 1] * BigInt::from(t));
                }
                out
            })
            .collect();
        entries.push(next);
    }
    CArray { t, entries }
}

impl CArray {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn nu_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// `C[ν][i][j]`; zero for `j > ν`.
    pub fn get(&self, nu: usize, i: usize, j: usize) -> BigInt {
        self.entries[nu][i].get(j).cloned().unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_and_first_rows() {
        let c = c_array(5, 3);
        assert_eq!(c.get(0, 0, 0), BigInt::one());
        for i in 0..5 {
            assert_eq!(c.get(1, i, 0), BigInt::from(i));
            assert_eq!(c.get(1, i, 1), BigInt::from(5));
            assert_eq!(c.get(2, i, 1), BigInt::from(25 + 2 * i * 5));
            assert_eq!(c.get(1, i, 2), BigInt::zero());
            for nu in 0..=3u32 {
                assert_eq!(c.get(nu as usize, i, 0), BigInt::from(i).pow(nu));
            }
        }
    }

    #[test]
    fn diagonal_is_power_of_t() {
        for t in 1..=8usize {
            let c = c_array(t, 6);
            for nu in 0..=6u32 {
                for i in 0..t {
                    assert_eq!(c.get(nu as usize, i, nu as usize), BigInt::from(t).pow(nu));
                }
            }
        }
    }

    #[test]
    fn matches_direct_theta_of_monomial_block() {
        // θ(q^i g(q^t)) by hand for g = x^2: θ^2 q^(i+2t) = (i+2t)^2 q^(i+2t),
        // while the array gives Σ_j C[2][i][j] q^(i+jt) (d/dx)^j x^2 at x = q^t.
        let t = 3usize;
        let c = c_array(t, 2);
        for i in 0..t {
            let e = (i + 2 * t) as i64;
            // j = 0: x^2; j = 1: 2x; j = 2: 2, each times q^(i+jt) gives q^(i+2t)
            let total = c.get(2, i, 0) + c.get(2, i, 1) * 2 + c.get(2, i, 2) * 2;
            assert_eq!(total, BigInt::from(e * e));
        }
    }
}

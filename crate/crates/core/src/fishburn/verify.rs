//! The prime-power congruence pipeline: direct congruence checks on the
//! series, the binomial/Kummer criterion, the structure of `S(p^r)`, and the
//! decomposition of `F(1 - q; N)` through the dissection.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::classes::{minus_one_over_24, prime_power, t_set};
use super::kummer::kummer_carries;
use super::series::fishburn_numbers;
use crate::error::{domain, Result};
use crate::polyring::{DissectionParts, IntPoly};
use crate::report::{timed, Outcome, Status, VerificationReport, Witness};
use crate::strange::{dissection_table, pentagonal_residues, strange_partial};

/// Outcome of checking `ξ(p^r n + j) ≡ 0 (mod p^r)` for `j ∈ T(p^r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub p: u64,
    pub r: u32,
    pub n_max: usize,
    /// `(j, number of n tested)` for every class in `T(p^r)`.
    pub checked: Vec<(usize, usize)>,
    pub status: Status,
    /// `(n, j, ξ(p^r n + j) mod p^r)` for the first failure.
    pub first_failure: Option<(usize, usize, u64)>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CongruenceReport {
    pub fn case_id(&self, n_count: usize) -> String {
        format!("cong/p={}/r={}/count={n_count}", self.p, self.r)
    }

    /// The report in the common case format.
    pub fn to_verification_report(&self, n_count: usize) -> VerificationReport {
        let witness = self.first_failure.map(|(n, j, v)| {
            Witness::value(
                format!("xi({}*{n}+{j}) mod {}", self.p.pow(self.r), self.p.pow(self.r)),
                v,
            )
        });
        VerificationReport {
            case_id: self.case_id(n_count),
            status: self.status,
            witness,
            elapsed: self.elapsed,
        }
    }
}

/// Checks the congruences for every `j ∈ T(p^r)` and `0 ≤ n < n_count`
/// against the modular series up to `p^r n_count - 1`.
pub fn verify_congruences(p: u64, r: u32, n_count: usize) -> Result<CongruenceReport> {
    let start = Instant::now();
    let classes = t_set(p, r)?;
    if n_count == 0 {
        return domain("n_count must be at least 1");
    }
    let modulus = classes.modulus as usize;
    let n_max = modulus * n_count - 1;
    if classes.is_empty() {
        return Ok(CongruenceReport {
            p,
            r,
            n_max,
            checked: Vec::new(),
            status: Status::Vacuous,
            first_failure: None,
            elapsed: start.elapsed(),
        });
    }
    let series = fishburn_numbers(n_max, Some(classes.modulus))?;
    let xi = series.residues().expect("modular series");
    let mut first_failure = None;
    'outer: for n in 0..n_count {
        for &j in &classes.t_set {
            let v = xi[modulus * n + j];
            if v != 0 {
                first_failure = Some((n, j, v));
                break 'outer;
            }
        }
    }
    Ok(CongruenceReport {
        p,
        r,
        n_max,
        checked: classes.t_set.iter().map(|&j| (j, n_count)).collect(),
        status: if first_failure.is_some() {
            Status::Counterexample
        } else {
            Status::Verified
        },
        first_failure,
        elapsed: start.elapsed(),
    })
}

/// Exploratory: the classes `j mod p^r` on which every tested `ξ(p^r n + j)`
/// vanishes modulo `p^r`. An empirical observation over `n < n_count`, not a
/// proven statement.
pub fn empirical_zero_classes(p: u64, r: u32, n_count: usize) -> Result<Vec<usize>> {
    let modulus = prime_power(p, r)? as usize;
    if n_count == 0 {
        return domain("n_count must be at least 1");
    }
    let series = fishburn_numbers(modulus * n_count - 1, Some(modulus as u64))?;
    let xi = series.residues().expect("modular series");
    Ok((0..modulus)
        .filter(|&j| (0..n_count).all(|n| xi[modulus * n + j] == 0))
        .collect())
}

/// For `i ∈ S(p^r)`, `0 ≤ k ≤ k_max` and every `m ≤ i + k p^r` whose residue
/// lies in `T(p^r)`, checks `v_p(binom(i + k p^r, m)) ≥ r` by counting carries.
pub fn verify_binomial_criterion(p: u64, r: u32, k_max: usize) -> Result<VerificationReport> {
    let classes = t_set(p, r)?;
    timed(format!("binom/p={p}/r={r}/kmax={k_max}"), || {
        if classes.is_empty() {
            return Ok(Outcome::Vacuous);
        }
        let modulus = classes.modulus;
        for &i in &classes.s_set {
            for k in 0..=k_max as u64 {
                let top = i as u64 + k * modulus;
                for base in (0..=top / modulus).map(|b| b * modulus) {
                    for &j in &classes.t_set {
                        let m = base + j as u64;
                        if m > top {
                            break;
                        }
                        let carries = kummer_carries(m, top - m, p)?;
                        if carries < r {
                            return Ok(Outcome::Counterexample(Witness::value(
                                format!("v_p(binom({top}, {m})) = {carries} < r"),
                                m,
                            )));
                        }
                    }
                }
            }
        }
        Ok(Outcome::Verified)
    })
}

/// Checks the lifting behaviour of `S(p)` inside `S(p^r)` and the formula
/// `max S(p^r) = n0 + p^r - p` for `r ≥ 2`.
pub fn verify_sp_structure(p: u64, r: u32) -> Result<VerificationReport> {
    if r < 2 {
        return domain("S(p^r) structure facts need r >= 2");
    }
    let modulus = prime_power(p, r)? as usize;
    let p_us = p as usize;
    timed(format!("spfacts/p={p}/r={r}"), || {
        let special = minus_one_over_24(p)? as usize;
        let s_p = pentagonal_residues(p_us)?;
        let s_pr = pentagonal_residues(modulus)?;
        let lifts = modulus / p_us;
        for &n in s_p.residues() {
            if n != special {
                if let Some(k) = (0..lifts).find(|k| !s_pr.contains(n + p_us * k)) {
                    return Ok(Outcome::Counterexample(Witness::value(
                        format!("n={n}: lift n+pk with k={k} missing from S(p^r)"),
                        n + p_us * k,
                    )));
                }
            } else if s_pr.contains(n + modulus - p_us) {
                return Ok(Outcome::Counterexample(Witness::value(
                    format!("n={n} = -1/24 mod p but n+p^r-p is in S(p^r)"),
                    n + modulus - p_us,
                )));
            }
        }
        let n0 = s_p
            .residues()
            .iter()
            .copied()
            .filter(|&n| n != special)
            .max()
            .expect("0 is never -1/24 mod p");
        let predicted = n0 + modulus - p_us;
        if s_pr.max() != predicted {
            return Ok(Outcome::Counterexample(Witness::value(
                format!("max S(p^r) = {} but n0 + p^r - p = {predicted}", s_pr.max()),
                s_pr.max(),
            )));
        }
        Ok(Outcome::Verified)
    })
}

/// With `N = n p^r - 1`, forms
/// `R(q) = F(1-q; N) - Σ_{i∈S(p^r)} (1-q)^i A_{p^r}(N, i, (1-q)^{p^r})`
/// and checks that `(1 - (1-q)^{p^r})^n` divides `R` and that the
/// coefficients of `R` below `q^(pn - (p-1)(r-1))` vanish modulo `p^r`.
pub fn verify_decomposition(p: u64, r: u32, n: usize) -> Result<VerificationReport> {
    let modulus = prime_power(p, r)?;
    if n == 0 {
        return domain("n must be at least 1");
    }
    let t = modulus as usize;
    timed(format!("decomp/p={p}/r={r}/n={n}"), || {
        let big_n = n * t - 1;
        let s = pentagonal_residues(t)?;
        let table = dissection_table(big_n, t)?;
        let kept: Vec<IntPoly> = table
            .polys()
            .iter()
            .enumerate()
            .map(|(i, a)| if s.contains(i) { a.clone() } else { IntPoly::zero() })
            .collect();
        let pentagonal_part = DissectionParts::new(kept)?.recompose();

        let full = strange_partial(big_n).compose_one_minus_q(None);
        let residual = full - pentagonal_part.compose_one_minus_q(None);

        let base = IntPoly::one() - IntPoly::from_coeffs([1, -1]).pow(t as i64)?;
        let divisor = base.pow(n as i64)?;
        let (_, rem) = residual.divrem(&divisor)?;
        if !rem.is_zero() {
            return Ok(Outcome::Counterexample(Witness::new(
                "R mod (1-(1-q)^(p^r))^n",
                rem,
            )));
        }

        let bound = (p as usize * n).saturating_sub((p as usize - 1) * (r as usize - 1));
        let m = BigInt::from(modulus);
        for e in 0..bound {
            let c = residual.coeff(e);
            if !c.mod_floor(&m).is_zero() {
                return Ok(Outcome::Counterexample(Witness::new(
                    format!("coefficient of q^{e} in R is nonzero mod p^r"),
                    IntPoly::monomial(c, e),
                )));
            }
        }
        Ok(Outcome::Verified)
    })
}

//! Finite-instance checks of the dissection identities.
//!
//! Every function validates its parameters up front (returning a domain
//! error) and otherwise produces a [`VerificationReport`] whose status is
//! `verified`, `vacuous` (nothing to check for these parameters) or
//! `counterexample` with a nonzero witness.

use num_bigint::BigInt;
use num_traits::Zero;

use super::carray::c_array;
use super::partial::{dissection_table, lambda, pochhammer_q, strange_partial, DissectionTable};
use super::pentagonal::pentagonal_residues;
use crate::error::{domain, Result};
use crate::polyring::{cyclotomic, IntPoly};
use crate::report::{timed, Outcome, VerificationReport, Witness};

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return domain(format!("{name} must be at least 1"));
    }
    Ok(())
}

/// `(q)_λ(N,t)` divides `A_t(N, i, q)` for every non-pentagonal class `i`.
pub fn verify_theorem1(n: usize, t: usize) -> Result<VerificationReport> {
    require_positive("t", t)?;
    check_theorem1_table(&dissection_table(n, t)?)
}

/// The divisibility check on an already-built (or externally supplied) table.
pub fn check_theorem1_table(table: &DissectionTable) -> Result<VerificationReport> {
    let (n, t) = (table.n(), table.t());
    timed(format!("thm1/t={t}/N={n}"), || {
        let s = pentagonal_residues(t)?;
        if s.is_full() {
            return Ok(Outcome::Vacuous);
        }
        let divisor = pochhammer_q(table.lambda());
        for i in s.complement() {
            let (_, rem) = table.poly(i).divrem(&divisor)?;
            if !rem.is_zero() {
                return Ok(Outcome::Counterexample(Witness::new(
                    format!("i={i}: remainder of A_t(N,i,q) modulo (q)_{}", table.lambda()),
                    rem,
                )));
            }
        }
        Ok(Outcome::Verified)
    })
}

/// `(q)_λ = (-1)^λ Π_{k=1}^{λ} Φ_k(q)^λ(N,tk)` with `λ = λ(N, t)`.
pub fn verify_cyclotomic_factorization(n: usize, t: usize) -> Result<VerificationReport> {
    let lam = lambda(n, t)?;
    timed(format!("cyclo/t={t}/N={n}"), || {
        let lhs = pochhammer_q(lam);
        let mut rhs = IntPoly::one();
        for k in 1..=lam {
            let phi = cyclotomic(k)?;
            rhs = rhs * phi.pow(lambda(n, t * k)? as i64)?;
        }
        if lam % 2 == 1 {
            rhs = -rhs;
        }
        let diff = &lhs - &rhs;
        Ok(if diff.is_zero() {
            Outcome::Verified
        } else {
            Outcome::Counterexample(Witness::new("(q)_lambda minus signed cyclotomic product", diff))
        })
    })
}

/// `Σ_{j≤ν} C[ν][i][j] q^(i+jt) A_t^(j)(N, i, q^t)` for one class `i`.
fn theta_class_sum(
    table: &DissectionTable,
    c: &super::carray::CArray,
    nu: usize,
    i: usize,
) -> Result<IntPoly> {
    let t = table.t();
    let mut acc = IntPoly::zero();
    for j in 0..=nu {
        let coeff = c.get(nu, i, j);
        if coeff.is_zero() {
            continue;
        }
        let term = table
            .poly(i)
            .derivative(j)
            .substitute_power(t)?
            .shift(i + j * t)
            .scale(&coeff);
        acc += &term;
    }
    Ok(acc)
}

/// Checks the theta/derivative dissection identity both as one polynomial
/// identity and class by class against residue extraction.
pub fn verify_theta_dissection(n: usize, t: usize, nu: usize) -> Result<VerificationReport> {
    require_positive("t", t)?;
    timed(format!("theta/t={t}/N={n}/nu={nu}"), || {
        let f = strange_partial(n);
        let theta_f = f.theta(nu as u32);
        let table = dissection_table(n, t)?;
        let c = c_array(t, nu);
        let mut total = IntPoly::zero();
        for i in 0..t {
            let class = theta_class_sum(&table, &c, nu, i)?;
            let extracted = theta_f.extract_residue_class(t, i)?;
            let diff = &extracted - &class;
            if !diff.is_zero() {
                return Ok(Outcome::Counterexample(Witness::new(
                    format!("class i={i}: extracted minus C-array sum"),
                    diff,
                )));
            }
            total += &class;
        }
        let diff = &theta_f - &total;
        Ok(if diff.is_zero() {
            Outcome::Verified
        } else {
            Outcome::Counterexample(Witness::new("theta^nu F minus full C-array sum", diff))
        })
    })
}

/// Refines a `t`-dissection into a `tk`-dissection and checks that
/// non-pentagonal classes lift to non-pentagonal classes.
pub fn verify_refinement(n: usize, t: usize, k: usize) -> Result<VerificationReport> {
    require_positive("t", t)?;
    require_positive("k", k)?;
    timed(format!("refine/t={t}/k={k}/N={n}"), || {
        let coarse = dissection_table(n, t)?;
        let fine = dissection_table(n, t * k)?;
        for i in 0..t {
            let mut rebuilt = IntPoly::zero();
            for j in 0..k {
                rebuilt += &fine.poly(i + j * t).substitute_power(k)?.shift(j);
            }
            let diff = coarse.poly(i) - &rebuilt;
            if !diff.is_zero() {
                return Ok(Outcome::Counterexample(Witness::new(
                    format!("i={i}: A_t minus refined sum"),
                    diff,
                )));
            }
        }
        let s_t = pentagonal_residues(t)?;
        let s_tk = pentagonal_residues(t * k)?;
        for i in s_t.complement() {
            for j in 0..k {
                let lifted = i + j * t;
                if s_tk.contains(lifted) {
                    return Ok(Outcome::Counterexample(Witness::value(
                        format!("i={i} not in S(t) but {lifted} in S(tk)"),
                        lifted,
                    )));
                }
            }
        }
        Ok(Outcome::Verified)
    })
}

/// Stability of `θ^ν F(q; N)` and `A_t^(ν)(N, i, q)` at `n`-th roots of unity
/// once `N` passes the threshold, tested as divisibility by `q^n - 1` between
/// the threshold and one period beyond it.
pub fn verify_stability(n: usize, t: usize, nu: usize) -> Result<VerificationReport> {
    require_positive("n", n)?;
    require_positive("t", t)?;
    timed(format!("stable/n={n}/t={t}/nu={nu}"), || {
        let base = (nu + 1) * n - 1;
        let probe = base + n;
        let diff = strange_partial(base).theta(nu as u32) - strange_partial(probe).theta(nu as u32);
        let folded = diff.reduce_mod_qn_minus_1(n)?;
        if !folded.is_zero() {
            return Ok(Outcome::Counterexample(Witness::new(
                format!("theta^nu F(q;{base}) - theta^nu F(q;{probe}) mod q^n - 1"),
                folded,
            )));
        }

        let base = (nu + 1) * n * t - 1;
        let probe = base + n * t;
        let low = dissection_table(base, t)?;
        let high = dissection_table(probe, t)?;
        for i in 0..t {
            let diff = low.poly(i).derivative(nu) - high.poly(i).derivative(nu);
            let folded = diff.reduce_mod_qn_minus_1(n)?;
            if !folded.is_zero() {
                return Ok(Outcome::Counterexample(Witness::new(
                    format!("i={i}: A_t^(nu)(N={base}) - A_t^(nu)(N={probe}) mod q^n - 1"),
                    folded,
                )));
            }
        }
        Ok(Outcome::Verified)
    })
}

/// `A_t^(ν)(N, i, 1) = 0` for non-pentagonal `i` at `N = (ν+1)t - 1`.
pub fn verify_vanishing_at_one(t: usize, nu: usize) -> Result<VerificationReport> {
    require_positive("t", t)?;
    timed(format!("vanish/t={t}/nu={nu}"), || {
        let s = pentagonal_residues(t)?;
        if s.is_full() {
            return Ok(Outcome::Vacuous);
        }
        let n = (nu + 1) * t - 1;
        let table = dissection_table(n, t)?;
        let one = BigInt::from(1);
        for i in s.complement() {
            let v = table.poly(i).derivative(nu).eval(&one);
            if !v.is_zero() {
                return Ok(Outcome::Counterexample(Witness::value(
                    format!("i={i}: A_t^(nu)(N={n}, i, 1)"),
                    v,
                )));
            }
        }
        Ok(Outcome::Verified)
    })
}

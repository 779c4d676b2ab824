//! Verification grids: parameter sweeps over the individual checks, run
//! through an [`Exec`] and returned sorted by case id.

use crate::exec::Exec;
use crate::fishburn::{
    verify_binomial_criterion, verify_congruences, verify_decomposition, verify_sp_structure,
};
use crate::report::{sort_reports, VerificationReport};
use crate::strange::{
    lambda, verify_cyclotomic_factorization, verify_refinement, verify_stability, verify_theorem1,
    verify_theta_dissection, verify_vanishing_at_one,
};

fn run<T, F>(cases: &[T], exec: Exec, f: F) -> Vec<VerificationReport>
where
    T: Sync,
    F: Fn(&T) -> VerificationReport + Sync + Send,
{
    let mut reports = exec.map(cases, f);
    sort_reports(&mut reports);
    reports
}

/// `1 ≤ t ≤ t_max`, `0 ≤ N ≤ n_max`.
pub fn theorem1_grid(t_max: usize, n_max: usize, exec: Exec) -> Vec<VerificationReport> {
    let cases: Vec<(usize, usize)> = (1..=t_max)
        .flat_map(|t| (0..=n_max).map(move |n| (t, n)))
        .collect();
    run(&cases, exec, |&(t, n)| {
        VerificationReport::or_error(format!("thm1/t={t}/N={n}"), verify_theorem1(n, t))
    })
}

/// Grid points of `1 ≤ t ≤ t_max`, `0 ≤ N ≤ n_max` with `λ(N, t) ≤ lambda_max`.
pub fn cyclotomic_grid(
    t_max: usize,
    n_max: usize,
    lambda_max: usize,
    exec: Exec,
) -> Vec<VerificationReport> {
    let cases: Vec<(usize, usize)> = (1..=t_max)
        .flat_map(|t| (0..=n_max).map(move |n| (t, n)))
        .filter(|&(t, n)| lambda(n, t).is_ok_and(|l| l <= lambda_max))
        .collect();
    run(&cases, exec, |&(t, n)| {
        VerificationReport::or_error(
            format!("cyclo/t={t}/N={n}"),
            verify_cyclotomic_factorization(n, t),
        )
    })
}

pub fn theta_grid(t_max: usize, n_max: usize, nu_max: usize, exec: Exec) -> Vec<VerificationReport> {
    let cases: Vec<(usize, usize, usize)> = (1..=t_max)
        .flat_map(|t| (0..=n_max).flat_map(move |n| (0..=nu_max).map(move |nu| (t, n, nu))))
        .collect();
    run(&cases, exec, |&(t, n, nu)| {
        VerificationReport::or_error(
            format!("theta/t={t}/N={n}/nu={nu}"),
            verify_theta_dissection(n, t, nu),
        )
    })
}

pub fn refinement_grid(t_max: usize, k_max: usize, n_max: usize, exec: Exec) -> Vec<VerificationReport> {
    let cases: Vec<(usize, usize, usize)> = (1..=t_max)
        .flat_map(|t| (1..=k_max).flat_map(move |k| (0..=n_max).map(move |n| (t, k, n))))
        .collect();
    run(&cases, exec, |&(t, k, n)| {
        VerificationReport::or_error(format!("refine/t={t}/k={k}/N={n}"), verify_refinement(n, t, k))
    })
}

/// `1 ≤ n ≤ root_max` is the order of the roots of unity.
pub fn stability_grid(root_max: usize, t_max: usize, nu_max: usize, exec: Exec) -> Vec<VerificationReport> {
    let cases: Vec<(usize, usize, usize)> = (1..=root_max)
        .flat_map(|n| (1..=t_max).flat_map(move |t| (0..=nu_max).map(move |nu| (n, t, nu))))
        .collect();
    run(&cases, exec, |&(n, t, nu)| {
        VerificationReport::or_error(format!("stable/n={n}/t={t}/nu={nu}"), verify_stability(n, t, nu))
    })
}

pub fn vanishing_grid(t_max: usize, nu_max: usize, exec: Exec) -> Vec<VerificationReport> {
    let cases: Vec<(usize, usize)> = (1..=t_max)
        .flat_map(|t| (0..=nu_max).map(move |nu| (t, nu)))
        .collect();
    run(&cases, exec, |&(t, nu)| {
        VerificationReport::or_error(format!("vanish/t={t}/nu={nu}"), verify_vanishing_at_one(t, nu))
    })
}

/// `(p, r, n_count)` triples.
pub fn congruence_suite(cases: &[(u64, u32, usize)], exec: Exec) -> Vec<VerificationReport> {
    run(cases, exec, |&(p, r, count)| {
        VerificationReport::or_error(
            format!("cong/p={p}/r={r}/count={count}"),
            verify_congruences(p, r, count).map(|rep| rep.to_verification_report(count)),
        )
    })
}

/// `(p, r)` pairs.
pub fn sp_structure_suite(cases: &[(u64, u32)], exec: Exec) -> Vec<VerificationReport> {
    run(cases, exec, |&(p, r)| {
        VerificationReport::or_error(format!("spfacts/p={p}/r={r}"), verify_sp_structure(p, r))
    })
}

/// `(p, r, k_max)` triples.
pub fn binomial_suite(cases: &[(u64, u32, usize)], exec: Exec) -> Vec<VerificationReport> {
    run(cases, exec, |&(p, r, k_max)| {
        VerificationReport::or_error(
            format!("binom/p={p}/r={r}/kmax={k_max}"),
            verify_binomial_criterion(p, r, k_max),
        )
    })
}

/// `(p, r, n)` triples.
pub fn decomposition_suite(cases: &[(u64, u32, usize)], exec: Exec) -> Vec<VerificationReport> {
    run(cases, exec, |&(p, r, n)| {
        VerificationReport::or_error(format!("decomp/p={p}/r={r}/n={n}"), verify_decomposition(p, r, n))
    })
}

pub const CONGRUENCE_CASES: [(u64, u32, usize); 8] = [
    (5, 1, 50),
    (7, 1, 40),
    (11, 1, 30),
    (13, 1, 20),
    (5, 2, 20),
    (7, 2, 10),
    (5, 3, 5),
    (23, 2, 2),
];

pub const SP_PRIMES: [u64; 7] = [5, 7, 11, 13, 17, 19, 23];

pub const BINOMIAL_CASES: [(u64, u32, usize); 4] = [(5, 1, 4), (5, 2, 2), (7, 2, 2), (23, 2, 2)];

pub const DECOMPOSITION_CASES: [(u64, u32, usize); 4] = [(5, 1, 1), (5, 1, 2), (7, 1, 1), (5, 2, 1)];

/// Every grid of the standard verification run, merged and sorted.
pub fn full_report(exec: Exec) -> Vec<VerificationReport> {
    let sp_cases: Vec<(u64, u32)> = SP_PRIMES
        .iter()
        .flat_map(|&p| [(p, 2), (p, 3)])
        .collect();
    let mut all = Vec::new();
    all.extend(theorem1_grid(12, 40, exec));
    all.extend(cyclotomic_grid(12, 40, 15, exec));
    all.extend(theta_grid(6, 30, 3, exec));
    all.extend(refinement_grid(6, 4, 30, exec));
    all.extend(stability_grid(4, 4, 2, exec));
    all.extend(vanishing_grid(12, 3, exec));
    all.extend(congruence_suite(&CONGRUENCE_CASES, exec));
    all.extend(sp_structure_suite(&sp_cases, exec));
    all.extend(binomial_suite(&BINOMIAL_CASES, exec));
    all.extend(decomposition_suite(&DECOMPOSITION_CASES, exec));
    sort_reports(&mut all);
    all
}

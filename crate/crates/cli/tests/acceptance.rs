//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Every check is exact; runtime budgets are asserted alongside.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use strange_core::exec::Exec;
use strange_core::fishburn::{binom_valuation, fishburn_numbers, kummer_carries, t_set};
use strange_core::grids::{self, BINOMIAL_CASES, DECOMPOSITION_CASES, SP_PRIMES};
use strange_core::polyring::cyclotomic;
use strange_core::report::VerificationReport;
use strange_core::IntPoly;

struct Verdict {
    pass: bool,
    detail: String,
}

fn failures(reports: &[VerificationReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.status.is_pass())
        .map(|r| {
            let w = r
                .witness
                .as_ref()
                .map(|w| format!(" ({})", w.detail))
                .unwrap_or_default();
            format!("{} {}{w}", r.case_id, r.status.as_str())
        })
        .collect()
}

fn grid_verdict(reports: &[VerificationReport]) -> Verdict {
    let bad = failures(reports);
    Verdict {
        pass: bad.is_empty() && !reports.is_empty(),
        detail: if bad.is_empty() {
            format!("{} cases", reports.len())
        } else {
            format!("{} of {} cases failed: {}", bad.len(), reports.len(), bad.join("; "))
        },
    }
}

fn fishburn_baseline() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_strange"))
        .args(["fishburn", "--n-max", "5"])
        .env_remove("STRANGE_WORKERS")
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    let values: Vec<String> = text
        .lines()
        .skip(1)
        .filter_map(|l| l.split_once(',').map(|(_, v)| v.to_string()))
        .collect();
    let expected = ["1", "1", "2", "5", "15", "53"];
    Verdict {
        pass: out.status.code() == Some(0) && values == expected,
        detail: format!("xi(0..5) = {}", values.join(",")),
    }
}

fn theorem_grid() -> Verdict {
    grid_verdict(&grids::theorem1_grid(12, 40, Exec::Sequential))
}

fn cyclotomic_identity() -> Verdict {
    grid_verdict(&grids::cyclotomic_grid(12, 40, 15, Exec::Sequential))
}

fn section_two_identities() -> Verdict {
    let mut all = grids::theta_grid(6, 30, 3, Exec::Sequential);
    all.extend(grids::refinement_grid(6, 4, 30, Exec::Sequential));
    all.extend(grids::stability_grid(4, 4, 2, Exec::Sequential));
    all.extend(grids::vanishing_grid(12, 3, Exec::Sequential));
    grid_verdict(&all)
}

fn congruences(cases: &[(u64, u32, usize)], expected_classes: &[(u64, u32, Vec<usize>)]) -> Verdict {
    for (p, r, classes) in expected_classes {
        let got = t_set(*p, *r).map(|c| c.t_set).unwrap_or_default();
        if &got != classes {
            return Verdict {
                pass: false,
                detail: format!("T({p}^{r}) = {got:?}, expected {classes:?}"),
            };
        }
    }
    let reports = grids::congruence_suite(cases, Exec::Sequential);
    let mut v = grid_verdict(&reports);
    // these classes are nonempty, so vacuous would not count
    if reports.iter().any(|r| r.status != strange_core::Status::Verified) {
        v.pass = false;
    }
    v
}

fn andrews_sellers_scale() -> Verdict {
    congruences(
        &[(5, 1, 50), (7, 1, 40), (11, 1, 30)],
        &[(5, 1, vec![3, 4]), (7, 1, vec![6]), (11, 1, vec![8, 9, 10])],
    )
}

fn prime_powers() -> Verdict {
    congruences(
        &[(5, 2, 20), (7, 2, 10), (5, 3, 5), (23, 2, 2)],
        &[(23, 2, (524..=528).collect())],
    )
}

fn pipeline() -> Verdict {
    let sp_cases: Vec<(u64, u32)> = SP_PRIMES.iter().flat_map(|&p| [(p, 2), (p, 3)]).collect();
    let mut all = grids::sp_structure_suite(&sp_cases, Exec::Sequential);
    all.extend(grids::binomial_suite(&BINOMIAL_CASES, Exec::Sequential));
    all.extend(grids::decomposition_suite(&DECOMPOSITION_CASES, Exec::Sequential));
    grid_verdict(&all)
}

/// xorshift64*, enough for reproducible random polynomials.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn poly(&mut self, max_deg: i64, bound: i64) -> IntPoly {
        let len = self.range(0, max_deg + 1);
        IntPoly::from_coeffs((0..len).map(|_| self.range(-bound, bound)))
    }
}

fn property_suites() -> Verdict {
    let mut problems = Vec::new();
    let mut rng = Rng(0x5eed_1234_abcd_0001);

    for _ in 0..500 {
        let p = rng.poly(200, 1_000_000);
        let t = rng.range(1, 12) as usize;
        let parts = p.dissect(t).unwrap();
        if parts.recompose() != p {
            problems.push(format!("dissection round trip t={t}"));
        }
        for i in 0..t {
            let via = parts.part(i).substitute_power(t).unwrap().shift(i);
            if p.extract_residue_class(t, i).unwrap() != via {
                problems.push(format!("extraction coherence t={t} i={i}"));
            }
        }
        if p.theta(1) != p.derivative(1).shift(1) {
            problems.push("theta vs derivative".into());
        }
        let d = {
            let mut d = rng.poly(10, 50).into_coeffs();
            d.push(BigInt::from(if rng.next() % 2 == 0 { 1 } else { -1 }));
            IntPoly::new(d)
        };
        let (q, r) = p.divrem(&d).unwrap();
        if &(&q * &d) + &r != p || r.degree().is_some_and(|dr| Some(dr) >= d.degree()) {
            problems.push("division post-condition".into());
        }
        let other = rng.poly(40, 1_000_000);
        let m = rng.range(2, 1_000_000) as u64;
        let lhs = (&p * &other).reduce_coeffs(m).unwrap();
        let rhs = &p.reduce_coeffs(m).unwrap() * &other.reduce_coeffs(m).unwrap();
        if lhs != rhs {
            problems.push(format!("reduce_coeffs homomorphism M={m}"));
        }
        let small = rng.poly(40, 1_000);
        let order = rng.range(0, 50) as usize;
        if small.compose_one_minus_q(Some(order)) != small.compose_one_minus_q(None).truncated(order) {
            problems.push(format!("truncated composition order={order}"));
        }
    }

    for n in 1..=30usize {
        let product: IntPoly = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| cyclotomic(d).unwrap())
            .product();
        if product != IntPoly::q_pow_minus_one(n) {
            problems.push(format!("cyclotomic product n={n}"));
        }
        let phi = (1..=n).filter(|&k| num_integer::gcd(n, k) == 1).count();
        if cyclotomic(n).unwrap().degree() != Some(phi) {
            problems.push(format!("cyclotomic degree n={n}"));
        }
    }

    for p in [5u64, 7, 11, 13] {
        for n in 0..=2000u64 {
            for k in 0..=n {
                if kummer_carries(k, n - k, p).unwrap() as u64 != binom_valuation(n, k, p).unwrap() {
                    problems.push(format!("kummer vs legendre n={n} k={k} p={p}"));
                }
            }
        }
    }

    let exact = fishburn_numbers(300, None).unwrap();
    for m in [5u64, 25, 7, 49, 121] {
        if exact.reduce(m).unwrap() != fishburn_numbers(300, Some(m)).unwrap() {
            problems.push(format!("exact vs modular fishburn M={m}"));
        }
    }

    problems.dedup();
    Verdict {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            "all property suites hold".into()
        } else {
            problems.join("; ")
        },
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Verdict);
    let criteria: [Criterion; 8] = [
        ("1 fishburn baseline", Duration::from_secs(1), fishburn_baseline),
        ("2 theorem 1 grid t<=12 N<=40", Duration::from_secs(120), theorem_grid),
        ("3 cyclotomic identity lambda<=15", Duration::from_secs(30), cyclotomic_identity),
        ("4 dissection identities", Duration::from_secs(300), section_two_identities),
        ("5 congruences mod 5, 7, 11", Duration::from_secs(30), andrews_sellers_scale),
        ("6 prime-power congruences", Duration::from_secs(600), prime_powers),
        ("7 congruence pipeline", Duration::from_secs(300), pipeline),
        ("8 property suites", Duration::from_secs(300), property_suites),
    ];

    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= budget;
        let pass = verdict.pass && in_budget;
        if !pass {
            failed += 1;
        }
        let budget_note = if in_budget {
            String::new()
        } else {
            format!(" [over budget {budget:?}]")
        };
        println!(
            "{} criterion {name}: {} ({:.2?}){budget_note}",
            if pass { "PASS" } else { "FAIL" },
            verdict.detail,
            elapsed
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

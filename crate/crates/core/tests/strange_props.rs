use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use strange_core::report::Status;
use strange_core::strange::{
    c_array, dissection_table, pentagonal_residues, pentagonal_residues_with_bound,
    pochhammer_q, strange_partial,
};

#[test]
fn strange_partial_shape() {
    for n in 0..=60usize {
        let f = strange_partial(n);
        assert_eq!(f.coeff(0), BigInt::from(n + 1), "N = {n}");
        assert_eq!(f.eval_i64(1), BigInt::from(1), "N = {n}");
        assert_eq!(f.degree(), Some(n * (n + 1) / 2), "N = {n}");
    }
}

#[test]
fn pochhammer_shape() {
    for n in 0..=30usize {
        let p = pochhammer_q(n);
        assert_eq!(p.degree(), Some(n * (n + 1) / 2));
        assert_eq!(p.coeff(0), BigInt::from(1));
    }
}

#[test]
fn enumeration_bound_is_one_period() {
    for t in 1..=200usize {
        assert_eq!(
            pentagonal_residues(t).unwrap().residues(),
            pentagonal_residues_with_bound(t, 24 * t).unwrap().residues(),
            "t = {t}"
        );
        assert!(pentagonal_residues(t).unwrap().contains(0));
    }
}

#[test]
fn non_pentagonal_classes_lift() {
    for t in 1..=8usize {
        let s_t = pentagonal_residues(t).unwrap();
        for k in 1..=6usize {
            let s_tk = pentagonal_residues(t * k).unwrap();
            for i in s_t.complement() {
                for j in 0..k {
                    assert!(!s_tk.contains(i + j * t), "t={t} k={k} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn c_array_diagonal_and_nonzero_entries() {
    for t in 1..=12usize {
        let c = c_array(t, 6);
        for nu in 0..=6usize {
            for i in 0..t {
                assert_eq!(c.get(nu, i, nu), BigInt::from(t).pow(nu as u32));
                // every entry with j >= 1 is positive; the j = 0 entry is i^nu
                for j in 1..=nu {
                    assert!(c.get(nu, i, j) > BigInt::zero(), "t={t} nu={nu} i={i} j={j}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dissection_tables_recompose(n in 0usize..=40, t in 1usize..=15) {
        let table = dissection_table(n, t).unwrap();
        prop_assert_eq!(table.recompose(), strange_partial(n));
        prop_assert_eq!(table.lambda(), (n + 1) / t);
    }

    #[test]
    fn theorem1_holds_beyond_the_acceptance_grid(n in 0usize..=60, t in 13usize..=30) {
        let rep = strange_core::strange::verify_theorem1(n, t).unwrap();
        prop_assert!(rep.status == Status::Verified || rep.status == Status::Vacuous);
    }
}

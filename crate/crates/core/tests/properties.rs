//! Randomized cross-checks wiring the independent pieces against each
//! other: the two determinant oracles, the step-by-step engine, the
//! minor-quotient predictions, and the arrangement pass.

use num_integer::Integer;
use proptest::prelude::*;

use gjx_core::arrange::{arrange, is_properly_arranged, pivot_dominance_check};
use gjx_core::engine::{
    eliminate, gj_product, inverse, is_diagonally_eliminable, step_even, step_odd,
};
use gjx_core::formulas::{entry_formula, intermediate_formula, pivot_formula, verify_trace};
use gjx_core::minors::{
    det_bareiss, det_laplace, inverse_adjugate, minor, principal_minor, rank_by_minors,
};
use gjx_core::{Error, IndexList, Matrix, Rational};

fn matrix_strategy(max_m: usize, max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        proptest::collection::vec(-9i64..=9, m * n).prop_map(move |v| {
            let rows = v
                .chunks(n)
                .map(|row| row.iter().map(|&x| Rational::from_int(x)).collect())
                .collect();
            Matrix::from_rows(rows).unwrap()
        })
    })
}

fn square_strategy(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(-9i64..=9, n * n).prop_map(move |v| {
            let rows = v
                .chunks(n)
                .map(|row| row.iter().map(|&x| Rational::from_int(x)).collect())
                .collect();
            Matrix::from_rows(rows).unwrap()
        })
    })
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=50).prop_map(|(p, q)| Rational::new(p.into(), q.into()).unwrap())
}

fn assert_canonical(x: &Rational) {
    assert!(*x.denom() > num_bigint::BigInt::from(0));
    assert_eq!(x.numer().gcd(x.denom()), num_bigint::BigInt::from(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_oracles_agree(a in square_strategy(6)) {
        prop_assert_eq!(det_laplace(&a).unwrap(), det_bareiss(&a).unwrap());
    }

    #[test]
    fn minor_scales_linearly_in_a_row(a in square_strategy(5), c in rational_strategy(), seed in any::<u32>()) {
        let n = a.rows();
        let all = IndexList::leading(n);
        let base = minor(&a, &all, &all).unwrap();
        let row = (seed as usize % n) + 1;
        let mut scaled = a.clone();
        for j in 1..=n {
            let v = &scaled[(row, j)] * &c;
            scaled[(row, j)] = v;
        }
        prop_assert_eq!(minor(&scaled, &all, &all).unwrap(), &base * &c);
    }

    #[test]
    fn elimination_success_matches_minor_criterion(a in matrix_strategy(5, 5)) {
        let r = rank_by_minors(&a).unwrap();
        match eliminate(&a) {
            Ok(t) => {
                prop_assert_eq!(t.rank, r);
                prop_assert!(is_diagonally_eliminable(&a, r).unwrap());
            }
            Err(Error::ZeroMatrix) => prop_assert_eq!(r, 0),
            Err(Error::ZeroPivot(_)) => {
                prop_assert!(r >= 1);
                prop_assert!(!is_diagonally_eliminable(&a, r).unwrap());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn arranged_elimination_always_succeeds(a in matrix_strategy(5, 6)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let t = eliminate(&arranged).unwrap();
        prop_assert!(pivot_dominance_check(&t));
        prop_assert!(is_properly_arranged(&arranged).unwrap());
    }

    #[test]
    fn arranged_rank_agrees_with_minor_rank(a in matrix_strategy(5, 5)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let r = rank_by_minors(&a).unwrap();
        prop_assert_eq!(rank_by_minors(&arranged).unwrap(), r);
        prop_assert_eq!(eliminate(&arranged).unwrap().rank, r);
    }

    #[test]
    fn arrangement_permutations_are_sound(a in matrix_strategy(5, 5)) {
        prop_assume!(!a.is_zero());
        let r = arrange(&a).unwrap();
        let product = r.row_perm.row_matrix().mul(&a).mul(&r.col_perm.col_matrix());
        prop_assert_eq!(&product, &r.arranged);
        // a second pass has nothing left to do
        let again = arrange(&r.arranged).unwrap();
        prop_assert!(again.row_perm.is_identity());
        prop_assert!(again.col_perm.is_identity());
        prop_assert_eq!(again.arranged, r.arranged);
    }

    #[test]
    fn closed_form_predictions_match_engine(a in matrix_strategy(4, 5)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let report = verify_trace(&arranged).unwrap();
        prop_assert!(report.all_match);
    }

    #[test]
    fn pivot_products_reconstruct_principal_minors(a in matrix_strategy(5, 5)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let t = eliminate(&arranged).unwrap();
        let mut product = Rational::one();
        for k in 0..t.rank {
            let pivot = t.pivot(k).unwrap().clone();
            prop_assert_eq!(&pivot, &pivot_formula(&arranged, k).unwrap());
            product = product * pivot;
            prop_assert_eq!(&product, &principal_minor(&arranged, k + 1).unwrap());
        }
    }

    #[test]
    fn full_rank_inverse_is_exact(a in square_strategy(5)) {
        prop_assume!(!det_bareiss(&a).unwrap().is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let t = eliminate(&arranged).unwrap();
        let g = gj_product(&t);
        prop_assert_eq!(g.mul(&arranged), Matrix::identity(a.rows()));
        prop_assert_eq!(&g, &inverse(&arranged).unwrap());
        prop_assert_eq!(g, inverse_adjugate(&arranged).unwrap());
        // square full-rank after arrangement is always eliminable
        prop_assert!(is_diagonally_eliminable(&arranged, a.rows()).unwrap());
    }

    #[test]
    fn predicted_last_state_finishes_to_identity(a in square_strategy(5)) {
        prop_assume!(!det_bareiss(&a).unwrap().is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let n = a.rows();
        let predicted = intermediate_formula(&arranged, n - 1).unwrap();
        let odd = step_odd(&predicted, n - 1).unwrap();
        let even = step_even(&odd.result, n - 1).unwrap();
        prop_assert_eq!(even.result, Matrix::identity(n));
    }

    #[test]
    fn upper_branch_sign_unwinds_to_unsigned_minor(a in matrix_strategy(5, 5)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let r = eliminate(&arranged).unwrap().rank;
        for k in 1..r {
            let m_k = principal_minor(&arranged, k).unwrap();
            for i in 1..=k {
                for j in k + 1..=arranged.cols() {
                    let rows = IndexList::leading(k);
                    let cols = IndexList::leading_with(k, Some(i), Some(j)).unwrap();
                    let unsigned = minor(&arranged, &rows, &cols).unwrap();
                    let mut value = entry_formula(&arranged, k, i, j).unwrap() * &m_k;
                    if (k + i) % 2 == 1 {
                        value = -value;
                    }
                    prop_assert_eq!(value, unsigned);
                }
            }
        }
    }

    #[test]
    fn lower_block_magnitudes_are_bordered_minor_quotients(a in matrix_strategy(5, 5)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let t = eliminate(&arranged).unwrap();
        for k in 0..t.rank {
            let state = t.state(2 * k).unwrap();
            let m_k = principal_minor(&arranged, k).unwrap().abs();
            for i in k + 1..=arranged.rows() {
                let rows = IndexList::leading_with(k, None, Some(i)).unwrap();
                for j in k + 1..=arranged.cols() {
                    let cols = IndexList::leading_with(k, None, Some(j)).unwrap();
                    let bordered = minor(&arranged, &rows, &cols).unwrap().abs();
                    prop_assert_eq!(state[(i, j)].abs() * &m_k, bordered);
                }
            }
        }
    }

    #[test]
    fn arithmetic_stays_canonical(x in rational_strategy(), y in rational_strategy()) {
        for v in [&x + &y, &x - &y, &x * &y, -x.clone(), x.abs()] {
            assert_canonical(&v);
        }
        if !y.is_zero() {
            assert_canonical(&(&x / &y));
        }
        if let Some(r) = x.checked_recip() {
            assert_canonical(&r);
        }
    }

    #[test]
    fn display_round_trips(x in rational_strategy()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn matrix_entries_stay_canonical_through_elimination(a in matrix_strategy(4, 4)) {
        prop_assume!(!a.is_zero());
        let arranged = arrange(&a).unwrap().arranged;
        let t = eliminate(&arranged).unwrap();
        for step in &t.steps {
            for entry in step.result.entries().chain(step.op_matrix.entries()) {
                assert_canonical(entry);
            }
        }
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Rational>();
    assert_send_sync::<Matrix>();
    assert_send_sync::<gjx_core::engine::Trace>();
    assert_send_sync::<gjx_core::formulas::VerifyReport>();
    assert_send_sync::<gjx_core::arrange::ArrangeResult>();
    assert_send_sync::<Error>();
}

//! Submatrices, minors, and two independent determinant oracles.
//!
//! `det_laplace` (cofactor expansion) and `det_bareiss` (fraction-free
//! elimination) are deliberately separate algorithms; agreement between
//! them is part of the test suite, and everything else in the crate is
//! validated against them.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::{IndexList, Matrix};
use crate::rational::Rational;

/// Laplace expansion has factorial cost, so it refuses larger inputs.
pub const ORACLE_LIMIT: usize = 10;

/// The `k x k` submatrix selecting `rows` and `cols` in the given order.
pub fn submatrix(a: &Matrix, rows: &IndexList, cols: &IndexList) -> Result<Matrix> {
    if rows.len() != cols.len() {
        return Err(Error::IndexLengthMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    if rows.max() > a.rows() {
        return Err(Error::IndexOutOfRange {
            index: rows.max(),
            bound: a.rows(),
        });
    }
    if cols.max() > a.cols() {
        return Err(Error::IndexOutOfRange {
            index: cols.max(),
            bound: a.cols(),
        });
    }
    let k = rows.len();
    let mut out = Matrix::zeros(k, k);
    for (oi, i) in rows.iter().enumerate() {
        for (oj, j) in cols.iter().enumerate() {
            out[(oi + 1, oj + 1)] = a[(i, j)].clone();
        }
    }
    Ok(out)
}

/// The minor for the given row and column selection, i.e. the determinant
/// of [`submatrix`], computed by the cofactor oracle.
pub fn minor(a: &Matrix, rows: &IndexList, cols: &IndexList) -> Result<Rational> {
    det_laplace(&submatrix(a, rows, cols)?)
}

/// The leading principal minor of order `k`; order 0 is defined as 1.
pub fn principal_minor(a: &Matrix, k: usize) -> Result<Rational> {
    let bound = a.rows().min(a.cols());
    if k > bound {
        return Err(Error::OutOfRange {
            what: "principal minor order",
            value: k,
            min: 0,
            max: bound,
        });
    }
    if k == 0 {
        return Ok(Rational::one());
    }
    minor(a, &IndexList::leading(k), &IndexList::leading(k))
}

/// Determinant by recursive cofactor expansion along the first row.
pub fn det_laplace(a: &Matrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() > ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            side: a.rows(),
            limit: ORACLE_LIMIT,
        });
    }
    let mut cols: Vec<usize> = (1..=a.cols()).collect();
    Ok(expand(a, 1, &mut cols))
}

fn expand(a: &Matrix, row: usize, cols: &mut Vec<usize>) -> Rational {
    if cols.len() == 1 {
        return a[(row, cols[0])].clone();
    }
    let mut acc = Rational::zero();
    for idx in 0..cols.len() {
        let j = cols.remove(idx);
        let coeff = &a[(row, j)];
        if !coeff.is_zero() {
            let cofactor = expand(a, row + 1, cols);
            let term = coeff * &cofactor;
            if idx % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        cols.insert(idx, j);
    }
    acc
}

/// Determinant by Bareiss-style fraction-free elimination with row swaps.
/// Independent of [`det_laplace`] and not limited by [`ORACLE_LIMIT`].
pub fn det_bareiss(a: &Matrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut w = a.clone();
    let mut negate = false;
    let mut prev = Rational::one();
    for k in 1..=n {
        if w[(k, k)].is_zero() {
            match (k + 1..=n).find(|&r| !w[(r, k)].is_zero()) {
                Some(r) => {
                    w.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..=n {
            for j in k + 1..=n {
                let num = &(&w[(i, j)] * &w[(k, k)]) - &(&w[(i, k)] * &w[(k, j)]);
                w[(i, j)] = num / &prev;
            }
            w[(i, k)] = Rational::zero();
        }
        prev = w[(k, k)].clone();
    }
    let det = w[(n, n)].clone();
    Ok(if negate { -det } else { det })
}

/// The largest `k` such that some `k x k` minor is non-zero; 0 for the
/// zero matrix. Enumerates minors from the largest size down, using the
/// fraction-free oracle.
pub fn rank_by_minors(a: &Matrix) -> Result<usize> {
    let bound = a.rows().min(a.cols());
    if bound > ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            side: bound,
            limit: ORACLE_LIMIT,
        });
    }
    for k in (1..=bound).rev() {
        for rows in (1..=a.rows()).combinations(k) {
            let row_list = IndexList::new(rows)?;
            for cols in (1..=a.cols()).combinations(k) {
                let col_list = IndexList::new(cols)?;
                let sub = submatrix(a, &row_list, &col_list)?;
                if !det_bareiss(&sub)?.is_zero() {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Brute-force inverse as the transposed cofactor matrix over the
/// determinant. Verification oracle only.
pub fn inverse_adjugate(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let det = det_laplace(a)?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            let cofactor = if n == 1 {
                Rational::one()
            } else {
                let rows = IndexList::new((1..=n).filter(|&r| r != i).collect())?;
                let cols = IndexList::new((1..=n).filter(|&c| c != j).collect())?;
                let m = minor(a, &rows, &cols)?;
                if (i + j) % 2 == 0 {
                    m
                } else {
                    -m
                }
            };
            // adjugate transposes the cofactor grid
            inv[(j, i)] = cofactor / &det;
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_3x3() -> Matrix {
        Matrix::from_int_rows(&[&[2, 1, 1], &[4, 3, 1], &[2, 2, 3]])
    }

    #[test]
    fn submatrix_selects_rows_and_cols() {
        let a = worked_3x3();
        let rows = IndexList::new(vec![1, 2]).unwrap();
        let cols = IndexList::new(vec![2, 3]).unwrap();
        let sub = submatrix(&a, &rows, &cols).unwrap();
        // brute-force re-check entry by entry
        for (oi, i) in [1usize, 2].iter().enumerate() {
            for (oj, j) in [2usize, 3].iter().enumerate() {
                assert_eq!(sub[(oi + 1, oj + 1)], a[(*i, *j)]);
            }
        }
        assert_eq!(sub, Matrix::from_int_rows(&[&[1, 1], &[3, 1]]));
    }

    #[test]
    fn submatrix_of_everything_is_identity_selection() {
        let a = worked_3x3();
        let all = IndexList::leading(3);
        assert_eq!(submatrix(&a, &all, &all).unwrap(), a);
        let one = Matrix::from_int_rows(&[&[5]]);
        let first = IndexList::leading(1);
        assert_eq!(submatrix(&one, &first, &first).unwrap(), one);
    }

    #[test]
    fn submatrix_rejects_bad_selections() {
        let a = worked_3x3();
        let r = IndexList::new(vec![1, 2]).unwrap();
        let c = IndexList::new(vec![1]).unwrap();
        assert_eq!(
            submatrix(&a, &r, &c),
            Err(Error::IndexLengthMismatch { rows: 2, cols: 1 })
        );
        let big = IndexList::new(vec![1, 4]).unwrap();
        assert_eq!(
            submatrix(&a, &big, &r),
            Err(Error::IndexOutOfRange { index: 4, bound: 3 })
        );
    }

    #[test]
    fn minor_examples() {
        let a = worked_3x3();
        let m = minor(
            &a,
            &IndexList::new(vec![1, 2]).unwrap(),
            &IndexList::new(vec![2, 3]).unwrap(),
        )
        .unwrap();
        assert_eq!(m, Rational::from_int(-2));

        let single = Matrix::from_int_rows(&[&[7, 0], &[0, 0]]);
        let first = IndexList::leading(1);
        assert_eq!(
            minor(&single, &first, &first).unwrap(),
            Rational::from_int(7)
        );

        let id = Matrix::identity(4);
        let lead3 = IndexList::leading(3);
        assert_eq!(minor(&id, &lead3, &lead3).unwrap(), Rational::one());
    }

    #[test]
    fn principal_minor_examples() {
        let a = Matrix::from_int_rows(&[&[2, 1], &[4, 3]]);
        assert_eq!(principal_minor(&a, 0).unwrap(), Rational::one());
        assert_eq!(principal_minor(&a, 1).unwrap(), Rational::from_int(2));
        assert_eq!(principal_minor(&a, 2).unwrap(), Rational::from_int(2));
        assert!(matches!(
            principal_minor(&a, 3),
            Err(Error::OutOfRange { .. })
        ));
        // agrees with the generic minor for every order
        let b = worked_3x3();
        for k in 1..=3 {
            let lead = IndexList::leading(k);
            assert_eq!(
                principal_minor(&b, k).unwrap(),
                minor(&b, &lead, &lead).unwrap()
            );
        }
    }

    #[test]
    fn laplace_examples() {
        assert_eq!(
            det_laplace(&Matrix::from_int_rows(&[&[2, 1], &[4, 3]])).unwrap(),
            Rational::from_int(2)
        );
        assert_eq!(det_laplace(&Matrix::identity(5)).unwrap(), Rational::one());
        let dup = Matrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert_eq!(det_laplace(&dup).unwrap(), Rational::zero());
        assert!(matches!(
            det_laplace(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            det_laplace(&Matrix::identity(11)),
            Err(Error::OracleLimit {
                side: 11,
                limit: 10
            })
        ));
    }

    #[test]
    fn bareiss_matches_laplace_on_examples() {
        for m in [
            Matrix::from_int_rows(&[&[2, 1], &[4, 3]]),
            Matrix::identity(4),
            worked_3x3(),
            Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
            Matrix::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
            Matrix::zeros(3, 3),
        ] {
            assert_eq!(det_bareiss(&m).unwrap(), det_laplace(&m).unwrap());
        }
        assert_eq!(det_bareiss(&worked_3x3()).unwrap(), Rational::from_int(6));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_by_minors(&Matrix::zeros(3, 3)).unwrap(), 0);
        assert_eq!(rank_by_minors(&Matrix::identity(3)).unwrap(), 3);
        assert_eq!(
            rank_by_minors(&Matrix::from_int_rows(&[&[1, 2], &[2, 4]])).unwrap(),
            1
        );
        assert_eq!(
            rank_by_minors(&Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]])).unwrap(),
            1
        );
        assert_eq!(rank_by_minors(&worked_3x3()).unwrap(), 3);
    }

    #[test]
    fn adjugate_inverse_examples() {
        let a = Matrix::from_int_rows(&[&[2, 1], &[4, 3]]);
        let inv = inverse_adjugate(&a).unwrap();
        let expected = Matrix::from_rows(vec![
            vec!["3/2".parse().unwrap(), "-1/2".parse().unwrap()],
            vec![Rational::from_int(-2), Rational::one()],
        ])
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(a.mul(&inv), Matrix::identity(2));

        assert_eq!(
            inverse_adjugate(&Matrix::identity(3)).unwrap(),
            Matrix::identity(3)
        );
        assert_eq!(
            inverse_adjugate(&Matrix::from_int_rows(&[&[1, 2], &[2, 4]])),
            Err(Error::Singular)
        );
        let one = Matrix::from_int_rows(&[&[4]]);
        assert_eq!(
            inverse_adjugate(&one).unwrap(),
            Matrix::from_rows(vec![vec!["1/4".parse().unwrap()]]).unwrap()
        );
    }
}

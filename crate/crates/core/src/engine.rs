//! Gauss-Jordan elimination driven by explicit operation matrices.
//!
//! Every elementary step is materialized as an m x m matrix G_q, and the
//! state after each step, A^(q) = G_q ... G_1 A, is kept, so a whole run
//! can be replayed and audited entry by entry afterwards.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::minors::principal_minor;
use crate::rational::Rational;

/// One elimination step: the operation matrix applied and the state
/// reached. Odd `q` scales a pivot row, even `q` clears a pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// 1-based position in the run.
    pub q: usize,
    /// The m x m operation matrix G_q.
    pub op_matrix: Matrix,
    /// The m x n state A^(q) = G_q * previous.
    pub result: Matrix,
}

impl Step {
    pub fn is_odd(&self) -> bool {
        self.q % 2 == 1
    }
}

/// A complete elimination run: the input, all 2 * rank steps, and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub input: Matrix,
    pub steps: Vec<Step>,
    pub rank: usize,
}

impl Trace {
    /// The state A^(q); q = 0 is the input itself.
    pub fn state(&self, q: usize) -> Result<&Matrix> {
        if q == 0 {
            return Ok(&self.input);
        }
        self.steps
            .get(q - 1)
            .map(|s| &s.result)
            .ok_or(Error::StepOutOfRange {
                q,
                max: self.steps.len(),
            })
    }

    /// The pivot read before scaling: entry (k+1, k+1) of A^(2k), for
    /// 0 <= k < rank.
    pub fn pivot(&self, k: usize) -> Result<&Rational> {
        if k >= self.rank {
            return Err(Error::OutOfRange {
                what: "pivot index",
                value: k,
                min: 0,
                max: self.rank.saturating_sub(1),
            });
        }
        Ok(&self.state(2 * k)?[(k + 1, k + 1)])
    }
}

/// Build step 2k+1: scale row k+1 so the pivot becomes 1. The operation
/// matrix is the identity except for the reciprocal pivot at (k+1, k+1).
pub fn step_odd(current: &Matrix, k: usize) -> Result<Step> {
    let recip = current[(k + 1, k + 1)]
        .checked_recip()
        .ok_or(Error::ZeroPivot(k + 1))?;
    let mut g = Matrix::identity(current.rows());
    g[(k + 1, k + 1)] = recip;
    let result = g.mul(current);
    Ok(Step {
        q: 2 * k + 1,
        op_matrix: g,
        result,
    })
}

/// Build step 2k+2: clear column k+1 outside the pivot row. The operation
/// matrix is the identity except column k+1, which holds the negated
/// column entries of the current state. The pivot must already be 1.
pub fn step_even(current: &Matrix, k: usize) -> Result<Step> {
    if !current[(k + 1, k + 1)].is_one() {
        return Err(Error::PivotNotOne(k + 1));
    }
    let mut g = Matrix::identity(current.rows());
    for i in 1..=current.rows() {
        if i != k + 1 {
            g[(i, k + 1)] = -&current[(i, k + 1)];
        }
    }
    let result = g.mul(current);
    Ok(Step {
        q: 2 * k + 2,
        op_matrix: g,
        result,
    })
}

/// Run the elimination to completion, recording every operation matrix
/// and intermediate state.
///
/// The run stops with rank k when the pivot positions are exhausted or
/// when the pivot at (k+1, k+1) is zero and every remaining row is zero
/// (the state is fully reduced). A zero pivot with non-zero rows below
/// is `ZeroPivot`: the input needs rearranging first. The all-zero
/// matrix has no pivot at all and is rejected as `ZeroMatrix`.
pub fn eliminate(a: &Matrix) -> Result<Trace> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let bound = a.rows().min(a.cols());
    let mut steps: Vec<Step> = Vec::with_capacity(2 * bound);
    let mut state = a.clone();
    let mut rank = 0;
    for k in 0..bound {
        if state[(k + 1, k + 1)].is_zero() {
            if state.rows_zero_from(k + 1) {
                break;
            }
            return Err(Error::ZeroPivot(k + 1));
        }
        let odd = step_odd(&state, k)?;
        let even = step_even(&odd.result, k)?;
        state = even.result.clone();
        steps.push(odd);
        steps.push(even);
        rank = k + 1;
    }
    Ok(Trace {
        input: a.clone(),
        steps,
        rank,
    })
}

/// The accumulated operation product G = G_{2r} ... G_1.
pub fn gj_product(t: &Trace) -> Matrix {
    let mut p = Matrix::identity(t.input.rows());
    for step in &t.steps {
        p = step.op_matrix.mul(&p);
    }
    p
}

/// Exact inverse of a square matrix: eliminate and multiply the
/// operation matrices together. Rank-deficient inputs are `Singular`;
/// a zero pivot on the way is propagated so the caller can rearrange.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    match eliminate(a) {
        Ok(t) if t.rank == a.rows() => Ok(gj_product(&t)),
        Ok(_) => Err(Error::Singular),
        Err(Error::ZeroMatrix) => Err(Error::Singular),
        Err(e) => Err(e),
    }
}

/// Whether the first r leading principal minors are all non-zero, which
/// is exactly the condition for the elimination to reach step 2r without
/// a zero pivot.
pub fn is_diagonally_eliminable(a: &Matrix, r: usize) -> Result<bool> {
    let bound = a.rows().min(a.cols());
    if r == 0 || r > bound {
        return Err(Error::OutOfRange {
            what: "eliminable order",
            value: r,
            min: 1,
            max: bound,
        });
    }
    for k in 1..=r {
        if principal_minor(a, k)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

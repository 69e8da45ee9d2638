//! Row/column rearrangement so that elimination meets only non-zero,
//! dominant pivots: the leading entry must dominate the whole matrix in
//! absolute value, and every bordered minor must be dominated by the
//! next leading principal minor.

use std::cmp::Ordering;

use crate::engine::{step_even, step_odd, Trace};
use crate::error::{Error, Result};
use crate::matrix::{IndexList, Matrix};
use crate::minors::{minor, principal_minor};

/// The arrangement predicate enumerates all bordered minors, which grows
/// combinatorially, so it refuses larger inputs.
pub const ARRANGE_LIMIT: usize = 8;

/// A bijection of positions 1..=size. `map(i)` names the source index
/// that lands at position i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Permutation {
        Permutation {
            mapping: (1..=size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.mapping.len()
    }

    pub fn map(&self, i: usize) -> usize {
        assert!(
            (1..=self.size()).contains(&i),
            "position {i} outside 1..={}",
            self.size()
        );
        self.mapping[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping
            .iter()
            .enumerate()
            .all(|(idx, &v)| v == idx + 1)
    }

    pub fn swap(&mut self, a: usize, b: usize) {
        assert!((1..=self.size()).contains(&a) && (1..=self.size()).contains(&b));
        self.mapping.swap(a - 1, b - 1);
    }

    /// Matrix P with a single 1 per row at column map(i): left-multiplying
    /// by P reorders rows, row i of P*A being row map(i) of A.
    pub fn row_matrix(&self) -> Matrix {
        let n = self.size();
        let mut p = Matrix::zeros(n, n);
        for i in 1..=n {
            p[(i, self.map(i))] = crate::rational::Rational::one();
        }
        p
    }

    /// Matrix Q such that column j of A*Q is column map(j) of A; the
    /// transpose of [`Permutation::row_matrix`].
    pub fn col_matrix(&self) -> Matrix {
        self.row_matrix().transpose()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.mapping
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapKind {
    Row,
    Col,
}

/// One recorded exchange: while placing pivot k, `from` (= k+1) was
/// swapped with `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwapEntry {
    pub k: usize,
    pub kind: SwapKind,
    pub from: usize,
    pub to: usize,
}

/// Outcome of [`arrange`]: `arranged` equals
/// `row_perm.row_matrix() * original * col_perm.col_matrix()` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangeResult {
    pub row_perm: Permutation,
    pub col_perm: Permutation,
    pub arranged: Matrix,
    pub swap_log: Vec<SwapEntry>,
}

/// Whether the matrix is arranged for dominant-pivot elimination:
/// |a_ij| <= |a_11| everywhere, and for every 1 <= k < min(m,n) each
/// bordered minor (leading k rows/cols plus one extra row i and column
/// j) is dominated in absolute value by the leading principal minor of
/// order k+1. All minors come from the determinant oracle. Degenerate
/// 0 <= 0 comparisons count as satisfied.
pub fn is_properly_arranged(a: &Matrix) -> Result<bool> {
    let bound = a.rows().min(a.cols());
    if bound > ARRANGE_LIMIT {
        return Err(Error::ArrangeLimit {
            side: bound,
            limit: ARRANGE_LIMIT,
        });
    }
    let corner = &a[(1, 1)];
    for entry in a.entries() {
        if entry.cmp_abs(corner) == Ordering::Greater {
            return Ok(false);
        }
    }
    for k in 1..bound {
        let m_k1 = principal_minor(a, k + 1)?;
        for i in k + 1..=a.rows() {
            let rows = IndexList::leading_with(k, None, Some(i))?;
            for j in k + 1..=a.cols() {
                let cols = IndexList::leading_with(k, None, Some(j))?;
                if minor(a, &rows, &cols)?.cmp_abs(&m_k1) == Ordering::Greater {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The state reached after `k` scale/clear step pairs, for a working
/// matrix whose first `k` pivots are known to be non-zero.
fn partial_state(w: &Matrix, k: usize) -> Matrix {
    let mut state = w.clone();
    for s in 0..k {
        let odd = step_odd(&state, s).expect("earlier passes placed a non-zero pivot");
        let even = step_even(&odd.result, s).expect("odd step scaled the pivot to 1");
        state = even.result;
    }
    state
}

/// Rearrange rows and columns by greedy complete pivoting so that the
/// result passes [`is_properly_arranged`].
///
/// For each pivot index k the elimination state after 2k steps is
/// recomputed for the current working matrix, the largest-magnitude
/// entry of its lower-right block is selected (ties broken by smallest
/// row, then smallest column), and that entry's row and column are
/// swapped into position k+1. A fully zero block means the rank is
/// exhausted and the remaining positions stay put. Deterministic.
pub fn arrange(a: &Matrix) -> Result<ArrangeResult> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let (m, n) = (a.rows(), a.cols());
    let mut work = a.clone();
    let mut row_perm = Permutation::identity(m);
    let mut col_perm = Permutation::identity(n);
    let mut swap_log = Vec::new();
    for k in 0..m.min(n) {
        let state = partial_state(&work, k);
        let mut best: Option<(usize, usize)> = None;
        for i in k + 1..=m {
            for j in k + 1..=n {
                if state[(i, j)].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => state[(i, j)].cmp_abs(&state[(bi, bj)]) == Ordering::Greater,
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break; // remaining block is zero: rank exhausted
        };
        if bi != k + 1 {
            work.swap_rows(k + 1, bi);
            row_perm.swap(k + 1, bi);
            swap_log.push(SwapEntry {
                k,
                kind: SwapKind::Row,
                from: k + 1,
                to: bi,
            });
        }
        if bj != k + 1 {
            work.swap_cols(k + 1, bj);
            col_perm.swap(k + 1, bj);
            swap_log.push(SwapEntry {
                k,
                kind: SwapKind::Col,
                from: k + 1,
                to: bj,
            });
        }
    }
    Ok(ArrangeResult {
        row_perm,
        col_perm,
        arranged: work,
        swap_log,
    })
}

/// Whether every pivot dominates its whole lower-right block in absolute
/// value, at every even state of the trace.
pub fn pivot_dominance_check(t: &Trace) -> bool {
    let (m, n) = (t.input.rows(), t.input.cols());
    for k in 0..t.rank {
        let state = t.state(2 * k).expect("even states up to 2(rank-1) exist");
        let pivot = &state[(k + 1, k + 1)];
        for i in k + 1..=m {
            for j in k + 1..=n {
                if state[(i, j)].cmp_abs(pivot) == Ordering::Greater {
                    return false;
                }
            }
        }
    }
    true
}

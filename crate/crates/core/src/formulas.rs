//! Closed-form predictions for every value the elimination engine
//! produces, expressed as quotients of minors of the ORIGINAL matrix,
//! plus the machinery to compare engine output against the predictions
//! entry by entry.
//!
//! Nothing here reads intermediate states to make a prediction; that
//! independence is the point of the cross-check.

use crate::engine::{eliminate, Trace};
use crate::error::{Error, Result};
use crate::matrix::{IndexList, Matrix};
use crate::minors::{minor, principal_minor};
use crate::rational::Rational;

/// Deliberate formula corruptions, used to demonstrate that verification
/// actually detects a wrong prediction rather than passing vacuously.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FormulaFault {
    #[default]
    None,
    /// Negate the upper branch of [`entry_formula`].
    FlipUpperSign,
    /// Invert the ratio returned by [`pivot_formula`].
    SwapPivotRatio,
}

/// One engine-vs-formula equality check. For state entries `k` is the
/// half-step index (the state is the one reached after step 2k); for
/// operation matrices `k` holds the step ordinal q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub engine_value: Rational,
    pub formula_value: Rational,
    pub matches: bool,
}

/// Pivot value check at pivot index `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotComparison {
    pub k: usize,
    pub engine_value: Rational,
    pub formula_value: Rational,
    pub matches: bool,
}

/// Product identity check at pivot index `k`: the leading principal
/// minor of order k+1 against the product of the first k+1 trace pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub k: usize,
    pub minor_value: Rational,
    pub product_value: Rational,
    pub matches: bool,
}

/// Full verification record for one elimination run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub input: Matrix,
    pub rank: usize,
    /// Entry checks for every state A^(2k), 0 <= k < rank.
    pub comparisons: Vec<Comparison>,
    /// Entry checks for every operation matrix G_q, 1 <= q <= 2*rank.
    pub op_comparisons: Vec<Comparison>,
    pub pivot_comparisons: Vec<PivotComparison>,
    pub lemma_checks: Vec<LemmaCheck>,
    pub all_match: bool,
}

impl VerifyReport {
    /// The first failing state-entry or operation-entry check, if any.
    pub fn first_mismatch(&self) -> Option<&Comparison> {
        self.comparisons
            .iter()
            .chain(&self.op_comparisons)
            .find(|c| !c.matches)
    }

    pub fn total_checks(&self) -> usize {
        self.comparisons.len()
            + self.op_comparisons.len()
            + self.pivot_comparisons.len()
            + self.lemma_checks.len()
    }
}

/// Predicted pivot at index k: the ratio of consecutive leading
/// principal minors, m_{k+1} / m_k.
pub fn pivot_formula(a: &Matrix, k: usize) -> Result<Rational> {
    pivot_formula_with(a, k, FormulaFault::None)
}

pub fn pivot_formula_with(a: &Matrix, k: usize, fault: FormulaFault) -> Result<Rational> {
    let m_k = principal_minor(a, k)?;
    let m_k1 = principal_minor(a, k + 1)?;
    if fault == FormulaFault::SwapPivotRatio {
        if m_k1.is_zero() {
            return Err(Error::DivisionByZero(k + 1));
        }
        return Ok(m_k / m_k1);
    }
    if m_k.is_zero() {
        return Err(Error::DivisionByZero(k));
    }
    Ok(m_k1 / m_k)
}

/// Predicted entry (i, j) of the state A^(2k), from minors of `a` alone.
///
/// Columns 1..k hold the identity/zero block. For j >= k+1 the value is
/// a bordered-minor quotient: rows above the pivot (i <= k) use the
/// column list 1..k with i dropped and j appended, carrying sign
/// (-1)^(k+i); rows i >= k+1 border the leading block with row i and
/// column j directly.
pub fn entry_formula(a: &Matrix, k: usize, i: usize, j: usize) -> Result<Rational> {
    entry_formula_with(a, k, i, j, FormulaFault::None)
}

pub fn entry_formula_with(
    a: &Matrix,
    k: usize,
    i: usize,
    j: usize,
    fault: FormulaFault,
) -> Result<Rational> {
    if i < 1 || i > a.rows() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: a.rows(),
        });
    }
    if j < 1 || j > a.cols() {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: a.cols(),
        });
    }
    if j <= k {
        return Ok(if i == j {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    let m_k = principal_minor(a, k)?;
    if m_k.is_zero() {
        return Err(Error::DivisionByZero(k));
    }
    if i <= k {
        let rows = IndexList::leading(k);
        let cols = IndexList::leading_with(k, Some(i), Some(j))?;
        let value = minor(a, &rows, &cols)? / m_k;
        let negative = ((k + i) % 2 == 1) != (fault == FormulaFault::FlipUpperSign);
        Ok(if negative { -value } else { value })
    } else {
        let rows = IndexList::leading_with(k, None, Some(i))?;
        let cols = IndexList::leading_with(k, None, Some(j))?;
        Ok(minor(a, &rows, &cols)? / m_k)
    }
}

/// The full predicted state A^(2k); k = 0 reproduces the input.
pub fn intermediate_formula(a: &Matrix, k: usize) -> Result<Matrix> {
    intermediate_formula_with(a, k, FormulaFault::None)
}

pub fn intermediate_formula_with(a: &Matrix, k: usize, fault: FormulaFault) -> Result<Matrix> {
    let mut out = Matrix::zeros(a.rows(), a.cols());
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            out[(i, j)] = entry_formula_with(a, k, i, j, fault)?;
        }
    }
    Ok(out)
}

/// The full predicted operation matrix G_q, from minors of `a` alone.
///
/// Odd q = 2k+1 is diagonal with m_k / m_{k+1} at position k+1. Even
/// q = 2k+2 is the identity except column k+1: above the diagonal the
/// entries are signed bordered-minor quotients, on the diagonal 1, and
/// below the diagonal negated bordered-minor quotients.
pub fn opmatrix_formula(a: &Matrix, q: usize) -> Result<Matrix> {
    let max = 2 * a.rows().min(a.cols());
    if q < 1 || q > max {
        return Err(Error::OutOfRange {
            what: "step ordinal",
            value: q,
            min: 1,
            max,
        });
    }
    let m = a.rows();
    let k = (q - 1) / 2;
    let mut g = Matrix::identity(m);
    if q % 2 == 1 {
        let m_k = principal_minor(a, k)?;
        let m_k1 = principal_minor(a, k + 1)?;
        if m_k1.is_zero() {
            return Err(Error::DivisionByZero(k + 1));
        }
        g[(k + 1, k + 1)] = m_k / m_k1;
        return Ok(g);
    }
    let m_k = principal_minor(a, k)?;
    if m_k.is_zero() {
        return Err(Error::DivisionByZero(k));
    }
    for i in 1..=m {
        if i == k + 1 {
            continue;
        }
        g[(i, k + 1)] = if i <= k {
            let rows = IndexList::leading(k);
            let cols = IndexList::leading_with(k, Some(i), Some(k + 1))?;
            let value = minor(a, &rows, &cols)? / &m_k;
            // sign (-1)^(k+i+1)
            if (k + i) % 2 == 1 {
                value
            } else {
                -value
            }
        } else {
            let rows = IndexList::leading_with(k, None, Some(i))?;
            let cols = IndexList::leading(k + 1);
            -(minor(a, &rows, &cols)? / &m_k)
        };
    }
    Ok(g)
}

/// Check the product identity at pivot index k: the leading principal
/// minor of order k+1 equals the product of the pivots read from the
/// trace states A^(0), A^(2), ..., A^(2k).
pub fn lemma_product_check(a: &Matrix, k: usize, t: &Trace) -> Result<bool> {
    Ok(lemma_product_values(a, k, t)?.2)
}

fn lemma_product_values(a: &Matrix, k: usize, t: &Trace) -> Result<(Rational, Rational, bool)> {
    let expected = principal_minor(a, k + 1)?;
    let mut product = Rational::one();
    for s in 0..=k {
        product = product * t.pivot(s)?;
    }
    let matches = product == expected;
    Ok((expected, product, matches))
}

/// Eliminate `a` and compare every recorded value against its
/// closed-form prediction.
pub fn verify_trace(a: &Matrix) -> Result<VerifyReport> {
    verify_trace_with(a, FormulaFault::None)
}

pub fn verify_trace_with(a: &Matrix, fault: FormulaFault) -> Result<VerifyReport> {
    let t = eliminate(a)?;
    verify_eliminated(&t, fault)
}

/// Compare an already-computed trace against the closed-form
/// predictions, entry by entry:
/// states A^(2k) for k < rank, operation matrices G_1..G_{2r}, pivots,
/// and the minor-product identity at every pivot index.
pub fn verify_eliminated(t: &Trace, fault: FormulaFault) -> Result<VerifyReport> {
    let a = &t.input;
    let (m, n, r) = (a.rows(), a.cols(), t.rank);

    let mut comparisons = Vec::with_capacity(r * m * n);
    for k in 0..r {
        let engine = t.state(2 * k)?;
        let predicted = intermediate_formula_with(a, k, fault)?;
        for i in 1..=m {
            for j in 1..=n {
                let engine_value = engine[(i, j)].clone();
                let formula_value = predicted[(i, j)].clone();
                let matches = engine_value == formula_value;
                comparisons.push(Comparison {
                    k,
                    i,
                    j,
                    engine_value,
                    formula_value,
                    matches,
                });
            }
        }
    }

    let mut op_comparisons = Vec::with_capacity(2 * r * m * m);
    for q in 1..=2 * r {
        let engine = &t.steps[q - 1].op_matrix;
        let predicted = opmatrix_formula(a, q)?;
        for i in 1..=m {
            for j in 1..=m {
                let engine_value = engine[(i, j)].clone();
                let formula_value = predicted[(i, j)].clone();
                let matches = engine_value == formula_value;
                op_comparisons.push(Comparison {
                    k: q,
                    i,
                    j,
                    engine_value,
                    formula_value,
                    matches,
                });
            }
        }
    }

    let mut pivot_comparisons = Vec::with_capacity(r);
    for k in 0..r {
        let engine_value = t.pivot(k)?.clone();
        let formula_value = pivot_formula_with(a, k, fault)?;
        let matches = engine_value == formula_value;
        pivot_comparisons.push(PivotComparison {
            k,
            engine_value,
            formula_value,
            matches,
        });
    }

    let mut lemma_checks = Vec::with_capacity(r);
    for k in 0..r {
        let (minor_value, product_value, matches) = lemma_product_values(a, k, t)?;
        lemma_checks.push(LemmaCheck {
            k,
            minor_value,
            product_value,
            matches,
        });
    }

    let all_match = comparisons.iter().all(|c| c.matches)
        && op_comparisons.iter().all(|c| c.matches)
        && pivot_comparisons.iter().all(|c| c.matches)
        && lemma_checks.iter().all(|c| c.matches);

    Ok(VerifyReport {
        input: a.clone(),
        rank: r,
        comparisons,
        op_comparisons,
        pivot_comparisons,
        lemma_checks,
        all_match,
    })
}

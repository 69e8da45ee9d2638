//! Dense matrices over exact rationals.
//!
//! All public indexing is 1-based: entry `(1, 1)` is the top-left corner,
//! matching the usual linear-algebra convention. Dimensions are fixed at
//! construction and every matrix has at least one row and one column.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>, // row-major
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        assert!(
            rows >= 1 && cols >= 1,
            "matrix dimensions must be at least 1x1"
        );
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 1..=n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Matrix> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRows {
                    row: idx + 1,
                    got: row.len(),
                    expected: cols,
                });
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Matrix {
        let converted = rows
            .iter()
            .map(|r| r.iter().copied().map(Rational::from_int).collect())
            .collect();
        Matrix::from_rows(converted).expect("rectangular non-empty literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// True when rows `from..=rows()` contain only zeros.
    pub fn rows_zero_from(&self, from: usize) -> bool {
        (from..=self.rows).all(|i| (1..=self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        assert!(a >= 1 && a <= self.rows && b >= 1 && b <= self.rows);
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap((a - 1) * self.cols + j, (b - 1) * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        assert!(a >= 1 && a <= self.cols && b >= 1 && b <= self.cols);
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data
                .swap(i * self.cols + (a - 1), i * self.cols + (b - 1));
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact matrix product. Panics if the inner dimensions disagree.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "inner dimensions must agree ({}x{} times {}x{})",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 1..=self.rows {
            for j in 1..=rhs.cols {
                let mut acc = Rational::zero();
                for t in 1..=self.cols {
                    let a = &self[(i, t)];
                    if !a.is_zero() {
                        acc += a * &rhs[(t, j)];
                    }
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rational> {
        self.data.iter()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    /// 1-based `(row, col)` access.
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "entry ({i}, {j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "entry ({i}, {j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        &mut self.data[(i - 1) * self.cols + (j - 1)]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                if j > 1 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A strictly increasing list of 1-based indices, used to address
/// submatrices and minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexList(Vec<usize>);

impl IndexList {
    pub fn new(indices: Vec<usize>) -> Result<IndexList> {
        if indices.is_empty() || indices[0] == 0 || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        Ok(IndexList(indices))
    }

    /// The leading indices `1, 2, ..., k` (`k >= 1`).
    pub fn leading(k: usize) -> IndexList {
        assert!(k >= 1, "leading index list needs k >= 1");
        IndexList((1..=k).collect())
    }

    /// Leading indices `1..=k` with `omit` removed and `extra` appended.
    /// Requires `omit <= k < extra` so the result stays increasing.
    pub fn leading_with(k: usize, omit: Option<usize>, extra: Option<usize>) -> Result<IndexList> {
        let mut v: Vec<usize> = (1..=k).filter(|&i| Some(i) != omit).collect();
        if let Some(e) = extra {
            v.push(e);
        }
        IndexList::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        *self.0.last().expect("index lists are non-empty")
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

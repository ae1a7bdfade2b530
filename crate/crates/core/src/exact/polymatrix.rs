use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{RatMatrix, RatPoly, Rational};
use crate::{Error, Result};

/// Matrix whose entries are polynomials in one indeterminate.
///
/// Used for the scroll systems, where the entries depend on the degree `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RatPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<RatPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[RatPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn set(&mut self, r: usize, c: usize, value: RatPoly) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn eval(&self, x: &Rational) -> RatMatrix {
        RatMatrix::new(self.rows, self.cols, self.entries.iter().map(|p| p.eval(x)).collect()).expect("shape preserved")
    }

    /// Replaces column `col` by `v`; used for Cramer's rule.
    pub fn with_column(&self, col: usize, v: &[RatPoly]) -> Result<Self> {
        if v.len() != self.rows || col >= self.cols {
            return Err(Error::DimensionMismatch("column replacement".into()));
        }
        let mut out = self.clone();
        for (r, p) in v.iter().enumerate() {
            out.set(r, col, p.clone());
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Fraction-free (Bareiss) elimination. Returns the echelon matrix, the
    /// pivot columns, and the number of row swaps. Every division performed
    /// is exact in the polynomial ring.
    fn bareiss(&self) -> (Self, Vec<usize>, usize) {
        let mut a = self.clone();
        let mut prev = RatPoly::one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                a.swap_rows(p, row);
                swaps += 1;
            }
            let pivot = a.get(row, col).clone();
            for r in row + 1..a.rows {
                let lead = a.get(r, col).clone();
                for c in col..a.cols {
                    let num = &(&pivot * a.get(r, c)) - &(&lead * a.get(row, c));
                    let q = num.exact_div(&prev).expect("Bareiss division is exact");
                    a.set(r, c, q);
                }
                for c in 0..col {
                    a.set(r, c, RatPoly::zero());
                }
            }
            prev = pivot;
            pivots.push(col);
            row += 1;
        }
        (a, pivots, swaps)
    }

    /// Determinant as a polynomial.
    pub fn determinant(&self) -> Result<RatPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows == 0 {
            return Ok(RatPoly::one());
        }
        let (red, pivots, swaps) = self.bareiss();
        if pivots.len() < self.rows {
            return Ok(RatPoly::zero());
        }
        let det = red.get(self.rows - 1, self.cols - 1).clone();
        Ok(if swaps % 2 == 1 { -det } else { det })
    }

    /// Rank over the field of rational functions, i.e. the rank at a
    /// generic value of the indeterminate.
    pub fn generic_rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Solves `self * x = b` over `Q(x)` by Cramer's rule and returns the
    /// solution when every component is a polynomial. Requires a square
    /// matrix with non-zero determinant.
    pub fn solve_polynomial(&self, b: &[RatPoly]) -> Result<Vec<RatPoly>> {
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(Error::InvalidInput("singular polynomial matrix".into()));
        }
        let mut out = vec![RatPoly::zero(); self.cols];
        for (c, slot) in out.iter_mut().enumerate() {
            let num = self.with_column(c, b)?.determinant()?;
            *slot = num.exact_div(&det).ok_or_else(|| Error::InvalidInput(format!("component {c} of the solution is not polynomial")))?;
        }
        Ok(out)
    }
}

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{fmt_rational, Rational};
use crate::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Outcome of solving `M x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSpace {
    Unique(Vec<Rational>),
    /// Affine family `particular + span(nullspace)`; the basis vectors are
    /// indexed by the free columns of the reduced echelon form.
    Family {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
        free_columns: Vec<usize>,
    },
    Inconsistent,
}

impl SolutionSpace {
    pub fn is_consistent(&self) -> bool {
        !matches!(self, SolutionSpace::Inconsistent)
    }

    pub fn free_parameters(&self) -> usize {
        match self {
            SolutionSpace::Family { nullspace, .. } => nullspace.len(),
            _ => 0,
        }
    }
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a.get(k, k).clone();
            det *= &pivot;
            for r in k + 1..n {
                let f = a.get(r, k) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a.get(r, c) - &f * a.get(k, c);
                    a.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = Rational::one() / a.get(row, col);
            for c in col..a.cols {
                let v = a.get(row, c) * &inv;
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r == row || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in col..a.cols {
                    let v = a.get(r, c) - &f * a.get(row, c);
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `self * x = b` by exact Gauss-Jordan elimination.
    pub fn solve(&self, b: &[Rational]) -> Result<SolutionSpace> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(SolutionSpace::Inconsistent);
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            particular[pc] = red.get(r, self.cols).clone();
        }
        let free_columns: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free_columns.is_empty() {
            return Ok(SolutionSpace::Unique(particular));
        }
        let nullspace = free_columns
            .iter()
            .map(|&fc| {
                let mut v = vec![Rational::zero(); self.cols];
                v[fc] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -red.get(r, fc).clone();
                }
                v
            })
            .collect();
        Ok(SolutionSpace::Family { particular, nullspace, free_columns })
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<_> = self.row(r).iter().map(fmt_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn square(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(-6i64..6, n * n).prop_map(move |v| RatMatrix::new(n, n, v.into_iter().map(int).collect()).unwrap())
    }

    #[test]
    fn identity_solve() {
        let id = RatMatrix::identity(2);
        assert_eq!(id.solve(&[int(3), int(5)]).unwrap(), SolutionSpace::Unique(vec![int(3), int(5)]));
    }

    #[test]
    fn one_by_one_determinant() {
        assert_eq!(m(&[&[7]]).determinant().unwrap(), int(7));
    }

    #[test]
    fn errors() {
        assert!(matches!(m(&[&[1, 2]]).determinant(), Err(Error::NotSquare { .. })));
        assert!(matches!(RatMatrix::identity(2).solve(&[int(1)]), Err(Error::DimensionMismatch(_))));
        assert!(RatMatrix::new(2, 2, vec![int(1)]).is_err());
    }

    #[test]
    fn parametric_and_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        match a.solve(&[int(1), int(2)]).unwrap() {
            SolutionSpace::Family { particular, nullspace, free_columns } => {
                assert_eq!(particular, vec![int(1), int(0)]);
                assert_eq!(nullspace, vec![vec![int(-1), int(1)]]);
                assert_eq!(free_columns, vec![1]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(a.solve(&[int(1), int(3)]).unwrap(), SolutionSpace::Inconsistent);
    }

    #[test]
    fn fractional_solution() {
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(a.solve(&[int(1), int(1)]).unwrap(), SolutionSpace::Unique(vec![rat(1, 2), rat(1, 3)]));
    }

    proptest! {
        #[test]
        fn solve_round_trip(a in square(3), b in proptest::collection::vec(-9i64..9, 3)) {
            prop_assume!(!a.determinant().unwrap().is_zero());
            let b: Vec<_> = b.into_iter().map(int).collect();
            match a.solve(&b).unwrap() {
                SolutionSpace::Unique(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
                other => prop_assert!(false, "{:?}", other),
            }
        }

        #[test]
        fn determinant_is_multiplicative(a in square(3), b in square(3)) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        }

        #[test]
        fn family_members_solve(a in proptest::collection::vec(-3i64..3, 12), t in -5i64..5) {
            let a = RatMatrix::new(3, 4, a.into_iter().map(int).collect()).unwrap();
            let x0: Vec<_> = (1..=4).map(int).collect();
            let b = a.mul_vec(&x0).unwrap();
            if let SolutionSpace::Family { particular, nullspace, .. } = a.solve(&b).unwrap() {
                for v in &nullspace {
                    let x: Vec<_> = particular.iter().zip(v).map(|(p, n)| p + int(t) * n).collect();
                    prop_assert_eq!(a.mul_vec(&x).unwrap(), b.clone());
                }
            }
        }
    }
}

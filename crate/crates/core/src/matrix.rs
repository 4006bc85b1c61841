//! Dense matrices over the rationals with exact row reduction.
//!
//! Row reduction is plain Gauss-Jordan with exact arithmetic. The reduced
//! row echelon form is canonical for the row space, which is what makes
//! subspace equality a structural comparison downstream.

use num_traits::{One, Zero};

use crate::capacity::ensure_capacity;
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        ensure_capacity(cols)?;
        Ok(Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n).expect("identity within cap");
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        ensure_capacity(cols)?;
        for r in &rows {
            if r.len() != cols {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "row length {} differs from {}",
                    r.len(),
                    cols
                )));
            }
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from i64 entries; convenient for fixtures and small inputs.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rational::rat_int(x)).collect())
                .collect(),
        )
        .expect("literal matrix within cap")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows).expect("transpose within cap");
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch("matrix addition shape".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&crate::rational::rat_int(-1))
    }

    /// Row vector times matrix: returns v * self.
    pub fn act_on_row(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "row vector length {} vs {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out[j] += vi * e;
                }
            }
        }
        Ok(out)
    }

    /// Canonical reduced row echelon form plus pivot columns.
    ///
    /// The output has the same shape as the input, zero rows at the bottom,
    /// each pivot is 1 and is the only nonzero entry in its column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Locate a pivot in column c at or below row r.
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = {
                let lead = m.get(r, c).clone();
                Rational::one() / lead
            };
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    m.axpy_row(i, r, &-f, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one kernel vector per row.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            rows.push(v);
        }
        Matrix::from_rows(rows).unwrap_or_else(|_| {
            Matrix { rows: 0, cols: self.cols, data: Vec::new() }
        })
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        // Gauss-Jordan on [self | I].
        let mut aug = Matrix::zero(n, 2 * n)?;
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(AlgebraError::SingularMatrix);
        }
        let mut inv = Matrix::zero(n, n)?;
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if *self.get(i, j) != -self.get(j, i).clone() {
                    return false;
                }
            }
        }
        true
    }

    /// Solves self * x = b for the column vector x; None if inconsistent,
    /// the unique solution when it exists, otherwise one solution with all
    /// free coordinates set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1).ok()?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Rational) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] *= c;
            }
        }
    }

    /// Adds c times row src to row dst, starting at column `from`.
    fn axpy_row(&mut self, dst: usize, src: usize, c: &Rational, from: usize) {
        for j in from..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] += s * c;
            }
        }
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", crate::rational::format_rational(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn rref_of_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn kernel_of_difference_functional() {
        let m = Matrix::from_i64(&[&[1, -1, 0]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        // every kernel row annihilates the functional
        for i in 0..k.rows() {
            let v = k.row(i);
            assert_eq!(v[0].clone() - v[1].clone(), rat_int(0));
        }
        // (1,1,0) and (0,0,1) span the kernel
        let span = Matrix::from_rows(vec![
            k.row_vec(0),
            k.row_vec(1),
            vec![rat_int(1), rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ])
        .unwrap();
        assert_eq!(span.rank(), 2);
    }

    #[test]
    fn inverse_of_quantum_pairing() {
        let m = Matrix::from_i64(&[&[0, 1], &[-2, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(*inv.get(0, 0), rat_int(0));
        assert_eq!(*inv.get(0, 1), rat(-1, 2));
        assert_eq!(*inv.get(1, 0), rat_int(1));
        assert_eq!(*inv.get(1, 1), rat_int(0));
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(AlgebraError::SingularMatrix));
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
        let s = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn kernel_rows_annihilated() {
        let m = Matrix::from_i64(&[&[1, 2, 3, 4], &[0, 1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let prod = m.mul(&Matrix::from_rows(vec![k.row_vec(i)]).unwrap().transpose()).unwrap();
            assert!(prod.is_zero());
        }
    }
}

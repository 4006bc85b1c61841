//! Linear subspaces of a fixed coordinate space.
//!
//! A subspace is stored as its reduced row echelon basis, which is unique
//! for the row space. Equality of subspaces is therefore plain structural
//! equality, and every module downstream relies on that canonicity.

use num_traits::Zero;

use crate::capacity::ensure_capacity;
use crate::echelon::{EchelonSet, SparseVec};
use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Canonical RREF basis, full row rank, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Result<Self> {
        ensure_capacity(ambient)?;
        Ok(Subspace { ambient, basis: Matrix::zero(0, ambient)?, pivots: Vec::new() })
    }

    pub fn full(ambient: usize) -> Result<Self> {
        ensure_capacity(ambient)?;
        Ok(Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        })
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        ensure_capacity(ambient)?;
        for r in &rows {
            if r.len() != ambient {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "spanning row length {} in ambient dimension {}",
                    r.len(),
                    ambient
                )));
            }
        }
        let (rref, pivots) = Matrix::from_rows(rows)?.rref();
        let basis =
            Matrix::from_rows((0..pivots.len()).map(|i| rref.row_vec(i)).collect())?;
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        Subspace::from_rows(m.cols(), (0..m.rows()).map(|i| m.row_vec(i)).collect())
    }

    pub fn from_echelon(ambient: usize, e: &EchelonSet) -> Result<Self> {
        ensure_capacity(ambient)?;
        let basis = e.to_matrix(ambient);
        let pivots = e.pivots().collect();
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains_vec(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        self.reduce_vec(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.dim()).all(|i| self.contains_vec(other.basis_row(i)))
    }

    /// Remainder of v after eliminating all pivot coordinates.
    pub fn reduce_vec(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = out[p].clone();
                for j in 0..self.ambient {
                    let b = self.basis.get(i, j);
                    if !b.is_zero() {
                        out[j] -= &c * b;
                    }
                }
            }
        }
        out
    }

    /// Coordinates of v in the RREF basis, when v lies in the subspace.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(AlgebraError::DimensionMismatch("sum of subspaces".into()));
        }
        let mut rows: Vec<Vec<Rational>> = (0..self.dim()).map(|i| self.basis.row_vec(i)).collect();
        rows.extend((0..other.dim()).map(|i| other.basis.row_vec(i)));
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection by the block row reduction trick: reduce [A|A; B|0],
    /// rows with vanishing left half carry the intersection on the right.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(AlgebraError::DimensionMismatch(format!(
                "intersection of subspaces in ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        let d = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for i in 0..self.dim() {
            let mut row = self.basis.row_vec(i);
            row.extend(self.basis.row_vec(i));
            rows.push(row);
        }
        for i in 0..other.dim() {
            let mut row = other.basis.row_vec(i);
            row.extend(vec![Rational::zero(); d]);
            rows.push(row);
        }
        let mut ech = EchelonSet::new();
        for r in rows {
            ech.insert(SparseVec::from_dense(&r));
        }
        let inter_rows: Vec<Vec<Rational>> = ech
            .canonical_rows()
            .into_iter()
            .filter(|r| r.lead().map_or(false, |(i, _)| i >= d))
            .map(|r| r.map_indices(|i| i - d).to_dense(d))
            .collect();
        Subspace::from_rows(d, inter_rows)
    }

    /// All vectors pairing to zero with this subspace under the coordinate
    /// dot product (word basis against dual word basis).
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient).expect("ambient already admitted");
        }
        let k = self.basis.kernel();
        Subspace::from_matrix(&k).expect("complement in same ambient")
    }
}

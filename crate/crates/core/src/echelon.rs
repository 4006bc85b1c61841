//! Incremental row echelon accumulator over sparse rows.
//!
//! This is the workhorse behind graded ideal components, quotient normal
//! forms, and the bounded flatness filtration. Rows are kept sparse and
//! monic, indexed by pivot column; a row's support never precedes its
//! pivot, so full reduction is a single left-to-right sweep.
//!
//! The pivot set of a subspace is intrinsic (the set of leading coordinates
//! of its nonzero elements), so pivot counts do not depend on insertion
//! order even though the intermediate rows do.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    /// Sorted by coordinate; coefficients are nonzero.
    pub entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn singleton(idx: usize, c: Rational) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(idx, c)] }
        }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, idx: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&idx, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in self.entries.iter_mut() {
            *v *= c;
        }
    }

    /// self += c * other, merging sorted supports.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) => {
                    if ia < ib {
                        out.push(a.next().unwrap().clone());
                    } else if ib < ia {
                        let (i, v) = b.next().unwrap();
                        out.push((*i, v * c));
                    } else {
                        let (i, va) = a.next().unwrap();
                        let (_, vb) = b.next().unwrap();
                        let sum = va + vb * c;
                        if !sum.is_zero() {
                            out.push((*i, sum));
                        }
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, v * c));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    /// Applies an index map, keeping sortedness under a strictly monotone map
    /// or re-sorting otherwise.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        let mut entries: Vec<(usize, Rational)> =
            self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseVec { entries }
    }
}

#[derive(Debug, Clone, Default)]
pub struct EchelonSet {
    /// pivot column -> monic row whose support starts at that pivot.
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonSet {
    pub fn new() -> Self {
        EchelonSet { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec> {
        self.rows.get(&col)
    }

    /// Reduces against existing rows; if a nonzero remainder survives it is
    /// normalized and adopted. Returns true when the rank grew.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        loop {
            let Some((lead, coeff)) = row.lead().map(|(i, c)| (i, c.clone())) else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(r) => {
                    let r = r.clone();
                    row.axpy(&-coeff, &r);
                }
                None => {
                    let inv = Rational::one() / coeff;
                    row.scale(&inv);
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Canonical remainder modulo the row space: the unique representative
    /// supported off the pivot set. Elimination introduces only later
    /// coordinates, so the sweep terminates.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let hit = row
                .entries
                .iter()
                .find(|(i, _)| self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match hit {
                Some((i, c)) => {
                    let r = self.rows.get(&i).unwrap().clone();
                    row.axpy(&-c, &r);
                }
                None => return row,
            }
        }
    }

    pub fn contains(&self, row: SparseVec) -> bool {
        self.reduce(row).is_zero()
    }

    /// Inter-reduced rows in pivot order: the canonical reduced echelon
    /// basis of the accumulated span.
    pub fn canonical_rows(&self) -> Vec<SparseVec> {
        self.rows
            .iter()
            .map(|(pivot, row)| {
                let mut tail = row.clone();
                tail.entries.retain(|(i, _)| i != pivot);
                let mut reduced = self.reduce(tail);
                reduced.entries.insert(0, (*pivot, Rational::one()));
                reduced
            })
            .collect()
    }

    pub fn to_matrix(&self, ambient: usize) -> Matrix {
        Matrix::from_rows(self.canonical_rows().iter().map(|r| r.to_dense(ambient)).collect())
            .expect("echelon ambient within cap")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn sv(dense: &[i64]) -> SparseVec {
        SparseVec::from_dense(&dense.iter().map(|&x| rat_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn insert_tracks_rank() {
        let mut e = EchelonSet::new();
        assert!(e.insert(sv(&[2, 4, 0])));
        assert!(!e.insert(sv(&[1, 2, 0])));
        assert!(e.insert(sv(&[0, 0, 5])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn reduce_gives_canonical_remainder() {
        let mut e = EchelonSet::new();
        e.insert(sv(&[1, 1, 0, 0]));
        e.insert(sv(&[0, 0, 1, -1]));
        let r = e.reduce(sv(&[1, 0, 1, 0]));
        // remainder must avoid pivot columns 0 and 2
        assert!(r.coeff(0).is_none() && r.coeff(2).is_none());
        assert_eq!(r, sv(&[0, -1, 0, 1]));
        assert!(e.contains(sv(&[2, 2, -3, 3])));
        assert!(!e.contains(sv(&[1, 0, 0, 0])));
    }

    #[test]
    fn canonical_rows_match_dense_rref() {
        let rows = vec![sv(&[2, 4, 6, 1]), sv(&[1, 2, 3, 0]), sv(&[0, 1, 1, 1])];
        let mut e = EchelonSet::new();
        for r in rows.clone() {
            e.insert(r);
        }
        let dense = Matrix::from_rows(rows.iter().map(|r| r.to_dense(4)).collect()).unwrap();
        let (rref, pivots) = dense.rref();
        let m = e.to_matrix(4);
        assert_eq!(m.rows(), pivots.len());
        for i in 0..m.rows() {
            assert_eq!(m.row(i), rref.row(i));
        }
    }

    #[test]
    fn sparse_axpy_cancels() {
        let mut a = sv(&[1, 2, 0, 3]);
        a.axpy(&rat_int(-1), &sv(&[1, 2, 0, 0]));
        assert_eq!(a, sv(&[0, 0, 0, 3]));
    }
}

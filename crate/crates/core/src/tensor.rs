//! Words and tensor elements.
//!
//! The basis of the degree-m component of the free algebra on n generators
//! is the set of length-m words over {0, .., n-1}. Words are ordered
//! lexicographically with generator 0 smallest; flattening a word to its
//! positional index is compatible with that order, and every pivot choice
//! and normalization in the crate derives from this single order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::capacity::checked_power;
use crate::echelon::SparseVec;
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

pub type Word = Vec<usize>;

/// Positional index of a word among all words of its length:
/// the bijection onto [0, n^m) that respects lexicographic order.
pub fn word_index(n: usize, word: &[usize]) -> usize {
    let mut idx = 0;
    for &a in word {
        debug_assert!(a < n, "letter out of range");
        idx = idx * n + a;
    }
    idx
}

/// Inverse of `word_index` for length-m words.
pub fn unflatten(n: usize, m: usize, mut idx: usize) -> Word {
    let mut w = vec![0; m];
    for slot in w.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    w
}

/// A homogeneous element of the degree-m word space on n generators.
/// Only nonzero coefficients are stored; iteration order is word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Word, Rational>,
}

impl TensorElement {
    pub fn zero(n: usize, degree: usize) -> Self {
        TensorElement { n, degree, coeffs: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut t = TensorElement::zero(n, 0);
        t.add_term(vec![], c);
        t
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut t = TensorElement::zero(n, 1);
        t.add_term(vec![i], Rational::one());
        t
    }

    pub fn from_terms(n: usize, degree: usize, terms: &[(Vec<usize>, Rational)]) -> Result<Self> {
        let mut t = TensorElement::zero(n, degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "word of length {} in degree-{} element",
                    w.len(),
                    degree
                )));
            }
            if w.iter().any(|&a| a >= n) {
                return Err(AlgebraError::Parse(format!("letter out of range in word {w:?}")));
            }
            t.add_term(w.clone(), c.clone());
        }
        Ok(t)
    }

    /// Convenience for integer-coefficient fixtures.
    pub fn from_words_i64(n: usize, degree: usize, terms: &[(&[usize], i64)]) -> Self {
        let owned: Vec<(Vec<usize>, Rational)> = terms
            .iter()
            .map(|(w, c)| (w.to_vec(), crate::rational::rat_int(*c)))
            .collect();
        TensorElement::from_terms(n, degree, &owned).expect("fixture element")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, word: &[usize]) -> Rational {
        self.coeffs.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, word: Word, c: Rational) {
        debug_assert_eq!(word.len(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        debug_assert_eq!((self.n, self.degree), (other.n, other.degree));
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.n, self.degree);
        }
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        debug_assert_eq!(self.n, other.n);
        let mut out = TensorElement::zero(self.n, self.degree + other.degree);
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Left contraction by the i-th dual generator: the coefficient of a
    /// word u in the result is the coefficient of i.u in self.
    pub fn contract_left(&self, i: usize) -> TensorElement {
        assert!(self.degree >= 1, "contracting a scalar");
        let mut out = TensorElement::zero(self.n, self.degree - 1);
        for (w, c) in self.terms() {
            if w[0] == i {
                out.add_term(w[1..].to_vec(), c.clone());
            }
        }
        out
    }

    /// Right contraction by the i-th dual generator: the coefficient of a
    /// word u in the result is the coefficient of u.i in self.
    pub fn contract_right(&self, i: usize) -> TensorElement {
        assert!(self.degree >= 1, "contracting a scalar");
        let mut out = TensorElement::zero(self.n, self.degree - 1);
        for (w, c) in self.terms() {
            if w[self.degree - 1] == i {
                out.add_term(w[..self.degree - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// Lexicographically first word with nonzero coefficient.
    pub fn leading_word(&self) -> Option<&Word> {
        self.coeffs.keys().next()
    }

    /// Scales so the leading coefficient is 1.
    pub fn normalize_leading(&self) -> TensorElement {
        match self.coeffs.values().next() {
            Some(c) => self.scale(&(Rational::one() / c)),
            None => self.clone(),
        }
    }

    pub fn dense_len(&self) -> Result<usize> {
        checked_power(self.n, self.degree)
    }

    pub fn to_dense(&self) -> Result<Vec<Rational>> {
        let len = self.dense_len()?;
        let mut v = vec![Rational::zero(); len];
        for (w, c) in self.terms() {
            v[word_index(self.n, w)] = c.clone();
        }
        Ok(v)
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec {
            entries: self
                .terms()
                .map(|(w, c)| (word_index(self.n, w), c.clone()))
                .collect(),
        }
    }

    pub fn from_dense(n: usize, degree: usize, v: &[Rational]) -> Result<Self> {
        let len = checked_power(n, degree)?;
        if v.len() != len {
            return Err(AlgebraError::DimensionMismatch(format!(
                "dense vector length {} for degree-{} word space of dimension {}",
                v.len(),
                degree,
                len
            )));
        }
        let mut t = TensorElement::zero(n, degree);
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.add_term(unflatten(n, degree, idx), c.clone());
            }
        }
        Ok(t)
    }

    pub fn from_sparse(n: usize, degree: usize, v: &SparseVec) -> Self {
        let mut t = TensorElement::zero(n, degree);
        for (idx, c) in &v.entries {
            t.add_term(unflatten(n, degree, *idx), c.clone());
        }
        t
    }

    /// Renders with generator names, e.g. "x.y - y.x".
    pub fn format_with_names(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms().enumerate() {
            let word_str = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&a| names[a].as_str()).collect::<Vec<_>>().join(".")
            };
            let coeff_str = crate::rational::format_rational(&c.clone());
            if k == 0 {
                if coeff_str == "1" && !w.is_empty() {
                    out.push_str(&word_str);
                } else if coeff_str == "-1" && !w.is_empty() {
                    out.push_str(&format!("-{word_str}"));
                } else if w.is_empty() {
                    out.push_str(&coeff_str);
                } else {
                    out.push_str(&format!("{coeff_str} {word_str}"));
                }
            } else {
                let (sign, mag) = if coeff_str.starts_with('-') {
                    ("-", coeff_str.trim_start_matches('-').to_string())
                } else {
                    ("+", coeff_str)
                };
                if w.is_empty() {
                    out.push_str(&format!(" {sign} {mag}"));
                } else if mag == "1" {
                    out.push_str(&format!(" {sign} {word_str}"));
                } else {
                    out.push_str(&format!(" {sign} {mag} {word_str}"));
                }
            }
        }
        out
    }
}

/// An inhomogeneous element of the free algebra, graded by word length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPoly {
    n: usize,
    /// degree -> nonzero homogeneous part
    parts: BTreeMap<usize, TensorElement>,
}

impl TensorPoly {
    pub fn zero(n: usize) -> Self {
        TensorPoly { n, parts: BTreeMap::new() }
    }

    pub fn from_part(t: TensorElement) -> Self {
        let mut p = TensorPoly::zero(t.n());
        p.add_part(t);
        p
    }

    pub fn one(n: usize) -> Self {
        TensorPoly::from_part(TensorElement::scalar(n, Rational::one()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_part(&mut self, t: TensorElement) {
        if t.is_zero() {
            return;
        }
        let d = t.degree();
        let merged = match self.parts.remove(&d) {
            Some(old) => old.add(&t),
            None => t,
        };
        if !merged.is_zero() {
            self.parts.insert(d, merged);
        }
    }

    pub fn part(&self, degree: usize) -> TensorElement {
        self.parts.get(&degree).cloned().unwrap_or_else(|| TensorElement::zero(self.n, degree))
    }

    pub fn parts(&self) -> impl Iterator<Item = (&usize, &TensorElement)> {
        self.parts.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.parts.keys().next_back().copied()
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (_, t) in other.parts() {
            out.add_part(t.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> TensorPoly {
        let mut out = TensorPoly::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (_, t) in self.parts() {
            out.add_part(t.scale(c));
        }
        out
    }

    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.n);
        for (_, a) in self.parts() {
            for (_, b) in other.parts() {
                out.add_part(a.tensor(b));
            }
        }
        out
    }

    pub fn contract_left(&self, i: usize) -> TensorPoly {
        let mut out = TensorPoly::zero(self.n);
        for (&d, t) in self.parts() {
            if d >= 1 {
                out.add_part(t.contract_left(i));
            }
        }
        out
    }

    pub fn contract_right(&self, i: usize) -> TensorPoly {
        let mut out = TensorPoly::zero(self.n);
        for (&d, t) in self.parts() {
            if d >= 1 {
                out.add_part(t.contract_right(i));
            }
        }
        out
    }

    pub fn format_with_names(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut pieces = Vec::new();
        for (_, t) in self.parts.iter().rev() {
            pieces.push(t.format_with_names(names));
        }
        pieces.join(" + ").replace("+ -", "- ")
    }
}

/// Flat coordinates for the filtration space: all word degrees up to a
/// bound, with higher degrees first. With this layout the leading
/// coordinate of an element sits in its top nonzero degree, so pivot
/// positions of a span classify elements by filtration level.
#[derive(Debug, Clone)]
pub struct FiltrationLayout {
    n: usize,
    max_degree: usize,
    /// offsets[d] = start of the degree-d block
    offsets: Vec<usize>,
    total: usize,
}

impl FiltrationLayout {
    pub fn new(n: usize, max_degree: usize) -> Result<Self> {
        let mut sizes = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            sizes.push(checked_power(n, d)?);
        }
        let total: usize = sizes.iter().sum();
        crate::capacity::ensure_capacity(total)?;
        let mut offsets = vec![0; max_degree + 1];
        let mut acc = 0;
        for d in (0..=max_degree).rev() {
            offsets[d] = acc;
            acc += sizes[d];
        }
        Ok(FiltrationLayout { n, max_degree, offsets, total })
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn flatten(&self, p: &TensorPoly) -> Result<SparseVec> {
        let mut entries = Vec::new();
        for (&d, t) in p.parts() {
            if d > self.max_degree {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "degree {} part exceeds filtration bound {}",
                    d, self.max_degree
                )));
            }
            for (w, c) in t.terms() {
                entries.push((self.offsets[d] + word_index(self.n, w), c.clone()));
            }
        }
        entries.sort_by_key(|(i, _)| *i);
        Ok(SparseVec { entries })
    }

    /// Degree of the block containing a flat coordinate.
    pub fn degree_of(&self, col: usize) -> usize {
        // offsets are descending in d; linear scan is fine for small bounds
        for d in (0..=self.max_degree).rev() {
            let start = self.offsets[d];
            let len = checked_power(self.n, d).expect("validated in constructor");
            if col >= start && col < start + len {
                return d;
            }
        }
        unreachable!("column outside layout")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn word_index_is_positional() {
        assert_eq!(word_index(3, &[1, 0, 2]), 11);
        assert_eq!(word_index(2, &[]), 0);
        assert_eq!(word_index(4, &[3, 3]), 15);
    }

    #[test]
    fn word_index_round_trip() {
        for n in 1..=4usize {
            for m in 0..=3usize {
                let count = n.pow(m as u32);
                for idx in 0..count {
                    let w = unflatten(n, m, idx);
                    assert_eq!(w.len(), m);
                    assert_eq!(word_index(n, &w), idx);
                }
            }
        }
    }

    #[test]
    fn word_index_respects_lex_order() {
        let words: Vec<Word> = (0..27).map(|i| unflatten(3, 3, i)).collect();
        for pair in words.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    fn alternating_volume() -> TensorElement {
        // x.y.z - x.z.y + y.z.x - y.x.z + z.x.y - z.y.x
        TensorElement::from_words_i64(
            3,
            3,
            &[
                (&[0, 1, 2], 1),
                (&[0, 2, 1], -1),
                (&[1, 2, 0], 1),
                (&[1, 0, 2], -1),
                (&[2, 0, 1], 1),
                (&[2, 1, 0], -1),
            ],
        )
    }

    #[test]
    fn contraction_strips_one_letter() {
        let w = alternating_volume();
        let left = w.contract_left(0);
        let expected = TensorElement::from_words_i64(3, 2, &[(&[1, 2], 1), (&[2, 1], -1)]);
        assert_eq!(left, expected);
        let right = w.contract_right(0);
        assert_eq!(right, expected);
    }

    #[test]
    fn contractions_commute() {
        let t = TensorElement::from_words_i64(
            2,
            3,
            &[(&[0, 1, 0], 2), (&[1, 1, 0], -3), (&[0, 0, 1], 5)],
        );
        for i in 0..2 {
            for j in 0..2 {
                let a = t.contract_left(i).contract_right(j);
                let b = t.contract_right(j).contract_left(i);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn dense_round_trip() {
        let t = TensorElement::from_words_i64(2, 2, &[(&[0, 1], 1), (&[1, 0], -1)]);
        let dense = t.to_dense().unwrap();
        assert_eq!(dense.len(), 4);
        assert_eq!(dense[1], rat_int(1));
        assert_eq!(dense[2], rat_int(-1));
        assert_eq!(TensorElement::from_dense(2, 2, &dense).unwrap(), t);
    }

    #[test]
    fn poly_multiplication_distributes_over_degrees() {
        // (x + 1)(y + 2) = x.y + 2x + y + 2
        let n = 2;
        let mut a = TensorPoly::from_part(TensorElement::generator(n, 0));
        a.add_part(TensorElement::scalar(n, rat_int(1)));
        let mut b = TensorPoly::from_part(TensorElement::generator(n, 1));
        b.add_part(TensorElement::scalar(n, rat_int(2)));
        let p = a.mul(&b);
        assert_eq!(p.part(2), TensorElement::from_words_i64(n, 2, &[(&[0, 1], 1)]));
        assert_eq!(
            p.part(1),
            TensorElement::from_words_i64(n, 1, &[(&[0], 2), (&[1], 1)])
        );
        assert_eq!(p.part(0).coeff(&[]), rat_int(2));
    }

    #[test]
    fn filtration_layout_orders_high_degree_first() {
        let layout = FiltrationLayout::new(2, 3).unwrap();
        assert_eq!(layout.total(), 8 + 4 + 2 + 1);
        // a degree-3 element flattens before a degree-0 one
        let top = TensorPoly::from_part(TensorElement::from_words_i64(2, 3, &[(&[0, 0, 0], 1)]));
        let bottom = TensorPoly::one(2);
        let ft = layout.flatten(&top).unwrap();
        let fb = layout.flatten(&bottom).unwrap();
        assert_eq!(ft.lead().unwrap().0, 0);
        assert_eq!(fb.lead().unwrap().0, 14);
        assert_eq!(layout.degree_of(0), 3);
        assert_eq!(layout.degree_of(14), 0);
        assert_eq!(layout.degree_of(8), 2);
    }

    #[test]
    fn leading_normalization() {
        let t = TensorElement::from_words_i64(2, 2, &[(&[1, 0], -2), (&[0, 1], -4)]);
        let norm = t.normalize_leading();
        assert_eq!(norm.coeff(&[0, 1]), rat_int(1));
        assert_eq!(norm.coeff(&[1, 0]), crate::rational::rat(1, 2));
    }
}

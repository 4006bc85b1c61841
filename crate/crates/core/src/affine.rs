//! Affine endomorphisms of the generator space, x |-> xL + c.
//!
//! The matrix acts in column-image convention: the image of the j-th
//! generator reads off column j. Such a map extends to a filtered algebra
//! endomorphism of a deformed algebra exactly when it sends every deformed
//! relation into the span of the deformed relations; that containment is
//! checked, never assumed.

use num_traits::Zero;

use crate::echelon::EchelonSet;
use crate::error::{AlgebraError, Result};
use crate::homog::Deformation;
use crate::matrix::Matrix;
use crate::rational::{format_rational, rat_int, Rational};
use crate::tensor::{FiltrationLayout, TensorElement, TensorPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    linear: Matrix,
    constant: Vec<Rational>,
}

impl AffineMap {
    pub fn new(linear: Matrix, constant: Vec<Rational>) -> Result<Self> {
        if linear.rows() != linear.cols() || linear.rows() != constant.len() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "affine map needs a square matrix and a matching vector, got {}x{} and {}",
                linear.rows(),
                linear.cols(),
                constant.len()
            )));
        }
        Ok(AffineMap { linear, constant })
    }

    pub fn linear_only(linear: Matrix) -> Result<Self> {
        let n = linear.rows();
        AffineMap::new(linear, vec![rat_int(0); n])
    }

    pub fn identity(n: usize) -> Self {
        AffineMap { linear: Matrix::identity(n), constant: vec![rat_int(0); n] }
    }

    pub fn n(&self) -> usize {
        self.constant.len()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn constant(&self) -> &[Rational] {
        &self.constant
    }

    pub fn is_identity(&self) -> bool {
        self.linear == Matrix::identity(self.n())
            && self.constant.iter().all(|c| c.is_zero())
    }

    /// Image of generator j: column j of the matrix plus the constant.
    pub fn apply_generator(&self, j: usize) -> TensorPoly {
        let n = self.n();
        let mut lin = TensorElement::zero(n, 1);
        for i in 0..n {
            let c = self.linear.get(i, j);
            if !c.is_zero() {
                lin.add_term(vec![i], c.clone());
            }
        }
        let mut p = TensorPoly::from_part(lin);
        if !self.constant[j].is_zero() {
            p.add_part(TensorElement::scalar(n, self.constant[j].clone()));
        }
        p
    }

    /// Multiplicative extension to a tensor element.
    pub fn apply_element(&self, t: &TensorElement) -> TensorPoly {
        let n = self.n();
        let mut out = TensorPoly::zero(n);
        for (word, coeff) in t.terms() {
            let mut term = TensorPoly::one(n);
            for &letter in word {
                term = term.mul(&self.apply_generator(letter));
            }
            out = out.add(&term.scale(coeff));
        }
        out
    }

    pub fn apply_poly(&self, p: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.n());
        for (_, part) in p.parts() {
            out = out.add(&self.apply_element(part));
        }
        out
    }

    /// self after other: x |-> self(other(x)).
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        let linear = self.linear.mul(&other.linear)?;
        let mut constant = other.constant.clone();
        for (j, slot) in constant.iter_mut().enumerate() {
            for i in 0..self.n() {
                *slot += self.constant[i].clone() * other.linear.get(i, j).clone();
            }
        }
        AffineMap::new(linear, constant)
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = self.linear.inverse()?;
        // from y = xL + c: x = (y - c)L^{-1}
        let mut constant = vec![rat_int(0); self.n()];
        for (j, slot) in constant.iter_mut().enumerate() {
            for i in 0..self.n() {
                *slot -= self.constant[i].clone() * inv.get(i, j).clone();
            }
        }
        AffineMap::new(inv, constant)
    }

    /// Whether the map sends every deformed relation into the span of the
    /// deformed relations inside the filtration level N.
    pub fn preserves_deformed_relations(&self, u: &Deformation) -> Result<bool> {
        let base = u.base();
        if self.n() != base.n() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "map on {} generators applied to an algebra with {}",
                self.n(),
                base.n()
            )));
        }
        let layout = FiltrationLayout::new(base.n(), base.relation_degree())?;
        let mut span = EchelonSet::new();
        for i in 0..base.relation_count() {
            span.insert(layout.flatten(&u.deformed_relation(i))?);
        }
        for i in 0..base.relation_count() {
            let image = self.apply_poly(&u.deformed_relation(i));
            if !span.contains(layout.flatten(&image)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn format_with_names(&self, names: &[String]) -> String {
        let n = self.n();
        let mut lines = Vec::with_capacity(n);
        for j in 0..n {
            let mut terms = Vec::new();
            for i in 0..n {
                let c = self.linear.get(i, j);
                if c.is_zero() {
                    continue;
                }
                if *c == rat_int(1) {
                    terms.push(names[i].clone());
                } else if *c == rat_int(-1) {
                    terms.push(format!("-{}", names[i]));
                } else {
                    terms.push(format!("{}{}", format_rational(c), names[i]));
                }
            }
            if !self.constant[j].is_zero() || terms.is_empty() {
                terms.push(format_rational(&self.constant[j]));
            }
            let mut rhs = String::new();
            for (k, t) in terms.iter().enumerate() {
                if k == 0 {
                    rhs.push_str(t);
                } else if let Some(stripped) = t.strip_prefix('-') {
                    rhs.push_str(" - ");
                    rhs.push_str(stripped);
                } else {
                    rhs.push_str(" + ");
                    rhs.push_str(t);
                }
            }
            lines.push(format!("{} -> {}", names[j], rhs));
        }
        lines.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homog::HomogeneousAlgebra;

    fn translation_example() -> Deformation {
        // xy - yx - x - 1
        let base = HomogeneousAlgebra::new(
            vec!["x".into(), "y".into()],
            2,
            vec![TensorElement::from_words_i64(2, 2, &[(&[0, 1], 1), (&[1, 0], -1)])],
        )
        .unwrap();
        let mut a1 = Matrix::zero(1, 2).unwrap();
        a1.set(0, 0, rat_int(-1));
        let mut a2 = Matrix::zero(1, 1).unwrap();
        a2.set(0, 0, rat_int(-1));
        Deformation::new(base, vec![a1, a2]).unwrap()
    }

    #[test]
    fn generator_images_follow_columns() {
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let f = AffineMap::new(m, vec![rat_int(5), rat_int(6)]).unwrap();
        let img = f.apply_generator(0);
        let lin = img.part(1);
        assert_eq!(lin.coeff(&[0]), rat_int(1));
        assert_eq!(lin.coeff(&[1]), rat_int(3));
        assert_eq!(img.part(0).coeff(&[]), rat_int(5));
    }

    #[test]
    fn composition_matches_pointwise_application() {
        let f = AffineMap::new(
            Matrix::from_i64(&[&[1, 1], &[0, 1]]),
            vec![rat_int(2), rat_int(0)],
        )
        .unwrap();
        let g = AffineMap::new(
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
            vec![rat_int(0), rat_int(3)],
        )
        .unwrap();
        let fg = f.compose(&g).unwrap();
        for j in 0..2 {
            let via_compose = fg.apply_generator(j);
            let step = g.apply_generator(j);
            let via_steps = f.apply_poly(&step);
            assert_eq!(via_compose.part(1), via_steps.part(1));
            assert_eq!(via_compose.part(0), via_steps.part(0));
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let f = AffineMap::new(
            Matrix::from_i64(&[&[2, 1], &[1, 1]]),
            vec![rat_int(-3), rat_int(7)],
        )
        .unwrap();
        let inv = f.inverse().unwrap();
        assert!(f.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn relation_preservation_detects_the_right_translations() {
        // for xy - yx - x - 1, the shift y -> y - 1 preserves the relation
        // while x -> x - 1 does not
        let u = translation_example();
        let good = AffineMap::new(
            Matrix::identity(2),
            vec![rat_int(0), rat_int(-1)],
        )
        .unwrap();
        assert!(good.preserves_deformed_relations(&u).unwrap());
        let bad =
            AffineMap::new(Matrix::identity(2), vec![rat_int(-1), rat_int(0)]).unwrap();
        assert!(!bad.preserves_deformed_relations(&u).unwrap());
        assert!(AffineMap::identity(2).preserves_deformed_relations(&u).unwrap());
    }

    #[test]
    fn formatting_is_readable() {
        let f = AffineMap::new(
            Matrix::from_i64(&[&[2, 0], &[0, 1]]),
            vec![rat_int(0), rat_int(-1)],
        )
        .unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(f.format_with_names(&names), "x -> 2x, y -> y - 1");
    }
}

//! One-relation algebras of global dimension 2 defined by an invertible
//! matrix, and their deformations by a linear-plus-scalar tail.
//!
//! The relation is f = x Q x^t; the algebra is a Gorenstein candidate
//! exactly when Q is invertible, so singular matrices are rejected at
//! construction. The Nakayama automorphism has linear part -Q^t Q^{-1} and,
//! for the deformation by f - v - c with v = x s^t, constant part s Q^{-1}.
//! Every returned map is verified to preserve the (deformed) relation span.

use num_traits::Zero;

use crate::affine::AffineMap;
use crate::error::{AlgebraError, Result};
use crate::homog::{Deformation, HomogeneousAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::tensor::TensorElement;

#[derive(Debug, Clone)]
pub struct Dim2Algebra {
    names: Vec<String>,
    q: Matrix,
    relation: TensorElement,
}

impl Dim2Algebra {
    pub fn new(names: Vec<String>, q: Matrix) -> Result<Self> {
        let n = names.len();
        if q.rows() != n || q.cols() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "matrix is {}x{} for {} generators",
                q.rows(),
                q.cols(),
                n
            )));
        }
        q.inverse()?;
        let mut relation = TensorElement::zero(n, 2);
        for i in 0..n {
            for j in 0..n {
                if !q.get(i, j).is_zero() {
                    relation.add_term(vec![i, j], q.get(i, j).clone());
                }
            }
        }
        Ok(Dim2Algebra { names, q, relation })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn q(&self) -> &Matrix {
        &self.q
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relation(&self) -> &TensorElement {
        &self.relation
    }

    pub fn algebra(&self) -> Result<HomogeneousAlgebra> {
        HomogeneousAlgebra::new(self.names.clone(), 2, vec![self.relation.clone()])
    }
}

#[derive(Debug, Clone)]
pub struct Dim2Deformation {
    base: Dim2Algebra,
    s: Vec<Rational>,
    c: Rational,
}

impl Dim2Deformation {
    pub fn new(base: Dim2Algebra, s: Vec<Rational>, c: Rational) -> Result<Self> {
        if s.len() != base.n() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "tail vector has {} entries for {} generators",
                s.len(),
                base.n()
            )));
        }
        Ok(Dim2Deformation { base, s, c })
    }

    pub fn base(&self) -> &Dim2Algebra {
        &self.base
    }

    pub fn s(&self) -> &[Rational] {
        &self.s
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// The same deformation in the additive tail convention: the deformed
    /// relation f - v - c carries tails a_1 = -s and a_2 = -c.
    pub fn deformation(&self) -> Result<Deformation> {
        let n = self.base.n();
        let mut a1 = Matrix::zero(1, n)?;
        for (j, sj) in self.s.iter().enumerate() {
            a1.set(0, j, -sj.clone());
        }
        let mut a2 = Matrix::zero(1, 1)?;
        a2.set(0, 0, -self.c.clone());
        Deformation::new(self.base.algebra()?, vec![a1, a2])
    }
}

/// Nakayama automorphism of the graded algebra: x |-> -x Q^t Q^{-1}.
pub fn nakayama_graded(a: &Dim2Algebra) -> Result<AffineMap> {
    let linear = a.q.transpose().mul(&a.q.inverse()?)?.neg();
    let map = AffineMap::linear_only(linear)?;
    let zero = Deformation::zero(a.algebra()?);
    if !map.preserves_deformed_relations(&zero)? {
        return Err(AlgebraError::AutomorphismCheckFailed);
    }
    Ok(map)
}

/// Whether the graded algebra is Calabi-Yau: Q invertible and
/// anti-symmetric. Construction already guarantees invertibility.
pub fn cy_graded(a: &Dim2Algebra) -> bool {
    a.q.is_antisymmetric()
}

/// Nakayama automorphism of the deformed algebra:
/// x |-> -x Q^t Q^{-1} + s Q^{-1}.
pub fn nakayama_deformed(u: &Dim2Deformation) -> Result<AffineMap> {
    let q_inv = u.base.q.inverse()?;
    let linear = u.base.q.transpose().mul(&q_inv)?.neg();
    let constant = q_inv.act_on_row(&u.s)?;
    let map = AffineMap::new(linear, constant)?;
    if !map.preserves_deformed_relations(&u.deformation()?)? {
        return Err(AlgebraError::AutomorphismCheckFailed);
    }
    Ok(map)
}

/// The deformation is Calabi-Yau iff Q is anti-symmetric and the linear
/// tail vanishes; the scalar tail is unconstrained.
pub fn cy_deformed(u: &Dim2Deformation) -> bool {
    u.base.q.is_antisymmetric() && u.s.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn xy_names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn symplectic() -> Dim2Algebra {
        Dim2Algebra::new(xy_names(), Matrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap()
    }

    fn quantum2() -> Dim2Algebra {
        Dim2Algebra::new(xy_names(), Matrix::from_i64(&[&[0, 1], &[-2, 0]])).unwrap()
    }

    fn jordan() -> Dim2Algebra {
        Dim2Algebra::new(xy_names(), Matrix::from_i64(&[&[-1, 1], &[-1, 0]])).unwrap()
    }

    #[test]
    fn relation_reads_off_the_matrix() {
        let a = jordan();
        assert_eq!(a.relation().coeff(&[0, 0]), rat_int(-1));
        assert_eq!(a.relation().coeff(&[0, 1]), rat_int(1));
        assert_eq!(a.relation().coeff(&[1, 0]), rat_int(-1));
        assert_eq!(a.relation().coeff(&[1, 1]), rat_int(0));
    }

    #[test]
    fn singular_matrices_are_rejected() {
        assert!(matches!(
            Dim2Algebra::new(xy_names(), Matrix::from_i64(&[&[1, 1], &[1, 1]])),
            Err(AlgebraError::SingularMatrix)
        ));
    }

    #[test]
    fn graded_twists() {
        assert!(nakayama_graded(&symplectic()).unwrap().is_identity());
        let q = nakayama_graded(&quantum2()).unwrap();
        assert_eq!(
            q.linear(),
            &Matrix::from_rows(vec![
                vec![rat_int(2), rat_int(0)],
                vec![rat_int(0), rat(1, 2)],
            ])
            .unwrap()
        );
        let j = nakayama_graded(&jordan()).unwrap();
        assert_eq!(j.linear(), &Matrix::from_i64(&[&[1, -2], &[0, 1]]));
    }

    #[test]
    fn graded_cy_is_antisymmetry() {
        assert!(cy_graded(&symplectic()));
        assert!(!cy_graded(&quantum2()));
        assert!(!cy_graded(&jordan()));
        let scaled =
            Dim2Algebra::new(xy_names(), Matrix::from_i64(&[&[0, 3], &[-3, 0]])).unwrap();
        assert!(cy_graded(&scaled));
    }

    #[test]
    fn weyl_algebra_is_calabi_yau() {
        let u =
            Dim2Deformation::new(symplectic(), vec![rat_int(0); 2], rat_int(1)).unwrap();
        assert!(cy_deformed(&u));
        assert!(nakayama_deformed(&u).unwrap().is_identity());
    }

    #[test]
    fn shifted_weyl_twists_by_translation() {
        // xy - yx - x - 1
        let u = Dim2Deformation::new(
            symplectic(),
            vec![rat_int(1), rat_int(0)],
            rat_int(1),
        )
        .unwrap();
        let m = nakayama_deformed(&u).unwrap();
        assert_eq!(m.linear(), &Matrix::identity(2));
        assert_eq!(m.constant(), &[rat_int(0), rat_int(-1)]);
        assert!(!cy_deformed(&u));
    }

    #[test]
    fn zero_tail_reduces_to_graded() {
        let u = Dim2Deformation::new(jordan(), vec![rat_int(0); 2], rat_int(0)).unwrap();
        assert_eq!(nakayama_deformed(&u).unwrap(), nakayama_graded(&jordan()).unwrap());
    }

    #[test]
    fn quantum_plane_with_zero_tail_is_not_cy() {
        let u = Dim2Deformation::new(quantum2(), vec![rat_int(0); 2], rat_int(0)).unwrap();
        assert!(!cy_deformed(&u));
        // but the twist still exists and fixes the relation span
        assert!(!nakayama_deformed(&u).unwrap().is_identity());
    }

    #[test]
    fn deformation_tails_follow_the_sign_convention() {
        let u = Dim2Deformation::new(
            symplectic(),
            vec![rat_int(1), rat_int(0)],
            rat_int(1),
        )
        .unwrap();
        let d = u.deformation().unwrap();
        // deformed relation is xy - yx - x - 1
        let p = d.deformed_relation(0);
        assert_eq!(p.part(2).coeff(&[0, 1]), rat_int(1));
        assert_eq!(p.part(1).coeff(&[0]), rat_int(-1));
        assert_eq!(p.part(0).coeff(&[]), rat_int(-1));
    }

    #[test]
    fn basis_covariance_under_generator_change() {
        // replacing Q by G^t Q G and s by s G conjugates the output by
        // H = G^t: the linear part becomes H L H^{-1} and the constant c H^{-1}
        let g = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let q = Matrix::from_i64(&[&[0, 1], &[-2, 0]]);
        let s = vec![rat_int(1), rat_int(3)];
        let u = Dim2Deformation::new(
            Dim2Algebra::new(xy_names(), q.clone()).unwrap(),
            s.clone(),
            rat_int(1),
        )
        .unwrap();
        let m = nakayama_deformed(&u).unwrap();

        let q2 = g.transpose().mul(&q).unwrap().mul(&g).unwrap();
        let s2 = g.act_on_row(&s).unwrap();
        let u2 = Dim2Deformation::new(
            Dim2Algebra::new(xy_names(), q2).unwrap(),
            s2,
            rat_int(1),
        )
        .unwrap();
        let m2 = nakayama_deformed(&u2).unwrap();
        let h = g.transpose();
        let h_inv = h.inverse().unwrap();
        let expect_linear = h.mul(m.linear()).unwrap().mul(&h_inv).unwrap();
        assert_eq!(m2.linear(), &expect_linear);
        assert_eq!(
            m2.constant(),
            h_inv.act_on_row(m.constant()).unwrap().as_slice()
        );
    }
}

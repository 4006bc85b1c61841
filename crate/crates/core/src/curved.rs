//! Curved differential graded structure on the Koszul dual of a quadratic
//! deformation, and the Nakayama automorphism read off from it.
//!
//! For a deformation with relation tails nu = -a_1 and scalar part
//! th = -a_2, the dual algebra carries a degree-1 map delta extending the
//! dual of nu as a derivation with the Koszul sign, and a curvature element
//! th in the degree-2 dual component. The failure of delta to square to
//! zero is exactly the commutator with th. The Nakayama automorphism of the
//! deformed algebra is affine: the linear part comes from the dual
//! Frobenius automorphism, the constant from applying delta to the solved
//! dual basis of the next-to-top component.

use num_traits::Zero;

use crate::affine::AffineMap;
use crate::error::{AlgebraError, Result};
use crate::frobenius::{frobenius_detect, is_graded_symmetric, FrobeniusData, GradedFiniteAlgebra};
use crate::homog::{Deformation, GradedQuotient};
use crate::matrix::Matrix;
use crate::rational::{format_rational, rat_int, Rational};
use crate::tensor::{TensorElement, Word};

#[derive(Debug, Clone)]
pub struct CurvedDGDual {
    dual: GradedFiniteAlgebra,
    /// delta[m] maps degree m to degree m+1, column-image convention;
    /// the top matrix has zero rows.
    delta: Vec<Matrix>,
    /// coordinates of the curvature in the degree-2 representative basis
    theta: Vec<Rational>,
    frob: FrobeniusData,
    gldim: usize,
}

impl CurvedDGDual {
    pub fn dual(&self) -> &GradedFiniteAlgebra {
        &self.dual
    }

    pub fn delta(&self, m: usize) -> &Matrix {
        &self.delta[m]
    }

    pub fn theta(&self) -> &[Rational] {
        &self.theta
    }

    pub fn frobenius(&self) -> &FrobeniusData {
        &self.frob
    }

    pub fn gldim(&self) -> usize {
        self.gldim
    }

    /// delta(ab) = delta(a)b + (-1)^{|a|} a delta(b) on all basis pairs.
    pub fn derivation_law_holds(&self) -> bool {
        let d = self.gldim;
        for i in 0..=d {
            for j in 0..=d.saturating_sub(i) {
                if i + j >= d {
                    // products of degree >= d have image in degree > d: zero
                    // on both sides
                    continue;
                }
                let sign = if i % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                for a in 0..self.dual.dim(i) {
                    for b in 0..self.dual.dim(j) {
                        let ab = self.dual.product_basis(i, a, j, b).to_vec();
                        let lhs = apply(&self.delta[i + j], &ab);
                        let da = column(&self.delta[i], a);
                        let db = column(&self.delta[j], b);
                        let mut rhs = self.dual.product(i + 1, &da, j, &unit_vec(self.dual.dim(j), b));
                        let second = self
                            .dual
                            .product(i, &unit_vec(self.dual.dim(i), a), j + 1, &db);
                        for (slot, v) in rhs.iter_mut().zip(&second) {
                            *slot += sign.clone() * v.clone();
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// First basis element, by degree, whose commutator with theta is
    /// nonzero; None when theta is central.
    pub fn theta_commutator_witness(&self) -> Option<(usize, usize)> {
        let d = self.gldim;
        if d < 2 {
            return None;
        }
        for m in 0..=d - 2 {
            for a in 0..self.dual.dim(m) {
                let e = unit_vec(self.dual.dim(m), a);
                let left = self.dual.product(2, &self.theta, m, &e);
                let right = self.dual.product(m, &e, 2, &self.theta);
                if left != right {
                    return Some((m, a));
                }
            }
        }
        None
    }

    /// The same structure with the top-degree basis vector replaced by c
    /// times itself. All derived outputs (lambda, the Nakayama map) are
    /// invariant under this change of normalization.
    pub fn rescale_top(&self, c: &Rational) -> Result<CurvedDGDual> {
        if c.is_zero() {
            return Err(AlgebraError::InvalidAlgebra("zero rescaling".into()));
        }
        let inv = rat_int(1) / c.clone();
        let dual = self.dual.rescale_top(c)?;
        let frob = self.frob.rescale_pairings(c);
        let mut delta = self.delta.clone();
        delta[self.gldim - 1] = delta[self.gldim - 1].scale(&inv);
        let theta = if self.gldim == 2 {
            self.theta.iter().map(|t| t * &inv).collect()
        } else {
            self.theta.clone()
        };
        Ok(CurvedDGDual { dual, delta, theta, frob, gldim: self.gldim })
    }

    /// Test hook: replace the curvature coordinates, bypassing the solve.
    #[cfg(test)]
    pub(crate) fn with_planted_theta(mut self, theta: Vec<Rational>) -> CurvedDGDual {
        assert_eq!(theta.len(), self.dual.dim(2));
        self.theta = theta;
        self
    }
}

/// Builds the curved structure. The global dimension is a hint, sanity
/// checked on the dual sizes rather than inferred unboundedly: the dual
/// must vanish in degrees d+1 and d+2 and be one-dimensional in degree d.
pub fn build_curved_dual(u: &Deformation, d: usize) -> Result<CurvedDGDual> {
    let bg = u.bg_check()?;
    if !bg.holds() {
        return Err(AlgebraError::NotPBW(format!(
            "deformation fails overlap condition {} on overlap element {}",
            bg.failures[0].condition, bg.failures[0].overlap_index
        )));
    }
    let curved = build_curved_dual_unchecked(u, d)?;
    if !curved.derivation_law_holds() {
        return Err(AlgebraError::Internal(
            "dual derivation is not well defined on the quotient".into(),
        ));
    }
    Ok(curved)
}

/// Same construction without the overlap gate or the derivation-law error,
/// for probing inputs that are not valid deformations: on those, the
/// diagnostics derivation_law_holds and curvature_check are expected to
/// fail, and that failure is the useful signal.
pub fn build_curved_dual_unchecked(u: &Deformation, d: usize) -> Result<CurvedDGDual> {
    let base = u.base();
    if base.relation_degree() != 2 {
        return Err(AlgebraError::WrongN { expected: 2, found: base.relation_degree() });
    }
    if d < 2 {
        return Err(AlgebraError::DimensionMismatch(format!(
            "global dimension hint must be at least 2, got {d}"
        )));
    }
    let dual_alg = base.koszul_dual()?;
    let wide = GradedQuotient::new(&dual_alg, d + 2)?;
    if wide.dim(d) != 1 {
        return Err(AlgebraError::NotFrobeniusDual {
            length: d,
            reason: format!("dual component {} has dimension {}", d, wide.dim(d)),
        });
    }
    for m in [d + 1, d + 2] {
        if wide.dim(m) != 0 {
            return Err(AlgebraError::NotFrobeniusDual {
                length: d,
                reason: format!("dual component {} has dimension {}", m, wide.dim(m)),
            });
        }
    }
    let quotient = wide.truncated(d);
    let dual = GradedFiniteAlgebra::from_quotient(&quotient)?;
    let frob = frobenius_detect(&dual).map_err(|e| match e {
        AlgebraError::NotFrobenius { degree } => AlgebraError::NotFrobeniusDual {
            length: d,
            reason: format!("pairing degenerates in degree {degree}"),
        },
        other => other,
    })?;

    // the degree-2 representatives pair perfectly with the relation space
    let rel_count = base.relation_count();
    let rep2: Vec<Word> = quotient.component(2).rep_words().to_vec();
    if rep2.len() != rel_count {
        return Err(AlgebraError::Internal(
            "degree-2 dual component does not match the relation count".into(),
        ));
    }
    // pairing_to_coords: solve coords of the functional f on R with
    // f(r_i) given, via sum_k c_k <rep_k, r_i> = f(r_i)
    let mut s = Matrix::zero(rel_count, rel_count)?;
    for (i, r) in base.relations().iter().enumerate() {
        for (k, w) in rep2.iter().enumerate() {
            s.set(i, k, r.coeff(w));
        }
    }
    let solve_functional = |values: Vec<Rational>| -> Result<Vec<Rational>> {
        s.solve(&values).ok_or_else(|| {
            AlgebraError::Internal("degree-2 dual pairing is degenerate".into())
        })
    };

    // theta(r_i) = -a_2(r_i)
    let theta_values: Vec<Rational> =
        (0..rel_count).map(|i| -u.tails()[1].get(i, 0).clone()).collect();
    let theta = solve_functional(theta_values)?;

    // delta on degree 1: the dual of nu, nu(r_i) = -a_1 row i
    let n = base.n();
    let mut delta1 = Matrix::zero(rel_count, n)?;
    for gen in 0..n {
        let values: Vec<Rational> =
            (0..rel_count).map(|i| -u.tails()[0].get(i, gen).clone()).collect();
        let coords = solve_functional(values)?;
        for (k, c) in coords.into_iter().enumerate() {
            delta1.set(k, gen, c);
        }
    }

    let mut delta: Vec<Matrix> = Vec::with_capacity(d + 1);
    delta.push(Matrix::zero(dual.dim(1), 1)?);
    delta.push(delta1);
    for m in 2..=d {
        let target = dual.dim(m + 1);
        let mut dm = Matrix::zero(target, dual.dim(m))?;
        if target > 0 {
            for (col, w) in quotient.component(m).rep_words().iter().enumerate() {
                let img = delta_of_word(&dual, &quotient, &delta, w);
                for (row, v) in img.into_iter().enumerate() {
                    dm.set(row, col, v);
                }
            }
        }
        delta.push(dm);
    }

    Ok(CurvedDGDual { dual, delta, theta, frob, gldim: d })
}

/// delta on the class of a word, by the recursion
/// delta(a w) = delta(a) w - a delta(w).
fn delta_of_word(
    dual: &GradedFiniteAlgebra,
    quotient: &GradedQuotient,
    delta: &[Matrix],
    word: &[usize],
) -> Vec<Rational> {
    let m = word.len();
    if m == 1 {
        return column(&delta[1], word[0]);
    }
    let head = word[0];
    let tail = &word[1..];
    let tail_elem = TensorElement::from_terms(quotient.algebra().n(), m - 1, &[(
        tail.to_vec(),
        rat_int(1),
    )])
    .expect("valid subword");
    let tail_coords = quotient.component(m - 1).coords(&tail_elem);
    let d_head = column(&delta[1], head);
    let mut out = dual.product(2, &d_head, m - 1, &tail_coords);
    let d_tail = delta_of_word(dual, quotient, delta, tail);
    let head_coords = unit_vec(dual.dim(1), head);
    let second = dual.product(1, &head_coords, m, &d_tail);
    for (slot, v) in out.iter_mut().zip(&second) {
        *slot -= v.clone();
    }
    out
}

/// delta^2(a) = theta a - a theta on every basis element of each component
/// up to degree gldim - 2.
pub fn curvature_check(c: &CurvedDGDual) -> bool {
    let d = c.gldim();
    for m in 0..=d.saturating_sub(2) {
        for a in 0..c.dual().dim(m) {
            let e = unit_vec(c.dual().dim(m), a);
            let dd = apply(&c.delta[m + 1], &apply(&c.delta[m], &e));
            let left = c.dual().product(2, &c.theta, m, &e);
            let right = c.dual().product(m, &e, 2, &c.theta);
            let rhs: Vec<Rational> =
                left.into_iter().zip(right).map(|(l, r)| l - r).collect();
            if dd != rhs {
                return false;
            }
        }
    }
    true
}

/// Applies delta to the dual basis w_j of the next-to-top component,
/// solved from x_i* w_j = delta_ij (top basis vector), and reads off the
/// top coefficients.
pub fn lambda_vector(c: &CurvedDGDual) -> Result<Vec<Rational>> {
    let d = c.gldim();
    // <x_i*, e_b> for e_b in degree d-1 is exactly the degree-1 pairing,
    // so the solved dual basis vectors are the columns of its inverse
    let w = c.frobenius().pairing(1).inverse()?;
    let top = c.delta(d - 1);
    let n = c.dual().dim(1);
    let mut lambda = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = rat_int(0);
        for b in 0..c.dual().dim(d - 1) {
            acc += top.get(0, b).clone() * w.get(b, j).clone();
        }
        lambda.push(acc);
    }
    Ok(lambda)
}

/// The Nakayama automorphism of the deformed algebra as an affine map:
/// linear part (-1)^{d+1} (P^{-1})^t for the dual Frobenius matrix P on
/// degree 1, constant part the lambda vector. The result is verified to
/// preserve the span of the deformed relations.
pub fn nakayama_deformation_general(u: &Deformation, d: usize) -> Result<AffineMap> {
    let curved = build_curved_dual(u, d)?;
    nakayama_from_curved(u, &curved)
}

pub fn nakayama_from_curved(u: &Deformation, curved: &CurvedDGDual) -> Result<AffineMap> {
    let d = curved.gldim();
    let p = curved.frobenius().nakayama(1);
    let mut linear = p.inverse()?.transpose();
    if (d + 1) % 2 == 1 {
        linear = linear.neg();
    }
    let lambda = lambda_vector(curved)?;
    let map = AffineMap::new(linear, lambda)?;
    if !map.preserves_deformed_relations(u)? {
        return Err(AlgebraError::AutomorphismCheckFailed);
    }
    Ok(map)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyReport {
    pub cy: bool,
    pub lambda: Vec<Rational>,
    pub reason: String,
}

/// Calabi-Yau test for an augmented deformation of a graded Calabi-Yau
/// base: the deformation is Calabi-Yau iff delta vanishes on the
/// next-to-top dual component.
pub fn cy_check_augmented(u: &Deformation, d: usize) -> Result<CyReport> {
    if !u.is_augmented() {
        return Err(AlgebraError::DeformationIncompatible(
            "the scalar tail must vanish for the augmented Calabi-Yau test".into(),
        ));
    }
    let curved = build_curved_dual(u, d)?;
    if !is_graded_symmetric(curved.frobenius()) {
        return Err(AlgebraError::BaseNotCY(
            "Koszul dual is not graded symmetric".into(),
        ));
    }
    let top = curved.delta(d - 1);
    let cy = top.is_zero();
    let lambda = lambda_vector(&curved)?;
    let reason = if cy {
        "delta vanishes on the next-to-top dual component".to_string()
    } else {
        format!(
            "delta is nonzero on the next-to-top dual component; lambda = ({})",
            lambda.iter().map(format_rational).collect::<Vec<_>>().join(", ")
        )
    };
    Ok(CyReport { cy, lambda, reason })
}

#[derive(Debug, Clone)]
pub struct ThetaTransferReport {
    pub theta_central: bool,
    /// degree and basis index of the first failing commutator
    pub witness: Option<(usize, usize)>,
    /// the deformation with the scalar tail removed, when central
    pub augmented: Option<Deformation>,
    /// whether the augmented deformation still passes the overlap check
    pub augmented_bg_holds: Option<bool>,
    /// the shared Nakayama map of the deformation and its augmented
    /// truncation
    pub nakayama: Option<AffineMap>,
    /// Calabi-Yau verdict of the augmented truncation, when decidable
    pub augmented_cy: Option<bool>,
    /// verdict transferred to the original deformation; only asserted in
    /// the forward direction
    pub transferred_cy: Option<bool>,
    pub note: String,
}

/// Centrality of the curvature and the induced transfer: when theta is
/// central the augmented truncation is again a deformation with the same
/// Nakayama map, and Calabi-Yau-ness of the truncation transfers forward.
/// The converse would require the base to be a domain and is reported as
/// conditional, never asserted.
pub fn theta_central_and_transfer(u: &Deformation, d: usize) -> Result<ThetaTransferReport> {
    let curved = build_curved_dual(u, d)?;
    let witness = curved.theta_commutator_witness();
    if let Some((m, a)) = witness {
        return Ok(ThetaTransferReport {
            theta_central: false,
            witness,
            augmented: None,
            augmented_bg_holds: None,
            nakayama: None,
            augmented_cy: None,
            transferred_cy: None,
            note: format!(
                "theta does not commute with dual basis element {a} in degree {m}; no transfer"
            ),
        });
    }
    let aug = u.augmented_truncation();
    let aug_bg = aug.bg_check()?.holds();
    let nakayama = nakayama_from_curved(u, &curved)?;
    let augmented_cy = match cy_check_augmented(&aug, d) {
        Ok(report) => Some(report.cy),
        Err(AlgebraError::BaseNotCY(_)) => None,
        Err(e) => return Err(e),
    };
    let (transferred, note) = match augmented_cy {
        Some(true) => (
            Some(true),
            "augmented truncation is Calabi-Yau, so the deformation is Calabi-Yau".to_string(),
        ),
        Some(false) => (
            None,
            "augmented truncation is not Calabi-Yau; the converse transfer holds only \
             when the base is a domain and is not asserted"
                .to_string(),
        ),
        None => (
            None,
            "base algebra is not graded Calabi-Yau; no transfer verdict".to_string(),
        ),
    };
    Ok(ThetaTransferReport {
        theta_central: true,
        witness: None,
        augmented: Some(aug),
        augmented_bg_holds: Some(aug_bg),
        nakayama: Some(nakayama),
        augmented_cy,
        transferred_cy: transferred,
        note,
    })
}

fn unit_vec(dim: usize, idx: usize) -> Vec<Rational> {
    let mut v = vec![rat_int(0); dim];
    v[idx] = rat_int(1);
    v
}

fn column(m: &Matrix, j: usize) -> Vec<Rational> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn apply(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    (0..m.rows())
        .map(|i| {
            let mut acc = rat_int(0);
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    acc += m.get(i, j).clone() * vj.clone();
                }
            }
            acc
        })
        .collect()
}

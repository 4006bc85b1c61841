//! Gorenstein presentations of global dimension 3.
//!
//! For an algebra on n generators with n relations whose degree-(N+1)
//! coalgebra component is one dimensional, the spanning element z expands
//! two ways,
//!
//!   z = sum_ij Q1[i][j] r_i (x) x_j = sum_ij Q2[i][j] x_i (x) r_j,
//!
//! and the pair (Q1, Q2) drives everything here: Yoneda products on the
//! dual, the Nakayama automorphism Q1^t Q2^{-1} of the graded algebra and
//! its affine correction for deformations, the Calabi-Yau test Q1 = Q2^t,
//! and the correspondence between deformations and potentials.

use num_traits::Zero;

use crate::affine::AffineMap;
use crate::echelon::EchelonSet;
use crate::error::{AlgebraError, Result};
use crate::homog::{Deformation, HomogeneousAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::tensor::{FiltrationLayout, TensorElement, TensorPoly};

#[derive(Debug, Clone)]
pub struct Dim3Algebra {
    base: HomogeneousAlgebra,
    z: TensorElement,
    q1: Matrix,
    q2: Matrix,
    rel_matrices: Vec<Matrix>,
}

impl Dim3Algebra {
    pub fn base(&self) -> &HomogeneousAlgebra {
        &self.base
    }

    /// Spanning element of the top coalgebra component, leading
    /// coefficient 1.
    pub fn z(&self) -> &TensorElement {
        &self.z
    }

    pub fn q1(&self) -> &Matrix {
        &self.q1
    }

    pub fn q2(&self) -> &Matrix {
        &self.q2
    }

    /// For quadratic algebras, the coefficient matrix of each relation:
    /// r_i = sum_ab rel_matrices[i][a][b] x_a x_b. Empty for N >= 3.
    pub fn rel_matrices(&self) -> &[Matrix] {
        &self.rel_matrices
    }
}

/// Extract the gl.dim-3 structure from a presentation. Requires exactly n
/// relations and a one dimensional top coalgebra component; both expansion
/// matrices must be invertible.
pub fn build_dim3(base: HomogeneousAlgebra) -> Result<Dim3Algebra> {
    let n = base.n();
    let deg = base.relation_degree();
    if base.relations().len() != n {
        return Err(AlgebraError::NotGorensteinCandidate(format!(
            "{} relations on {} generators",
            base.relations().len(),
            n
        )));
    }
    let c3 = base.coalgebra_component(3)?;
    if c3.dim() != 1 {
        return Err(AlgebraError::NotGorensteinCandidate(format!(
            "top coalgebra component has dimension {}",
            c3.dim()
        )));
    }
    let z = TensorElement::from_dense(n, deg + 1, c3.basis_row(0))?.normalize_leading();

    let mut q1 = Matrix::zero(n, n)?;
    for j in 0..n {
        let u_j = z.contract_right(j);
        let coords = base
            .relation_coordinates(&u_j)
            .ok_or_else(|| AlgebraError::Internal("right expansion left the relation span".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            q1.set(i, j, c);
        }
    }
    let mut q2 = Matrix::zero(n, n)?;
    for i in 0..n {
        let v_i = z.contract_left(i);
        let coords = base
            .relation_coordinates(&v_i)
            .ok_or_else(|| AlgebraError::Internal("left expansion left the relation span".into()))?;
        for (j, c) in coords.into_iter().enumerate() {
            q2.set(i, j, c);
        }
    }
    q1.inverse()?;
    q2.inverse()?;

    let mut rel_matrices = Vec::new();
    if deg == 2 {
        for r in base.relations() {
            let mut m = Matrix::zero(n, n)?;
            for a in 0..n {
                for b in 0..n {
                    m.set(a, b, r.coeff(&[a, b]));
                }
            }
            rel_matrices.push(m);
        }
    }
    Ok(Dim3Algebra { base, z, q1, q2, rel_matrices })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YonedaProducts {
    /// Coefficient of z* in gamma . alpha.
    pub gamma_alpha: Rational,
    /// Coefficient of z* in alpha . gamma.
    pub alpha_gamma: Rational,
    /// Coordinates of alpha . beta over the r* basis; zero when N >= 3.
    pub alpha_beta: Vec<Rational>,
}

/// Yoneda products in the dual: alpha, beta are degree-1 classes in x*
/// coordinates, gamma a degree-2 class in r* coordinates.
pub fn yoneda_products(
    a: &Dim3Algebra,
    alpha: &[Rational],
    beta: &[Rational],
    gamma: &[Rational],
) -> Result<YonedaProducts> {
    let n = a.base.n();
    if alpha.len() != n || beta.len() != n || gamma.len() != n {
        return Err(AlgebraError::DimensionMismatch(format!(
            "class coordinates must have length {}",
            n
        )));
    }
    let gamma_alpha = dot(&a.q1.act_on_row(gamma)?, alpha);
    let alpha_gamma = dot(&a.q2.act_on_row(alpha)?, gamma);
    let alpha_beta = if a.base.relation_degree() == 2 {
        a.rel_matrices
            .iter()
            .map(|p| dot(&p.act_on_row(alpha).expect("square block"), beta))
            .collect()
    } else {
        vec![Rational::zero(); n]
    };
    Ok(YonedaProducts { gamma_alpha, alpha_gamma, alpha_beta })
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Nakayama automorphism of the graded algebra: x |-> x Q1^t Q2^{-1}.
pub fn nakayama_graded3(a: &Dim3Algebra) -> Result<AffineMap> {
    let linear = a.q1.transpose().mul(&a.q2.inverse()?)?;
    let map = AffineMap::linear_only(linear)?;
    let zero = Deformation::zero(a.base.clone());
    if !map.preserves_deformed_relations(&zero)? {
        return Err(AlgebraError::AutomorphismCheckFailed);
    }
    Ok(map)
}

/// The graded algebra is Calabi-Yau exactly when Q1 = Q2^t.
pub fn cy_check3(a: &Dim3Algebra) -> bool {
    a.q1 == a.q2.transpose()
}

/// A homogeneous element is a superpotential when left and right
/// contraction by every generator agree.
pub fn is_superpotential(t: &TensorElement) -> bool {
    (0..t.n()).all(|i| t.contract_left(i) == t.contract_right(i))
}

/// Inhomogeneous potential: a graded sum with no scalar part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    poly: TensorPoly,
}

impl Potential {
    pub fn new(poly: TensorPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(AlgebraError::InvalidAlgebra("zero potential".into()));
        }
        if !poly.part(0).is_zero() {
            return Err(AlgebraError::InvalidAlgebra(
                "potential has a scalar term".into(),
            ));
        }
        Ok(Potential { poly })
    }

    pub fn poly(&self) -> &TensorPoly {
        &self.poly
    }

    pub fn top_degree(&self) -> usize {
        self.poly.top_degree().expect("nonzero by construction")
    }
}

/// The potential condition degree by degree: [alpha w] = [w alpha] for
/// every generator functional alpha.
pub fn is_potential(w: &Potential) -> bool {
    (0..w.poly.n()).all(|i| w.poly.contract_left(i) == w.poly.contract_right(i))
}

/// Read a presentation off a potential of top degree N+1: relation i is
/// the left contraction [x_i* w], split into its degree-N leading term and
/// lower tails. Fails when the leading terms do not stay independent.
pub fn relations_from_potential(w: &Potential, names: Vec<String>) -> Result<Deformation> {
    let n = names.len();
    if n != w.poly.n() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "{} names for a potential on {} generators",
            n,
            w.poly.n()
        )));
    }
    let top = w.top_degree();
    if top < 3 {
        return Err(AlgebraError::WrongN { expected: 2, found: top.saturating_sub(1) });
    }
    let rel_deg = top - 1;
    let derivatives: Vec<TensorPoly> = (0..n).map(|i| w.poly.contract_left(i)).collect();
    let mut leading = Vec::with_capacity(n);
    let mut span = EchelonSet::new();
    for d in &derivatives {
        let lead = d.part(rel_deg);
        if lead.is_zero() || !span.insert(lead.to_sparse()) {
            return Err(AlgebraError::DegenerateRelations);
        }
        leading.push(lead);
    }
    let base = HomogeneousAlgebra::new(names, rel_deg, leading)?;
    let mut tails = Vec::with_capacity(rel_deg);
    for k in 1..=rel_deg {
        let mut rows = Vec::with_capacity(n);
        for d in &derivatives {
            rows.push(d.part(rel_deg - k).to_dense()?);
        }
        tails.push(Matrix::from_rows(rows)?);
    }
    Deformation::new(base, tails)
}

fn check_same_base(a: &Dim3Algebra, u: &Deformation) -> Result<()> {
    if u.base().relations() != a.base.relations()
        || u.base().generator_names() != a.base.generator_names()
    {
        return Err(AlgebraError::InvalidAlgebra(
            "deformation is over a different presentation".into(),
        ));
    }
    Ok(())
}

/// The degree-(N+1-k) expansion (a_k (x) 1)(z) = sum_j a_k(u_j) (x) x_j.
fn tail_left_of_z(a: &Dim3Algebra, u: &Deformation, k: usize) -> TensorElement {
    let n = a.base.n();
    let deg = a.base.relation_degree() + 1 - k;
    let mut out = TensorElement::zero(n, deg);
    for j in 0..n {
        let col: Vec<Rational> = (0..n).map(|i| a.q1.get(i, j).clone()).collect();
        out = out.add(&u.tail_of(k, &col).tensor(&TensorElement::generator(n, j)));
    }
    out
}

/// The matching right-side expansion (1 (x) a_k)(z) = sum_i x_i (x) a_k(v_i).
fn tail_right_of_z(a: &Dim3Algebra, u: &Deformation, k: usize) -> TensorElement {
    let n = a.base.n();
    let deg = a.base.relation_degree() + 1 - k;
    let mut out = TensorElement::zero(n, deg);
    for i in 0..n {
        out = out.add(
            &TensorElement::generator(n, i).tensor(&u.tail_of(k, a.q2.row(i))),
        );
    }
    out
}

/// Coordinates k of psi(z) = ((1 (x) a_1) - (a_1 (x) 1))(z) over the
/// relation basis. The deformation is incompatible with the Gorenstein
/// structure when psi(z) falls outside the relation span.
pub fn psi_vector(a: &Dim3Algebra, u: &Deformation) -> Result<Vec<Rational>> {
    check_same_base(a, u)?;
    let psi = tail_right_of_z(a, u, 1).sub(&tail_left_of_z(a, u, 1));
    a.base.relation_coordinates(&psi).ok_or_else(|| {
        AlgebraError::DeformationIncompatible(
            "psi(z) does not lie in the relation span".into(),
        )
    })
}

/// Nakayama automorphism of the deformed algebra:
/// x |-> x Q1^t Q2^{-1} + k Q2^{-1} with k the psi coordinate vector.
/// The deformation must pass the flatness gate first (overlap conditions
/// for N = 2, a bounded filtration check otherwise).
pub fn nakayama_deformed3(a: &Dim3Algebra, u: &Deformation) -> Result<AffineMap> {
    check_same_base(a, u)?;
    let n_deg = a.base.relation_degree();
    if n_deg == 2 {
        if !u.bg_check()?.holds() {
            return Err(AlgebraError::NotPBW("overlap conditions fail".into()));
        }
    } else {
        let report = u.pbw_check(n_deg + 1, n_deg + 1)?;
        if !report.holds {
            return Err(AlgebraError::NotPBW(format!(
                "filtration dimensions break at degree {:?}",
                report.first_failure
            )));
        }
    }
    let k = psi_vector(a, u)?;
    let q2_inv = a.q2.inverse()?;
    let linear = a.q1.transpose().mul(&q2_inv)?;
    let constant = q2_inv.act_on_row(&k)?;
    let map = AffineMap::new(linear, constant)?;
    if !map.preserves_deformed_relations(u)? {
        return Err(AlgebraError::AutomorphismCheckFailed);
    }
    Ok(map)
}

/// For each tail degree k, whether (a_k (x) 1)(z) = (1 (x) a_k)(z).
pub fn compat_check(a: &Dim3Algebra, u: &Deformation) -> Result<Vec<bool>> {
    check_same_base(a, u)?;
    Ok((1..=a.base.relation_degree())
        .map(|k| tail_left_of_z(a, u, k) == tail_right_of_z(a, u, k))
        .collect())
}

/// Assemble the potential w = z + sum_k (a_k (x) 1)(z) for a deformation of
/// a Calabi-Yau base whose degree-1 tail expansion is two sided. The result
/// is verified: w must satisfy the potential condition and its left
/// contractions must span exactly the deformed relations.
pub fn build_potential_cy(a: &Dim3Algebra, u: &Deformation) -> Result<Potential> {
    check_same_base(a, u)?;
    if !cy_check3(a) {
        return Err(AlgebraError::BaseNotCY("Q1 != Q2^t".into()));
    }
    if tail_left_of_z(a, u, 1) != tail_right_of_z(a, u, 1) {
        return Err(AlgebraError::NotCompatible { tail_degree: 1 });
    }
    let n_deg = a.base.relation_degree();
    let mut poly = TensorPoly::from_part(a.z.clone());
    for k in 1..=n_deg {
        poly.add_part(tail_left_of_z(a, u, k));
    }
    let w = Potential::new(poly)?;
    if !is_potential(&w) {
        return Err(AlgebraError::PotentialCheckFailed);
    }

    let layout = FiltrationLayout::new(a.base.n(), n_deg)?;
    let mut deformed_span = EchelonSet::new();
    for i in 0..a.base.relations().len() {
        deformed_span.insert(layout.flatten(&u.deformed_relation(i))?);
    }
    let mut derived_span = EchelonSet::new();
    for i in 0..a.base.n() {
        derived_span.insert(layout.flatten(&w.poly.contract_left(i))?);
    }
    if deformed_span.canonical_rows() != derived_span.canonical_rows() {
        return Err(AlgebraError::PotentialCheckFailed);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curved::nakayama_deformation_general;
    use crate::rational::{rat, rat_int};

    fn xyz_names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    /// Commutative polynomial relations in cyclic order:
    /// r1 = yz - zy, r2 = zx - xz, r3 = xy - yx.
    fn poly3() -> HomogeneousAlgebra {
        HomogeneousAlgebra::new(
            xyz_names(),
            2,
            vec![
                TensorElement::from_words_i64(3, 2, &[(&[1, 2], 1), (&[2, 1], -1)]),
                TensorElement::from_words_i64(3, 2, &[(&[2, 0], 1), (&[0, 2], -1)]),
                TensorElement::from_words_i64(3, 2, &[(&[0, 1], 1), (&[1, 0], -1)]),
            ],
        )
        .unwrap()
    }

    /// Same but with the last relation reweighted to xy - 2yx.
    fn perturbed3() -> HomogeneousAlgebra {
        HomogeneousAlgebra::new(
            xyz_names(),
            2,
            vec![
                TensorElement::from_words_i64(3, 2, &[(&[1, 2], 1), (&[2, 1], -1)]),
                TensorElement::from_words_i64(3, 2, &[(&[2, 0], 1), (&[0, 2], -1)]),
                TensorElement::from_words_i64(3, 2, &[(&[0, 1], 1), (&[1, 0], -2)]),
            ],
        )
        .unwrap()
    }

    /// Cubic pair x^2y + yx^2, xy^2 + y^2x: Calabi-Yau of type A(0,-1).
    fn cubic_cy() -> HomogeneousAlgebra {
        HomogeneousAlgebra::new(
            vec!["x".into(), "y".into()],
            3,
            vec![
                TensorElement::from_words_i64(2, 3, &[(&[0, 0, 1], 1), (&[1, 0, 0], 1)]),
                TensorElement::from_words_i64(2, 3, &[(&[0, 1, 1], 1), (&[1, 1, 0], 1)]),
            ],
        )
        .unwrap()
    }

    /// Cubic pair x^2y - yx^2, xy^2 - y^2x: regular but not Calabi-Yau.
    fn cubic_noncy() -> HomogeneousAlgebra {
        HomogeneousAlgebra::new(
            vec!["x".into(), "y".into()],
            3,
            vec![
                TensorElement::from_words_i64(2, 3, &[(&[0, 0, 1], 1), (&[1, 0, 0], -1)]),
                TensorElement::from_words_i64(2, 3, &[(&[0, 1, 1], 1), (&[1, 1, 0], -1)]),
            ],
        )
        .unwrap()
    }

    fn heisenberg() -> Deformation {
        let mut a1 = Matrix::zero(3, 3).unwrap();
        // xy - yx - z
        a1.set(2, 2, rat_int(-1));
        let a2 = Matrix::zero(3, 1).unwrap();
        Deformation::new(poly3(), vec![a1, a2]).unwrap()
    }

    /// Tails a1(r2) = -z, a1(r3) = y: the Lie bracket [x,y] = -y,
    /// [x,z] = -z written additively.
    fn non_unimodular() -> Deformation {
        let mut a1 = Matrix::zero(3, 3).unwrap();
        a1.set(1, 2, rat_int(-1));
        a1.set(2, 1, rat_int(1));
        let a2 = Matrix::zero(3, 1).unwrap();
        Deformation::new(poly3(), vec![a1, a2]).unwrap()
    }

    /// xy - yx - 1 with the other two relations undeformed.
    fn weyl_like() -> Deformation {
        let a1 = Matrix::zero(3, 3).unwrap();
        let mut a2 = Matrix::zero(3, 1).unwrap();
        a2.set(2, 0, rat_int(-1));
        Deformation::new(poly3(), vec![a1, a2]).unwrap()
    }

    #[test]
    fn polynomial_structure_is_trivial() {
        let a = build_dim3(poly3()).unwrap();
        assert_eq!(a.q1(), &Matrix::identity(3));
        assert_eq!(a.q2(), &Matrix::identity(3));
        assert!(cy_check3(&a));
        assert!(nakayama_graded3(&a).unwrap().is_identity());
        // z = xyz - xzy - yxz + yzx + zxy - zyx
        assert_eq!(a.z().coeff(&[0, 1, 2]), rat_int(1));
        assert_eq!(a.z().coeff(&[2, 1, 0]), rat_int(-1));
        assert!(is_superpotential(a.z()));
    }

    #[test]
    fn perturbed_weights_break_cy() {
        let a = build_dim3(perturbed3()).unwrap();
        assert_eq!(a.q1(), &Matrix::from_i64(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(a.q2(), &Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]));
        assert!(!cy_check3(&a));
        assert!(!is_superpotential(a.z()));
        let zeta = nakayama_graded3(&a).unwrap();
        assert_eq!(
            zeta.linear(),
            &Matrix::from_rows(vec![
                vec![rat_int(2), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat(1, 2), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
            ])
            .unwrap()
        );
    }

    #[test]
    fn wrong_relation_count_is_rejected() {
        let two = HomogeneousAlgebra::new(
            xyz_names(),
            2,
            vec![
                TensorElement::from_words_i64(3, 2, &[(&[1, 2], 1), (&[2, 1], -1)]),
                TensorElement::from_words_i64(3, 2, &[(&[2, 0], 1), (&[0, 2], -1)]),
            ],
        )
        .unwrap();
        assert!(matches!(
            build_dim3(two),
            Err(AlgebraError::NotGorensteinCandidate(_))
        ));
    }

    #[test]
    fn fat_top_component_is_rejected() {
        // xy, yx: the intersection R(x)V and V(x)R is two dimensional
        let a = HomogeneousAlgebra::new(
            vec!["x".into(), "y".into()],
            2,
            vec![
                TensorElement::from_words_i64(2, 2, &[(&[0, 1], 1)]),
                TensorElement::from_words_i64(2, 2, &[(&[1, 0], 1)]),
            ],
        )
        .unwrap();
        assert!(matches!(
            build_dim3(a),
            Err(AlgebraError::NotGorensteinCandidate(_))
        ));
    }

    #[test]
    fn yoneda_on_the_polynomial_dual() {
        let a = build_dim3(poly3()).unwrap();
        let x = vec![rat_int(1), rat_int(0), rat_int(0)];
        let y = vec![rat_int(0), rat_int(1), rat_int(0)];
        let r3 = vec![rat_int(0), rat_int(0), rat_int(1)];
        // x* y* = r3*, y* x* = -r3*
        let p = yoneda_products(&a, &x, &y, &r3).unwrap();
        assert_eq!(p.alpha_beta, vec![rat_int(0), rat_int(0), rat_int(1)]);
        let q = yoneda_products(&a, &y, &x, &r3).unwrap();
        assert_eq!(q.alpha_beta, vec![rat_int(0), rat_int(0), rat_int(-1)]);
        // r3* . z* and z* . r3* both hit z* with coefficient 1
        let z = vec![rat_int(0), rat_int(0), rat_int(1)];
        let r = yoneda_products(&a, &z, &x, &r3).unwrap();
        assert_eq!(r.gamma_alpha, rat_int(1));
        assert_eq!(r.alpha_gamma, rat_int(1));
        // squares of generators vanish
        let s = yoneda_products(&a, &x, &x, &r3).unwrap();
        assert!(s.alpha_beta.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn cubic_yoneda_squares_are_zero() {
        let a = build_dim3(cubic_cy()).unwrap();
        let x = vec![rat_int(1), rat_int(0)];
        let y = vec![rat_int(0), rat_int(1)];
        let p = yoneda_products(&a, &x, &y, &y).unwrap();
        assert!(p.alpha_beta.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn cubic_cy_structure() {
        let a = build_dim3(cubic_cy()).unwrap();
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.q1(), &swap);
        assert_eq!(a.q2(), &swap);
        assert!(cy_check3(&a));
        assert!(is_superpotential(a.z()));
        assert!(nakayama_graded3(&a).unwrap().is_identity());
        // z = x^2y^2 + xy^2x + yx^2y + y^2x^2
        assert_eq!(a.z().coeff(&[0, 0, 1, 1]), rat_int(1));
        assert_eq!(a.z().coeff(&[0, 1, 1, 0]), rat_int(1));
        assert_eq!(a.z().coeff(&[1, 0, 0, 1]), rat_int(1));
        assert_eq!(a.z().coeff(&[1, 1, 0, 0]), rat_int(1));
        // and it is a Gorenstein candidate with the right growth
        assert!(cubic_cy().gorenstein_candidate_check(6).unwrap().holds());
    }

    #[test]
    fn cubic_noncy_twists_by_minus_one() {
        let a = build_dim3(cubic_noncy()).unwrap();
        assert!(!cy_check3(&a));
        assert!(!is_superpotential(a.z()));
        let zeta = nakayama_graded3(&a).unwrap();
        assert_eq!(zeta.linear(), &Matrix::identity(2).neg());
    }

    #[test]
    fn heisenberg_translation_vanishes() {
        let a = build_dim3(poly3()).unwrap();
        let u = heisenberg();
        assert_eq!(psi_vector(&a, &u).unwrap(), vec![rat_int(0); 3]);
        assert_eq!(compat_check(&a, &u).unwrap(), vec![true, true]);
        let m = nakayama_deformed3(&a, &u).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn non_unimodular_translation() {
        let a = build_dim3(poly3()).unwrap();
        let u = non_unimodular();
        assert_eq!(
            psi_vector(&a, &u).unwrap(),
            vec![rat_int(-2), rat_int(0), rat_int(0)]
        );
        assert_eq!(compat_check(&a, &u).unwrap(), vec![false, true]);
        let m = nakayama_deformed3(&a, &u).unwrap();
        assert_eq!(m.linear(), &Matrix::identity(3));
        assert_eq!(m.constant(), &[rat_int(-2), rat_int(0), rat_int(0)]);
        assert!(matches!(
            build_potential_cy(&a, &u),
            Err(AlgebraError::NotCompatible { tail_degree: 1 })
        ));
    }

    #[test]
    fn quadratic_translations_match_the_curved_module() {
        let a = build_dim3(poly3()).unwrap();
        for u in [heisenberg(), non_unimodular(), weyl_like()] {
            let via_dual = nakayama_deformation_general(&u, 3).unwrap();
            let via_expansion = nakayama_deformed3(&a, &u).unwrap();
            assert_eq!(via_dual, via_expansion);
        }
    }

    #[test]
    fn potential_for_the_weyl_like_deformation() {
        let a = build_dim3(poly3()).unwrap();
        let u = weyl_like();
        assert_eq!(compat_check(&a, &u).unwrap(), vec![true, true]);
        let w = build_potential_cy(&a, &u).unwrap();
        assert_eq!(w.top_degree(), 3);
        assert_eq!(w.poly().part(3), *a.z());
        assert!(w.poly().part(2).is_zero());
        // degree-1 term is -z
        assert_eq!(
            w.poly().part(1),
            TensorElement::from_words_i64(3, 1, &[(&[2], -1)])
        );
    }

    #[test]
    fn heisenberg_round_trip_through_its_potential() {
        let a = build_dim3(poly3()).unwrap();
        let u = heisenberg();
        let w = build_potential_cy(&a, &u).unwrap();
        // degree-2 part is -z(x)z
        assert_eq!(
            w.poly().part(2),
            TensorElement::from_words_i64(3, 2, &[(&[2, 2], -1)])
        );
        let back = relations_from_potential(&w, xyz_names()).unwrap();
        // with Q1 = 1 the derived presentation is the deformation itself
        assert_eq!(back.base().relations(), u.base().relations());
        assert_eq!(back.tails(), u.tails());
    }

    #[test]
    fn cubic_central_extension_round_trip() {
        let a = build_dim3(cubic_cy()).unwrap();
        // degree-1 tails x and y, no degree-2 tails
        let a1 = Matrix::zero(2, 4).unwrap();
        let mut a2 = Matrix::zero(2, 2).unwrap();
        a2.set(0, 0, rat_int(1));
        a2.set(1, 1, rat_int(1));
        let a3 = Matrix::zero(2, 1).unwrap();
        let u = Deformation::new(cubic_cy(), vec![a1, a2, a3]).unwrap();
        assert_eq!(compat_check(&a, &u).unwrap(), vec![true, true, true]);
        let w = build_potential_cy(&a, &u).unwrap();
        assert!(is_potential(&w));
        // the degree-2 term is xy + yx
        assert_eq!(
            w.poly().part(2),
            TensorElement::from_words_i64(2, 2, &[(&[0, 1], 1), (&[1, 0], 1)])
        );
        let back = relations_from_potential(&w, vec!["x".into(), "y".into()]).unwrap();
        // derivatives come out in swapped order; spans must agree
        let layout = FiltrationLayout::new(2, 3).unwrap();
        let mut left = EchelonSet::new();
        let mut right = EchelonSet::new();
        for i in 0..2 {
            left.insert(layout.flatten(&back.deformed_relation(i)).unwrap());
            right.insert(layout.flatten(&u.deformed_relation(i)).unwrap());
        }
        assert_eq!(left.canonical_rows(), right.canonical_rows());
    }

    #[test]
    fn cubic_extension_nakayama_is_identity() {
        let a = build_dim3(cubic_cy()).unwrap();
        let a1 = Matrix::zero(2, 4).unwrap();
        let mut a2 = Matrix::zero(2, 2).unwrap();
        a2.set(0, 0, rat_int(1));
        a2.set(1, 1, rat_int(1));
        let a3 = Matrix::zero(2, 1).unwrap();
        let u = Deformation::new(cubic_cy(), vec![a1, a2, a3]).unwrap();
        let m = nakayama_deformed3(&a, &u).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn incompatible_tail_is_rejected() {
        let a = build_dim3(perturbed3()).unwrap();
        // a1(r1) = x pushes psi(z) = -x(x)x outside the relation span
        let mut a1 = Matrix::zero(3, 3).unwrap();
        a1.set(0, 0, rat_int(1));
        let a2 = Matrix::zero(3, 1).unwrap();
        let u = Deformation::new(perturbed3(), vec![a1, a2]).unwrap();
        assert!(matches!(
            psi_vector(&a, &u),
            Err(AlgebraError::DeformationIncompatible(_))
        ));
    }

    #[test]
    fn rescaling_a_relation_leaves_the_map_unchanged() {
        let a = build_dim3(poly3()).unwrap();
        let m = nakayama_deformed3(&a, &non_unimodular()).unwrap();

        let scaled = HomogeneousAlgebra::new(
            xyz_names(),
            2,
            vec![
                TensorElement::from_words_i64(3, 2, &[(&[1, 2], 1), (&[2, 1], -1)]),
                TensorElement::from_words_i64(3, 2, &[(&[2, 0], 3), (&[0, 2], -3)]),
                TensorElement::from_words_i64(3, 2, &[(&[0, 1], 1), (&[1, 0], -1)]),
            ],
        )
        .unwrap();
        let mut a1 = Matrix::zero(3, 3).unwrap();
        a1.set(1, 2, rat_int(-3));
        a1.set(2, 1, rat_int(1));
        let a2 = Matrix::zero(3, 1).unwrap();
        let u = Deformation::new(scaled.clone(), vec![a1, a2]).unwrap();
        let b = build_dim3(scaled).unwrap();
        assert_eq!(b.q1(), &Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat(1, 3), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ])
        .unwrap());
        assert_eq!(nakayama_deformed3(&b, &u).unwrap(), m);
    }

    #[test]
    fn degenerate_potential_is_rejected() {
        // w = x^3 on two generators: the y-derivative vanishes
        let w = Potential::new(TensorPoly::from_part(
            TensorElement::from_words_i64(2, 3, &[(&[0, 0, 0], 1)]),
        ))
        .unwrap();
        assert!(matches!(
            relations_from_potential(&w, vec!["x".into(), "y".into()]),
            Err(AlgebraError::DegenerateRelations)
        ));
    }

    #[test]
    fn non_potential_fails_the_check() {
        let mut poly = TensorPoly::from_part(build_dim3(cubic_cy()).unwrap().z().clone());
        poly.add_part(TensorElement::from_words_i64(
            2,
            2,
            &[(&[0, 1], 1), (&[1, 0], -1)],
        ));
        let w = Potential::new(poly).unwrap();
        assert!(!is_potential(&w));
    }

    #[test]
    fn deformation_over_wrong_base_is_rejected() {
        let a = build_dim3(poly3()).unwrap();
        let mut a1 = Matrix::zero(3, 3).unwrap();
        a1.set(0, 0, rat_int(1));
        let a2 = Matrix::zero(3, 1).unwrap();
        let u = Deformation::new(perturbed3(), vec![a1, a2]).unwrap();
        assert!(matches!(
            psi_vector(&a, &u),
            Err(AlgebraError::InvalidAlgebra(_))
        ));
    }
}

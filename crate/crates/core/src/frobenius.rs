//! Finite-dimensional graded algebras and their Frobenius structure.
//!
//! A graded Frobenius algebra of length d pairs B_i against B_{d-i} through
//! the coefficient of a fixed top-degree basis vector. When every pairing
//! matrix is invertible there is a unique graded automorphism phi with
//! <a,b> = <b,phi(a)>; it is solved degree by degree and re-verified against
//! the defining identity and multiplicativity.

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::homog::GradedQuotient;
use crate::matrix::Matrix;
use crate::rational::{rat_int, Rational};

/// A graded algebra B_0 + ... + B_d with dim B_0 = 1, given by structure
/// constants. Products landing beyond degree d are zero, i.e. the algebra
/// is truncated at its length.
#[derive(Debug, Clone)]
pub struct GradedFiniteAlgebra {
    dims: Vec<usize>,
    /// products[i][j][a][b] = coordinates of e_a e_b in degree i+j,
    /// present for i + j <= length
    products: Vec<Vec<Vec<Vec<Vec<Rational>>>>>,
    labels: Vec<Vec<String>>,
}

impl GradedFiniteAlgebra {
    /// Validates unit behavior and associativity on all basis triples.
    pub fn new(
        dims: Vec<usize>,
        products: Vec<Vec<Vec<Vec<Vec<Rational>>>>>,
        labels: Vec<Vec<String>>,
    ) -> Result<Self> {
        if dims.is_empty() || dims[0] != 1 {
            return Err(AlgebraError::InvalidAlgebra(
                "degree 0 must be one-dimensional".into(),
            ));
        }
        let alg = GradedFiniteAlgebra { dims, products, labels };
        let d = alg.length();
        for i in 0..=d {
            for j in 0..=d - i {
                for a in 0..alg.dims[i] {
                    for b in 0..alg.dims[j] {
                        let p = alg.product_basis(i, a, j, b);
                        if p.len() != alg.dims[i + j] {
                            return Err(AlgebraError::InvalidAlgebra(format!(
                                "product table ({i},{j}) has wrong target dimension"
                            )));
                        }
                    }
                }
            }
        }
        // unit
        for j in 0..=d {
            for b in 0..alg.dims[j] {
                let left = alg.product_basis(0, 0, j, b);
                let right = alg.product_basis(j, b, 0, 0);
                for c in 0..alg.dims[j] {
                    let want = if c == b { rat_int(1) } else { rat_int(0) };
                    if left[c] != want || right[c] != want {
                        return Err(AlgebraError::InvalidAlgebra(
                            "degree-0 basis vector is not a two-sided unit".into(),
                        ));
                    }
                }
            }
        }
        // associativity
        for i in 0..=d {
            for j in 0..=d - i {
                for k in 0..=d - i - j {
                    for a in 0..alg.dims[i] {
                        for b in 0..alg.dims[j] {
                            let ab = alg.product_basis(i, a, j, b).to_vec();
                            for c in 0..alg.dims[k] {
                                let bc = alg.product_basis(j, b, k, c).to_vec();
                                let lhs = alg.product_mixed(i + j, &ab, k, c);
                                let rhs = alg.product_mixed_left(i, a, j + k, &bc);
                                if lhs != rhs {
                                    return Err(AlgebraError::InvalidAlgebra(format!(
                                        "associativity fails on degrees ({i},{j},{k})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Truncation of a word-space quotient at the given length.
    pub fn from_quotient(q: &GradedQuotient) -> Result<Self> {
        let d = q.length();
        let names = q.algebra().generator_names();
        let dims: Vec<usize> = (0..=d).map(|m| q.dim(m)).collect();
        let mut products = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let mut row = Vec::new();
            for j in 0..=d - i {
                let mut table = Vec::with_capacity(dims[i]);
                for a in 0..dims[i] {
                    let mut per_a = Vec::with_capacity(dims[j]);
                    for b in 0..dims[j] {
                        per_a.push(q.product_coords(i, a, j, b));
                    }
                    table.push(per_a);
                }
                row.push(table);
            }
            products.push(row);
        }
        let labels = (0..=d)
            .map(|m| {
                (0..q.dim(m))
                    .map(|k| {
                        let w = &q.component(m).rep_words()[k];
                        if w.is_empty() {
                            "1".to_string()
                        } else {
                            w.iter().map(|&i| names[i].clone()).collect::<String>()
                        }
                    })
                    .collect()
            })
            .collect();
        GradedFiniteAlgebra::new(dims, products, labels)
    }

    pub fn length(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        if i < self.dims.len() {
            self.dims[i]
        } else {
            0
        }
    }

    pub fn labels(&self, i: usize) -> &[String] {
        &self.labels[i]
    }

    /// e_a e_b as coordinates in degree i+j; empty slice when the product
    /// degree exceeds the length.
    pub fn product_basis(&self, i: usize, a: usize, j: usize, b: usize) -> &[Rational] {
        if i >= self.products.len() || j >= self.products[i].len() {
            return &[];
        }
        &self.products[i][j][a][b]
    }

    /// (v in degree i) * e_c with v given by coordinates.
    fn product_mixed(&self, i: usize, v: &[Rational], k: usize, c: usize) -> Vec<Rational> {
        let mut out = vec![rat_int(0); self.dim(i + k)];
        for (a, va) in v.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for (t, pc) in self.product_basis(i, a, k, c).iter().enumerate() {
                out[t] += va.clone() * pc.clone();
            }
        }
        out
    }

    fn product_mixed_left(&self, i: usize, a: usize, k: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![rat_int(0); self.dim(i + k)];
        for (c, vc) in v.iter().enumerate() {
            if vc.is_zero() {
                continue;
            }
            for (t, pc) in self.product_basis(i, a, k, c).iter().enumerate() {
                out[t] += vc.clone() * pc.clone();
            }
        }
        out
    }

    /// Bilinear product on coordinate vectors.
    pub fn product(&self, i: usize, u: &[Rational], j: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![rat_int(0); self.dim(i + j)];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                for (t, pc) in self.product_basis(i, a, j, b).iter().enumerate() {
                    out[t] += ua.clone() * vb.clone() * pc.clone();
                }
            }
        }
        out
    }

    /// Basis change replacing the top-degree basis vector e by c e. A
    /// product of two lower-degree elements landing in the top degree
    /// rescales by 1/c; blocks with a top-degree factor pick up a
    /// compensating c from the input basis and stay fixed. All structural
    /// invariants are preserved, so no revalidation is needed.
    pub fn rescale_top(&self, c: &Rational) -> Result<GradedFiniteAlgebra> {
        if c.is_zero() {
            return Err(AlgebraError::InvalidAlgebra("zero rescaling".into()));
        }
        let inv = rat_int(1) / c.clone();
        let d = self.length();
        let mut products = self.products.clone();
        for (i, row) in products.iter_mut().enumerate() {
            for (j, block) in row.iter_mut().enumerate() {
                if i + j != d || i == 0 || j == 0 {
                    continue;
                }
                for per_a in block.iter_mut() {
                    for coords in per_a.iter_mut() {
                        for v in coords.iter_mut() {
                            *v *= inv.clone();
                        }
                    }
                }
            }
        }
        Ok(GradedFiniteAlgebra {
            dims: self.dims.clone(),
            products,
            labels: self.labels.clone(),
        })
    }
}

/// Frobenius structure: the pairing matrices and the automorphism solved
/// from them, one matrix per degree.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    length: usize,
    /// pairing[i][a][b] = coefficient of the top basis vector in e_a e_b,
    /// a in degree i, b in degree d-i
    pairing: Vec<Matrix>,
    /// nakayama[i] is the matrix of phi on degree i: phi(e_a) is column a
    nakayama: Vec<Matrix>,
}

impl FrobeniusData {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn pairing(&self, i: usize) -> &Matrix {
        &self.pairing[i]
    }

    /// Pairing matrices after the top basis vector is rescaled to c times
    /// itself; the boundary pairings against the unit and the solved
    /// automorphism matrices are invariant under this.
    pub(crate) fn rescale_pairings(&self, c: &Rational) -> FrobeniusData {
        let inv = rat_int(1) / c.clone();
        let pairing = self
            .pairing
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if i == 0 || i == self.length { g.clone() } else { g.scale(&inv) }
            })
            .collect();
        FrobeniusData { length: self.length, pairing, nakayama: self.nakayama.clone() }
    }

    pub fn nakayama(&self, i: usize) -> &Matrix {
        &self.nakayama[i]
    }
}

/// Detects the Frobenius structure of a graded finite algebra.
///
/// The top basis vector is the chosen degree-d basis element; the pairing
/// of a and b is the coefficient of that vector in ab. The automorphism is
/// solved per degree from <a,b> = <b,phi(a)> and then re-verified, both
/// against the defining identity and for multiplicativity.
pub fn frobenius_detect(b: &GradedFiniteAlgebra) -> Result<FrobeniusData> {
    let d = b.length();
    if b.dim(d) != 1 {
        return Err(AlgebraError::NotFrobenius { degree: d });
    }
    let mut pairing = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let rows = b.dim(i);
        let cols = b.dim(d - i);
        if rows != cols {
            return Err(AlgebraError::NotFrobenius { degree: i });
        }
        let mut g = Matrix::zero(rows, cols)?;
        for a in 0..rows {
            for c in 0..cols {
                g.set(a, c, b.product_basis(i, a, d - i, c)[0].clone());
            }
        }
        if rows > 0 && g.inverse().is_err() {
            return Err(AlgebraError::NotFrobenius { degree: i });
        }
        pairing.push(g);
    }
    let mut nakayama = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let g_i = &pairing[i];
        let g_opp = &pairing[d - i];
        let phi = if g_i.rows() == 0 {
            Matrix::zero(0, 0)?
        } else {
            g_opp.inverse()?.mul(&g_i.transpose())?
        };
        nakayama.push(phi);
    }
    let data = FrobeniusData { length: d, pairing, nakayama };
    // defining identity, independent of the solve
    for i in 0..=d {
        for a in 0..b.dim(i) {
            for c in 0..b.dim(d - i) {
                let lhs = data.pairing[i].get(a, c).clone();
                // <e_c, phi(e_a)>: phi(e_a) is column a of nakayama[i]
                let mut rhs = rat_int(0);
                for t in 0..b.dim(i) {
                    rhs += data.pairing[d - i].get(c, t).clone()
                        * data.nakayama[i].get(t, a).clone();
                }
                if lhs != rhs {
                    return Err(AlgebraError::Internal(
                        "pairing identity fails after solve".into(),
                    ));
                }
            }
        }
    }
    // multiplicativity on basis pairs
    for i in 0..=d {
        for j in 0..=d - i {
            for a in 0..b.dim(i) {
                for c in 0..b.dim(j) {
                    let prod = b.product_basis(i, a, j, c).to_vec();
                    let lhs = apply_column(&data.nakayama[i + j], &prod);
                    let phi_a = column(&data.nakayama[i], a);
                    let phi_c = column(&data.nakayama[j], c);
                    let rhs = b.product(i, &phi_a, j, &phi_c);
                    if lhs != rhs {
                        return Err(AlgebraError::Internal(
                            "solved automorphism is not multiplicative".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(data)
}

/// Whether <a,b> = (-1)^{i(d-i)} <b,a> on all basis pairs.
pub fn is_graded_symmetric(f: &FrobeniusData) -> bool {
    let d = f.length;
    (0..=d).all(|i| {
        let sign = if (i * (d - i)) % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        let g = &f.pairing[i];
        let h = &f.pairing[d - i];
        (0..g.rows()).all(|a| {
            (0..g.cols()).all(|b| *g.get(a, b) == h.get(b, a).clone() * sign.clone())
        })
    })
}

/// The length-2 algebra k + V + k z with x y = (a M b^t) z for coordinate
/// rows a, b.
pub fn length2_from_matrix(m: &Matrix) -> Result<GradedFiniteAlgebra> {
    if m.rows() != m.cols() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "need a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    m.inverse()?;
    let n = m.rows();
    let dims = vec![1, n, 1];
    let unit_row = |dim_j: usize| -> Vec<Vec<Vec<Rational>>> {
        vec![(0..dim_j)
            .map(|b| {
                (0..dim_j)
                    .map(|c| if b == c { rat_int(1) } else { rat_int(0) })
                    .collect::<Vec<Rational>>()
            })
            .collect::<Vec<Vec<Rational>>>()]
    };
    let mut products: Vec<Vec<Vec<Vec<Vec<Rational>>>>> = Vec::new();
    // degree 0 row: (0,0), (0,1), (0,2)
    products.push(vec![
        unit_row(1),
        unit_row(n),
        unit_row(1),
    ]);
    // degree 1 row: (1,0), (1,1)
    let by_unit: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|a| {
            vec![(0..n)
                .map(|c| if a == c { rat_int(1) } else { rat_int(0) })
                .collect::<Vec<Rational>>()]
        })
        .collect();
    let deg11: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|a| (0..n).map(|b| vec![m.get(a, b).clone()]).collect())
        .collect();
    products.push(vec![by_unit, deg11]);
    // degree 2 row: (2,0)
    products.push(vec![vec![vec![vec![rat_int(1)]]]]);
    let labels = vec![
        vec!["1".to_string()],
        (1..=n).map(|i| format!("x{i}")).collect(),
        vec!["z".to_string()],
    ];
    GradedFiniteAlgebra::new(dims, products, labels)
}

/// Degree-1 matrix of the Nakayama automorphism of the length-2 algebra.
pub fn length2_nakayama(m: &Matrix) -> Result<Matrix> {
    m.inverse()?.mul(&m.transpose())
}

fn column(m: &Matrix, j: usize) -> Vec<Rational> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn apply_column(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
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

/// Sign automorphism value on degree i composed d+1 times, as a scalar:
/// (-1)^{(d+1) i}.
pub fn epsilon_power(d: usize, i: usize) -> Rational {
    if ((d + 1) * i) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

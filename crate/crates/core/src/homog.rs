//! N-homogeneous algebras T(V)/(R) and their filtered deformations.
//!
//! An algebra is presented by n generators and a list of linearly
//! independent relations, all of the same word length N >= 2. The graded
//! ideal component in degree d is built by the recursion
//! I_d = V (x) I_{d-1} + I_{d-1} (x) V, the Koszul dual is presented by the
//! orthogonal complement of the relation space, and quotient components
//! carry exact normal forms used for structure constants.
//!
//! A deformation adds to each relation a tail of strictly lower degree,
//! stored additively: the deformed relation is r + a_1(r) + ... + a_N(r)
//! with a_k(r) of degree N - k. Whether the deformed algebra has the same
//! size as the graded one is checked two ways: the degree-3 overlap
//! conditions (quadratic case) and a bounded filtration comparison that
//! works for every N.

use num_traits::Zero;

use crate::capacity::checked_power;
use crate::echelon::EchelonSet;
use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::rational::{rat_int, Rational};
use crate::subspace::Subspace;
use crate::tensor::{word_index, FiltrationLayout, TensorElement, TensorPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousAlgebra {
    n: usize,
    relation_degree: usize,
    /// Ordered basis of the relation space; the input order is authoritative
    /// for every matrix extracted downstream.
    relations: Vec<TensorElement>,
    generator_names: Vec<String>,
}

impl HomogeneousAlgebra {
    pub fn new(
        generator_names: Vec<String>,
        relation_degree: usize,
        relations: Vec<TensorElement>,
    ) -> Result<Self> {
        let n = generator_names.len();
        if n == 0 {
            return Err(AlgebraError::Parse("algebra needs at least one generator".into()));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for name in &generator_names {
                if name.is_empty() || !seen.insert(name.clone()) {
                    return Err(AlgebraError::Parse(format!(
                        "generator names must be nonempty and distinct, got {generator_names:?}"
                    )));
                }
            }
        }
        if relation_degree < 2 {
            return Err(AlgebraError::WrongN { expected: 2, found: relation_degree });
        }
        checked_power(n, relation_degree)?;
        let mut ech = EchelonSet::new();
        for r in &relations {
            if r.degree() != relation_degree || r.n() != n {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "relation of degree {} over {} generators in a degree-{} presentation",
                    r.degree(),
                    r.n(),
                    relation_degree
                )));
            }
            if !ech.insert(r.to_sparse()) {
                return Err(AlgebraError::Parse(
                    "relations must be nonzero and linearly independent".into(),
                ));
            }
        }
        Ok(HomogeneousAlgebra { n, relation_degree, relations, generator_names })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relation_degree(&self) -> usize {
        self.relation_degree
    }

    pub fn relations(&self) -> &[TensorElement] {
        &self.relations
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// The relation space with its canonical basis.
    pub fn relation_subspace(&self) -> Result<Subspace> {
        let ambient = checked_power(self.n, self.relation_degree)?;
        let rows = self
            .relations
            .iter()
            .map(|r| r.to_dense())
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_rows(ambient, rows)
    }

    /// Coordinates of t in the ordered relation basis, if t lies in R.
    pub fn relation_coordinates(&self, t: &TensorElement) -> Option<Vec<Rational>> {
        if t.degree() != self.relation_degree || t.n() != self.n {
            return None;
        }
        let rows: Vec<Vec<Rational>> =
            self.relations.iter().map(|r| r.to_dense().ok()).collect::<Option<_>>()?;
        let mat = Matrix::from_rows(rows).ok()?;
        let target = t.to_dense().ok()?;
        // solve coeffs * rows = target, i.e. rows^T * coeffs^T = target^T
        let sol = mat.transpose().solve(&target)?;
        // the relations are independent, but solve() can return a spurious
        // least-norm witness only when the system is consistent; verify.
        let mut check = TensorElement::zero(self.n, self.relation_degree);
        for (c, r) in sol.iter().zip(&self.relations) {
            check = check.add(&r.scale(c));
        }
        if check == *t {
            Some(sol)
        } else {
            None
        }
    }

    /// Degree-d component of the two-sided ideal generated by the relations.
    pub fn ideal_component(&self, d: usize) -> Result<Subspace> {
        let ambient = checked_power(self.n, d)?;
        let mut cache = IdealCache::new();
        let ech = cache.component(self, d)?;
        Subspace::from_echelon(ambient, ech)
    }

    /// dim A_d for d = 0..=d_max.
    pub fn hilbert_function(&self, d_max: usize) -> Result<Vec<usize>> {
        let mut cache = IdealCache::new();
        let mut out = Vec::with_capacity(d_max + 1);
        for d in 0..=d_max {
            let total = checked_power(self.n, d)?;
            let rank = cache.component(self, d)?.rank();
            out.push(total - rank);
        }
        Ok(out)
    }

    /// Dual presentation on the dual generators: relations are the
    /// orthogonal complement of the relation space.
    pub fn koszul_dual(&self) -> Result<HomogeneousAlgebra> {
        let names = self.generator_names.iter().map(|s| format!("{s}*")).collect();
        let complement = self.relation_subspace()?.orthogonal_complement();
        let relations = (0..complement.dim())
            .map(|i| {
                TensorElement::from_dense(self.n, self.relation_degree, complement.basis_row(i))
            })
            .collect::<Result<Vec<_>>>()?;
        HomogeneousAlgebra::new(names, self.relation_degree, relations)
    }

    /// Jump degree of the m-th dual component.
    pub fn kappa(&self, m: usize) -> usize {
        let n_deg = self.relation_degree;
        if m % 2 == 0 {
            m / 2 * n_deg
        } else {
            (m - 1) / 2 * n_deg + 1
        }
    }

    /// The m-th component of the Koszul coalgebra: the intersection of all
    /// placements of the relation space in the jump degree. Only the
    /// components for m <= 3 are guaranteed meaningful when N >= 3.
    pub fn coalgebra_component(&self, m: usize) -> Result<Subspace> {
        match m {
            0 => Subspace::full(1),
            1 => Subspace::full(self.n),
            _ => {
                let kappa = self.kappa(m);
                let ambient = checked_power(self.n, kappa)?;
                let pad = kappa - self.relation_degree;
                let mut acc: Option<Subspace> = None;
                for left in 0..=pad {
                    let placement = self.placement_span(left, pad - left)?;
                    let placement = Subspace::from_echelon(ambient, &placement)?;
                    acc = Some(match acc {
                        None => placement,
                        Some(prev) => prev.intersect(&placement)?,
                    });
                }
                Ok(acc.expect("pad >= 0 gives at least one placement"))
            }
        }
    }

    /// Span of V^{(x)left} (x) R (x) V^{(x)right} as an echelon set.
    fn placement_span(&self, left: usize, right: usize) -> Result<EchelonSet> {
        let left_count = checked_power(self.n, left)?;
        let right_count = checked_power(self.n, right)?;
        checked_power(self.n, left + self.relation_degree + right)?;
        let rel_dim = checked_power(self.n, self.relation_degree)?;
        let mut ech = EchelonSet::new();
        for li in 0..left_count {
            for r in &self.relations {
                let base = r.to_sparse();
                for ri in 0..right_count {
                    let shifted = base.map_indices(|idx| {
                        (li * rel_dim + idx) * right_count + ri
                    });
                    ech.insert(shifted);
                }
            }
        }
        Ok(ech)
    }

    /// Quotient component A_m = V^{(x)m} / I_m with normal forms.
    pub fn quotient_component(&self, m: usize) -> Result<QuotientComponent> {
        let mut cache = IdealCache::new();
        self.quotient_component_cached(&mut cache, m)
    }

    pub fn quotient_component_cached(
        &self,
        cache: &mut IdealCache,
        m: usize,
    ) -> Result<QuotientComponent> {
        let dim_full = checked_power(self.n, m)?;
        let forward = cache.component(self, m)?;
        // reverse orientation: pivots on lex-largest words, so the
        // representatives are the lex-smallest complement words
        let mut rev = EchelonSet::new();
        for row in forward.canonical_rows() {
            rev.insert(row.map_indices(|i| dim_full - 1 - i));
        }
        let rep_words: Vec<Word> = (0..dim_full)
            .filter(|idx| !rev.has_pivot(dim_full - 1 - idx))
            .map(|idx| crate::tensor::unflatten(self.n, m, idx))
            .collect();
        Ok(QuotientComponent { n: self.n, degree: m, dim_full, rev, rep_words })
    }

    /// Checks the shape every finite-length dual candidate must have:
    /// as many relations as generators, a one-dimensional top coalgebra
    /// component, and the size series forced by that shape.
    pub fn gorenstein_candidate_check(&self, d_max: usize) -> Result<GorensteinCandidateReport> {
        let n = self.n;
        let n_deg = self.relation_degree;
        let relation_count_ok = self.relation_count() == n;
        let top_dim = self.coalgebra_component(3)?.dim();
        let hilbert = self.hilbert_function(d_max)?;
        // series 1 / (1 - n t + n t^N - t^{N+1})
        let mut expected = vec![0i64; d_max + 1];
        for d in 0..=d_max {
            let mut h: i64 = if d == 0 { 1 } else { 0 };
            let at = |e: i64, v: &Vec<i64>| -> i64 {
                if e >= 0 {
                    v[e as usize]
                } else {
                    0
                }
            };
            if d > 0 {
                h += n as i64 * at(d as i64 - 1, &expected);
                h -= n as i64 * at(d as i64 - n_deg as i64, &expected);
                h += at(d as i64 - n_deg as i64 - 1, &expected);
            }
            expected[d] = h;
        }
        let hilbert_ok = hilbert
            .iter()
            .zip(&expected)
            .all(|(a, b)| *b >= 0 && *a == *b as usize);
        Ok(GorensteinCandidateReport {
            relation_count_ok,
            top_coalgebra_dim: top_dim,
            top_ok: top_dim == 1,
            hilbert,
            expected_hilbert: expected,
            hilbert_ok,
            checked_up_to: d_max,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinCandidateReport {
    pub relation_count_ok: bool,
    pub top_coalgebra_dim: usize,
    pub top_ok: bool,
    pub hilbert: Vec<usize>,
    pub expected_hilbert: Vec<i64>,
    pub hilbert_ok: bool,
    pub checked_up_to: usize,
}

impl GorensteinCandidateReport {
    pub fn holds(&self) -> bool {
        self.relation_count_ok && self.top_ok && self.hilbert_ok
    }
}

/// Graded ideal components, built once per degree and reused.
#[derive(Debug, Default)]
pub struct IdealCache {
    comps: Vec<EchelonSet>,
}

impl IdealCache {
    pub fn new() -> Self {
        IdealCache { comps: Vec::new() }
    }

    pub fn component(&mut self, alg: &HomogeneousAlgebra, d: usize) -> Result<&EchelonSet> {
        while self.comps.len() <= d {
            let cur = self.comps.len();
            let n_deg = alg.relation_degree;
            let next = if cur < n_deg {
                EchelonSet::new()
            } else if cur == n_deg {
                let mut ech = EchelonSet::new();
                for r in &alg.relations {
                    ech.insert(r.to_sparse());
                }
                ech
            } else {
                checked_power(alg.n, cur)?;
                let prev_dim = checked_power(alg.n, cur - 1)?;
                let prev = &self.comps[cur - 1];
                let mut ech = EchelonSet::new();
                for row in prev.canonical_rows() {
                    for i in 0..alg.n {
                        // left multiplication shifts the whole block
                        ech.insert(row.map_indices(|idx| i * prev_dim + idx));
                    }
                    for i in 0..alg.n {
                        // right multiplication interleaves
                        ech.insert(row.map_indices(|idx| idx * alg.n + i));
                    }
                }
                ech
            };
            self.comps.push(next);
        }
        Ok(&self.comps[d])
    }

    pub fn rank(&mut self, alg: &HomogeneousAlgebra, d: usize) -> Result<usize> {
        Ok(self.component(alg, d)?.rank())
    }
}

/// A word-space quotient with exact normal forms. Representatives are the
/// lexicographically smallest words not reachable as leading terms of the
/// ideal component when leading is measured from the largest word down.
#[derive(Debug, Clone)]
pub struct QuotientComponent {
    n: usize,
    degree: usize,
    dim_full: usize,
    rev: EchelonSet,
    rep_words: Vec<Word>,
}

impl QuotientComponent {
    pub fn dim(&self) -> usize {
        self.rep_words.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rep_words(&self) -> &[Word] {
        &self.rep_words
    }

    pub fn rep_element(&self, k: usize) -> TensorElement {
        TensorElement::from_terms(self.n, self.degree, &[(self.rep_words[k].clone(), rat_int(1))])
            .expect("representative word is valid")
    }

    /// Canonical representative of t modulo the ideal component, supported
    /// on representative words only.
    pub fn normal_form(&self, t: &TensorElement) -> TensorElement {
        debug_assert_eq!(t.degree(), self.degree);
        let reversed = t.to_sparse().map_indices(|i| self.dim_full - 1 - i);
        let reduced = self.rev.reduce(reversed);
        let back = reduced.map_indices(|i| self.dim_full - 1 - i);
        TensorElement::from_sparse(self.n, self.degree, &back)
    }

    /// Coordinates in the representative basis.
    pub fn coords(&self, t: &TensorElement) -> Vec<Rational> {
        let nf = self.normal_form(t);
        self.rep_words.iter().map(|w| nf.coeff(w)).collect()
    }

    pub fn element_from_coords(&self, coords: &[Rational]) -> TensorElement {
        debug_assert_eq!(coords.len(), self.dim());
        let mut t = TensorElement::zero(self.n, self.degree);
        for (w, c) in self.rep_words.iter().zip(coords) {
            if !c.is_zero() {
                t.add_term(w.clone(), c.clone());
            }
        }
        t
    }
}

/// A graded quotient T(V)/(R) truncated at a length bound, with products
/// computed by concatenation followed by normal form.
#[derive(Debug, Clone)]
pub struct GradedQuotient {
    algebra: HomogeneousAlgebra,
    comps: Vec<QuotientComponent>,
}

impl GradedQuotient {
    pub fn new(algebra: &HomogeneousAlgebra, length: usize) -> Result<Self> {
        let mut cache = IdealCache::new();
        let comps = (0..=length)
            .map(|m| algebra.quotient_component_cached(&mut cache, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedQuotient { algebra: algebra.clone(), comps })
    }

    pub fn algebra(&self) -> &HomogeneousAlgebra {
        &self.algebra
    }

    pub fn length(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn component(&self, m: usize) -> &QuotientComponent {
        &self.comps[m]
    }

    /// Copy keeping only the components up to the given length.
    pub fn truncated(&self, length: usize) -> GradedQuotient {
        debug_assert!(length < self.comps.len());
        GradedQuotient {
            algebra: self.algebra.clone(),
            comps: self.comps[..=length].to_vec(),
        }
    }

    pub fn dim(&self, m: usize) -> usize {
        if m < self.comps.len() {
            self.comps[m].dim()
        } else {
            0
        }
    }

    /// Product of basis elements: coordinates of e_a * e_b in degree i+j.
    pub fn product_coords(&self, i: usize, a: usize, j: usize, b: usize) -> Vec<Rational> {
        let prod = self.comps[i].rep_element(a).tensor(&self.comps[j].rep_element(b));
        self.comps[i + j].coords(&prod)
    }

    /// Product of arbitrary elements given by coordinates.
    pub fn product(
        &self,
        i: usize,
        a_coords: &[Rational],
        j: usize,
        b_coords: &[Rational],
    ) -> Vec<Rational> {
        let a = self.comps[i].element_from_coords(a_coords);
        let b = self.comps[j].element_from_coords(b_coords);
        self.comps[i + j].coords(&a.tensor(&b))
    }
}

/// A filtered deformation of a homogeneous algebra: each relation r gains
/// lower-order tails, stored additively per tail degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    base: HomogeneousAlgebra,
    /// tails[k-1] has one row per relation and n^(N-k) columns: the
    /// degree-(N-k) tail added to each relation.
    tails: Vec<Matrix>,
}

impl Deformation {
    pub fn new(base: HomogeneousAlgebra, tails: Vec<Matrix>) -> Result<Self> {
        let n_deg = base.relation_degree();
        if tails.len() != n_deg {
            return Err(AlgebraError::DimensionMismatch(format!(
                "expected {} tail blocks, got {}",
                n_deg,
                tails.len()
            )));
        }
        for (k, t) in tails.iter().enumerate() {
            let want_cols = checked_power(base.n(), n_deg - (k + 1))?;
            if t.rows() != base.relation_count() || t.cols() != want_cols {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "tail block {} must be {}x{}, got {}x{}",
                    k + 1,
                    base.relation_count(),
                    want_cols,
                    t.rows(),
                    t.cols()
                )));
            }
        }
        Ok(Deformation { base, tails })
    }

    pub fn zero(base: HomogeneousAlgebra) -> Self {
        let n_deg = base.relation_degree();
        let rel = base.relation_count();
        let tails = (1..=n_deg)
            .map(|k| {
                Matrix::zero(rel, checked_power(base.n(), n_deg - k).expect("base admitted"))
                    .expect("tail within cap")
            })
            .collect();
        Deformation { base, tails }
    }

    pub fn base(&self) -> &HomogeneousAlgebra {
        &self.base
    }

    pub fn tails(&self) -> &[Matrix] {
        &self.tails
    }

    /// The degree-(N-k) tail of relation i, as an element.
    pub fn tail_element(&self, k: usize, i: usize) -> TensorElement {
        let deg = self.base.relation_degree() - k;
        TensorElement::from_dense(self.base.n(), deg, self.tails[k - 1].row(i))
            .expect("tail shape validated")
    }

    /// Tail applied to an arbitrary element of R given by relation-basis
    /// coordinates.
    pub fn tail_of(&self, k: usize, rel_coords: &[Rational]) -> TensorElement {
        let deg = self.base.relation_degree() - k;
        let mut out = TensorElement::zero(self.base.n(), deg);
        for (i, c) in rel_coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.tail_element(k, i).scale(c));
            }
        }
        out
    }

    pub fn deformed_relation(&self, i: usize) -> TensorPoly {
        let mut p = TensorPoly::from_part(self.base.relations()[i].clone());
        for k in 1..=self.base.relation_degree() {
            p.add_part(self.tail_element(k, i));
        }
        p
    }

    /// True when the scalar tail vanishes.
    pub fn is_augmented(&self) -> bool {
        self.tails[self.base.relation_degree() - 1].is_zero()
    }

    /// Copy with the scalar tail removed.
    pub fn augmented_truncation(&self) -> Deformation {
        let mut tails = self.tails.clone();
        let last = tails.len() - 1;
        tails[last] =
            Matrix::zero(self.base.relation_count(), 1).expect("scalar block within cap");
        Deformation { base: self.base.clone(), tails }
    }

    /// Degree-3 overlap conditions for quadratic deformations.
    ///
    /// With nu = -a_1 and th = -a_2, on every element c of the degree-3
    /// coalgebra component the following must hold:
    ///   (1) (nu(x)1 - 1(x)nu)(c) lies in R,
    ///   (2) nu applied to that element equals -(th(x)1 - 1(x)th)(c),
    ///   (3) th applied to that element vanishes.
    pub fn bg_check(&self) -> Result<BgReport> {
        let n_deg = self.base.relation_degree();
        if n_deg != 2 {
            return Err(AlgebraError::WrongN { expected: 2, found: n_deg });
        }
        let n = self.base.n();
        let overlap = self.base.coalgebra_component(3)?;
        let rel_space = self.base.relation_subspace()?;
        let mut failures = Vec::new();
        for c_idx in 0..overlap.dim() {
            let c = TensorElement::from_dense(n, 3, overlap.basis_row(c_idx))?;
            // expansions c = sum_j u_j (x) x_j = sum_i x_i (x) v_i
            let right_parts: Vec<TensorElement> = (0..n).map(|j| c.contract_right(j)).collect();
            let left_parts: Vec<TensorElement> = (0..n).map(|i| c.contract_left(i)).collect();
            let right_coords: Option<Vec<Vec<Rational>>> = right_parts
                .iter()
                .map(|t| self.base.relation_coordinates(t))
                .collect();
            let left_coords: Option<Vec<Vec<Rational>>> =
                left_parts.iter().map(|t| self.base.relation_coordinates(t)).collect();
            let (Some(right_coords), Some(left_coords)) = (right_coords, left_coords) else {
                return Err(AlgebraError::Internal(
                    "overlap element does not expand over the relation space".into(),
                ));
            };
            let nu_of = |coords: &[Rational]| -> TensorElement {
                self.tail_of(1, coords).scale(&rat_int(-1))
            };
            let theta_of = |coords: &[Rational]| -> Rational {
                -self.tail_of(2, coords).coeff(&[])
            };
            // (nu (x) 1)(c) - (1 (x) nu)(c)
            let mut g = TensorElement::zero(n, 2);
            for (j, coords) in right_coords.iter().enumerate() {
                g = g.add(&nu_of(coords).tensor(&TensorElement::generator(n, j)));
            }
            for (i, coords) in left_coords.iter().enumerate() {
                g = g.sub(&TensorElement::generator(n, i).tensor(&nu_of(coords)));
            }
            let g_dense = g.to_dense()?;
            if !rel_space.contains_vec(&g_dense) {
                failures.push(BgFailure { condition: 1, overlap_index: c_idx });
                continue;
            }
            let g_coords = self
                .base
                .relation_coordinates(&g)
                .expect("membership just verified");
            // condition 2
            let lhs = nu_of(&g_coords);
            let mut rhs = TensorElement::zero(n, 1);
            for (j, coords) in right_coords.iter().enumerate() {
                rhs = rhs.sub(&TensorElement::generator(n, j).scale(&theta_of(coords)));
            }
            for (i, coords) in left_coords.iter().enumerate() {
                rhs = rhs.add(&TensorElement::generator(n, i).scale(&theta_of(coords)));
            }
            if lhs != rhs {
                failures.push(BgFailure { condition: 2, overlap_index: c_idx });
            }
            // condition 3
            if !theta_of(&g_coords).is_zero() {
                failures.push(BgFailure { condition: 3, overlap_index: c_idx });
            }
        }
        Ok(BgReport { overlap_dim: overlap.dim(), failures })
    }

    /// Bounded filtration comparison: the span of all products a.p.b of the
    /// deformed relations (a, b words, total degree <= d_max + slack) is
    /// intersected with each filtration level T_{<=d} and compared against
    /// the graded ideal sizes. Excess in any degree <= d_max means the
    /// deformation collapses; equality everywhere is evidence of flatness
    /// up to the bound.
    pub fn pbw_check(&self, d_max: usize, slack: usize) -> Result<PbwReport> {
        let n_deg = self.base.relation_degree();
        if slack < n_deg {
            return Err(AlgebraError::DimensionMismatch(format!(
                "slack {} must be at least the relation degree {}",
                slack, n_deg
            )));
        }
        let n = self.base.n();
        let top = d_max + slack;
        let layout = FiltrationLayout::new(n, top)?;
        let mut ideal_cache = IdealCache::new();
        let mut expected = vec![0usize; d_max + 1];
        let mut acc = 0usize;
        for d in 0..=d_max {
            acc += ideal_cache.rank(&self.base, d)?;
            expected[d] = acc;
        }
        // breadth-first closure of the deformed relation span under
        // one-sided multiplication by generators
        let mut ech = EchelonSet::new();
        let mut queue: std::collections::VecDeque<TensorPoly> = (0..self.base.relation_count())
            .map(|i| self.deformed_relation(i))
            .collect();
        while let Some(p) = queue.pop_front() {
            let flat = layout.flatten(&p)?;
            if !ech.insert(flat) {
                continue;
            }
            let top_deg = p.top_degree().unwrap_or(0);
            if top_deg + 1 > top {
                continue;
            }
            for i in 0..n {
                let gen = TensorPoly::from_part(TensorElement::generator(n, i));
                queue.push_back(gen.mul(&p));
                queue.push_back(p.mul(&gen));
            }
        }
        // count pivots per filtration level
        let mut got = vec![0usize; d_max + 1];
        for p in ech.pivots() {
            let deg = layout.degree_of(p);
            if deg <= d_max {
                got[deg] += 1;
            }
        }
        for d in 1..=d_max {
            got[d] += got[d - 1];
        }
        let first_failure = (0..=d_max).find(|&d| got[d] != expected[d]);
        Ok(PbwReport {
            holds: first_failure.is_none(),
            verified_up_to: d_max,
            slack,
            first_failure,
            filtration_dims: got,
            expected_dims: expected,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BgFailure {
    /// 1, 2, or 3, matching the overlap conditions in order.
    pub condition: u8,
    pub overlap_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BgReport {
    pub overlap_dim: usize,
    pub failures: Vec<BgFailure>,
}

impl BgReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwReport {
    pub holds: bool,
    pub verified_up_to: usize,
    pub slack: usize,
    pub first_failure: Option<usize>,
    /// dim(W intersect T_{<=d}) for d = 0..=d_max
    pub filtration_dims: Vec<usize>,
    /// cumulative graded ideal dimensions
    pub expected_dims: Vec<usize>,
}

/// Polynomial algebra on the given names: relations x_j x_i - x_i x_j.
pub fn polynomial_algebra(names: &[&str]) -> Result<HomogeneousAlgebra> {
    let n = names.len();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            relations.push(TensorElement::from_words_i64(
                n,
                2,
                &[(&[i, j], 1), (&[j, i], -1)],
            ));
        }
    }
    HomogeneousAlgebra::new(names.iter().map(|s| s.to_string()).collect(), 2, relations)
}

/// Helper: word index of a pair (i, j) in degree 2.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    word_index(n, &[i, j])
}

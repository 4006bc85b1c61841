//! Command dispatch behind the CLI: each function takes parsed input and
//! options and produces a Report, leaving argument parsing and process
//! concerns to the binary.


use crate::curved::{
    build_curved_dual, cy_check_augmented, lambda_vector, nakayama_from_curved,
    theta_central_and_transfer,
};
use crate::dim2::{self, Dim2Algebra, Dim2Deformation};
use crate::dim3::{
    build_dim3, build_potential_cy, cy_check3, is_superpotential, nakayama_deformed3,
    psi_vector, relations_from_potential,
};
use crate::echelon::EchelonSet;
use crate::error::{AlgebraError, Result};
use crate::fileformat::{
    algebra_from_file, algebra_to_file, deformation_from_file, parse_algebra_file,
    poly_terms, AlgebraFile,
};
use crate::frobenius::{frobenius_detect, is_graded_symmetric, GradedFiniteAlgebra};
use crate::homog::{Deformation, GradedQuotient, HomogeneousAlgebra};
use crate::rational::format_rational;
use crate::report::{matrix_rows, vector_row, Report};
use crate::tensor::FiltrationLayout;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimChoice {
    Two,
    Three,
    General,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub max_degree: Option<usize>,
    pub slack: Option<usize>,
    pub dim: Option<DimChoice>,
    pub gldim: Option<usize>,
}

/// Shape-based default when --dim is not given: a single quadratic
/// relation selects the dimension-2 closed forms, n relations on n
/// generators the dimension-3 ones, anything else the general pipeline.
fn choose_dim(a: &HomogeneousAlgebra, opts: &RunOptions) -> DimChoice {
    if let Some(d) = opts.dim {
        return d;
    }
    if a.relation_count() == 1 && a.relation_degree() == 2 {
        DimChoice::Two
    } else if a.relation_count() == a.n() {
        DimChoice::Three
    } else {
        DimChoice::General
    }
}

fn require_gldim(opts: &RunOptions) -> Result<usize> {
    opts.gldim.ok_or_else(|| {
        AlgebraError::MissingOption(
            "the general pipeline needs --gldim <global dimension>".into(),
        )
    })
}

fn dim2_deformation(u: &Deformation) -> Result<Dim2Deformation> {
    let base = u.base();
    if base.relation_degree() != 2 {
        return Err(AlgebraError::WrongN { expected: 2, found: base.relation_degree() });
    }
    if base.relation_count() != 1 {
        return Err(AlgebraError::InvalidAlgebra(format!(
            "dimension-2 closed forms need exactly one relation, got {}",
            base.relation_count()
        )));
    }
    let n = base.n();
    let r = &base.relations()[0];
    let mut q = crate::matrix::Matrix::zero(n, n)?;
    for i in 0..n {
        for j in 0..n {
            q.set(i, j, r.coeff(&[i, j]));
        }
    }
    let a = Dim2Algebra::new(base.generator_names().to_vec(), q)?;
    let s = u.tails()[0].row(0).iter().map(|x| -x.clone()).collect();
    let c = -u.tails()[1].get(0, 0).clone();
    Dim2Deformation::new(a, s, c)
}

pub fn run_dual(file: &AlgebraFile) -> Result<Report> {
    let a = algebra_from_file(file)?;
    let dual = a.koszul_dual()?;
    let mut report = Report::new("dual", file.clone());
    report
        .values
        .insert("dual_relation_count".into(), dual.relation_count().to_string());
    report.dual = Some(algebra_to_file(&dual));
    Ok(report)
}

pub fn run_pbw(file: &AlgebraFile, opts: &RunOptions) -> Result<Report> {
    let u = deformation_from_file(file)?;
    let n_deg = u.base().relation_degree();
    let max_degree = opts.max_degree.unwrap_or(6);
    let slack = opts.slack.unwrap_or(n_deg + 1);
    let mut report = Report::new("pbw", file.clone());
    if n_deg == 2 {
        let bg = u.bg_check()?;
        report.verdicts.insert("bg_holds".into(), bg.holds());
        report
            .values
            .insert("overlap_dimension".into(), bg.overlap_dim.to_string());
        if let Some(f) = bg.failures.first() {
            report.values.insert(
                "bg_first_failure".into(),
                format!("condition {} on overlap element {}", f.condition, f.overlap_index),
            );
        }
    }
    let pbw = u.pbw_check(max_degree, slack)?;
    report.verdicts.insert("pbw_holds".into(), pbw.holds);
    report.verified_up_to.insert("pbw_verified_up_to".into(), pbw.verified_up_to);
    report.verified_up_to.insert("slack".into(), pbw.slack);
    if let Some(d) = pbw.first_failure {
        report.values.insert("pbw_first_failure".into(), d.to_string());
    }
    report.vectors.insert(
        "filtration_dims".into(),
        pbw.filtration_dims.iter().map(|d| d.to_string()).collect(),
    );
    report.vectors.insert(
        "expected_dims".into(),
        pbw.expected_dims.iter().map(|d| d.to_string()).collect(),
    );
    Ok(report)
}

fn dual_frobenius_at(
    base: &HomogeneousAlgebra,
    d: usize,
) -> Result<(GradedFiniteAlgebra, crate::frobenius::FrobeniusData)> {
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
    Ok((dual, frob))
}

pub fn run_frobenius(file: &AlgebraFile, opts: &RunOptions) -> Result<Report> {
    let a = algebra_from_file(file)?;
    let d = require_gldim(opts)?;
    let (dual, frob) = dual_frobenius_at(&a, d)?;
    let mut report = Report::new("frobenius", file.clone());
    report
        .verdicts
        .insert("graded_symmetric".into(), is_graded_symmetric(&frob));
    report.values.insert(
        "dual_dims".into(),
        (0..=d).map(|m| dual.dim(m).to_string()).collect::<Vec<_>>().join(","),
    );
    for i in 0..=d {
        report
            .matrices
            .insert(format!("pairing_{i}"), matrix_rows(frob.pairing(i)));
        report
            .matrices
            .insert(format!("phi_{i}"), matrix_rows(frob.nakayama(i)));
    }
    Ok(report)
}

pub fn run_nakayama(file: &AlgebraFile, opts: &RunOptions) -> Result<Report> {
    let u = deformation_from_file(file)?;
    let mut report = Report::new("nakayama", file.clone());
    let names = u.base().generator_names().to_vec();
    match choose_dim(u.base(), opts) {
        DimChoice::Two => {
            let d2 = dim2_deformation(&u)?;
            let map = dim2::nakayama_deformed(&d2)?;
            report.values.insert("pipeline".into(), "dim2".into());
            report.matrices.insert("Q".into(), matrix_rows(d2.base().q()));
            report.vectors.insert("s".into(), vector_row(d2.s()));
            report.values.insert("c".into(), format_rational(d2.c()));
            report.verdicts.insert("automorphism_verified".into(), true);
            report.set_affine(&map, &names);
        }
        DimChoice::Three => {
            let a = build_dim3(u.base().clone())?;
            let map = nakayama_deformed3(&a, &u)?;
            report.values.insert("pipeline".into(), "dim3".into());
            report.matrices.insert("Q1".into(), matrix_rows(a.q1()));
            report.matrices.insert("Q2".into(), matrix_rows(a.q2()));
            report
                .vectors
                .insert("k".into(), vector_row(&psi_vector(&a, &u)?));
            report.verdicts.insert("automorphism_verified".into(), true);
            report.set_affine(&map, &names);
        }
        DimChoice::General => {
            let d = require_gldim(opts)?;
            let curved = build_curved_dual(&u, d)?;
            let map = nakayama_from_curved(&u, &curved)?;
            report.values.insert("pipeline".into(), "general".into());
            report
                .matrices
                .insert("dual_pairing_1".into(), matrix_rows(curved.frobenius().pairing(1)));
            report
                .matrices
                .insert("dual_phi_1".into(), matrix_rows(curved.frobenius().nakayama(1)));
            report
                .vectors
                .insert("lambda".into(), vector_row(&lambda_vector(&curved)?));
            report.verdicts.insert("automorphism_verified".into(), true);
            report.set_affine(&map, &names);
        }
    }
    Ok(report)
}

pub fn run_cy(file: &AlgebraFile, opts: &RunOptions) -> Result<Report> {
    let u = deformation_from_file(file)?;
    let mut report = Report::new("cy", file.clone());
    match choose_dim(u.base(), opts) {
        DimChoice::Two => {
            let d2 = dim2_deformation(&u)?;
            report.values.insert("pipeline".into(), "dim2".into());
            report.verdicts.insert("cy_graded".into(), dim2::cy_graded(d2.base()));
            report.verdicts.insert("cy_deformed".into(), dim2::cy_deformed(&d2));
        }
        DimChoice::Three => {
            let a = build_dim3(u.base().clone())?;
            report.values.insert("pipeline".into(), "dim3".into());
            report.verdicts.insert("cy_graded".into(), cy_check3(&a));
            report
                .verdicts
                .insert("superpotential".into(), is_superpotential(a.z()));
            let compat = crate::dim3::compat_check(&a, &u)?;
            for (k, ok) in compat.iter().enumerate() {
                report.verdicts.insert(format!("compat_k{}", k + 1), *ok);
            }
        }
        DimChoice::General => {
            let d = require_gldim(opts)?;
            report.values.insert("pipeline".into(), "general".into());
            if u.is_augmented() {
                let cy = cy_check_augmented(&u, d)?;
                report.verdicts.insert("cy".into(), cy.cy);
                report.vectors.insert("lambda".into(), vector_row(&cy.lambda));
                report.values.insert("reason".into(), cy.reason);
            } else {
                // scalar tail present: go through curvature centrality and
                // transfer from the augmented truncation
                let t = theta_central_and_transfer(&u, d)?;
                report.verdicts.insert("theta_central".into(), t.theta_central);
                if let Some(b) = t.augmented_bg_holds {
                    report.verdicts.insert("augmented_bg".into(), b);
                }
                if let Some(c) = t.augmented_cy {
                    report.verdicts.insert("augmented_cy".into(), c);
                }
                if let Some(c) = t.transferred_cy {
                    report.verdicts.insert("cy".into(), c);
                }
                if let Some(map) = &t.nakayama {
                    report.set_affine(map, u.base().generator_names());
                }
                report.warnings.push(t.note.clone());
            }
        }
    }
    Ok(report)
}

pub fn run_potential(file: &AlgebraFile, opts: &RunOptions) -> Result<Report> {
    let u = deformation_from_file(file)?;
    let a = build_dim3(u.base().clone())?;
    let _ = opts;
    let names = u.base().generator_names().to_vec();
    let w = build_potential_cy(&a, &u)?;
    let mut report = Report::new("potential", file.clone());
    report.verdicts.insert("potential_condition".into(), true);

    // independent round trip: differentiate the emitted potential and
    // compare relation spans
    let back = relations_from_potential(&w, names.clone())?;
    let layout = FiltrationLayout::new(u.base().n(), u.base().relation_degree())?;
    let mut original = EchelonSet::new();
    let mut derived = EchelonSet::new();
    for i in 0..u.base().relation_count() {
        original.insert(layout.flatten(&u.deformed_relation(i))?);
    }
    for i in 0..back.base().relation_count() {
        derived.insert(layout.flatten(&back.deformed_relation(i))?);
    }
    report.verdicts.insert(
        "round_trip_span".into(),
        original.canonical_rows() == derived.canonical_rows(),
    );
    report.potential = Some(poly_terms(w.poly(), &names));
    report
        .values
        .insert("top_degree".into(), w.top_degree().to_string());
    Ok(report)
}

pub fn dispatch(command: &str, file: &AlgebraFile, opts: &RunOptions) -> Result<Report> {
    match command {
        "dual" => run_dual(file),
        "pbw" => run_pbw(file, opts),
        "nakayama" => run_nakayama(file, opts),
        "cy" => run_cy(file, opts),
        "potential" => run_potential(file, opts),
        "frobenius" => run_frobenius(file, opts),
        other => Err(AlgebraError::Parse(format!("unknown command {other:?}"))),
    }
}

pub fn run_command(command: &str, text: &str, opts: &RunOptions) -> Result<Report> {
    let file = parse_algebra_file(text)?;
    dispatch(command, &file, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quantum_plane() -> String {
        r#"{
            "generators": ["x", "y"],
            "relation_degree": 2,
            "relations": [ { "terms": [
                { "word": ["x", "y"], "coeff": "1" },
                { "word": ["y", "x"], "coeff": "-2" }
            ] } ]
        }"#
        .to_string()
    }

    fn heisenberg() -> String {
        r#"{
            "generators": ["x", "y", "z"],
            "relation_degree": 2,
            "relations": [
                { "terms": [ { "word": ["y","z"], "coeff": "1" }, { "word": ["z","y"], "coeff": "-1" } ] },
                { "terms": [ { "word": ["z","x"], "coeff": "1" }, { "word": ["x","z"], "coeff": "-1" } ] },
                { "terms": [ { "word": ["x","y"], "coeff": "1" }, { "word": ["y","x"], "coeff": "-1" } ] }
            ],
            "deformation": [
                { "terms": [] },
                { "terms": [] },
                { "terms": [ { "word": ["z"], "coeff": "-1" } ] }
            ]
        }"#
        .to_string()
    }

    #[test]
    fn dual_of_the_quantum_plane() {
        let report = run_command("dual", &quantum_plane(), &RunOptions::default()).unwrap();
        let dual = report.dual.unwrap();
        assert_eq!(dual.relations.len(), 3);
        assert!(dual.generators.iter().all(|g| g.ends_with('*')));
    }

    #[test]
    fn nakayama_dispatches_by_shape() {
        let r2 = run_command("nakayama", &quantum_plane(), &RunOptions::default()).unwrap();
        assert_eq!(r2.values["pipeline"], "dim2");
        assert_eq!(
            r2.affine_map.as_ref().unwrap().linear,
            vec![vec!["2", "0"], vec!["0", "1/2"]]
        );
        let r3 = run_command("nakayama", &heisenberg(), &RunOptions::default()).unwrap();
        assert_eq!(r3.values["pipeline"], "dim3");
        assert_eq!(r3.affine_map.as_ref().unwrap().display, "x -> x, y -> y, z -> z");
    }

    #[test]
    fn general_pipeline_requires_gldim() {
        let opts = RunOptions { dim: Some(DimChoice::General), ..Default::default() };
        assert!(matches!(
            run_command("nakayama", &heisenberg(), &opts),
            Err(AlgebraError::MissingOption(_))
        ));
        let opts = RunOptions {
            dim: Some(DimChoice::General),
            gldim: Some(3),
            ..Default::default()
        };
        let r = run_command("nakayama", &heisenberg(), &opts).unwrap();
        assert_eq!(r.affine_map.as_ref().unwrap().display, "x -> x, y -> y, z -> z");
    }

    #[test]
    fn pbw_reports_bounds() {
        let r = run_command("pbw", &heisenberg(), &RunOptions::default()).unwrap();
        assert!(r.verdicts["bg_holds"]);
        assert!(r.verdicts["pbw_holds"]);
        assert_eq!(r.verified_up_to["pbw_verified_up_to"], 6);
    }

    #[test]
    fn cy_verdicts() {
        let r = run_command("cy", &heisenberg(), &RunOptions::default()).unwrap();
        assert!(r.verdicts["cy_graded"]);
        assert!(r.verdicts["compat_k1"]);
        let q = run_command("cy", &quantum_plane(), &RunOptions::default()).unwrap();
        assert!(!q.verdicts["cy_graded"]);
    }

    #[test]
    fn weyl_cy_goes_through_the_transfer_path() {
        let weyl = r#"{
            "generators": ["x", "y"],
            "relation_degree": 2,
            "relations": [ { "terms": [
                { "word": ["x", "y"], "coeff": "1" },
                { "word": ["y", "x"], "coeff": "-1" }
            ] } ],
            "deformation": [
                { "terms": [ { "word": [], "coeff": "-1" } ] }
            ]
        }"#;
        let opts = RunOptions {
            dim: Some(DimChoice::General),
            gldim: Some(2),
            ..Default::default()
        };
        let r = run_command("cy", weyl, &opts).unwrap();
        assert!(r.verdicts["theta_central"]);
        assert!(r.verdicts["cy"]);
        assert!(!r.warnings.is_empty());
    }

    #[test]
    fn potential_round_trips() {
        let r = run_command("potential", &heisenberg(), &RunOptions::default()).unwrap();
        assert!(r.verdicts["round_trip_span"]);
        assert_eq!(r.values["top_degree"], "3");
        assert!(!r.potential.unwrap().is_empty());
    }

    #[test]
    fn frobenius_reports_the_dual_pairings() {
        let opts = RunOptions { gldim: Some(2), ..Default::default() };
        let r = run_command("frobenius", &quantum_plane(), &opts).unwrap();
        assert!(!r.verdicts["graded_symmetric"]);
        assert_eq!(r.matrices["pairing_1"], vec![vec!["0", "1"], vec!["-2", "0"]]);
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = RunOptions::default();
        let a = run_command("nakayama", &heisenberg(), &opts).unwrap().to_json();
        let b = run_command("nakayama", &heisenberg(), &opts).unwrap().to_json();
        assert_eq!(a, b);
    }
}

//! On-disk description of an algebra and optional deformation tails.
//!
//! The format is JSON with every coefficient an exact rational string;
//! floats are never accepted. Words are lists of generator names, so files
//! stay readable for small examples:
//!
//! ```json
//! {
//!   "generators": ["x", "y"],
//!   "relation_degree": 2,
//!   "relations": [
//!     { "terms": [ { "word": ["x","y"], "coeff": "1" },
//!                  { "word": ["y","x"], "coeff": "-1" } ] }
//!   ],
//!   "deformation": [ { "terms": [ { "word": [], "coeff": "-1" } ] } ]
//! }
//! ```
//!
//! The optional deformation section lists one inhomogeneous tail per
//! relation; a term's degree is its word length (empty word = scalar).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::homog::{Deformation, HomogeneousAlgebra};
use crate::matrix::Matrix;
use crate::rational::{format_rational, parse_rational};
use crate::tensor::{word_index, TensorElement};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub word: Vec<String>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub terms: Vec<TermFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub generators: Vec<String>,
    pub relation_degree: usize,
    pub relations: Vec<RelationFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<Vec<RelationFile>>,
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    serde_json::from_str(text)
        .map_err(|e| AlgebraError::Parse(format!("invalid algebra file: {e}")))
}

pub fn serialize_algebra_file(file: &AlgebraFile) -> String {
    serde_json::to_string_pretty(file).expect("plain data serializes")
}

fn generator_indices(file: &AlgebraFile) -> Result<HashMap<&str, usize>> {
    let mut map = HashMap::new();
    for (i, g) in file.generators.iter().enumerate() {
        if map.insert(g.as_str(), i).is_some() {
            return Err(AlgebraError::Parse(format!("duplicate generator {g:?}")));
        }
    }
    Ok(map)
}

fn term_to_indices(
    term: &TermFile,
    gens: &HashMap<&str, usize>,
    context: &str,
) -> Result<(Vec<usize>, crate::rational::Rational)> {
    let mut word = Vec::with_capacity(term.word.len());
    for name in &term.word {
        let idx = gens.get(name.as_str()).ok_or_else(|| {
            AlgebraError::Parse(format!("{context}: unknown generator {name:?}"))
        })?;
        word.push(*idx);
    }
    let coeff = parse_rational(&term.coeff)
        .map_err(|e| AlgebraError::Parse(format!("{context}: {e}")))?;
    Ok((word, coeff))
}

/// The homogeneous part of the file as an algebra.
pub fn algebra_from_file(file: &AlgebraFile) -> Result<HomogeneousAlgebra> {
    let gens = generator_indices(file)?;
    let n = file.generators.len();
    let deg = file.relation_degree;
    let mut relations = Vec::with_capacity(file.relations.len());
    for (ri, rel) in file.relations.iter().enumerate() {
        let mut t = TensorElement::zero(n, deg);
        for term in &rel.terms {
            let context = format!("relation {ri}");
            let (word, coeff) = term_to_indices(term, &gens, &context)?;
            if word.len() != deg {
                return Err(AlgebraError::Parse(format!(
                    "{context}: word length {} does not match relation degree {deg}",
                    word.len()
                )));
            }
            t.add_term(word, coeff);
        }
        relations.push(t);
    }
    HomogeneousAlgebra::new(file.generators.clone(), deg, relations)
}

/// The deformation described by the file; tails default to zero when the
/// section is absent.
pub fn deformation_from_file(file: &AlgebraFile) -> Result<Deformation> {
    let base = algebra_from_file(file)?;
    let n = base.n();
    let deg = base.relation_degree();
    let rel_count = base.relation_count();
    let Some(tails_in) = &file.deformation else {
        return Ok(Deformation::zero(base));
    };
    if tails_in.len() != rel_count {
        return Err(AlgebraError::Parse(format!(
            "deformation lists {} tails for {} relations",
            tails_in.len(),
            rel_count
        )));
    }
    let gens = generator_indices(file)?;
    let mut tails = Vec::with_capacity(deg);
    for k in 1..=deg {
        tails.push(Matrix::zero(rel_count, n.pow((deg - k) as u32))?);
    }
    for (ri, tail) in tails_in.iter().enumerate() {
        for term in &tail.terms {
            let context = format!("tail of relation {ri}");
            let (word, coeff) = term_to_indices(term, &gens, &context)?;
            if word.len() >= deg {
                return Err(AlgebraError::Parse(format!(
                    "{context}: tail word length {} must be below the relation degree {deg}",
                    word.len()
                )));
            }
            let k = deg - word.len();
            let col = word_index(n, &word);
            let old = tails[k - 1].get(ri, col).clone();
            tails[k - 1].set(ri, col, old + coeff);
        }
    }
    Deformation::new(base, tails)
}

pub fn element_terms(t: &TensorElement, names: &[String]) -> Vec<TermFile> {
    t.terms()
        .map(|(word, coeff)| TermFile {
            word: word.iter().map(|&i| names[i].clone()).collect(),
            coeff: format_rational(coeff),
        })
        .collect()
}

/// Terms of a graded sum, lowest degree first; deterministic order.
pub fn poly_terms(p: &crate::tensor::TensorPoly, names: &[String]) -> Vec<TermFile> {
    let mut out = Vec::new();
    for (_, part) in p.parts() {
        out.extend(element_terms(part, names));
    }
    out
}

pub fn algebra_to_file(a: &HomogeneousAlgebra) -> AlgebraFile {
    AlgebraFile {
        generators: a.generator_names().to_vec(),
        relation_degree: a.relation_degree(),
        relations: a
            .relations()
            .iter()
            .map(|r| RelationFile { terms: element_terms(r, a.generator_names()) })
            .collect(),
        deformation: None,
    }
}

pub fn deformation_to_file(u: &Deformation) -> AlgebraFile {
    let mut file = algebra_to_file(u.base());
    let names = u.base().generator_names();
    let deg = u.base().relation_degree();
    let mut tails = Vec::new();
    let mut any = false;
    for i in 0..u.base().relation_count() {
        let mut terms = Vec::new();
        for k in 1..=deg {
            terms.extend(element_terms(&u.tail_element(k, i), names));
        }
        any |= !terms.is_empty();
        tails.push(RelationFile { terms });
    }
    if any {
        file.deformation = Some(tails);
    }
    file
}

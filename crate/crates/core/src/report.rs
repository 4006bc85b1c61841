//! Report structure shared by all CLI commands.
//!
//! The JSON rendering is the machine interface and carries every field;
//! the text rendering is a readable projection of the same content.
//! Determinism matters: all maps are ordered, so identical inputs produce
//! byte-identical JSON.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine::AffineMap;
use crate::fileformat::{AlgebraFile, TermFile};
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};

#[derive(Serialize, Debug, Clone)]
pub struct AffineMapFile {
    pub linear: Vec<Vec<String>>,
    pub constant: Vec<String>,
    pub display: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input: AlgebraFile,
    pub verdicts: BTreeMap<String, bool>,
    pub values: BTreeMap<String, String>,
    pub vectors: BTreeMap<String, Vec<String>>,
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine_map: Option<AffineMapFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<AlgebraFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<Vec<TermFile>>,
    pub verified_up_to: BTreeMap<String, usize>,
    pub warnings: Vec<String>,
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(m.get(i, j))).collect())
        .collect()
}

pub fn vector_row(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl Report {
    pub fn new(command: &str, input: AlgebraFile) -> Report {
        Report {
            command: command.to_string(),
            input,
            verdicts: BTreeMap::new(),
            values: BTreeMap::new(),
            vectors: BTreeMap::new(),
            matrices: BTreeMap::new(),
            affine_map: None,
            dual: None,
            potential: None,
            verified_up_to: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn set_affine(&mut self, map: &AffineMap, names: &[String]) {
        self.affine_map = Some(AffineMapFile {
            linear: matrix_rows(map.linear()),
            constant: vector_row(map.constant()),
            display: map.format_with_names(names),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut push = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        push(format!("command: {}", self.command));
        for (k, v) in &self.verdicts {
            push(format!("{}: {}", k, v));
        }
        for (k, v) in &self.values {
            push(format!("{}: {}", k, v));
        }
        for (k, v) in &self.verified_up_to {
            push(format!("{}: {}", k, v));
        }
        for (k, v) in &self.vectors {
            push(format!("{}: [{}]", k, v.join(", ")));
        }
        for (k, rows) in &self.matrices {
            push(format!("{}:", k));
            for row in rows {
                push(format!("  [{}]", row.join(", ")));
            }
        }
        if let Some(map) = &self.affine_map {
            push(format!("map: {}", map.display));
        }
        if let Some(dual) = &self.dual {
            push("dual:".to_string());
            push(crate::fileformat::serialize_algebra_file(dual));
        }
        if let Some(pot) = &self.potential {
            push("potential:".to_string());
            for term in pot {
                push(format!("  {} * [{}]", term.coeff, term.word.join(" ")));
            }
        }
        for w in &self.warnings {
            push(format!("warning: {}", w));
        }
        out
    }
}

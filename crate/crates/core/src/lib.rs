//! Exact-arithmetic toolkit for N-homogeneous algebras presented by
//! generators and relations: Koszul duals, bounded flatness checks for
//! filtered deformations, graded Frobenius structure, Nakayama
//! automorphisms, Calabi-Yau verdicts, and superpotential extraction.
//!
//! All computations are over the rationals and exact; every verdict that
//! depends on a degree bound reports that bound.

pub mod affine;
pub mod capacity;
pub mod curved;
pub mod dim2;
pub mod dim3;
pub mod echelon;
pub mod error;
pub mod fileformat;
pub mod frobenius;
pub mod homog;
pub mod matrix;
pub mod rational;
pub mod report;
pub mod run;
pub mod subspace;
pub mod tensor;

pub use affine::AffineMap;
pub use error::{AlgebraError, Result};
pub use homog::{Deformation, GradedQuotient, HomogeneousAlgebra};
pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::Subspace;
pub use tensor::{TensorElement, TensorPoly, Word};

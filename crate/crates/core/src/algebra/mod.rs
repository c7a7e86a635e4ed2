//! Exact scalars, Laurent polynomials in the chart coordinates and the linear
//! algebra every cohomology computation reduces to.

pub mod echelon;
pub mod laurent;
pub mod matrix;
pub mod param;
pub mod polymatrix;
pub mod rational;

pub use echelon::{Echelon, SparseVec};
pub use laurent::{BiLaurent, Chart, Monomial, Substitution};
pub use matrix::{RationalMatrix, Rref};
pub use param::ParamPoly;
pub use polymatrix::PolyMatrix;
pub use rational::{frac, format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("chart tag mismatch: {0:?} vs {1:?}")]
    TagMismatch(Chart, Chart),
    #[error("negative power of a non-unit substitution image")]
    NonInvertibleSubstitution,
    #[error("determinant is not a unit monomial")]
    NonUnitDeterminant,
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

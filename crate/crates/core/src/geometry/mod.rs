//! Polyhedral kernel over the rationals: cones, polytopes and
//! polytope-times-subspace sets, with exact conversion between generator
//! (V) and inequality (H) descriptions.
//!
//! Conversion is Fourier–Motzkin elimination with exact rational arithmetic
//! and redundancy elimination after every projection step. The intended
//! scale is small: ambient dimension up to about 6 and a few dozen
//! generators. Fourier–Motzkin is doubly exponential in the worst case, so
//! the engine caps the number of intermediate rows
//! ([`MAX_INTERMEDIATE_ROWS`]) and fails gracefully with
//! [`GeometryError::TooManyRows`] instead of grinding forever.
//!
//! Every constructed object is canonical: facet normals and generators are
//! primitive integer vectors sorted lexicographically, lineality and
//! equality bases are in reduced row echelon form. Equality of cones and
//! polytopes is therefore set equality, never list equality.

use alloc::vec::Vec;
use core::fmt;

mod cone;
mod fm;
mod polytope;

pub use cone::Cone;
pub use polytope::{PolySet, Polytope};

/// Hard cap on intermediate rows during Fourier–Motzkin elimination.
pub const MAX_INTERMEDIATE_ROWS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    DimensionMismatch {
        expected: usize,
        actual: usize,
    },
    /// Combinatorial blowup past [`MAX_INTERMEDIATE_ROWS`].
    TooManyRows {
        rows: usize,
    },
    /// Convex hull of an empty point set.
    EmptyInput,
    /// Operation defined only for full-dimensional polytopes.
    Degenerate,
    /// An H-representation describes an unbounded set where a polytope was
    /// required.
    Unbounded,
    /// An intersection came out empty.
    EmptyIntersection,
    /// The queried point is not a vertex of the polytope.
    UnknownVertex,
    /// A polytope and free subspace overlap in directions.
    InconsistentSpan,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            GeometryError::TooManyRows { rows } => write!(
                f,
                "Fourier-Motzkin blowup: {rows} intermediate rows exceed the cap of {MAX_INTERMEDIATE_ROWS}"
            ),
            GeometryError::EmptyInput => write!(f, "convex hull of an empty point set"),
            GeometryError::Degenerate => write!(f, "degenerate: use relative fan"),
            GeometryError::Unbounded => write!(f, "H-representation describes an unbounded set"),
            GeometryError::EmptyIntersection => write!(f, "intersection is empty"),
            GeometryError::UnknownVertex => write!(f, "point is not a vertex of the polytope"),
            GeometryError::InconsistentSpan => {
                write!(f, "polytope directions and free subspace are not independent")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

pub(crate) type HalfSpace = (Vec<crate::scalar::Rational>, crate::scalar::Rational);

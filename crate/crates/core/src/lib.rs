//! Exact computational kernel for the momentum geometry of symplectic torus
//! actions described by finite combinatorial data.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals (or
//! rational combinations of declared real symbols), lattice computations go
//! through Smith/Hermite normal forms, and polyhedral objects carry both
//! generator and inequality descriptions in canonical form. There is no
//! floating point anywhere in this crate.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required). IO, file
//! formats and the command-line front end live in the companion `momap-cli`
//! crate.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here can be shared and called concurrently
//! without synchronization.
//!
//! Module map:
//!
//! * [`scalar`] — big rationals and symbol-extended scalars
//! * [`matrix`] — dense row-major matrices over any of the scalar types
//! * [`linalg`] — Smith/Hermite normal forms, kernels, ranks, saturation,
//!   unimodular basis completion
//! * [`geometry`] — cones, polytopes and polytope-times-subspace sets over
//!   the rationals, with Fourier–Motzkin conversion between representations
//! * [`model`] — the action descriptor (strata, weights, periods) and its
//!   validation
//! * [`momentum`] — analyses of an action model: local wedges,
//!   effectiveness, exactness certificates, the exact subalgebra, rationality
//!   degrees, the global momentum image and its consistency checks
//! * [`weyl`] — root systems, Weyl chambers and chamber cross-sections
//! * [`stability`] — perturbation invariants: exact-subalgebra stability,
//!   normal-fan comparison, edge-length reassignment
//! * [`oracle`] — deliberately independent brute-force reference
//!   implementations used by the test suites

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
// Exact linear algebra walks parallel rows and columns by index throughout;
// iterator contortions would not make it clearer.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod geometry;
pub mod linalg;
pub mod matrix;
pub mod model;
pub mod momentum;
pub mod oracle;
pub mod scalar;
pub mod stability;
pub mod vector;
pub mod weyl;

pub use scalar::{ExtScalar, Int, Rational};

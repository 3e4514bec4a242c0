//! Perturbation invariants: stability of the exact subalgebra under
//! equivariant changes of the symplectic form, normal-fan rigidity, and the
//! edge-length reassignment obstruction.
//!
//! "Small perturbation" has no metric in the finite data; it is
//! operationalized as *identical discrete weight data per stratum* (signs
//! included), which is exactly what a small equivariant change of the form
//! cannot move. Models whose weight data differ get the verdict
//! [`TeStability::NotSmallPerturbation`] rather than a stability claim —
//! that includes the boundary case of a weight degenerating through zero,
//! which the theory does not classify.
//!
//! Edge-length machinery ships for dimension 2 only. Edge lengths are
//! *lattice lengths*: the edge vector is `length · direction` with
//! `direction` the primitive integer vector along the edge, which keeps
//! everything rational and exact.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::geometry::{Cone, GeometryError, Polytope};
use crate::matrix::IntMat;
use crate::model::ActionModel;
use crate::momentum::{exact_subalgebra, MomentumError};
use crate::scalar::{Int, Rational};
use crate::vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityError {
    /// Models cannot even be compared (different n, N, b1 or strata labels).
    Incomparable {
        reason: String,
    },
    /// Edge machinery requires a full-dimensional 2-polytope.
    NotTwoDimensional,
    LengthCountMismatch {
        expected: usize,
        actual: usize,
    },
    NonpositiveLength {
        index: usize,
    },
    /// The reassigned boundary walk does not close; the defect is the sum of
    /// the edge vectors.
    ClosureDefect {
        defect: Vec<Rational>,
    },
    Momentum(MomentumError),
    Geometry(GeometryError),
}

impl fmt::Display for StabilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityError::Incomparable { reason } => {
                write!(f, "models are structurally incomparable: {reason}")
            }
            StabilityError::NotTwoDimensional => {
                write!(f, "edge machinery requires a full-dimensional 2-polytope")
            }
            StabilityError::LengthCountMismatch { expected, actual } => {
                write!(f, "expected {expected} edge lengths, got {actual}")
            }
            StabilityError::NonpositiveLength { index } => {
                write!(f, "edge length {index} must be positive")
            }
            StabilityError::ClosureDefect { defect } => {
                write!(f, "boundary walk does not close: defect {defect:?}")
            }
            StabilityError::Momentum(e) => write!(f, "{e}"),
            StabilityError::Geometry(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for StabilityError {}

impl From<MomentumError> for StabilityError {
    fn from(e: MomentumError) -> Self {
        StabilityError::Momentum(e)
    }
}

impl From<GeometryError> for StabilityError {
    fn from(e: GeometryError) -> Self {
        StabilityError::Geometry(e)
    }
}

/// Verdict of [`te_stable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TeStability {
    /// Weight data agrees and the exact subalgebras coincide.
    Equal { te_basis: IntMat },
    /// Weight data agrees but the exact subalgebras differ — the authored
    /// data contradicts stability.
    Different { te_first: IntMat, te_second: IntMat },
    /// Weight data differs, so the models are not related by a small
    /// perturbation and no verdict applies.
    NotSmallPerturbation { reason: String },
}

/// Compares the exact subalgebras of two models related by a perturbation
/// of the symplectic form.
pub fn te_stable(first: &ActionModel, second: &ActionModel) -> Result<TeStability, StabilityError> {
    use alloc::format;
    for (which, m) in [("first", first), ("second", second)] {
        let v = m.validate();
        if !v.is_empty() {
            return Err(StabilityError::Incomparable {
                reason: format!("{which} model fails validation"),
            });
        }
    }
    if first.torus_dim != second.torus_dim
        || first.half_dim != second.half_dim
        || first.betti1 != second.betti1
    {
        return Err(StabilityError::Incomparable {
            reason: "different torus dimension, half-dimension, or Betti number".into(),
        });
    }
    let mut labels_first: Vec<&str> = first.strata.iter().map(|s| s.label.as_str()).collect();
    let mut labels_second: Vec<&str> = second.strata.iter().map(|s| s.label.as_str()).collect();
    labels_first.sort_unstable();
    labels_second.sort_unstable();
    if labels_first != labels_second {
        return Err(StabilityError::Incomparable {
            reason: "stratum labels differ".into(),
        });
    }

    for s1 in &first.strata {
        let s2 = second.stratum(&s1.label).expect("label sets match");
        if s1.stabilizer_basis != s2.stabilizer_basis || s1.r_p != s2.r_p {
            return Ok(TeStability::NotSmallPerturbation {
                reason: format!("stratum {:?}: stabilizer data differs", s1.label),
            });
        }
        let mut w1 = s1.weights.clone();
        let mut w2 = s2.weights.clone();
        w1.sort();
        w2.sort();
        if w1 != w2 {
            return Ok(TeStability::NotSmallPerturbation {
                reason: format!("stratum {:?}: weight sets differ", s1.label),
            });
        }
    }

    let te1 = exact_subalgebra(first)?;
    let te2 = exact_subalgebra(second)?;
    if te1.basis == te2.basis {
        Ok(TeStability::Equal {
            te_basis: te1.basis,
        })
    } else {
        Ok(TeStability::Different {
            te_first: te1.basis,
            te_second: te2.basis,
        })
    }
}

/// Whether two full-dimensional polytopes have the same normal fan (as a
/// set of vertex cones). Lower-dimensional polytopes are rejected.
pub fn fans_equal(p1: &Polytope, p2: &Polytope) -> Result<bool, GeometryError> {
    if p1.dim() != p2.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: p1.dim(),
            actual: p2.dim(),
        });
    }
    let cones = |p: &Polytope| -> Result<Vec<Cone>, GeometryError> {
        let mut out: Vec<Cone> = p.normal_fan()?.into_iter().map(|(_, c)| c).collect();
        out.sort();
        out.dedup();
        Ok(out)
    };
    Ok(cones(p1)? == cones(p2)?)
}

/// One boundary edge of a 2-polytope, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryEdge {
    pub from: Vec<Rational>,
    pub to: Vec<Rational>,
    /// Primitive integer direction along the edge.
    pub direction: Vec<Int>,
    /// The edge vector is `lattice_length · direction`.
    pub lattice_length: Rational,
}

/// Boundary edges of a full-dimensional 2-polytope in counterclockwise
/// cyclic order, starting at the lexicographically smallest vertex. This
/// ordering is the edge-index convention for [`EdgeLengthAssignment`].
pub fn boundary_edges(p: &Polytope) -> Result<Vec<BoundaryEdge>, StabilityError> {
    if p.dim() != 2 || !p.is_full_dimensional() {
        return Err(StabilityError::NotTwoDimensional);
    }
    let vertices = p.vertices();
    debug_assert!(vertices.len() >= 3);
    let k = Rational::from_integer((vertices.len() as i64).into());
    let mut centroid = vector::zeros(2);
    for v in vertices {
        centroid = vector::add(&centroid, v);
    }
    centroid = vector::scale(&centroid, &(Rational::from_integer(1.into()) / k));

    // Exact counterclockwise angular order around the centroid.
    let mut ordered: Vec<Vec<Rational>> = vertices.to_vec();
    ordered.sort_by(|a, b| {
        let u = vector::sub(a, &centroid);
        let w = vector::sub(b, &centroid);
        angular_cmp(&u, &w)
    });
    let start = ordered
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap();
    ordered.rotate_left(start);

    let mut edges = Vec::with_capacity(ordered.len());
    for i in 0..ordered.len() {
        let from = ordered[i].clone();
        let to = ordered[(i + 1) % ordered.len()].clone();
        let delta = vector::sub(&to, &from);
        let (direction, lattice_length) = vector::primitive_direction_with_scale(&delta);
        edges.push(BoundaryEdge {
            from,
            to,
            direction,
            lattice_length,
        });
    }
    Ok(edges)
}

/// Half-plane index (0 for angles in [0, π), 1 for [π, 2π)) followed by the
/// cross product: exact polar-angle comparison.
fn angular_cmp(u: &[Rational], w: &[Rational]) -> Ordering {
    let half = |v: &[Rational]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    let (hu, hw) = (half(u), half(w));
    if hu != hw {
        return hu.cmp(&hw);
    }
    let cross = &(&u[0] * &w[1]) - &(&u[1] * &w[0]);
    // Positive cross: u is angularly before w.
    cross.cmp(&Rational::zero()).reverse()
}

/// A 2-polytope together with one positive lattice length per boundary edge
/// (indexed per [`boundary_edges`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLengthAssignment {
    pub polytope: Polytope,
    pub lengths: Vec<Rational>,
}

/// Rebuilds the boundary by walking the edges in cyclic order with their
/// original directions and the new lengths. Succeeds iff the signed sum of
/// `length · direction` vanishes; the defect vector is reported otherwise.
/// On success the rebuilt polytope has the same normal fan as the original.
pub fn reassign_edge_lengths(a: &EdgeLengthAssignment) -> Result<Polytope, StabilityError> {
    let edges = boundary_edges(&a.polytope)?;
    if a.lengths.len() != edges.len() {
        return Err(StabilityError::LengthCountMismatch {
            expected: edges.len(),
            actual: a.lengths.len(),
        });
    }
    for (i, l) in a.lengths.iter().enumerate() {
        if !l.is_positive() {
            return Err(StabilityError::NonpositiveLength { index: i });
        }
    }
    let mut defect = vector::zeros(2);
    for (edge, l) in edges.iter().zip(&a.lengths) {
        let step = vector::scale(&vector::int_to_rat(&edge.direction), l);
        defect = vector::add(&defect, &step);
    }
    if !vector::is_zero(&defect) {
        return Err(StabilityError::ClosureDefect { defect });
    }
    let mut points = Vec::with_capacity(edges.len());
    let mut current = edges[0].from.clone();
    for (edge, l) in edges.iter().zip(&a.lengths) {
        points.push(current.clone());
        let step = vector::scale(&vector::int_to_rat(&edge.direction), l);
        current = vector::add(&current, &step);
    }
    Ok(Polytope::convex_hull(&points, 2)?)
}

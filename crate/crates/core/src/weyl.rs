//! Compact-group layer: root systems, Weyl chambers, and chamber
//! cross-sections of momentum images.
//!
//! Coordinate convention: points of the dual Cartan algebra are written in
//! simple-root coordinates, and each stored root vector is the pairing
//! functional of its coroot in those coordinates (column `j` of the Cartan
//! matrix for root `j`). Under this convention everything stays integral
//! and exact:
//!
//! * the chamber is `{x : ⟨root_j, x⟩ ≥ 0 for all j}` with the literal dot
//!   product;
//! * the simple reflection is `s_j(x) = x − ⟨root_j, x⟩·e_j`;
//! * the reflections generate a finite group for the shipped families, and
//!   the chamber is a genuine fundamental domain for it.
//!
//! Shipped families are the reduced rank ≤ 2 systems A₁, A₁×A₁, A₂ and
//! B₂. Arbitrary root data is accepted if it passes the Cartan-integer
//! validation; finiteness of the generated group is then the author's
//! responsibility.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::geometry::{Cone, GeometryError, PolySet, Polytope};
use crate::linalg;
use crate::matrix::IntMat;
use crate::scalar::{Int, Rational};
use crate::vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylError {
    InvalidRootData {
        detail: String,
    },
    /// The chamber block does not fit inside the polytope's ambient space.
    BlockMismatch {
        chamber: usize,
        ambient: usize,
    },
    /// The authored polytope misses the chamber entirely, which cannot
    /// happen for a genuine momentum image (it is Weyl-invariant).
    EmptyCrossSection,
    Geometry(GeometryError),
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::InvalidRootData { detail } => write!(f, "invalid root data: {detail}"),
            WeylError::BlockMismatch { chamber, ambient } => write!(
                f,
                "chamber lives in dimension {chamber} but the polytope is {ambient}-dimensional"
            ),
            WeylError::EmptyCrossSection => write!(f, "image misses the chamber"),
            WeylError::Geometry(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for WeylError {}

impl From<GeometryError> for WeylError {
    fn from(e: GeometryError) -> Self {
        WeylError::Geometry(e)
    }
}

/// A reduced root system given by its simple roots (see the module docs for
/// the coordinate convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    simple_roots: Vec<Vec<Int>>,
}

impl RootSystem {
    /// Validates Cartan integrality: `root_j[j] = 2`, `root_j[i] ≤ 0` for
    /// `i ≠ j` with symmetric vanishing, and linear independence.
    pub fn new(simple_roots: Vec<Vec<Int>>) -> Result<RootSystem, WeylError> {
        use alloc::format;
        let rank = simple_roots.len();
        if rank == 0 {
            return Err(WeylError::InvalidRootData {
                detail: "no simple roots".into(),
            });
        }
        for (j, r) in simple_roots.iter().enumerate() {
            if r.len() != rank {
                return Err(WeylError::InvalidRootData {
                    detail: format!("root {j} has length {}, expected {rank}", r.len()),
                });
            }
            if r[j] != Int::from(2) {
                return Err(WeylError::InvalidRootData {
                    detail: format!("root {j} has diagonal pairing {} instead of 2", r[j]),
                });
            }
        }
        for j in 0..rank {
            for i in 0..rank {
                if i == j {
                    continue;
                }
                let a = &simple_roots[j][i];
                if a.is_positive() {
                    return Err(WeylError::InvalidRootData {
                        detail: format!("Cartan integer ({i},{j}) = {a} is positive"),
                    });
                }
                if a.is_zero() != simple_roots[i][j].is_zero() {
                    return Err(WeylError::InvalidRootData {
                        detail: format!(
                            "Cartan integers ({i},{j}) and ({j},{i}) vanish asymmetrically"
                        ),
                    });
                }
            }
        }
        let m = IntMat::from_rows(simple_roots.clone(), rank).to_rational();
        if linalg::rational_rank(&m) != rank {
            return Err(WeylError::InvalidRootData {
                detail: "simple roots are linearly dependent".into(),
            });
        }
        Ok(RootSystem { rank, simple_roots })
    }

    pub fn a1() -> RootSystem {
        RootSystem::new(alloc::vec![vector::int_from_i64(&[2])]).unwrap()
    }

    pub fn a1xa1() -> RootSystem {
        RootSystem::new(alloc::vec![
            vector::int_from_i64(&[2, 0]),
            vector::int_from_i64(&[0, 2]),
        ])
        .unwrap()
    }

    pub fn a2() -> RootSystem {
        RootSystem::new(alloc::vec![
            vector::int_from_i64(&[2, -1]),
            vector::int_from_i64(&[-1, 2]),
        ])
        .unwrap()
    }

    pub fn b2() -> RootSystem {
        RootSystem::new(alloc::vec![
            vector::int_from_i64(&[2, -2]),
            vector::int_from_i64(&[-1, 2]),
        ])
        .unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Vec<Int>] {
        &self.simple_roots
    }

    /// The simple reflection `s_j` applied to a point of the dual Cartan
    /// algebra.
    pub fn reflect(&self, j: usize, x: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(x.len(), self.rank);
        let pairing = vector::dot_rat_int(x, &self.simple_roots[j]);
        let mut out = x.to_vec();
        out[j] = &out[j] - &pairing;
        out
    }
}

/// The (closed) Weyl chamber `{x : ⟨root_j, x⟩ ≥ 0 for every simple root}`.
pub fn weyl_chamber(r: &RootSystem) -> Result<Cone, WeylError> {
    let rows: Vec<Vec<Rational>> = r
        .simple_roots
        .iter()
        .map(|v| vector::int_to_rat(v))
        .collect();
    Ok(Cone::from_inequalities(&rows, &[], r.rank)?)
}

/// Intersects an authored momentum polytope (in chamber-block ⊕ exact-block
/// coordinates) with `chamber × everything`, and attaches `tc_dim` free
/// directions: the cross-section image `P × t_c^*`.
pub fn cross_section_image(
    full: &Polytope,
    chamber: &Cone,
    tc_dim: usize,
) -> Result<PolySet, WeylError> {
    let ambient = full.dim();
    let block = chamber.dim();
    if block > ambient {
        return Err(WeylError::BlockMismatch {
            chamber: block,
            ambient,
        });
    }
    let padded: Vec<(Vec<Rational>, Rational)> = chamber
        .inequalities()
        .into_iter()
        .map(|h| {
            let mut row = h;
            row.resize(ambient, Rational::zero());
            (row, Rational::zero())
        })
        .collect();
    let clipped = match full.intersect_halfspaces(&padded) {
        Ok(p) => p,
        Err(GeometryError::EmptyIntersection) => return Err(WeylError::EmptyCrossSection),
        Err(e) => return Err(e.into()),
    };

    let total = ambient + tc_dim;
    let embedded: Vec<Vec<Rational>> = clipped
        .vertices()
        .iter()
        .map(|v| {
            let mut p = v.clone();
            p.resize(total, Rational::zero());
            p
        })
        .collect();
    let polytope = Polytope::convex_hull(&embedded, total)?;
    let free: Vec<Vec<Rational>> = (0..tc_dim)
        .map(|i| vector::unit(total, ambient + i))
        .collect();
    Ok(PolySet::new(polytope, &free)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::vector::rat_from_i64;

    #[test]
    fn chamber_examples() {
        let a1 = weyl_chamber(&RootSystem::a1()).unwrap();
        assert_eq!(a1.generators(), &[rat_from_i64(&[1])]);

        let quad = weyl_chamber(&RootSystem::a1xa1()).unwrap();
        assert!(quad.contains(&rat_from_i64(&[3, 5])));
        assert!(!quad.contains(&rat_from_i64(&[-1, 0])));

        let a2 = weyl_chamber(&RootSystem::a2()).unwrap();
        assert_eq!(
            a2.facet_normals(),
            &[rat_from_i64(&[-1, 2]), rat_from_i64(&[2, -1])]
        );
        assert_eq!(
            a2.generators(),
            &[rat_from_i64(&[1, 2]), rat_from_i64(&[2, 1])]
        );
    }

    #[test]
    fn reflections_are_involutions() {
        for rs in [RootSystem::a2(), RootSystem::b2(), RootSystem::a1xa1()] {
            let x = alloc::vec![rat(3), rat(-2)];
            for j in 0..rs.rank() {
                assert_eq!(rs.reflect(j, &rs.reflect(j, &x)), x);
            }
        }
    }

    #[test]
    fn invalid_root_data_is_rejected() {
        // Positive off-diagonal pairing.
        assert!(RootSystem::new(alloc::vec![
            crate::vector::int_from_i64(&[2, 1]),
            crate::vector::int_from_i64(&[1, 2]),
        ])
        .is_err());
        // Dependent roots.
        assert!(RootSystem::new(alloc::vec![
            crate::vector::int_from_i64(&[2, -2]),
            crate::vector::int_from_i64(&[-2, 2]),
        ])
        .is_err());
        // Asymmetric vanishing.
        assert!(RootSystem::new(alloc::vec![
            crate::vector::int_from_i64(&[2, 0]),
            crate::vector::int_from_i64(&[-1, 2]),
        ])
        .is_err());
    }

    #[test]
    fn clip_segment_by_a1_chamber() {
        let seg = Polytope::convex_hull(&[rat_from_i64(&[-1]), rat_from_i64(&[1])], 1).unwrap();
        let chamber = weyl_chamber(&RootSystem::a1()).unwrap();
        let cross = cross_section_image(&seg, &chamber, 0).unwrap();
        assert_eq!(
            cross.polytope().vertices(),
            &[rat_from_i64(&[0]), rat_from_i64(&[1])]
        );
        assert_eq!(cross.free_dim(), 0);
    }

    #[test]
    fn clip_is_identity_inside_chamber() {
        let seg = Polytope::convex_hull(&[rat_from_i64(&[1]), rat_from_i64(&[2])], 1).unwrap();
        let chamber = weyl_chamber(&RootSystem::a1()).unwrap();
        let cross = cross_section_image(&seg, &chamber, 0).unwrap();
        assert_eq!(cross.polytope(), &seg);
        // Idempotent: clipping the result changes nothing.
        let again = cross_section_image(cross.polytope(), &chamber, 0).unwrap();
        assert_eq!(again.polytope(), cross.polytope());
    }

    #[test]
    fn clip_square_by_a1xa1() {
        let square = Polytope::convex_hull(
            &[
                rat_from_i64(&[-1, -1]),
                rat_from_i64(&[1, -1]),
                rat_from_i64(&[-1, 1]),
                rat_from_i64(&[1, 1]),
            ],
            2,
        )
        .unwrap();
        let chamber = weyl_chamber(&RootSystem::a1xa1()).unwrap();
        let cross = cross_section_image(&square, &chamber, 2).unwrap();
        assert_eq!(
            cross.polytope().vertices(),
            &[
                rat_from_i64(&[0, 0, 0, 0]),
                rat_from_i64(&[0, 1, 0, 0]),
                rat_from_i64(&[1, 0, 0, 0]),
                rat_from_i64(&[1, 1, 0, 0]),
            ]
        );
        assert_eq!(cross.free_dim(), 2);
        assert!(cross.contains(&rat_from_i64(&[1, 1, 50, -50])));
        assert!(!cross.contains(&rat_from_i64(&[2, 0, 0, 0])));
    }

    #[test]
    fn image_missing_chamber_errors() {
        let seg = Polytope::convex_hull(&[rat_from_i64(&[-3]), rat_from_i64(&[-1])], 1).unwrap();
        let chamber = weyl_chamber(&RootSystem::a1()).unwrap();
        assert_eq!(
            cross_section_image(&seg, &chamber, 0).unwrap_err(),
            WeylError::EmptyCrossSection
        );
    }
}

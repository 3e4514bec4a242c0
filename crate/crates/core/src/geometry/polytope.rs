//! Bounded rational polytopes and polytope-times-subspace sets.
//!
//! Everything funnels through the cone kernel by homogenization: a point
//! set lifts to height one, an H-representation lifts with the offset on
//! the height coordinate, and vertices come back as the height-positive
//! extreme rays.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg;
use crate::matrix::RatMat;
use crate::scalar::Rational;
use crate::vector;

use super::cone::Cone;
use super::{GeometryError, HalfSpace};

/// A bounded convex polytope. `facets` are the proper facet inequalities
/// `⟨h, x⟩ ≥ c` relative to the affine hull; `affine_eqs` pin the affine
/// hull itself (`⟨e, x⟩ = c`, empty iff full-dimensional). Vertices are
/// exactly the extreme points, lex-sorted; facet and equality rows are
/// jointly primitive integer vectors, lex-sorted. Equality of polytopes is
/// set equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<HalfSpace>,
    affine_eqs: Vec<HalfSpace>,
}

impl Polytope {
    /// Convex hull of a nonempty point set: irredundant vertex and facet
    /// descriptions.
    pub fn convex_hull(points: &[Vec<Rational>], dim: usize) -> Result<Polytope, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        for p in points {
            if p.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    actual: p.len(),
                });
            }
        }
        if dim == 0 {
            return Ok(Polytope {
                dim: 0,
                vertices: alloc::vec![Vec::new()],
                facets: Vec::new(),
                affine_eqs: Vec::new(),
            });
        }
        let lifted: Vec<Vec<Rational>> = points.iter().map(|p| lift_point(p)).collect();
        let cone = Cone::from_generators(&lifted, &[], dim + 1)?;
        debug_assert!(cone.lineality().is_empty());
        let mut vertices: Vec<Vec<Rational>> = Vec::new();
        for ray in cone.generators() {
            debug_assert!(ray[0] > Rational::zero());
            vertices.push(ray[1..].iter().map(|x| x / &ray[0]).collect());
        }
        vertices.sort();
        vertices.dedup();
        // Facets of the lifted cone correspond to proper facets of the hull
        // except for the empty face of a single point, which shows up as an
        // inequality active at no vertex.
        let mut facets = rows_to_halfspaces(cone.facet_normals());
        facets.retain(|(h, c)| vertices.iter().any(|v| vector::dot_rat(h, v) == *c));
        let affine_eqs = rows_to_halfspaces(
            &cone
                .equalities()
                .iter()
                .map(|e| vector::int_to_rat(&vector::primitive_direction(e)))
                .collect::<Vec<_>>(),
        );
        Ok(Polytope {
            dim,
            vertices,
            facets,
            affine_eqs,
        })
    }

    /// Recovers the polytope `{x : ⟨h, x⟩ ≥ c}` from halfspaces. Errors on
    /// empty or unbounded solution sets.
    pub fn from_halfspaces(
        halfspaces: &[HalfSpace],
        dim: usize,
    ) -> Result<Polytope, GeometryError> {
        for (h, _) in halfspaces {
            if h.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    actual: h.len(),
                });
            }
        }
        // Lift to {(t, x) : ⟨h, x⟩ - c·t ≥ 0, t ≥ 0} and read vertices off
        // the height-one extreme rays.
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(halfspaces.len() + 1);
        for (h, c) in halfspaces {
            let mut row = Vec::with_capacity(dim + 1);
            row.push(-c.clone());
            row.extend(h.iter().cloned());
            rows.push(row);
        }
        let mut height = vector::zeros(dim + 1);
        height[0] = Rational::from_integer(1.into());
        rows.push(height);
        let cone = Cone::from_inequalities(&rows, &[], dim + 1)?;
        let mut vertices: Vec<Vec<Rational>> = Vec::new();
        let mut unbounded = !cone.lineality().is_empty();
        for ray in cone.generators() {
            if ray[0].is_zero() {
                unbounded = true;
            } else {
                vertices.push(ray[1..].iter().map(|x| x / &ray[0]).collect());
            }
        }
        if vertices.is_empty() {
            return Err(GeometryError::EmptyIntersection);
        }
        if unbounded {
            return Err(GeometryError::Unbounded);
        }
        Polytope::convex_hull(&vertices, dim)
    }

    /// The polytope cut down by additional halfspaces.
    pub fn intersect_halfspaces(&self, extra: &[HalfSpace]) -> Result<Polytope, GeometryError> {
        let mut rows = self.inequalities();
        rows.extend_from_slice(extra);
        Polytope::from_halfspaces(&rows, self.dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the polytope itself (ambient minus affine-hull rank).
    pub fn polytope_dim(&self) -> usize {
        self.dim - self.affine_eqs.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_eqs.is_empty()
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn affine_eqs(&self) -> &[HalfSpace] {
        &self.affine_eqs
    }

    /// Complete inequality description (facets plus ± pairs for the affine
    /// hull).
    pub fn inequalities(&self) -> Vec<HalfSpace> {
        let mut out = self.facets.clone();
        for (e, c) in &self.affine_eqs {
            out.push((e.clone(), c.clone()));
            out.push((vector::neg(e), -c.clone()));
        }
        out.sort();
        out
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        self.facets.iter().all(|(h, c)| vector::dot_rat(h, x) >= *c)
            && self
                .affine_eqs
                .iter()
                .all(|(e, c)| vector::dot_rat(e, x) == *c)
    }

    /// Facets active at `x` (holding with equality).
    pub fn active_facets(&self, x: &[Rational]) -> Vec<HalfSpace> {
        self.facets
            .iter()
            .filter(|(h, c)| vector::dot_rat(h, x) == *c)
            .cloned()
            .collect()
    }

    /// The normal fan: for each vertex, the cone generated by the outward
    /// normals of the facets active there. Defined only for full-dimensional
    /// polytopes; lower-dimensional ones are rejected.
    pub fn normal_fan(&self) -> Result<Vec<(Vec<Rational>, Cone)>, GeometryError> {
        if !self.is_full_dimensional() {
            return Err(GeometryError::Degenerate);
        }
        let mut fan = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let outward: Vec<Vec<Rational>> = self
                .active_facets(v)
                .into_iter()
                .map(|(h, _)| vector::neg(&h))
                .collect();
            fan.push((v.clone(), Cone::from_generators(&outward, &[], self.dim)?));
        }
        Ok(fan)
    }

    /// The tangent cone of the polytope at one of its vertices: directions
    /// `d` with `vertex + ε·d` in the polytope for small ε. Its generators
    /// are the edge directions leaving the vertex. Works for
    /// lower-dimensional polytopes (directions are confined to the affine
    /// hull).
    pub fn tangent_cone(&self, vertex: &[Rational]) -> Result<Cone, GeometryError> {
        if !self.vertices.iter().any(|v| v == vertex) {
            return Err(GeometryError::UnknownVertex);
        }
        let ineq_rows: Vec<Vec<Rational>> = self
            .active_facets(vertex)
            .into_iter()
            .map(|(h, _)| h)
            .collect();
        let eq_rows: Vec<Vec<Rational>> = self.affine_eqs.iter().map(|(e, _)| e.clone()).collect();
        Cone::from_inequalities(&ineq_rows, &eq_rows, self.dim)
    }
}

fn lift_point(p: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(Rational::from_integer(1.into()));
    out.extend(p.iter().cloned());
    out
}

/// Converts lifted cone rows `(a0 | a)` (meaning `a0·t + ⟨a, x⟩ ≥ 0`) into
/// halfspaces `⟨a, x⟩ ≥ -a0`, sorted.
fn rows_to_halfspaces(rows: &[Vec<Rational>]) -> Vec<HalfSpace> {
    let mut out: Vec<HalfSpace> = rows
        .iter()
        .map(|r| (r[1..].to_vec(), -r[0].clone()))
        .collect();
    out.sort();
    out
}

/// A product set `P + span(subspace)`: a polytope swept along free linear
/// directions. The polytope's own directions and the free directions must be
/// independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySet {
    dim: usize,
    polytope: Polytope,
    subspace: Vec<Vec<Rational>>,
    hrep_ineqs: Vec<HalfSpace>,
    hrep_eqs: Vec<HalfSpace>,
}

impl PolySet {
    pub fn new(polytope: Polytope, free: &[Vec<Rational>]) -> Result<PolySet, GeometryError> {
        let dim = polytope.dim();
        for v in free {
            if v.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    actual: v.len(),
                });
            }
        }
        let nonzero: Vec<Vec<Rational>> = free
            .iter()
            .filter(|v| !vector::is_zero(v))
            .cloned()
            .collect();
        let sub_rref = linalg::rref(&RatMat::from_rows(nonzero.clone(), dim));
        let subspace: Vec<Vec<Rational>> = sub_rref
            .mat
            .row_iter()
            .take(sub_rref.rank())
            .map(|r| r.to_vec())
            .collect();

        // Directions of the polytope must be independent from the subspace.
        let base = &polytope.vertices()[0];
        let mut dirs: Vec<Vec<Rational>> = polytope.vertices()[1..]
            .iter()
            .map(|v| vector::sub(v, base))
            .collect();
        let dir_rank = if dirs.is_empty() {
            0
        } else {
            linalg::rational_rank(&RatMat::from_rows(dirs.clone(), dim))
        };
        dirs.extend(subspace.iter().cloned());
        let joint = if dirs.is_empty() {
            0
        } else {
            linalg::rational_rank(&RatMat::from_rows(dirs, dim))
        };
        if joint != dir_rank + subspace.len() {
            return Err(GeometryError::InconsistentSpan);
        }

        // H-representation of the swept set via homogenization with the free
        // directions as lineality.
        let (hrep_ineqs, hrep_eqs) = if dim == 0 {
            (Vec::new(), Vec::new())
        } else {
            let lifted: Vec<Vec<Rational>> =
                polytope.vertices().iter().map(|p| lift_point(p)).collect();
            let lin: Vec<Vec<Rational>> = subspace
                .iter()
                .map(|s| {
                    let mut row = Vec::with_capacity(dim + 1);
                    row.push(Rational::zero());
                    row.extend(s.iter().cloned());
                    row
                })
                .collect();
            let cone = Cone::from_generators(&lifted, &lin, dim + 1)?;
            (
                rows_to_halfspaces(cone.facet_normals()),
                rows_to_halfspaces(
                    &cone
                        .equalities()
                        .iter()
                        .map(|e| vector::int_to_rat(&vector::primitive_direction(e)))
                        .collect::<Vec<_>>(),
                ),
            )
        };
        Ok(PolySet {
            dim,
            polytope,
            subspace,
            hrep_ineqs,
            hrep_eqs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    /// Reduced-echelon basis of the free directions.
    pub fn subspace(&self) -> &[Vec<Rational>] {
        &self.subspace
    }

    pub fn free_dim(&self) -> usize {
        self.subspace.len()
    }

    /// True iff `x = p + v` for some `p` in the polytope and `v` in the free
    /// subspace.
    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        self.hrep_ineqs
            .iter()
            .all(|(h, c)| vector::dot_rat(h, x) >= *c)
            && self
                .hrep_eqs
                .iter()
                .all(|(e, c)| vector::dot_rat(e, x) == *c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use crate::vector::rat_from_i64;

    fn pts(ps: &[&[i64]]) -> Vec<Vec<Rational>> {
        ps.iter().map(|p| rat_from_i64(p)).collect()
    }

    #[test]
    fn standard_triangle() {
        let p = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]]), 2).unwrap();
        assert_eq!(
            p.vertices(),
            &[
                rat_from_i64(&[0, 0]),
                rat_from_i64(&[0, 1]),
                rat_from_i64(&[1, 0]),
            ]
        );
        assert!(p.is_full_dimensional());
        assert_eq!(p.facets().len(), 3);
        assert!(p.contains(&[ratio(1, 3), ratio(1, 3)]));
        assert!(!p.contains(&rat_from_i64(&[1, 1])));
        // x ≥ 0, y ≥ 0, x + y ≤ 1 in canonical form.
        let expected: Vec<HalfSpace> = alloc::vec![
            (rat_from_i64(&[-1, -1]), rat(-1)),
            (rat_from_i64(&[0, 1]), rat(0)),
            (rat_from_i64(&[1, 0]), rat(0)),
        ];
        assert_eq!(p.facets(), &expected[..]);
    }

    #[test]
    fn single_point_polytope() {
        let p = Polytope::convex_hull(&pts(&[&[2, 3]]), 2).unwrap();
        assert_eq!(p.vertices(), &[rat_from_i64(&[2, 3])]);
        assert_eq!(p.polytope_dim(), 0);
        assert!(p.facets().is_empty());
        assert_eq!(p.affine_eqs().len(), 2);
        assert!(p.contains(&rat_from_i64(&[2, 3])));
        assert!(!p.contains(&rat_from_i64(&[2, 4])));
    }

    #[test]
    fn midpoint_dropped_from_segment() {
        let p = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0]]), 2).unwrap();
        let q = Polytope::convex_hull(
            &alloc::vec![
                rat_from_i64(&[0, 0]),
                rat_from_i64(&[1, 0]),
                alloc::vec![ratio(1, 2), rat(0)],
            ],
            2,
        )
        .unwrap();
        assert_eq!(p, q);
        assert_eq!(q.vertices().len(), 2);
        assert_eq!(q.polytope_dim(), 1);
    }

    #[test]
    fn hull_of_empty_input_errors() {
        assert_eq!(
            Polytope::convex_hull(&[], 2).unwrap_err(),
            GeometryError::EmptyInput
        );
    }

    #[test]
    fn from_halfspaces_unit_square() {
        let square = Polytope::from_halfspaces(
            &[
                (rat_from_i64(&[1, 0]), rat(0)),
                (rat_from_i64(&[-1, 0]), rat(-1)),
                (rat_from_i64(&[0, 1]), rat(0)),
                (rat_from_i64(&[0, -1]), rat(-1)),
            ],
            2,
        )
        .unwrap();
        assert_eq!(
            square.vertices(),
            &pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]])[..]
        );
    }

    #[test]
    fn from_halfspaces_detects_empty_and_unbounded() {
        let empty = Polytope::from_halfspaces(
            &[(rat_from_i64(&[1]), rat(1)), (rat_from_i64(&[-1]), rat(0))],
            1,
        );
        assert_eq!(empty.unwrap_err(), GeometryError::EmptyIntersection);

        let unbounded = Polytope::from_halfspaces(&[(rat_from_i64(&[1]), rat(0))], 1);
        assert_eq!(unbounded.unwrap_err(), GeometryError::Unbounded);
    }

    #[test]
    fn normal_fan_of_unit_square() {
        let square = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), 2).unwrap();
        let fan = square.normal_fan().unwrap();
        assert_eq!(fan.len(), 4);
        // The four sign-quadrant cones, one per vertex.
        let quadrant = |sx: i64, sy: i64| {
            Cone::from_generators(&[rat_from_i64(&[sx, 0]), rat_from_i64(&[0, sy])], &[], 2)
                .unwrap()
        };
        let mut cones: Vec<Cone> = fan.into_iter().map(|(_, c)| c).collect();
        cones.sort();
        let mut expected = alloc::vec![
            quadrant(-1, -1),
            quadrant(-1, 1),
            quadrant(1, -1),
            quadrant(1, 1),
        ];
        expected.sort();
        assert_eq!(cones, expected);

        let segment = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0]]), 2).unwrap();
        assert_eq!(segment.normal_fan().unwrap_err(), GeometryError::Degenerate);
    }

    #[test]
    fn normal_fan_of_standard_triangle() {
        // Vertex cones are generated by pairs of {-e1, -e2, (1,1)}.
        let triangle = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]]), 2).unwrap();
        let fan = triangle.normal_fan().unwrap();
        let expected = [
            (
                rat_from_i64(&[0, 0]),
                &[rat_from_i64(&[-1, 0]), rat_from_i64(&[0, -1])][..],
            ),
            (
                rat_from_i64(&[0, 1]),
                &[rat_from_i64(&[-1, 0]), rat_from_i64(&[1, 1])][..],
            ),
            (
                rat_from_i64(&[1, 0]),
                &[rat_from_i64(&[0, -1]), rat_from_i64(&[1, 1])][..],
            ),
        ];
        assert_eq!(fan.len(), 3);
        for ((vertex, cone), (expected_vertex, gens)) in fan.iter().zip(&expected) {
            assert_eq!(vertex, expected_vertex);
            assert_eq!(
                cone,
                &Cone::from_generators(gens, &[], 2).unwrap(),
                "cone at {vertex:?}"
            );
        }
    }

    #[test]
    fn tangent_cone_collects_edge_directions() {
        let triangle = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]]), 2).unwrap();
        let t = triangle.tangent_cone(&rat_from_i64(&[0, 0])).unwrap();
        assert_eq!(
            t.generators(),
            &[rat_from_i64(&[0, 1]), rat_from_i64(&[1, 0])]
        );
        assert!(triangle.tangent_cone(&rat_from_i64(&[2, 2])).is_err());
    }

    #[test]
    fn tangent_cone_of_lower_dimensional_polytope_stays_in_its_hull() {
        // Skewed segment in the plane: the tangent cone at an endpoint is
        // the single ray along the segment, confined to its affine hull.
        let seg = Polytope::convex_hull(&pts(&[&[0, 0], &[2, 2]]), 2).unwrap();
        let t = seg.tangent_cone(&rat_from_i64(&[0, 0])).unwrap();
        assert_eq!(t.generators(), &[rat_from_i64(&[1, 1])]);
        assert!(t.lineality().is_empty());
        assert_eq!(t.cone_dim(), 1);
        assert!(!t.contains(&rat_from_i64(&[1, 0])));
    }

    #[test]
    fn polyset_membership() {
        // Segment [0,1] on axis 1, free along axis 2.
        let seg = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0]]), 2).unwrap();
        let set = PolySet::new(seg, &[rat_from_i64(&[0, 1])]).unwrap();
        assert!(set.contains(&alloc::vec![ratio(1, 2), rat(100)]));
        assert!(!set.contains(&rat_from_i64(&[2, 0])));

        // A point with the whole plane free.
        let point = Polytope::convex_hull(&pts(&[&[0, 0]]), 2).unwrap();
        let plane = PolySet::new(point, &[rat_from_i64(&[1, 0]), rat_from_i64(&[0, 1])]).unwrap();
        assert!(plane.contains(&rat_from_i64(&[17, -5])));
    }

    #[test]
    fn polyset_rejects_overlapping_directions() {
        let seg = Polytope::convex_hull(&pts(&[&[0, 0], &[1, 0]]), 2).unwrap();
        assert_eq!(
            PolySet::new(seg, &[rat_from_i64(&[1, 0])]).unwrap_err(),
            GeometryError::InconsistentSpan
        );
    }

    #[test]
    fn intersect_halfspaces_clips() {
        let square =
            Polytope::convex_hull(&pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]), 2).unwrap();
        let clipped = square
            .intersect_halfspaces(&[(rat_from_i64(&[1, 0]), rat(0))])
            .unwrap();
        assert_eq!(
            clipped.vertices(),
            &pts(&[&[0, -1], &[0, 1], &[1, -1], &[1, 1]])[..]
        );
    }
}

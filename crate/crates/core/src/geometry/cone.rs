//! Polyhedral cones with both generator and inequality descriptions.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg;
use crate::matrix::RatMat;
use crate::scalar::Rational;
use crate::vector;

use super::fm::{project_to_prefix, HomogeneousSystem};
use super::GeometryError;

/// A polyhedral cone `{x : ⟨h, x⟩ ≥ 0 for all stored inequalities}`,
/// carrying a matching generator description.
///
/// Canonical form, enforced on construction:
///
/// * `generators` are the extreme rays modulo lineality, reduced against the
///   lineality basis, scaled to primitive integer vectors, lex-sorted;
/// * `lineality` is the reduced-echelon basis of the largest linear subspace
///   contained in the cone (`pointed ⟺ empty`);
/// * `facet_normals` are primitive integer vectors, lex-sorted;
/// * `equalities` is the reduced-echelon basis of the annihilator of the
///   cone's span (empty ⟺ full-dimensional).
///
/// Two cones describe the same set iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    dim: usize,
    generators: Vec<Vec<Rational>>,
    lineality: Vec<Vec<Rational>>,
    facet_normals: Vec<Vec<Rational>>,
    equalities: Vec<Vec<Rational>>,
}

impl Cone {
    /// The cone generated by `gens` plus the linear span of `lineality`.
    pub fn from_generators(
        gens: &[Vec<Rational>],
        lineality: &[Vec<Rational>],
        dim: usize,
    ) -> Result<Cone, GeometryError> {
        for v in gens.iter().chain(lineality) {
            if v.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    actual: v.len(),
                });
            }
        }
        let raw_gens: Vec<Vec<Rational>> = gens
            .iter()
            .filter(|v| !vector::is_zero(v))
            .cloned()
            .collect();
        let raw_lin: Vec<Vec<Rational>> = lineality
            .iter()
            .filter(|v| !vector::is_zero(v))
            .cloned()
            .collect();

        // Variables: x (dim), one multiplier per generator (sign-constrained)
        // and per lineality vector (free).
        let ng = raw_gens.len();
        let nl = raw_lin.len();
        let vars = dim + ng + nl;
        let mut eqs = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = vector::zeros(vars);
            row[i] = Rational::from_integer(1.into());
            for (g, gen) in raw_gens.iter().enumerate() {
                row[dim + g] = -gen[i].clone();
            }
            for (l, lin) in raw_lin.iter().enumerate() {
                row[dim + ng + l] = -lin[i].clone();
            }
            eqs.push(row);
        }
        let mut ineqs = Vec::with_capacity(ng);
        for g in 0..ng {
            let mut row = vector::zeros(vars);
            row[dim + g] = Rational::from_integer(1.into());
            ineqs.push(row);
        }
        let (fm_ineqs, fm_eqs) = project_to_prefix(HomogeneousSystem { vars, eqs, ineqs }, dim)?;
        Ok(Self::canonicalize(dim, raw_gens, raw_lin, fm_ineqs, fm_eqs))
    }

    /// The cone `{x : ⟨h, x⟩ ≥ 0 for h in ineqs, ⟨e, x⟩ = 0 for e in eqs}`.
    pub fn from_inequalities(
        ineqs: &[Vec<Rational>],
        eqs: &[Vec<Rational>],
        dim: usize,
    ) -> Result<Cone, GeometryError> {
        // The set equals the dual of the cone generated by the constraint
        // rows, and duals swap for free once both descriptions are known.
        Ok(Cone::from_generators(ineqs, eqs, dim)?.dual())
    }

    fn canonicalize(
        dim: usize,
        raw_gens: Vec<Vec<Rational>>,
        raw_lin: Vec<Vec<Rational>>,
        fm_ineqs: Vec<Vec<Rational>>,
        fm_eqs: Vec<Vec<Rational>>,
    ) -> Cone {
        let mut constraint_rows: Vec<Vec<Rational>> = fm_ineqs.clone();
        for e in &fm_eqs {
            constraint_rows.push(e.clone());
            constraint_rows.push(vector::neg(e));
        }

        // Lineality: directions on which every constraint vanishes.
        let lineality = linalg::rational_kernel(&RatMat::from_rows(constraint_rows.clone(), dim));

        // A constraint is an implicit equality iff it vanishes on all
        // generators; those rows span the annihilator of the cone's span.
        let vanishes_on_cone = |h: &[Rational]| -> bool {
            raw_gens
                .iter()
                .chain(&raw_lin)
                .all(|g| vector::dot_rat(h, g).is_zero())
        };
        let mut eq_rows: Vec<Vec<Rational>> = Vec::new();
        let mut ineq_rows: Vec<Vec<Rational>> = Vec::new();
        for h in &constraint_rows {
            if vanishes_on_cone(h) {
                eq_rows.push(h.clone());
            } else {
                ineq_rows.push(h.clone());
            }
        }
        let eq_rref = linalg::rref(&RatMat::from_rows(eq_rows, dim));
        let equalities: Vec<Vec<Rational>> = eq_rref
            .mat
            .row_iter()
            .take(eq_rref.rank())
            .map(|r| r.to_vec())
            .collect();

        let cone_dim = dim - equalities.len();
        let lin_dim = lineality.len();

        // Facets: valid inequalities whose contact with the cone has
        // dimension cone_dim - 1.
        let mut facet_normals: Vec<Vec<Rational>> = Vec::new();
        for h in &ineq_rows {
            let mut active: Vec<Vec<Rational>> = raw_lin.clone();
            for g in &raw_gens {
                if vector::dot_rat(h, g).is_zero() {
                    active.push(g.clone());
                }
            }
            let contact = if active.is_empty() {
                0
            } else {
                linalg::rational_rank(&RatMat::from_rows(active, dim))
            };
            if contact + 1 == cone_dim {
                facet_normals.push(vector::int_to_rat(&vector::primitive_direction(h)));
            }
        }
        facet_normals.sort();
        facet_normals.dedup();

        // Extreme rays: generators whose minimal face is one dimension above
        // the lineality space. Representatives are reduced against the
        // lineality basis so equivalent rays collapse to one vector.
        let mut generators: Vec<Vec<Rational>> = Vec::new();
        for g in &raw_gens {
            let reduced = reduce_against_echelon(g, &lineality);
            if vector::is_zero(&reduced) {
                continue;
            }
            let active: Vec<Vec<Rational>> = constraint_rows
                .iter()
                .filter(|h| vector::dot_rat(h, g).is_zero())
                .cloned()
                .collect();
            let face_dim = if active.is_empty() {
                dim
            } else {
                dim - linalg::rational_rank(&RatMat::from_rows(active, dim))
            };
            if face_dim == lin_dim + 1 {
                generators.push(vector::int_to_rat(&vector::primitive_direction(&reduced)));
            }
        }
        generators.sort();
        generators.dedup();

        Cone {
            dim,
            generators,
            lineality,
            facet_normals,
            equalities,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical extreme-ray representatives (empty for a pure subspace).
    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// Reduced-echelon basis of the lineality space.
    pub fn lineality(&self) -> &[Vec<Rational>] {
        &self.lineality
    }

    /// Facet normals `h` of the proper inequalities `⟨h, x⟩ ≥ 0`.
    pub fn facet_normals(&self) -> &[Vec<Rational>] {
        &self.facet_normals
    }

    /// Reduced-echelon basis of the annihilator of the cone's span.
    pub fn equalities(&self) -> &[Vec<Rational>] {
        &self.equalities
    }

    /// Complete inequality description: facet normals plus a ± pair for
    /// every equality direction, lex-sorted. `{x : ⟨h, x⟩ ≥ 0 ∀h}` is
    /// exactly the cone.
    pub fn inequalities(&self) -> Vec<Vec<Rational>> {
        let mut out = self.facet_normals.clone();
        for e in &self.equalities {
            let prim = vector::int_to_rat(&vector::primitive_direction(e));
            out.push(vector::neg(&prim));
            out.push(prim);
        }
        out.sort();
        out
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Dimension of the cone's span.
    pub fn cone_dim(&self) -> usize {
        self.dim - self.equalities.len()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        self.facet_normals
            .iter()
            .all(|h| vector::dot_rat(h, x) >= Rational::zero())
            && self
                .equalities
                .iter()
                .all(|e| vector::dot_rat(e, x).is_zero())
    }

    /// Set equality via mutual satisfaction of each side's V-description by
    /// the other side's H-description. Structurally redundant with `==` on
    /// canonical cones, but computed along an independent route, which is
    /// what the duality tests want.
    pub fn same_set(&self, other: &Cone) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let covered = |a: &Cone, b: &Cone| -> bool {
            a.generators.iter().all(|g| b.contains(g))
                && a.lineality
                    .iter()
                    .all(|l| b.contains(l) && b.contains(&vector::neg(l)))
        };
        covered(self, other) && covered(other, self)
    }

    /// The dual cone `{θ : ⟨g, θ⟩ ≥ 0 on the cone}`. Facets and extreme rays
    /// swap roles, as do lineality and the equality space, so this is a
    /// field swap with no recomputation, and an exact involution.
    pub fn dual(&self) -> Cone {
        Cone {
            dim: self.dim,
            generators: self.facet_normals.clone(),
            lineality: self.equalities.clone(),
            facet_normals: self.generators.clone(),
            equalities: self.lineality.clone(),
        }
    }

    /// A deterministic point in the relative interior of the dual cone,
    /// strictly positive on every generator: the sum of the dual's extreme
    /// rays, scaled to a primitive integer vector. Returns `None` when the
    /// dual has no extreme rays (then only the useless θ = 0 would qualify)
    /// or when strictness fails on some generator.
    pub fn interior_dual_point(&self) -> Option<Vec<Rational>> {
        let dual = self.dual();
        if dual.generators.is_empty() {
            return None;
        }
        let mut theta = vector::zeros(self.dim);
        for g in &dual.generators {
            theta = vector::add(&theta, g);
        }
        let theta = vector::int_to_rat(&vector::primitive_direction(&theta));
        for g in &self.generators {
            if vector::dot_rat(g, &theta) <= Rational::zero() {
                return None;
            }
        }
        debug_assert!(self
            .lineality
            .iter()
            .all(|l| vector::dot_rat(l, &theta).is_zero()));
        Some(theta)
    }
}

/// Reduces `v` against an echelon basis (subtracts the unique combination
/// matching `v` on the pivot coordinates).
pub(super) fn reduce_against_echelon(v: &[Rational], echelon: &[Vec<Rational>]) -> Vec<Rational> {
    let mut out = v.to_vec();
    for row in echelon {
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if out[pivot].is_zero() {
            continue;
        }
        let factor = &out[pivot] / &row[pivot];
        for c in 0..out.len() {
            let x = &out[c] - &(&row[c] * &factor);
            out[c] = x;
        }
    }
    out
}

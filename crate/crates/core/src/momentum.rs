//! Analyses of an action model: everything the momentum map's structure
//! theory pins down from the finite data.
//!
//! * [`local_wedge`] — the image cone of the local momentum map at a
//!   stratum: nonnegative span of the embedded isotropy weights times the
//!   annihilator of the stabilizer's dual.
//! * [`check_effective`] — whether the weights at a fixed point generate the
//!   full dual lattice (Smith divisors all 1).
//! * [`exactness_cone`] — certified exact directions: for strata whose
//!   weight cone is pointed in the stabilizer block, a relative-interior
//!   dual point strictly positive on every weight.
//! * [`exact_subalgebra`] — the subalgebra of one-valued directions, i.e.
//!   the rational kernel of the symbol-expanded period matrix, saturated to
//!   a primitive lattice basis, with its Hermite complement.
//! * [`rationality_degree`], [`generic_degree_and_kernel`],
//!   [`check_degree_bounds`] — period-side rationality invariants.
//! * [`momentum_image`] — the global image: a convex polytope in the exact
//!   block times the free complement block, with vertex witnesses and deck
//!   translation vectors.
//! * [`verify_local_global`] — consistency of the global image against
//!   every stratum's anchored local wedge, including the vertex edge-cone
//!   checks at fixed-point witnesses.
//! * [`half_dim_hamiltonian`] — the half-dimensional criterion: an
//!   effective fixed point on a `2n`-manifold certifies the action; the
//!   operation never answers "no", it either certifies or reports why the
//!   data breaks the preconditions.
//!
//! Weight embedding is not canonical; this module fixes the deterministic
//! Hermite completion of each stabilizer basis, so wedges are canonical
//! subsets only relative to that choice (their exact-block shadows, which
//! every check here consumes, do not depend on it).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::geometry::{Cone, GeometryError, PolySet, Polytope};
use crate::linalg::{self, LinalgError};
use crate::matrix::{ExtMat, IntMat, RatMat};
use crate::model::{ActionModel, StratumDatum, Violation};
use crate::scalar::{ExtScalar, Int, Rational};
use crate::vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MomentumError {
    InvalidModel(Vec<Violation>),
    UnknownStratum {
        label: String,
    },
    /// Effectiveness is only defined at fixed points.
    NotFixedPoint {
        label: String,
    },
    /// Image computation needs `complete_strata`.
    IncompleteStrata,
    /// No stratum is fixed by the exact subtorus, so the image polytope has
    /// no vertices to stand on.
    NoExactFixedStrata,
    /// A weight-side exactness certificate has nonzero periods: the model's
    /// weight and period data contradict each other.
    InconsistentCertificate {
        label: String,
    },
    /// Deck vectors fail to span the free block.
    DeckSpanDeficient {
        spanned: usize,
        needed: usize,
    },
    /// The half-dimensional criterion needs `N = n`.
    HalfDimDimensionMismatch {
        torus_dim: usize,
        half_dim: usize,
    },
    /// The half-dimensional criterion needs an effective fixed point.
    NoEffectiveFixedPoint,
    /// Nonzero periods on a model certified Hamiltonian by a fixed point.
    PeriodsContradictHamiltonian {
        te_dim: usize,
        torus_dim: usize,
    },
    DimensionMismatch {
        expected: usize,
        actual: usize,
    },
    Linalg(LinalgError),
    Geometry(GeometryError),
}

impl fmt::Display for MomentumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentumError::InvalidModel(v) => {
                write!(f, "model fails validation ({} violations)", v.len())
            }
            MomentumError::UnknownStratum { label } => write!(f, "no stratum labeled {label:?}"),
            MomentumError::NotFixedPoint { label } => write!(
                f,
                "effectiveness test requires a fixed point, but {label:?} has a smaller stabilizer"
            ),
            MomentumError::IncompleteStrata => write!(
                f,
                "model is not marked complete_strata; refusing to compute a possibly wrong image"
            ),
            MomentumError::NoExactFixedStrata => {
                write!(f, "no stratum is fixed by the exact subtorus")
            }
            MomentumError::InconsistentCertificate { label } => write!(
                f,
                "stratum {label:?} certifies an exact direction whose periods do not vanish"
            ),
            MomentumError::DeckSpanDeficient { spanned, needed } => write!(
                f,
                "deck vectors span only {spanned} of {needed} free directions"
            ),
            MomentumError::HalfDimDimensionMismatch {
                torus_dim,
                half_dim,
            } => write!(
                f,
                "half-dimensional criterion needs N = n, got N = {half_dim}, n = {torus_dim}"
            ),
            MomentumError::NoEffectiveFixedPoint => {
                write!(f, "no effective fixed point in the model")
            }
            MomentumError::PeriodsContradictHamiltonian { te_dim, torus_dim } => write!(
                f,
                "periods leave an exact subalgebra of dimension {te_dim} < {torus_dim}, \
                 contradicting the fixed-point certificate"
            ),
            MomentumError::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            MomentumError::Linalg(e) => write!(f, "{e}"),
            MomentumError::Geometry(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MomentumError {}

impl From<LinalgError> for MomentumError {
    fn from(e: LinalgError) -> Self {
        MomentumError::Linalg(e)
    }
}

impl From<GeometryError> for MomentumError {
    fn from(e: GeometryError) -> Self {
        MomentumError::Geometry(e)
    }
}

fn validated(model: &ActionModel) -> Result<(), MomentumError> {
    let v = model.validate();
    if v.is_empty() {
        Ok(())
    } else {
        Err(MomentumError::InvalidModel(v))
    }
}

fn stratum<'a>(model: &'a ActionModel, label: &str) -> Result<&'a StratumDatum, MomentumError> {
    model
        .stratum(label)
        .ok_or_else(|| MomentumError::UnknownStratum {
            label: label.into(),
        })
}

/// The coordinate frame of a stratum: dual basis rows of the stabilizer
/// basis extended by its Hermite complement. The first `n_p` rows pair to 1
/// with the stabilizer rows; the remaining rows span the annihilator of the
/// stabilizer.
struct StratumFrame {
    dual_rows: IntMat,
    n_p: usize,
}

fn stratum_frame(s: &StratumDatum, n: usize) -> Result<StratumFrame, MomentumError> {
    let stab = s.stabilizer_matrix(n);
    let comp = linalg::hermite_complement(&stab, n)?;
    let basis = stab.stack(&comp);
    let inv = linalg::unimodular_inverse(&basis)
        .expect("stabilizer basis with its Hermite complement is unimodular");
    Ok(StratumFrame {
        dual_rows: inv.transpose(),
        n_p: s.n_p(),
    })
}

impl StratumFrame {
    /// Embeds a stabilizer covector into the ambient dual.
    fn embed_weight(&self, w: &[Int]) -> Vec<Int> {
        let n = self.dual_rows.cols();
        (0..n)
            .map(|c| {
                let mut acc = Int::zero();
                for (i, wi) in w.iter().enumerate() {
                    acc += wi * self.dual_rows.at(i, c);
                }
                acc
            })
            .collect()
    }

    /// The annihilator-complement directions (rows `n_p..n` of the dual
    /// basis), spanning `(t_p^*)^⊥`.
    fn annihilator_rows(&self) -> Vec<Vec<Rational>> {
        (self.n_p..self.dual_rows.rows())
            .map(|r| vector::int_to_rat(self.dual_rows.row(r)))
            .collect()
    }
}

fn wedge_of(s: &StratumDatum, n: usize) -> Result<Cone, MomentumError> {
    let frame = stratum_frame(s, n)?;
    let gens: Vec<Vec<Rational>> = s
        .weights
        .iter()
        .map(|w| vector::int_to_rat(&frame.embed_weight(w)))
        .collect();
    Ok(Cone::from_generators(&gens, &frame.annihilator_rows(), n)?)
}

/// The local wedge of a stratum: the cone in the ambient dual generated by
/// the embedded weights, with the annihilator of the stabilizer's dual as
/// lineality. A free stratum yields the whole space, a fixed point a cone
/// without lineality.
pub fn local_wedge(model: &ActionModel, label: &str) -> Result<Cone, MomentumError> {
    validated(model)?;
    wedge_of(stratum(model, label)?, model.torus_dim)
}

/// A stratum's weights embedded into the ambient dual through the fixed
/// Hermite-completion frame: the embedded covector pairs with the
/// stabilizer rows exactly as the stored weight does and annihilates the
/// complement rows.
pub fn embedded_weights(model: &ActionModel, label: &str) -> Result<Vec<Vec<Int>>, MomentumError> {
    validated(model)?;
    let s = stratum(model, label)?;
    let frame = stratum_frame(s, model.torus_dim)?;
    Ok(s.weights.iter().map(|w| frame.embed_weight(w)).collect())
}

/// Whether the weights at a fixed point generate the full dual lattice:
/// true iff the embedded weight matrix has exactly `n` elementary divisors
/// equal to 1.
pub fn check_effective(model: &ActionModel, label: &str) -> Result<bool, MomentumError> {
    validated(model)?;
    let s = stratum(model, label)?;
    let n = model.torus_dim;
    if !s.is_fixed_point(n) {
        return Err(MomentumError::NotFixedPoint {
            label: label.into(),
        });
    }
    let frame = stratum_frame(s, n)?;
    let rows: Vec<Vec<Int>> = s.weights.iter().map(|w| frame.embed_weight(w)).collect();
    let m = IntMat::from_rows(rows, n);
    let snf = linalg::smith_normal_form(&m);
    let ones = snf
        .divisors()
        .iter()
        .filter(|d| **d == Int::from(1))
        .count();
    Ok(ones == n)
}

/// Proven-exact directions harvested from the strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessCertificates {
    /// `(stratum label, θ)` pairs: θ pairs strictly positively with every
    /// weight of the stratum, so the corresponding 1-form has an isolated
    /// local minimum there and is exact.
    pub certificates: Vec<(String, Vec<Rational>)>,
    /// Canonical basis of the subspace spanned by all certificates.
    pub span: IntMat,
}

/// Collects an exactness certificate from every stratum whose weight cone is
/// pointed in its stabilizer block. Strata with boundary-degenerate wedges
/// (weight cone not pointed, or some weight pairing to zero) yield no
/// certificate rather than a guessed one.
pub fn exactness_cone(model: &ActionModel) -> Result<ExactnessCertificates, MomentumError> {
    validated(model)?;
    let n = model.torus_dim;
    let mut certificates: Vec<(String, Vec<Rational>)> = Vec::new();
    for s in &model.strata {
        if s.n_p() == 0 {
            continue;
        }
        let block_gens: Vec<Vec<Rational>> =
            s.weights.iter().map(|w| vector::int_to_rat(w)).collect();
        let block = Cone::from_generators(&block_gens, &[], s.n_p())?;
        if !block.is_pointed() || block.generators().is_empty() {
            continue;
        }
        let frame = stratum_frame(s, n)?;
        let wedge = wedge_of(s, n)?;
        let Some(theta) = wedge.interior_dual_point() else {
            continue;
        };
        let strict = s.weights.iter().all(|w| {
            let embedded = vector::int_to_rat(&frame.embed_weight(w));
            vector::dot_rat(&embedded, &theta) > Rational::zero()
        });
        if strict {
            certificates.push((s.label.clone(), theta));
        }
    }
    let span = if certificates.is_empty() {
        IntMat::zero(0, n)
    } else {
        let rows: Vec<Vec<Rational>> = certificates.iter().map(|(_, t)| t.clone()).collect();
        linalg::saturate_rowspan(&RatMat::from_rows(rows, n))
    };
    Ok(ExactnessCertificates { certificates, span })
}

/// The exact subalgebra and its rational complement. `basis` rows form the
/// canonical (Hermite) primitive basis of `t_e ∩ Z^n`; `complement` rows
/// complete it to a basis of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSubalgebra {
    pub basis: IntMat,
    pub complement: IntMat,
}

impl ExactSubalgebra {
    pub fn te_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn tc_dim(&self) -> usize {
        self.complement.rows()
    }

    pub fn torus_dim(&self) -> usize {
        self.basis.cols()
    }
}

/// The exact subalgebra: directions whose periods all vanish, computed as
/// the rational kernel of the symbol-expanded period matrix and saturated to
/// a primitive integer basis. The period side is the source of truth;
/// weight-side certificates from [`exactness_cone`] are replayed against it
/// and any certificate with nonzero periods is reported as a model
/// inconsistency naming the offending stratum.
pub fn exact_subalgebra(model: &ActionModel) -> Result<ExactSubalgebra, MomentumError> {
    validated(model)?;
    let n = model.torus_dim;
    let expanded = linalg::expand_symbols(&model.periods, model.symbol_count())?;
    let kernel = linalg::rational_kernel(&expanded);
    let basis = if kernel.is_empty() {
        IntMat::zero(0, n)
    } else {
        linalg::saturate_rowspan(&RatMat::from_rows(kernel, n))
    };
    let complement = linalg::hermite_complement(&basis, n)?;

    let certs = exactness_cone(model)?;
    for (label, theta) in &certs.certificates {
        let image = expanded.mul_vec(theta);
        if !vector::is_zero(&image) {
            return Err(MomentumError::InconsistentCertificate {
                label: label.clone(),
            });
        }
    }
    Ok(ExactSubalgebra { basis, complement })
}

/// Dimension of the rational span of the periods of the direction `θ`.
pub fn rationality_degree(model: &ActionModel, theta: &[Rational]) -> Result<usize, MomentumError> {
    validated(model)?;
    if theta.len() != model.torus_dim {
        return Err(MomentumError::DimensionMismatch {
            expected: model.torus_dim,
            actual: theta.len(),
        });
    }
    let values: Vec<ExtScalar> = (0..model.betti1)
        .map(|j| vector::dot_ext_rat(model.periods.row(j), theta))
        .collect();
    let row = ExtMat::from_rows(alloc::vec![values], model.betti1);
    Ok(linalg::ext_rank(&row, model.symbol_count())?)
}

/// The generic rationality degree and the common period kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericDegree {
    /// Rank of `Z^{b1}` modulo the kernel: the deck-transformation rank of
    /// the minimal covering trivializing every 1-form.
    pub degree: usize,
    /// Canonical basis of the common kernel of all period maps, a saturated
    /// sublattice of `Z^{b1}`.
    pub kernel_basis: IntMat,
}

pub fn generic_degree_and_kernel(model: &ActionModel) -> Result<GenericDegree, MomentumError> {
    validated(model)?;
    let transposed = model.periods.transpose();
    let expanded = linalg::expand_symbols(&transposed, model.symbol_count())?;
    let kernel_basis = linalg::integer_kernel(&linalg::clear_row_denominators(&expanded));
    Ok(GenericDegree {
        degree: model.betti1 - kernel_basis.rows(),
        kernel_basis,
    })
}

/// Report of the two rationality bounds. Failures indicate inconsistent
/// authored data, since both bounds are theorems for genuine actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundsReport {
    pub torus_dim: usize,
    pub betti1: usize,
    pub te_dim: usize,
    pub generic_degree: usize,
    /// `generic degree ≥ n`, checked only when `t_e = 0`.
    pub degree_bound: Option<bool>,
    /// `dim t_e ≥ n − b1`, always checked.
    pub dimension_bound: bool,
}

impl DegreeBoundsReport {
    pub fn passed(&self) -> bool {
        self.degree_bound.unwrap_or(true) && self.dimension_bound
    }
}

pub fn check_degree_bounds(model: &ActionModel) -> Result<DegreeBoundsReport, MomentumError> {
    let sub = exact_subalgebra(model)?;
    let generic = generic_degree_and_kernel(model)?;
    let n = model.torus_dim;
    let te_dim = sub.te_dim();
    Ok(DegreeBoundsReport {
        torus_dim: n,
        betti1: model.betti1,
        te_dim,
        generic_degree: generic.degree,
        degree_bound: (te_dim == 0).then_some(generic.degree >= n),
        dimension_bound: te_dim + model.betti1 >= n,
    })
}

/// The image of the lifted momentum map: a convex polytope in exact-block
/// coordinates times the free complement block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentumImage {
    pub subalgebra: ExactSubalgebra,
    /// The polytope `P` in exact-block coordinates (dimension `dim t_e`).
    pub polytope: Polytope,
    /// The full image `P × t_c^*` as a subset of the ambient dual, in
    /// standard coordinates.
    pub image: PolySet,
    /// For each vertex of `polytope`, the first stratum whose projected
    /// anchor realizes it.
    pub vertex_witnesses: Vec<(Vec<Rational>, String)>,
    /// Deck translation vectors in free-block coordinates, one per homology
    /// generator.
    pub deck_vectors: Vec<Vec<ExtScalar>>,
}

impl MomentumImage {
    pub fn witness_of(&self, vertex: &[Rational]) -> Option<&str> {
        self.vertex_witnesses
            .iter()
            .find(|(v, _)| v == vertex)
            .map(|(_, l)| l.as_str())
    }

    /// Embeds an exact-block vertex into standard dual coordinates.
    pub fn embed_vertex(&self, vertex: &[Rational]) -> Vec<Rational> {
        embed_through(&self.subalgebra, vertex)
    }
}

/// Dual-basis rows of the splitting `[basis; complement]`.
fn splitting_dual_rows(sub: &ExactSubalgebra) -> RatMat {
    let basis = sub.basis.stack(&sub.complement);
    let inv = linalg::unimodular_inverse(&basis)
        .expect("exact basis with its Hermite complement is unimodular");
    inv.transpose().to_rational()
}

fn embed_through(sub: &ExactSubalgebra, vertex: &[Rational]) -> Vec<Rational> {
    let dual = splitting_dual_rows(sub);
    let n = sub.torus_dim();
    let mut out = vector::zeros(n);
    for (i, x) in vertex.iter().enumerate() {
        out = vector::add(&out, &vector::scale(dual.row(i), x));
    }
    out
}

fn is_exact_fixed(s: &StratumDatum, te_basis: &IntMat, n: usize) -> bool {
    if te_basis.rows() == 0 {
        return true;
    }
    let stab = s.stabilizer_matrix(n).to_rational();
    let stacked = stab.stack(&te_basis.to_rational());
    let stab_rank = if stab.rows() == 0 {
        0
    } else {
        linalg::rational_rank(&stab)
    };
    linalg::rational_rank(&stacked) == stab_rank
}

/// Computes the global momentum image.
///
/// Refuses models not marked `complete_strata` (a silently wrong polytope is
/// worse than a refusal). Projects the anchors of every stratum fixed by the
/// exact subtorus onto exact-block coordinates, takes their hull, attaches
/// the free block, and checks the surjectivity obligation: the expanded deck
/// vectors must span the free block.
pub fn momentum_image(model: &ActionModel) -> Result<MomentumImage, MomentumError> {
    validated(model)?;
    if !model.complete_strata {
        return Err(MomentumError::IncompleteStrata);
    }
    let n = model.torus_dim;
    let sub = exact_subalgebra(model)?;
    let ne = sub.te_dim();
    let nc = sub.tc_dim();
    let dual = splitting_dual_rows(&sub);

    let fixed: Vec<&StratumDatum> = model
        .strata
        .iter()
        .filter(|s| is_exact_fixed(s, &sub.basis, n))
        .collect();
    if fixed.is_empty() {
        return Err(MomentumError::NoExactFixedStrata);
    }

    let exact_block = sub.basis.to_rational();
    let projections: Vec<Vec<Rational>> = fixed
        .iter()
        .map(|s| exact_block.mul_vec(&s.momentum_anchor))
        .collect();
    let polytope = Polytope::convex_hull(&projections, ne)?;

    let mut vertex_witnesses = Vec::with_capacity(polytope.vertices().len());
    for v in polytope.vertices() {
        let witness = fixed
            .iter()
            .zip(&projections)
            .find(|(_, p)| *p == v)
            .map(|(s, _)| s.label.clone())
            .expect("every hull vertex is one of the projected anchors");
        vertex_witnesses.push((v.clone(), witness));
    }

    let embedded: Vec<Vec<Rational>> = polytope
        .vertices()
        .iter()
        .map(|v| embed_through(&sub, v))
        .collect();
    let free: Vec<Vec<Rational>> = (ne..n).map(|r| dual.row(r).to_vec()).collect();
    let image = PolySet::new(Polytope::convex_hull(&embedded, n)?, &free)?;

    let mut deck_vectors: Vec<Vec<ExtScalar>> = Vec::with_capacity(model.betti1);
    for j in 0..model.betti1 {
        let row = model.periods.row(j);
        for i in 0..ne {
            debug_assert!(vector::dot_ext_int(row, sub.basis.row(i)).is_zero());
        }
        deck_vectors.push(
            (0..nc)
                .map(|k| vector::dot_ext_int(row, sub.complement.row(k)))
                .collect(),
        );
    }
    if nc > 0 {
        let deck = ExtMat::from_rows(deck_vectors.clone(), nc);
        let spanned = linalg::ext_rank(&deck, model.symbol_count())?;
        if spanned < nc {
            return Err(MomentumError::DeckSpanDeficient {
                spanned,
                needed: nc,
            });
        }
    }

    Ok(MomentumImage {
        subalgebra: sub,
        polytope,
        image,
        vertex_witnesses,
        deck_vectors,
    })
}

/// One failed local-global containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContainmentViolation {
    /// A polytope vertex leaves the wedge anchored at the stratum.
    VertexOutsideWedge {
        stratum: String,
        vertex: Vec<Rational>,
        normal: Vec<Rational>,
    },
    /// A free direction is not a lineality direction of the wedge.
    FreeDirectionEscapesWedge {
        stratum: String,
        direction: Vec<Rational>,
        normal: Vec<Rational>,
    },
    /// An edge direction at a fixed-point witness vertex leaves its wedge.
    EdgeDirectionOutsideWedge {
        stratum: String,
        vertex: Vec<Rational>,
        direction: Vec<Rational>,
    },
}

impl ContainmentViolation {
    pub fn stratum(&self) -> &str {
        match self {
            ContainmentViolation::VertexOutsideWedge { stratum, .. }
            | ContainmentViolation::FreeDirectionEscapesWedge { stratum, .. }
            | ContainmentViolation::EdgeDirectionOutsideWedge { stratum, .. } => stratum,
        }
    }
}

impl fmt::Display for ContainmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContainmentViolation::VertexOutsideWedge {
                stratum, vertex, ..
            } => write!(
                f,
                "vertex {vertex:?} leaves the wedge anchored at stratum {stratum:?}"
            ),
            ContainmentViolation::FreeDirectionEscapesWedge {
                stratum, direction, ..
            } => write!(
                f,
                "free direction {direction:?} is not flat for the wedge at stratum {stratum:?}"
            ),
            ContainmentViolation::EdgeDirectionOutsideWedge {
                stratum,
                vertex,
                direction,
            } => write!(
                f,
                "edge direction {direction:?} at vertex {vertex:?} leaves the wedge of stratum {stratum:?}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalGlobalReport {
    pub violations: Vec<ContainmentViolation>,
}

impl LocalGlobalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the image against every stratum's anchored wedge: each polytope
/// vertex must satisfy the wedge inequalities relative to the stratum's
/// anchor, each free direction must be flat for them, and at every vertex
/// witnessed by a fixed point the polytope's edge cone must sit inside that
/// fixed point's wedge.
pub fn verify_local_global(
    model: &ActionModel,
    image: &MomentumImage,
) -> Result<LocalGlobalReport, MomentumError> {
    validated(model)?;
    let n = model.torus_dim;
    let mut violations = Vec::new();

    let embedded_vertices: Vec<Vec<Rational>> = image
        .polytope
        .vertices()
        .iter()
        .map(|v| image.embed_vertex(v))
        .collect();
    let free_dirs = image.image.subspace();

    for s in &model.strata {
        let wedge = wedge_of(s, n)?;
        let rows = wedge.inequalities();
        for x in &embedded_vertices {
            let shifted = vector::sub(x, &s.momentum_anchor);
            for h in &rows {
                if vector::dot_rat(h, &shifted) < Rational::zero() {
                    violations.push(ContainmentViolation::VertexOutsideWedge {
                        stratum: s.label.clone(),
                        vertex: x.clone(),
                        normal: h.clone(),
                    });
                }
            }
        }
        for d in free_dirs {
            for h in &rows {
                if !vector::dot_rat(h, d).is_zero() {
                    violations.push(ContainmentViolation::FreeDirectionEscapesWedge {
                        stratum: s.label.clone(),
                        direction: d.clone(),
                        normal: h.clone(),
                    });
                }
            }
        }
    }

    for ((vertex, label), embedded) in image.vertex_witnesses.iter().zip(&embedded_vertices) {
        debug_assert_eq!(&image.embed_vertex(vertex), embedded);
        let s = stratum(model, label)?;
        if !s.is_fixed_point(n) {
            continue;
        }
        let wedge = wedge_of(s, n)?;
        let tangent = image.image.polytope().tangent_cone(embedded)?;
        for g in tangent.generators().iter().chain(tangent.lineality()) {
            if !wedge.contains(g) {
                violations.push(ContainmentViolation::EdgeDirectionOutsideWedge {
                    stratum: s.label.clone(),
                    vertex: embedded.clone(),
                    direction: g.clone(),
                });
            }
        }
        for l in tangent.lineality() {
            if !wedge.contains(&vector::neg(l)) {
                violations.push(ContainmentViolation::EdgeDirectionOutsideWedge {
                    stratum: s.label.clone(),
                    vertex: embedded.clone(),
                    direction: vector::neg(l),
                });
            }
        }
    }

    Ok(LocalGlobalReport { violations })
}

/// A certificate of the half-dimensional criterion: on success the action
/// is Hamiltonian, witnessed by an effective fixed point and an exact
/// direction θ strictly positive on its weights. This operation never
/// answers "not Hamiltonian": when the preconditions fail it errors instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfDimCertificate {
    pub stratum: String,
    pub theta: Vec<Rational>,
}

pub fn half_dim_hamiltonian(model: &ActionModel) -> Result<HalfDimCertificate, MomentumError> {
    validated(model)?;
    let n = model.torus_dim;
    if model.half_dim != n {
        return Err(MomentumError::HalfDimDimensionMismatch {
            torus_dim: n,
            half_dim: model.half_dim,
        });
    }
    let mut witness: Option<&StratumDatum> = None;
    for s in &model.strata {
        if s.is_fixed_point(n) && check_effective(model, &s.label)? {
            witness = Some(s);
            break;
        }
    }
    let Some(s) = witness else {
        return Err(MomentumError::NoEffectiveFixedPoint);
    };
    let wedge = wedge_of(s, n)?;
    let theta = wedge
        .interior_dual_point()
        .expect("an effective fixed point on a 2n-manifold has a simplicial wedge");

    let sub = exact_subalgebra(model)?;
    if sub.te_dim() != n {
        return Err(MomentumError::PeriodsContradictHamiltonian {
            te_dim: sub.te_dim(),
            torus_dim: n,
        });
    }
    Ok(HalfDimCertificate {
        stratum: s.label.clone(),
        theta,
    })
}

//! JSON rendering of analysis results.
//!
//! Every scalar that lives in the exact world is rendered as a string:
//! rationals as `"p/q"`, lattice integers as `"k"`, symbol-extended scalars
//! as term lists `[["p/q", symbol_index], ...]`. Structural counts
//! (dimensions, degrees, ranks) are plain JSON numbers. `serde_json` maps
//! are ordered, so identical inputs produce byte-identical reports.

use serde_json::{json, Value};

use momap_core::geometry::{Cone, PolySet, Polytope};
use momap_core::matrix::IntMat;
use momap_core::model::Violation;
use momap_core::momentum::{
    ContainmentViolation, DegreeBoundsReport, ExactSubalgebra, LocalGlobalReport, MomentumImage,
};
use momap_core::scalar::{rational_to_string, ExtScalar, Rational};
use momap_core::stability::BoundaryEdge;

use crate::formats::ext_to_terms;

pub fn rat_vec(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| json!(rational_to_string(x))).collect())
}

pub fn rat_rows(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| rat_vec(r)).collect())
}

pub fn int_matrix(m: &IntMat) -> Value {
    Value::Array(
        m.row_iter()
            .map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}

pub fn ext_vec(v: &[ExtScalar]) -> Value {
    Value::Array(v.iter().map(|x| json!(ext_to_terms(x))).collect())
}

pub fn cone(c: &Cone) -> Value {
    json!({
        "ambient_dim": c.dim(),
        "generators": rat_rows(c.generators()),
        "lineality": rat_rows(c.lineality()),
        "inequalities": rat_rows(&c.inequalities()),
    })
}

pub fn polytope(p: &Polytope) -> Value {
    let facets: Vec<Value> = p
        .facets()
        .iter()
        .map(|(h, c)| json!({"normal": rat_vec(h), "offset": rational_to_string(c)}))
        .collect();
    let eqs: Vec<Value> = p
        .affine_eqs()
        .iter()
        .map(|(h, c)| json!({"normal": rat_vec(h), "offset": rational_to_string(c)}))
        .collect();
    json!({
        "ambient_dim": p.dim(),
        "dim": p.polytope_dim(),
        "vertices": rat_rows(p.vertices()),
        "facets": facets,
        "affine_equalities": eqs,
    })
}

pub fn polyset(s: &PolySet) -> Value {
    json!({
        "polytope": polytope(s.polytope()),
        "free_basis": rat_rows(s.subspace()),
        "free_dim": s.free_dim(),
    })
}

pub fn violations(v: &[Violation]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| {
                json!({
                    "kind": x.kind(),
                    "stratum": x.label(),
                    "message": x.to_string(),
                })
            })
            .collect(),
    )
}

pub fn subalgebra(sub: &ExactSubalgebra) -> Value {
    json!({
        "te_basis": int_matrix(&sub.basis),
        "tc_basis": int_matrix(&sub.complement),
        "te_dim": sub.te_dim(),
        "tc_dim": sub.tc_dim(),
    })
}

pub fn containment_violation(v: &ContainmentViolation) -> Value {
    let (kind, detail) = match v {
        ContainmentViolation::VertexOutsideWedge { vertex, normal, .. } => (
            "vertex outside wedge",
            json!({"vertex": rat_vec(vertex), "normal": rat_vec(normal)}),
        ),
        ContainmentViolation::FreeDirectionEscapesWedge {
            direction, normal, ..
        } => (
            "free direction escapes wedge",
            json!({"direction": rat_vec(direction), "normal": rat_vec(normal)}),
        ),
        ContainmentViolation::EdgeDirectionOutsideWedge {
            vertex, direction, ..
        } => (
            "edge direction outside wedge",
            json!({"vertex": rat_vec(vertex), "direction": rat_vec(direction)}),
        ),
    };
    json!({
        "kind": kind,
        "stratum": v.stratum(),
        "detail": detail,
        "message": v.to_string(),
    })
}

pub fn local_global(r: &LocalGlobalReport) -> Value {
    json!({
        "passed": r.passed(),
        "violations": Value::Array(r.violations.iter().map(containment_violation).collect()),
    })
}

pub fn degree_bounds(r: &DegreeBoundsReport) -> Value {
    json!({
        "passed": r.passed(),
        "torus_dim": r.torus_dim,
        "betti1": r.betti1,
        "te_dim": r.te_dim,
        "generic_degree": r.generic_degree,
        "degree_bound": r.degree_bound,
        "dimension_bound": r.dimension_bound,
    })
}

pub fn momentum_image(img: &MomentumImage) -> Value {
    let witnesses: Vec<Value> = img
        .vertex_witnesses
        .iter()
        .map(|(v, label)| json!({"vertex": rat_vec(v), "stratum": label}))
        .collect();
    json!({
        "subalgebra": subalgebra(&img.subalgebra),
        "polytope": polytope(&img.polytope),
        "image": polyset(&img.image),
        "witnesses": witnesses,
        "deck_vectors": Value::Array(img.deck_vectors.iter().map(|v| ext_vec(v)).collect()),
    })
}

pub fn boundary_edge(e: &BoundaryEdge) -> Value {
    json!({
        "from": rat_vec(&e.from),
        "to": rat_vec(&e.to),
        "direction": Value::Array(e.direction.iter().map(|x| json!(x.to_string())).collect()),
        "length": rational_to_string(&e.lattice_length),
    })
}

//! The model document format and the polytope file format.
//!
//! A model document is a single JSON object:
//!
//! ```json
//! {
//!   "torus_dim": 2, "half_dim": 2, "betti1": 0,
//!   "symbols": ["1", "sqrt2"],
//!   "strata": [
//!     {"label": "p0",
//!      "stabilizer_basis": [[1, 0], [0, 1]],
//!      "weights": [[1, 0], [0, 1]],
//!      "r_p": 0,
//!      "momentum_anchor": ["0/1", "0/1"]}
//!   ],
//!   "periods": [],
//!   "complete_strata": true,
//!   "root_system": {"simple_roots": [[2]]}
//! }
//! ```
//!
//! Rationals are strings `"p/q"` (a bare `"p"` is accepted on input and
//! written as `"p/1"`). Period entries are term lists `[["p/q", symbol_index],
//! ...]`; an empty list is zero. `root_system` is optional. Unknown fields
//! are rejected.
//!
//! A polytope file is `{"vertices": [["p/q", ...], ...]}`; the polytope is
//! the convex hull of the listed points.

use std::fmt;

use serde::{Deserialize, Serialize};

use momap_core::geometry::Polytope;
use momap_core::matrix::ExtMat;
use momap_core::model::{ActionModel, StratumDatum, Violation};
use momap_core::scalar::{rational_to_string, ExtScalar, Int, Rational};
use momap_core::weyl::RootSystem;

#[derive(Debug)]
pub enum LoadError {
    /// The document does not parse or is structurally malformed.
    Malformed(String),
    /// The document parses but the model fails validation.
    Invalid(Vec<Violation>),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Malformed(m) => write!(f, "malformed document: {m}"),
            LoadError::Invalid(v) => {
                writeln!(f, "model fails validation:")?;
                for violation in v {
                    writeln!(f, "  - {violation}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for LoadError {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    pub torus_dim: usize,
    pub half_dim: usize,
    pub betti1: usize,
    pub symbols: Vec<String>,
    pub strata: Vec<StratumDoc>,
    pub periods: Vec<Vec<Vec<(String, usize)>>>,
    pub complete_strata: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_system: Option<RootSystemDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumDoc {
    pub label: String,
    pub stabilizer_basis: Vec<Vec<i64>>,
    pub weights: Vec<Vec<i64>>,
    pub r_p: usize,
    pub momentum_anchor: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemDoc {
    pub simple_roots: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub vertices: Vec<Vec<String>>,
}

/// Parses `"p/q"` (or a bare `"p"`).
pub fn parse_rational(s: &str) -> Result<Rational, LoadError> {
    let bad = || LoadError::Malformed(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: Int = num.parse().map_err(|_| bad())?;
    let den: Int = den.parse().map_err(|_| bad())?;
    if den == Int::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_rational_vec(v: &[String]) -> Result<Vec<Rational>, LoadError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

impl ModelDoc {
    pub fn into_model(self) -> Result<ActionModel, LoadError> {
        let n = self.torus_dim;
        let mut strata = Vec::with_capacity(self.strata.len());
        for s in self.strata {
            strata.push(StratumDatum {
                label: s.label,
                stabilizer_basis: s.stabilizer_basis.iter().map(|r| int_vec(r)).collect(),
                weights: s.weights.iter().map(|r| int_vec(r)).collect(),
                r_p: s.r_p,
                momentum_anchor: parse_rational_vec(&s.momentum_anchor)?,
            });
        }

        if self.periods.len() != self.betti1 {
            return Err(LoadError::Malformed(format!(
                "period matrix has {} rows, betti1 is {}",
                self.periods.len(),
                self.betti1
            )));
        }
        let mut period_rows = Vec::with_capacity(self.periods.len());
        for row in &self.periods {
            if row.len() != n {
                return Err(LoadError::Malformed(format!(
                    "period row has {} entries, torus_dim is {n}",
                    row.len()
                )));
            }
            let mut entries = Vec::with_capacity(row.len());
            for terms in row {
                let mut scalar = ExtScalar::zero();
                for (coeff, index) in terms {
                    scalar = &scalar + &ExtScalar::term(parse_rational(coeff)?, *index);
                }
                entries.push(scalar);
            }
            period_rows.push(entries);
        }
        let periods = ExtMat::from_rows(period_rows, n);

        let root_system = match self.root_system {
            None => None,
            Some(doc) => Some(
                RootSystem::new(doc.simple_roots.iter().map(|r| int_vec(r)).collect())
                    .map_err(|e| LoadError::Malformed(e.to_string()))?,
            ),
        };

        Ok(ActionModel {
            torus_dim: self.torus_dim,
            half_dim: self.half_dim,
            betti1: self.betti1,
            symbols: self.symbols,
            strata,
            periods,
            complete_strata: self.complete_strata,
            root_system,
        })
    }

    pub fn from_model(model: &ActionModel) -> Result<ModelDoc, LoadError> {
        let to_i64 = |x: &Int| -> Result<i64, LoadError> {
            i64::try_from(x).map_err(|_| {
                LoadError::Malformed(format!("integer {x} exceeds the document range"))
            })
        };
        let int_rows = |rows: &[Vec<Int>]| -> Result<Vec<Vec<i64>>, LoadError> {
            rows.iter()
                .map(|r| r.iter().map(to_i64).collect())
                .collect()
        };
        let mut strata = Vec::with_capacity(model.strata.len());
        for s in &model.strata {
            strata.push(StratumDoc {
                label: s.label.clone(),
                stabilizer_basis: int_rows(&s.stabilizer_basis)?,
                weights: int_rows(&s.weights)?,
                r_p: s.r_p,
                momentum_anchor: s.momentum_anchor.iter().map(rational_to_string).collect(),
            });
        }
        let mut periods = Vec::with_capacity(model.periods.rows());
        for r in 0..model.periods.rows() {
            let mut row = Vec::with_capacity(model.periods.cols());
            for c in 0..model.periods.cols() {
                row.push(ext_to_terms(model.periods.at(r, c)));
            }
            periods.push(row);
        }
        let root_system = match &model.root_system {
            None => None,
            Some(rs) => Some(RootSystemDoc {
                simple_roots: int_rows(rs.simple_roots())?,
            }),
        };
        Ok(ModelDoc {
            torus_dim: model.torus_dim,
            half_dim: model.half_dim,
            betti1: model.betti1,
            symbols: model.symbols.clone(),
            strata,
            periods,
            complete_strata: model.complete_strata,
            root_system,
        })
    }
}

pub fn ext_to_terms(x: &ExtScalar) -> Vec<(String, usize)> {
    x.terms().map(|(i, c)| (rational_to_string(c), i)).collect()
}

/// Parses and validates a model document. With `force`, validation
/// violations are ignored (the parse must still succeed).
pub fn load_model(bytes: &[u8], force: bool) -> Result<ActionModel, LoadError> {
    let doc: ModelDoc =
        serde_json::from_slice(bytes).map_err(|e| LoadError::Malformed(e.to_string()))?;
    let model = doc.into_model()?;
    if !force {
        let violations = model.validate();
        if !violations.is_empty() {
            return Err(LoadError::Invalid(violations));
        }
    }
    Ok(model)
}

/// Canonical serialization: field order fixed by the schema, rationals
/// normalized. `load ∘ save` is the identity on valid models.
pub fn save_model(model: &ActionModel) -> Result<String, LoadError> {
    let doc = ModelDoc::from_model(model)?;
    Ok(serde_json::to_string_pretty(&doc).expect("document serialization cannot fail"))
}

pub fn load_polytope(bytes: &[u8]) -> Result<Polytope, LoadError> {
    let doc: PolytopeDoc =
        serde_json::from_slice(bytes).map_err(|e| LoadError::Malformed(e.to_string()))?;
    if doc.vertices.is_empty() {
        return Err(LoadError::Malformed("empty vertex list".into()));
    }
    let dim = doc.vertices[0].len();
    let mut points = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        if v.len() != dim {
            return Err(LoadError::Malformed("vertices of mixed dimensions".into()));
        }
        points.push(parse_rational_vec(v)?);
    }
    Polytope::convex_hull(&points, dim).map_err(|e| LoadError::Malformed(e.to_string()))
}

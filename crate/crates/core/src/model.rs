//! The action descriptor: the finite data attached to a symplectic torus
//! action, with validation.
//!
//! An [`ActionModel`] is authored data, not something derived from a
//! manifold: it records the torus dimension `n`, the manifold half-dimension
//! `N`, the first Betti number `b1`, one [`StratumDatum`] per orbit-type
//! stratum (stabilizer basis, isotropy weights, a chosen momentum anchor),
//! and the period matrix of the action 1-forms over a homology basis.
//!
//! Two contracts the data author carries:
//!
//! * the declared symbols are linearly independent over the rationals (see
//!   [`crate::scalar`]);
//! * momentum anchors of different strata are lifts chosen consistently on
//!   one covering — the library handles the translation ambiguity globally,
//!   never per stratum.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::linalg;
use crate::matrix::{ExtMat, IntMat};
use crate::scalar::{Int, Rational};
use crate::weyl::RootSystem;

/// One orbit-type stratum.
///
/// `stabilizer_basis` rows form an integral basis of the stabilizer
/// subalgebra inside `Z^n` (so a fixed point has `n` rows). Weights are
/// integer covectors *on the stabilizer*, expressed against
/// `stabilizer_basis` — embedding them into the ambient dual is a
/// computation, not data (the identification is not canonical; the library
/// fixes the Hermite completion of the stabilizer basis). `momentum_anchor`
/// is the momentum value of one chosen lift of the stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumDatum {
    pub label: String,
    pub stabilizer_basis: Vec<Vec<Int>>,
    pub weights: Vec<Vec<Int>>,
    pub r_p: usize,
    pub momentum_anchor: Vec<Rational>,
}

impl StratumDatum {
    /// Dimension of the stabilizer subtorus.
    pub fn n_p(&self) -> usize {
        self.stabilizer_basis.len()
    }

    /// Codimension of the stabilizer, `m_p = n - n_p`.
    pub fn m_p(&self, torus_dim: usize) -> usize {
        torus_dim.saturating_sub(self.n_p())
    }

    pub fn is_fixed_point(&self, torus_dim: usize) -> bool {
        self.n_p() == torus_dim
    }

    /// Stabilizer rows as a matrix; call only on validated data.
    pub fn stabilizer_matrix(&self, torus_dim: usize) -> IntMat {
        IntMat::from_rows(self.stabilizer_basis.clone(), torus_dim)
    }
}

/// The finite descriptor of a symplectic torus action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionModel {
    /// Torus dimension `n`.
    pub torus_dim: usize,
    /// Half the manifold dimension, `N`.
    pub half_dim: usize,
    /// Rank of the free part of the first homology, `b1`.
    pub betti1: usize,
    /// Symbol table; index 0 is the unit symbol and must be named `"1"`.
    pub symbols: Vec<String>,
    pub strata: Vec<StratumDatum>,
    /// `b1 × n` matrix; entry `(j, i)` is the period of the i-th basis
    /// 1-form over the j-th homology generator.
    pub periods: ExtMat,
    /// Whether the strata list is complete enough for image computations
    /// (all strata fixed by the exact subtorus are present). Image
    /// computation refuses to run without it.
    pub complete_strata: bool,
    /// Optional root data for the compact-group layer.
    pub root_system: Option<RootSystem>,
}

impl ActionModel {
    pub fn stratum(&self, label: &str) -> Option<&StratumDatum> {
        self.strata.iter().find(|s| s.label == label)
    }

    pub fn symbol_count(&self) -> usize {
        self.symbols.len()
    }

    /// Checks every structural invariant; an empty list means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.torus_dim;

        if self.symbols.is_empty() || self.symbols[0] != "1" {
            out.push(Violation::SymbolTable);
        }

        if self.periods.rows() != self.betti1 || self.periods.cols() != n {
            out.push(Violation::PeriodShape {
                rows: self.periods.rows(),
                cols: self.periods.cols(),
                expected_rows: self.betti1,
                expected_cols: n,
            });
        }
        for r in 0..self.periods.rows() {
            for c in 0..self.periods.cols() {
                if let Some(max) = self.periods.at(r, c).max_symbol() {
                    if max >= self.symbols.len() {
                        out.push(Violation::UndeclaredSymbol {
                            row: r,
                            col: c,
                            index: max,
                        });
                    }
                }
            }
        }

        let mut seen: Vec<&str> = Vec::new();
        for s in &self.strata {
            if seen.contains(&s.label.as_str()) {
                out.push(Violation::DuplicateLabel {
                    label: s.label.clone(),
                });
            }
            seen.push(&s.label);
            self.validate_stratum(s, &mut out);
        }
        out
    }

    fn validate_stratum(&self, s: &StratumDatum, out: &mut Vec<Violation>) {
        let n = self.torus_dim;
        let mut shape_ok = true;
        for row in &s.stabilizer_basis {
            if row.len() != n {
                out.push(Violation::StabilizerShape {
                    label: s.label.clone(),
                    expected: n,
                    actual: row.len(),
                });
                shape_ok = false;
            }
        }
        if s.n_p() > n {
            out.push(Violation::StabilizerTooLarge {
                label: s.label.clone(),
                rows: s.n_p(),
                torus_dim: n,
            });
            shape_ok = false;
        }
        if shape_ok && s.n_p() > 0 {
            let m = s.stabilizer_matrix(n);
            let snf = linalg::smith_normal_form(&m);
            let divisors = snf.divisors();
            let primitive = divisors.iter().all(|d| d.is_one()) && snf.rank() == s.n_p();
            if !primitive {
                out.push(Violation::StabilizerNotPrimitive {
                    label: s.label.clone(),
                });
            }
        }

        let m_p = s.m_p(n);
        if shape_ok && 2 * s.r_p > m_p {
            out.push(Violation::RankBound {
                label: s.label.clone(),
                r_p: s.r_p,
                m_p,
            });
        }

        if shape_ok {
            let expected = self.half_dim as i64 - m_p as i64 + s.r_p as i64;
            if expected < 0 || s.weights.len() as i64 != expected {
                out.push(Violation::WeightCount {
                    label: s.label.clone(),
                    expected,
                    actual: s.weights.len(),
                });
            }
        }
        for (i, w) in s.weights.iter().enumerate() {
            if w.len() != s.n_p() {
                out.push(Violation::WeightLength {
                    label: s.label.clone(),
                    index: i,
                    expected: s.n_p(),
                    actual: w.len(),
                });
            }
        }

        if s.momentum_anchor.len() != n {
            out.push(Violation::AnchorLength {
                label: s.label.clone(),
                expected: n,
                actual: s.momentum_anchor.len(),
            });
        }
    }
}

/// One failed structural invariant. Violations are data, not panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Symbol table empty or index 0 not the unit symbol `"1"`.
    SymbolTable,
    PeriodShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    UndeclaredSymbol {
        row: usize,
        col: usize,
        index: usize,
    },
    DuplicateLabel {
        label: String,
    },
    StabilizerShape {
        label: String,
        expected: usize,
        actual: usize,
    },
    StabilizerTooLarge {
        label: String,
        rows: usize,
        torus_dim: usize,
    },
    /// Stabilizer rows dependent or spanning a non-saturated sublattice.
    StabilizerNotPrimitive {
        label: String,
    },
    /// `2·r_p > m_p`.
    RankBound {
        label: String,
        r_p: usize,
        m_p: usize,
    },
    /// Weight count differs from `N - m_p + r_p`.
    WeightCount {
        label: String,
        expected: i64,
        actual: usize,
    },
    WeightLength {
        label: String,
        index: usize,
        expected: usize,
        actual: usize,
    },
    AnchorLength {
        label: String,
        expected: usize,
        actual: usize,
    },
}

impl Violation {
    /// Stratum label the violation is attached to, when there is one.
    pub fn label(&self) -> Option<&str> {
        match self {
            Violation::SymbolTable
            | Violation::PeriodShape { .. }
            | Violation::UndeclaredSymbol { .. } => None,
            Violation::DuplicateLabel { label }
            | Violation::StabilizerShape { label, .. }
            | Violation::StabilizerTooLarge { label, .. }
            | Violation::StabilizerNotPrimitive { label }
            | Violation::RankBound { label, .. }
            | Violation::WeightCount { label, .. }
            | Violation::WeightLength { label, .. }
            | Violation::AnchorLength { label, .. } => Some(label),
        }
    }

    /// Short machine-readable kind, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::SymbolTable => "symbol table",
            Violation::PeriodShape { .. } => "period shape",
            Violation::UndeclaredSymbol { .. } => "undeclared symbol",
            Violation::DuplicateLabel { .. } => "duplicate label",
            Violation::StabilizerShape { .. } => "stabilizer shape",
            Violation::StabilizerTooLarge { .. } => "stabilizer too large",
            Violation::StabilizerNotPrimitive { .. } => "stabilizer not primitive",
            Violation::RankBound { .. } => "rank bound",
            Violation::WeightCount { .. } => "weight count",
            Violation::WeightLength { .. } => "weight length",
            Violation::AnchorLength { .. } => "anchor length",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SymbolTable => {
                write!(f, "symbol table must start with the unit symbol \"1\"")
            }
            Violation::PeriodShape {
                rows,
                cols,
                expected_rows,
                expected_cols,
            } => write!(
                f,
                "period matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}"
            ),
            Violation::UndeclaredSymbol { row, col, index } => write!(
                f,
                "periods[{row}][{col}] references undeclared symbol {index}"
            ),
            Violation::DuplicateLabel { label } => {
                write!(f, "duplicate stratum label {label:?}")
            }
            Violation::StabilizerShape {
                label,
                expected,
                actual,
            } => write!(
                f,
                "stratum {label:?}: stabilizer row has length {actual}, expected {expected}"
            ),
            Violation::StabilizerTooLarge {
                label,
                rows,
                torus_dim,
            } => write!(
                f,
                "stratum {label:?}: stabilizer has {rows} rows in a {torus_dim}-torus"
            ),
            Violation::StabilizerNotPrimitive { label } => write!(
                f,
                "stratum {label:?}: stabilizer rows must be independent and primitive"
            ),
            Violation::RankBound { label, r_p, m_p } => write!(
                f,
                "stratum {label:?}: rank bound violated (2*{r_p} > {m_p})"
            ),
            Violation::WeightCount {
                label,
                expected,
                actual,
            } => write!(
                f,
                "stratum {label:?}: weight count {actual}, expected N - m_p + r_p = {expected}"
            ),
            Violation::WeightLength {
                label,
                index,
                expected,
                actual,
            } => write!(
                f,
                "stratum {label:?}: weight {index} has length {actual}, expected {expected}"
            ),
            Violation::AnchorLength {
                label,
                expected,
                actual,
            } => write!(
                f,
                "stratum {label:?}: momentum anchor has length {actual}, expected {expected}"
            ),
        }
    }
}

/// Convenience used by tests and the format layer: a zero `b1 × n` period
/// matrix.
pub fn zero_periods(betti1: usize, torus_dim: usize) -> ExtMat {
    ExtMat::filled(betti1, torus_dim, crate::scalar::ExtScalar::zero())
}

/// True when every period entry is zero.
pub fn periods_are_zero(periods: &ExtMat) -> bool {
    (0..periods.rows()).all(|r| (0..periods.cols()).all(|c| periods.at(r, c).is_zero()))
}

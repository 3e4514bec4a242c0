//! Fourier–Motzkin elimination on homogeneous linear systems.
//!
//! A system holds equalities `a·y = 0` and inequalities `a·y ≥ 0` over a
//! block of variables, and is projected onto its leading variables in two
//! phases:
//!
//! 1. every trailing variable covered by an equality is removed by exact
//!    substitution (Gaussian elimination), consuming the equality;
//! 2. the remaining trailing variables are eliminated by the classical
//!    positive/negative pairing.
//!
//! Pairing is where the doubly-exponential blowup lives, so phase 2 does
//! redundancy elimination after every step: rows are renormalized to
//! primitive integer vectors and deduplicated, and each derived row carries
//! the set of phase-2 input rows it descends from; after `k` eliminations
//! any row descending from more than `k + 1` inputs is redundant (Imbert's
//! acceleration bound) and is dropped. A hard cap on the row count turns
//! pathological inputs into a clean error instead of a grind.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::scalar::Rational;
use crate::vector;

use super::{GeometryError, MAX_INTERMEDIATE_ROWS};

/// Histories are bitsets over the phase-2 input rows.
const MAX_TRACKED_ROWS: usize = 128;

pub(super) struct HomogeneousSystem {
    pub vars: usize,
    pub eqs: Vec<Vec<Rational>>,
    pub ineqs: Vec<Vec<Rational>>,
}

/// Inequality rows and equality rows of the projected system.
pub(super) type ProjectedRows = (Vec<Vec<Rational>>, Vec<Vec<Rational>>);

fn normalize(row: &[Rational]) -> Vec<Rational> {
    vector::int_to_rat(&vector::primitive_direction(row))
}

/// Sign-normalized for equalities: first nonzero entry positive.
fn normalize_eq(row: &[Rational]) -> Vec<Rational> {
    let mut prim = normalize(row);
    if let Some(first) = prim.iter().find(|x| !x.is_zero()) {
        if first < &Rational::zero() {
            prim = vector::neg(&prim);
        }
    }
    prim
}

fn dedup_eqs(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut set: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for row in rows {
        if !vector::is_zero(&row) {
            set.insert(normalize_eq(&row));
        }
    }
    set.into_iter().collect()
}

struct TrackedRow {
    coeffs: Vec<Rational>,
    history: u128,
}

/// Projects the system onto its first `keep` variables. Returns the
/// surviving inequalities and equalities, truncated to `keep` columns.
pub(super) fn project_to_prefix(
    mut sys: HomogeneousSystem,
    keep: usize,
) -> Result<ProjectedRows, GeometryError> {
    sys.eqs = dedup_eqs(sys.eqs);

    // Phase 1: substitute away every trailing variable an equality covers.
    for var in (keep..sys.vars).rev() {
        let Some(idx) = sys.eqs.iter().position(|e| !e[var].is_zero()) else {
            continue;
        };
        let eq = sys.eqs.swap_remove(idx);
        let substitute = |row: &mut Vec<Rational>| {
            if row[var].is_zero() {
                return;
            }
            let factor = &row[var] / &eq[var];
            for c in 0..row.len() {
                let x = &row[c] - &(&eq[c] * &factor);
                row[c] = x;
            }
        };
        for row in sys.eqs.iter_mut() {
            substitute(row);
        }
        for row in sys.ineqs.iter_mut() {
            substitute(row);
        }
        sys.eqs = dedup_eqs(sys.eqs);
    }
    debug_assert!(sys.eqs.iter().all(|e| e[keep..].iter().all(Zero::is_zero)));

    // Phase 2: pure pairing elimination with history-based pruning.
    let mut rows: Vec<TrackedRow> = {
        let mut set: BTreeSet<Vec<Rational>> = BTreeSet::new();
        for row in &sys.ineqs {
            if !vector::is_zero(row) {
                set.insert(normalize(row));
            }
        }
        if set.len() > MAX_TRACKED_ROWS {
            return Err(GeometryError::TooManyRows { rows: set.len() });
        }
        set.into_iter()
            .enumerate()
            .map(|(i, coeffs)| TrackedRow {
                coeffs,
                history: 1u128 << i,
            })
            .collect()
    };

    let mut eliminated = 0u32;
    for var in (keep..sys.vars).rev() {
        if rows.iter().all(|r| r.coeffs[var].is_zero()) {
            continue;
        }
        eliminated += 1;
        let mut zero_rows: Vec<TrackedRow> = Vec::new();
        let mut pos: Vec<TrackedRow> = Vec::new();
        let mut neg: Vec<TrackedRow> = Vec::new();
        for row in rows {
            if row.coeffs[var].is_zero() {
                zero_rows.push(row);
            } else if row.coeffs[var] > Rational::zero() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        let mut seen: BTreeSet<Vec<Rational>> =
            zero_rows.iter().map(|r| r.coeffs.clone()).collect();
        for p in &pos {
            for n in &neg {
                let history = p.history | n.history;
                if history.count_ones() > eliminated + 1 {
                    continue;
                }
                // (-n[var])·p + p[var]·n zeroes the eliminated coordinate
                // through a positive combination.
                let a = -n.coeffs[var].clone();
                let b = p.coeffs[var].clone();
                let combined: Vec<Rational> = (0..p.coeffs.len())
                    .map(|c| &(&p.coeffs[c] * &a) + &(&n.coeffs[c] * &b))
                    .collect();
                if vector::is_zero(&combined) {
                    continue;
                }
                let coeffs = normalize(&combined);
                if seen.insert(coeffs.clone()) {
                    zero_rows.push(TrackedRow { coeffs, history });
                }
                if zero_rows.len() > MAX_INTERMEDIATE_ROWS {
                    return Err(GeometryError::TooManyRows {
                        rows: zero_rows.len(),
                    });
                }
            }
        }
        rows = zero_rows;
    }

    let truncate = |row: &[Rational]| -> Vec<Rational> {
        debug_assert!(row[keep..].iter().all(Zero::is_zero));
        row[..keep].to_vec()
    };
    let mut ineqs: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for r in &rows {
        let t = truncate(&r.coeffs);
        if !vector::is_zero(&t) {
            ineqs.insert(normalize(&t));
        }
    }
    let eqs = dedup_eqs(sys.eqs.iter().map(|e| truncate(e)).collect());
    Ok((ineqs.into_iter().collect(), eqs))
}

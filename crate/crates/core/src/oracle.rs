//! Independent brute-force references for the test suites.
//!
//! Nothing here shares algorithmic code with the modules it cross-checks:
//! lattice generation is certified by exhaustive coefficient search instead
//! of Smith forms, cone membership by a self-contained affine
//! Fourier–Motzkin feasibility pass on the multiplier system instead of the
//! geometry kernel's converter, and chamber properties by explicit
//! reflection-orbit enumeration. The duplication is deliberate, and so is
//! the disregard for performance: these are oracles for desk-scale inputs,
//! some exponential in their bounds.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::geometry::Cone;
use crate::scalar::Rational;
use crate::vector;
use crate::weyl::RootSystem;

/// Orbit enumeration refuses to grow past this size; the shipped root
/// families have Weyl groups of order at most 8.
pub const MAX_ORBIT: usize = 1024;

/// True iff every standard basis vector of `Z^n` is an integer combination
/// of `vectors` with coefficients in `[-bound, bound]`.
///
/// A `true` certifies generation; a `false` only certifies it relative to
/// the bound, so callers must document why their bound is large enough.
/// Arithmetic is `i64`; entries, bound and vector count must stay at desk
/// scale (|entry|·bound·count well below overflow).
pub fn lattice_generates(vectors: &[Vec<i64>], n: usize, bound: i64) -> bool {
    debug_assert!(bound >= 1);
    if n == 0 {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    debug_assert!(vectors.iter().all(|v| v.len() == n));
    let k = vectors.len();
    let mut found = alloc::vec![false; n];
    let mut remaining = n;

    // Odometer over coefficient vectors with an incrementally maintained sum.
    let mut coeffs = alloc::vec![-bound; k];
    let mut sum: Vec<i64> = (0..n)
        .map(|d| vectors.iter().map(|v| -bound * v[d]).sum())
        .collect();
    loop {
        if let Some(i) = basis_index(&sum) {
            if !found[i] {
                found[i] = true;
                remaining -= 1;
                if remaining == 0 {
                    return true;
                }
            }
        }
        // Advance the odometer.
        let mut j = 0;
        loop {
            if j == k {
                return false;
            }
            if coeffs[j] < bound {
                coeffs[j] += 1;
                for d in 0..n {
                    sum[d] += vectors[j][d];
                }
                break;
            }
            coeffs[j] = -bound;
            for d in 0..n {
                sum[d] -= 2 * bound * vectors[j][d];
            }
            j += 1;
        }
    }
}

fn basis_index(v: &[i64]) -> Option<usize> {
    let mut index = None;
    for (d, &x) in v.iter().enumerate() {
        match x {
            0 => {}
            1 if index.is_none() => index = Some(d),
            _ => return None,
        }
    }
    index
}

/// Decides `x ∈ cone` from the generator description alone, by eliminating
/// the multipliers of `x = Σ λ_i g_i + Σ μ_j l_j, λ ≥ 0` with an affine
/// Fourier–Motzkin feasibility pass: the coordinate equations are used for
/// substitution, the leftover multipliers are removed by positive/negative
/// pairing. Cross-checks the geometry kernel's inequality description along
/// a code path that never touches it.
pub fn cone_membership_by_fm_search(cone: &Cone, x: &[Rational]) -> bool {
    if x.len() != cone.dim() {
        return false;
    }
    let gens = cone.generators();
    let lins = cone.lineality();
    let k = gens.len();
    let t = lins.len();

    // Rows are (coefficients over the k+t multipliers, constant).
    let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for d in 0..cone.dim() {
        let mut coeffs = vector::zeros(k + t);
        for (i, g) in gens.iter().enumerate() {
            coeffs[i] = g[d].clone();
        }
        for (j, l) in lins.iter().enumerate() {
            coeffs[k + j] = l[d].clone();
        }
        // Σ λ_i g_i[d] + Σ μ_j l_j[d] - x[d] = 0.
        eqs.push((coeffs, -x[d].clone()));
    }
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..k {
        let mut coeffs = vector::zeros(k + t);
        coeffs[i] = Rational::from_integer(1.into());
        rows.push((coeffs, Rational::zero()));
    }

    for var in (0..k + t).rev() {
        if let Some(idx) = eqs.iter().position(|(c, _)| !c[var].is_zero()) {
            let (ec, ek) = eqs.swap_remove(idx);
            let substitute = |row: &mut (Vec<Rational>, Rational)| {
                if row.0[var].is_zero() {
                    return;
                }
                let factor = &row.0[var] / &ec[var];
                for c in 0..row.0.len() {
                    let v = &row.0[c] - &(&ec[c] * &factor);
                    row.0[c] = v;
                }
                row.1 = &row.1 - &(&ek * &factor);
            };
            eqs.iter_mut().for_each(substitute);
            rows.iter_mut().for_each(substitute);
            continue;
        }
        let mut zero_rows = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for row in rows {
            if row.0[var].is_zero() {
                zero_rows.push(row);
            } else if row.0[var] > Rational::zero() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        for (pc, pk) in &pos {
            for (nc, nk) in &neg {
                let a = -nc[var].clone();
                let b = pc[var].clone();
                let coeffs: Vec<Rational> = (0..pc.len())
                    .map(|c| &(&pc[c] * &a) + &(&nc[c] * &b))
                    .collect();
                let konst = &(pk * &a) + &(nk * &b);
                zero_rows.push(normalize_affine(coeffs, konst));
            }
        }
        rows = zero_rows;
        rows.sort();
        rows.dedup();
    }
    // Equalities with no multipliers left must balance exactly.
    eqs.iter().all(|(_, c)| c.is_zero()) && rows.iter().all(|(_, c)| *c >= Rational::zero())
}

fn normalize_affine(coeffs: Vec<Rational>, konst: Rational) -> (Vec<Rational>, Rational) {
    let mut joint = coeffs;
    joint.push(konst);
    let prim = vector::int_to_rat(&vector::primitive_direction(&joint));
    let konst = prim.last().cloned().unwrap_or_else(Rational::zero);
    let mut coeffs = prim;
    coeffs.pop();
    (coeffs, konst)
}

/// Closure of `{x}` under the simple reflections, computed to a fixpoint.
/// Panics if the orbit exceeds [`MAX_ORBIT`] (non-finite root data).
pub fn weyl_orbit(r: &RootSystem, x: &[Rational]) -> BTreeSet<Vec<Rational>> {
    let mut orbit: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut frontier = alloc::vec![x.to_vec()];
    orbit.insert(x.to_vec());
    while let Some(p) = frontier.pop() {
        for j in 0..r.rank() {
            let q = r.reflect(j, &p);
            if orbit.insert(q.clone()) {
                assert!(
                    orbit.len() <= MAX_ORBIT,
                    "orbit exceeded {MAX_ORBIT} points"
                );
                frontier.push(q);
            }
        }
    }
    orbit
}

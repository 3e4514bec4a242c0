//! Shared model fixtures for the integration suites: the classical toric
//! actions used as golden references.

#![allow(dead_code)]

use momap_core::matrix::ExtMat;
use momap_core::model::{zero_periods, ActionModel, StratumDatum};
use momap_core::scalar::{rat, ExtScalar, Int, Rational};

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn fixed_stratum(label: &str, weights: &[&[i64]], anchor: &[i64], n: usize) -> StratumDatum {
    StratumDatum {
        label: label.to_string(),
        stabilizer_basis: (0..n)
            .map(|i| (0..n).map(|j| Int::from(i64::from(i == j))).collect())
            .collect(),
        weights: weights.iter().map(|w| int_vec(w)).collect(),
        r_p: 0,
        momentum_anchor: rat_vec(anchor),
    }
}

/// The standard circle action on the sphere: momentum is the height
/// function, image the segment [0, 1].
pub fn cp1() -> ActionModel {
    ActionModel {
        torus_dim: 1,
        half_dim: 1,
        betti1: 0,
        symbols: vec!["1".to_string()],
        strata: vec![
            fixed_stratum("south", &[&[1]], &[0], 1),
            fixed_stratum("north", &[&[-1]], &[1], 1),
        ],
        periods: zero_periods(0, 1),
        complete_strata: true,
        root_system: None,
    }
}

/// The standard toric structure on the projective plane: three fixed
/// points, image the triangle with vertices (0,0), (1,0), (0,1).
pub fn cp2() -> ActionModel {
    ActionModel {
        torus_dim: 2,
        half_dim: 2,
        betti1: 0,
        symbols: vec!["1".to_string()],
        strata: vec![
            fixed_stratum("p0", &[&[1, 0], &[0, 1]], &[0, 0], 2),
            fixed_stratum("p1", &[&[-1, 1], &[-1, 0]], &[1, 0], 2),
            fixed_stratum("p2", &[&[0, -1], &[1, -1]], &[0, 1], 2),
        ],
        periods: zero_periods(0, 2),
        complete_strata: true,
        root_system: None,
    }
}

/// CP² with one anchor pushed out of convex position; the local-global
/// containment check must locate the breakage at stratum `p1`.
pub fn cp2_perturbed() -> ActionModel {
    let mut m = cp2();
    m.strata[1].momentum_anchor = rat_vec(&[1, 1]);
    m
}

/// CP² with all anchors doubled: the weight data is untouched, so this is a
/// "small perturbation" with the same exact subalgebra.
pub fn cp2_scaled() -> ActionModel {
    let mut m = cp2();
    for s in &mut m.strata {
        for x in &mut s.momentum_anchor {
            *x = &*x * rat(2);
        }
    }
    m
}

/// The product of two spheres: four fixed points, image the unit square.
pub fn cp1xcp1() -> ActionModel {
    ActionModel {
        torus_dim: 2,
        half_dim: 2,
        betti1: 0,
        symbols: vec!["1".to_string()],
        strata: vec![
            fixed_stratum("p00", &[&[1, 0], &[0, 1]], &[0, 0], 2),
            fixed_stratum("p10", &[&[-1, 0], &[0, 1]], &[1, 0], 2),
            fixed_stratum("p01", &[&[1, 0], &[0, -1]], &[0, 1], 2),
            fixed_stratum("p11", &[&[-1, 0], &[0, -1]], &[1, 1], 2),
        ],
        periods: zero_periods(0, 2),
        complete_strata: true,
        root_system: None,
    }
}

/// A 2-torus acting freely on itself: one free stratum, identity periods,
/// trivial exact subalgebra, image a point times the plane.
pub fn torus_on_torus() -> ActionModel {
    ActionModel {
        torus_dim: 2,
        half_dim: 1,
        betti1: 2,
        symbols: vec!["1".to_string()],
        strata: vec![StratumDatum {
            label: "orbit".to_string(),
            stabilizer_basis: vec![],
            weights: vec![],
            r_p: 1,
            momentum_anchor: rat_vec(&[0, 0]),
        }],
        periods: ExtMat::from_fn(2, 2, |r, c| ExtScalar::from_int(i64::from(r == c))),
        complete_strata: true,
        root_system: None,
    }
}

/// A sphere times a torus: one circle factor rotates the sphere (exact
/// height Hamiltonian), the other translates the torus (multi-valued). The
/// exact subalgebra is the first coordinate line and the image is a segment
/// times a line.
pub fn s2xt2() -> ActionModel {
    let pole = |label: &str, weight: i64, anchor: &[i64]| StratumDatum {
        label: label.to_string(),
        stabilizer_basis: vec![int_vec(&[1, 0])],
        weights: vec![int_vec(&[weight])],
        r_p: 0,
        momentum_anchor: rat_vec(anchor),
    };
    ActionModel {
        torus_dim: 2,
        half_dim: 2,
        betti1: 2,
        symbols: vec!["1".to_string()],
        strata: vec![
            pole("south", 1, &[0, 0]),
            pole("north", -1, &[1, 0]),
            StratumDatum {
                label: "generic".to_string(),
                stabilizer_basis: vec![],
                weights: vec![],
                r_p: 0,
                momentum_anchor: vec![rat(1) / rat(2), rat(0)],
            },
        ],
        periods: ExtMat::from_rows(
            vec![
                vec![ExtScalar::zero(), ExtScalar::from_int(1)],
                vec![ExtScalar::zero(), ExtScalar::zero()],
            ],
            2,
        ),
        complete_strata: true,
        root_system: None,
    }
}

/// A model with no strata but a period matrix: enough for all period-side
/// operations.
pub fn period_model(n: usize, betti1: usize, symbols: &[&str], periods: ExtMat) -> ActionModel {
    ActionModel {
        torus_dim: n,
        half_dim: n,
        betti1,
        symbols: symbols.iter().map(|s| s.to_string()).collect(),
        strata: vec![],
        periods,
        complete_strata: false,
        root_system: None,
    }
}

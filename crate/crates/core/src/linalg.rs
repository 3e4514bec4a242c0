//! Exact integer and rational linear algebra.
//!
//! Smith and Hermite normal forms over the integers, reduced row echelon
//! form and kernels over the rationals, saturation of rational subspaces to
//! primitive integer lattices, deterministic unimodular basis completion,
//! and ranks of matrices with symbol-extended entries.
//!
//! All pivot choices are deterministic (minimal absolute value, ties broken
//! by lowest row then column), so every output here is reproducible
//! byte-for-byte.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{ExtMat, IntMat, RatMat};
use crate::scalar::{Int, Rational};
use crate::vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// The rows do not span a direct summand of the ambient lattice.
    NotPrimitive {
        divisor: Int,
    },
    /// An extended scalar references a symbol outside the declared table.
    UndeclaredSymbol {
        index: usize,
        declared: usize,
    },
    DimensionMismatch {
        expected: usize,
        actual: usize,
    },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotPrimitive { divisor } => {
                write!(
                    f,
                    "not a direct summand: elementary divisor {divisor} exceeds 1"
                )
            }
            LinalgError::UndeclaredSymbol { index, declared } => {
                write!(
                    f,
                    "undeclared symbol index {index} (table has {declared} symbols)"
                )
            }
            LinalgError::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Result of [`smith_normal_form`]: `d = u · m · v` with `u`, `v`
/// unimodular, `d` diagonal, diagonal entries nonnegative and each dividing
/// the next. The inverses of the transforms are tracked as well since
/// several lattice constructions need them.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    pub u_inv: IntMat,
    pub v_inv: IntMat,
}

impl SmithForm {
    /// Diagonal entries of `d` (length `min(rows, cols)`).
    pub fn divisors(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.at(i, i).clone()).collect()
    }

    /// Number of nonzero elementary divisors, i.e. the rank.
    pub fn rank(&self) -> usize {
        self.divisors().iter().filter(|d| !d.is_zero()).count()
    }
}

struct SmithWork {
    d: IntMat,
    u: IntMat,
    v: IntMat,
    u_inv: IntMat,
    v_inv: IntMat,
}

impl SmithWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row_i -= q * row_k (on d and u; u_inv gets the inverse column op).
    fn row_sub(&mut self, i: usize, k: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.d.cols() {
            let x = self.d.at(i, c) - q * self.d.at(k, c);
            *self.d.at_mut(i, c) = x;
        }
        for c in 0..self.u.cols() {
            let x = self.u.at(i, c) - q * self.u.at(k, c);
            *self.u.at_mut(i, c) = x;
        }
        for r in 0..self.u_inv.rows() {
            let x = self.u_inv.at(r, k) + q * self.u_inv.at(r, i);
            *self.u_inv.at_mut(r, k) = x;
        }
    }

    /// col_j -= q * col_k (on d and v; v_inv gets the inverse row op).
    fn col_sub(&mut self, j: usize, k: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.d.rows() {
            let x = self.d.at(r, j) - q * self.d.at(r, k);
            *self.d.at_mut(r, j) = x;
        }
        for r in 0..self.v.rows() {
            let x = self.v.at(r, j) - q * self.v.at(r, k);
            *self.v.at_mut(r, j) = x;
        }
        for c in 0..self.v_inv.cols() {
            let x = self.v_inv.at(k, c) + q * self.v_inv.at(j, c);
            *self.v_inv.at_mut(k, c) = x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.d.cols() {
            let x = -self.d.at(i, c).clone();
            *self.d.at_mut(i, c) = x;
        }
        for c in 0..self.u.cols() {
            let x = -self.u.at(i, c).clone();
            *self.u.at_mut(i, c) = x;
        }
        for r in 0..self.u_inv.rows() {
            let x = -self.u_inv.at(r, i).clone();
            *self.u_inv.at_mut(r, i) = x;
        }
    }

    /// row_k += row_i (used to pull a non-divisible entry into the pivot row).
    fn row_add(&mut self, k: usize, i: usize) {
        let minus_one = -Int::one();
        self.row_sub(k, i, &minus_one);
    }
}

/// Smallest-|entry| nonzero pivot in the trailing submatrix, ties broken by
/// lowest (row, col).
fn select_pivot(d: &IntMat, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for r in k..d.rows() {
        for c in k..d.cols() {
            let x = d.at(r, c);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            let better = match &best {
                None => true,
                Some((b, _, _)) => a < *b,
            };
            if better {
                best = Some((a, r, c));
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Smith normal form with unimodular transforms: `d = u · m · v`.
///
/// Works on any integer matrix, including empty ones. Elementary divisors
/// are normalized nonnegative; signs are absorbed into `u`.
pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = SmithWork {
        d: m.clone(),
        u: IntMat::identity(rows),
        v: IntMat::identity(cols),
        u_inv: IntMat::identity(rows),
        v_inv: IntMat::identity(cols),
    };

    let mut k = 0;
    while k < rows && k < cols {
        let Some((pr, pc)) = select_pivot(&w.d, k) else {
            break;
        };
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        'clear: loop {
            // Clear the pivot column below k.
            loop {
                for i in k + 1..rows {
                    if !w.d.at(i, k).is_zero() {
                        let q = w.d.at(i, k) / w.d.at(k, k);
                        w.row_sub(i, k, &q);
                    }
                }
                // Any nonzero remainder is strictly smaller than the pivot;
                // promote the smallest one and repeat.
                let left = (k + 1..rows)
                    .filter(|&i| !w.d.at(i, k).is_zero())
                    .min_by_key(|&i| w.d.at(i, k).abs());
                match left {
                    Some(i) => w.swap_rows(k, i),
                    None => break,
                }
            }
            // Clear the pivot row right of k. Column operations do not touch
            // column k, so the column stays clear.
            loop {
                let mut dirtied_column = false;
                for j in k + 1..cols {
                    if !w.d.at(k, j).is_zero() {
                        let q = w.d.at(k, j) / w.d.at(k, k);
                        w.col_sub(j, k, &q);
                    }
                }
                let left = (k + 1..cols)
                    .filter(|&j| !w.d.at(k, j).is_zero())
                    .min_by_key(|&j| w.d.at(k, j).abs());
                match left {
                    Some(j) => {
                        w.swap_cols(k, j);
                        // The swap may reintroduce nonzeros in the column.
                        for i in k + 1..rows {
                            if !w.d.at(i, k).is_zero() {
                                dirtied_column = true;
                            }
                        }
                        if dirtied_column {
                            continue 'clear;
                        }
                    }
                    None => break,
                }
            }
            // Pivot must divide the whole trailing submatrix.
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(w.d.at(i, j) % w.d.at(k, k)).is_zero());
            match offender {
                Some((i, _)) => {
                    w.row_add(k, i);
                    continue 'clear;
                }
                None => break 'clear,
            }
        }

        if w.d.at(k, k).is_negative() {
            w.negate_row(k);
        }
        k += 1;
    }

    SmithForm {
        u: w.u,
        d: w.d,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}

/// Row-style Hermite normal form with zero rows removed.
///
/// Pivots are positive, entries above each pivot lie in `[0, pivot)`, pivot
/// columns increase strictly. The rows span the same lattice as the input's
/// rows, and the form is the canonical basis of that lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub basis: IntMat,
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form(m: &IntMat) -> HermiteForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut pivots = Vec::new();
    let mut top = 0usize;
    for col in 0..cols {
        if top >= rows {
            break;
        }
        loop {
            let candidate = (top..rows)
                .filter(|&i| !h.at(i, col).is_zero())
                .min_by_key(|&i| h.at(i, col).abs());
            let Some(p) = candidate else {
                break;
            };
            h.swap_rows(top, p);
            let mut clean = true;
            for i in top + 1..rows {
                if !h.at(i, col).is_zero() {
                    let q = h.at(i, col) / h.at(top, col);
                    for c in 0..cols {
                        let x = h.at(i, c) - &q * h.at(top, c);
                        *h.at_mut(i, c) = x;
                    }
                    if !h.at(i, col).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if h.at(top, col).is_zero() {
            continue;
        }
        if h.at(top, col).is_negative() {
            for c in 0..cols {
                let x = -h.at(top, c).clone();
                *h.at_mut(top, c) = x;
            }
        }
        // Canonical residues above the pivot.
        for i in 0..top {
            let q = h.at(i, col).div_floor(h.at(top, col));
            if !q.is_zero() {
                for c in 0..cols {
                    let x = h.at(i, c) - &q * h.at(top, c);
                    *h.at_mut(i, c) = x;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    let basis = IntMat::from_rows((0..top).map(|r| h.row(r).to_vec()).collect(), cols);
    HermiteForm { basis, pivots }
}

/// Reduces `row` modulo the lattice spanned by a Hermite basis, landing in
/// the canonical coset representative (entries at pivot columns in
/// `[0, pivot)`).
pub fn reduce_mod_hermite(row: &mut [Int], h: &HermiteForm) {
    for (i, &pc) in h.pivots.iter().enumerate() {
        let q = row[pc].div_floor(h.basis.at(i, pc));
        if q.is_zero() {
            continue;
        }
        for c in 0..row.len() {
            row[c] -= &q * h.basis.at(i, c);
        }
    }
}

/// Deterministic completion of a primitive sublattice basis to a basis of
/// the ambient lattice `Z^ambient`.
///
/// The rows of `sub` must be independent and span a direct summand (all
/// Smith divisors 1); otherwise [`LinalgError::NotPrimitive`] is returned.
/// The returned rows stack under `sub` to a unimodular matrix. The choice is
/// canonical: the completion comes from the Smith decomposition and each row
/// is reduced to its canonical representative modulo the Hermite form of
/// `sub`.
pub fn hermite_complement(sub: &IntMat, ambient: usize) -> Result<IntMat, LinalgError> {
    if sub.rows() == 0 {
        return Ok(IntMat::identity(ambient));
    }
    if sub.cols() != ambient {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient,
            actual: sub.cols(),
        });
    }
    let k = sub.rows();
    let snf = smith_normal_form(sub);
    for d in snf.divisors() {
        if !d.is_one() {
            return Err(LinalgError::NotPrimitive { divisor: d });
        }
    }
    if snf.rank() < k {
        return Err(LinalgError::NotPrimitive {
            divisor: Int::zero(),
        });
    }
    // With d = [I | 0], the first k rows of v_inv span the same lattice as
    // sub, and the remaining rows complete them to a basis of Z^ambient.
    let h = hermite_normal_form(sub);
    let mut rows = Vec::with_capacity(ambient - k);
    for r in k..ambient {
        let mut row = snf.v_inv.row(r).to_vec();
        reduce_mod_hermite(&mut row, &h);
        rows.push(row);
    }
    Ok(IntMat::from_rows(rows, ambient))
}

/// Reduced row echelon form over the rationals.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: RatMat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(m: &RatMat) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut top = 0usize;
    for col in 0..cols {
        if top >= rows {
            break;
        }
        let Some(p) = (top..rows).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(top, p);
        let inv = a.at(top, col).clone();
        for c in col..cols {
            let x = a.at(top, c) / &inv;
            *a.at_mut(top, c) = x;
        }
        for r in 0..rows {
            if r == top || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for c in col..cols {
                let x = a.at(r, c) - &(a.at(top, c) * &factor);
                *a.at_mut(r, c) = x;
            }
        }
        pivots.push(col);
        top += 1;
    }
    Rref { mat: a, pivots }
}

pub fn rational_rank(m: &RatMat) -> usize {
    rref(m).rank()
}

/// Basis of `{x : m·x = 0}` in reduced echelon form (each basis vector's
/// first nonzero entry is 1). Empty iff the kernel is trivial.
pub fn rational_kernel(m: &RatMat) -> Vec<Vec<Rational>> {
    let cols = m.cols();
    let r = rref(m);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = alloc::vec![None; cols];
        for (row, &col) in r.pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut x = vector::zeros(cols);
        x[free] = Rational::one();
        for (row, &col) in r.pivots.iter().enumerate() {
            x[col] = -r.mat.at(row, free).clone();
        }
        basis.push(x);
    }
    if basis.is_empty() {
        return basis;
    }
    // Canonicalize the basis itself into reduced echelon form.
    let echelon = rref(&RatMat::from_rows(basis, cols));
    echelon
        .mat
        .row_iter()
        .take(echelon.pivots.len())
        .map(|r| r.to_vec())
        .collect()
}

/// Scales each row by the lcm of its denominators (kernel-preserving) and
/// returns the integer matrix.
pub fn clear_row_denominators(m: &RatMat) -> IntMat {
    let rows: Vec<Vec<Int>> = m
        .row_iter()
        .map(|row| {
            let mut lcm = Int::one();
            for x in row {
                lcm = lcm.lcm(x.denom());
            }
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    IntMat::from_rows(rows, m.cols())
}

/// Basis of the integer kernel `{x ∈ Z^cols : m·x = 0}`, as the canonical
/// Hermite basis of that (automatically saturated) lattice.
pub fn integer_kernel(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    let diag = snf.divisors();
    let free: Vec<usize> = (0..m.cols())
        .filter(|&i| i >= diag.len() || diag[i].is_zero())
        .collect();
    // Kernel basis vectors are the columns of v at free indices.
    let rows: Vec<Vec<Int>> = free
        .iter()
        .map(|&j| (0..m.cols()).map(|i| snf.v.at(i, j).clone()).collect())
        .collect();
    hermite_normal_form(&IntMat::from_rows(rows, m.cols())).basis
}

/// Canonical primitive integer basis of the saturation `span_Q(rows) ∩ Z^n`.
pub fn saturate_rowspan(rows: &RatMat) -> IntMat {
    if rows.rows() == 0 {
        return IntMat::zero(0, rows.cols());
    }
    // The subspace equals the kernel of its rational orthogonal complement,
    // and integer kernels are saturated.
    let orth = rational_kernel(rows);
    if orth.is_empty() {
        return IntMat::identity(rows.cols());
    }
    let orth_mat = clear_row_denominators(&RatMat::from_rows(orth, rows.cols()));
    integer_kernel(&orth_mat)
}

/// Rank over the rationals of a symbol-extended matrix, computed by
/// expanding every entry over the declared symbol basis: each row of the
/// input contributes one rational row per symbol (the "symbol slices"), and
/// the rank of the stacked slices is returned.
///
/// Fails if any entry references a symbol index `>= symbol_count`.
pub fn ext_rank(m: &ExtMat, symbol_count: usize) -> Result<usize, LinalgError> {
    Ok(rational_rank(&expand_symbols(m, symbol_count)?))
}

/// The stacked symbol slices of `m`: row `(i, s)` of the result holds the
/// coefficients of symbol `s` across row `i` of `m`. Shape
/// `(rows·symbol_count) × cols`.
pub fn expand_symbols(m: &ExtMat, symbol_count: usize) -> Result<RatMat, LinalgError> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m.rows() * symbol_count);
    for i in 0..m.rows() {
        for s in 0..symbol_count {
            rows.push((0..m.cols()).map(|j| m.at(i, j).coeff(s)).collect());
        }
        for j in 0..m.cols() {
            if let Some(max) = m.at(i, j).max_symbol() {
                if max >= symbol_count {
                    return Err(LinalgError::UndeclaredSymbol {
                        index: max,
                        declared: symbol_count,
                    });
                }
            }
        }
    }
    Ok(RatMat::from_rows(rows, m.cols()))
}

/// Inverse of a unimodular integer matrix. Returns `None` when the matrix is
/// not square or its determinant is not ±1.
pub fn unimodular_inverse(m: &IntMat) -> Option<IntMat> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    // Invert over the rationals; unimodularity makes every entry integral.
    let augmented = RatMat::from_fn(n, 2 * n, |r, c| {
        if c < n {
            Rational::from_integer(m.at(r, c).clone())
        } else if c - n == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let reduced = rref(&augmented);
    if reduced.pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let mut row = Vec::with_capacity(n);
        for c in 0..n {
            let x = reduced.mat.at(r, n + c);
            if !x.is_integer() {
                return None;
            }
            row.push(x.to_integer());
        }
        rows.push(row);
    }
    Some(IntMat::from_rows(rows, n))
}

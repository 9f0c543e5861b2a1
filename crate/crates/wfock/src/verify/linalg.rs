//! Exact dense linear algebra over the coefficient fields.
//!
//! Gauss-Jordan elimination with exact division; works over the symbolic
//! field `Q(t)[a]` and over specialized quadratic fields alike.  No rank
//! decision ever rests on approximate arithmetic.

use crate::scalar::{Quad, Scalar};

/// The operations elimination needs; implemented by [`Scalar`] and
/// [`Quad`].
pub trait FieldElem: Clone + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact division; `rhs` must be nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl FieldElem for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        Scalar::div(self, rhs).expect("division by zero pivot")
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl FieldElem for Quad {
    fn zero() -> Self {
        Quad::zero()
    }
    fn one() -> Self {
        Quad::one()
    }
    fn is_zero(&self) -> bool {
        Quad::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        Quad::div(self, rhs)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn reduce<T: FieldElem>(rows: &mut Vec<Vec<T>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let inv = T::one().div(&rows[row][col]);
        for c in col..cols {
            rows[row][c] = rows[row][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let sub = factor.mul(&rows[row][c]);
                    rows[r][c] = rows[r][c].sub(&sub);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    pivots
}

/// Exact kernel basis of the linear map with the given matrix rows; one
/// basis vector per free column, deterministic order.
pub fn kernel_basis<T: FieldElem>(mut rows: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    let pivots = reduce(&mut rows, cols);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Solve `sum_i c_i basis_i = target` exactly; the returned coefficients
/// certify membership, and None certifies non-membership.
pub fn express_in_span<T: FieldElem>(basis: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
    let k = basis.len();
    let dim = target.len();
    if k == 0 {
        return if target.iter().all(T::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // augmented system: rows indexed by coordinates, columns by basis
    // vectors plus the target
    let mut rows: Vec<Vec<T>> = (0..dim)
        .map(|i| {
            let mut row: Vec<T> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = reduce(&mut rows, k + 1);
    // inconsistent iff the target column is a pivot
    if pivots.contains(&k) {
        return None;
    }
    let mut coeffs = vec![T::zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = rows[r][k].clone();
    }
    // re-check the certificate (free columns may exist)
    for i in 0..dim {
        let mut acc = T::zero();
        for (c, b) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&b[i]));
            }
        }
        if acc != target[i] {
            return None;
        }
    }
    Some(coeffs)
}

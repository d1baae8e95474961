//! Row-major dense matrices of field elements: just enough exact linear
//! algebra (RREF, rank, products, inverses, kernels) for the rest of the
//! crate. Rows are `Vec<FieldElement>`; callers guarantee rectangular shape
//! and a shared field.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::gf::{FieldElement, FieldSpec};

pub(crate) type Rows = Vec<Vec<FieldElement>>;

/// Reduce `rows` in place to reduced row echelon form, drop zero rows, and
/// return the pivot columns.
pub(crate) fn rref(rows: &mut Rows) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].inverse().expect("pivot is nonzero");
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..nrows {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..ncols {
                    let sub = &f * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &sub;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    rows.truncate(pivot_row);
    pivots
}

pub(crate) fn rank(rows: &Rows) -> usize {
    let mut copy = rows.clone();
    rref(&mut copy);
    copy.len()
}

pub(crate) fn identity(spec: &Arc<FieldSpec>, n: usize) -> Rows {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { spec.one() } else { spec.zero() })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &Rows, b: &Rows) -> Rows {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    let mut acc = row[0].spec().zero();
                    for k in 0..inner {
                        if !row[k].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub(crate) fn is_identity(rows: &Rows) -> bool {
    rows.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

/// Inverse of a square matrix via `[A | I]` reduction; `None` if singular.
pub(crate) fn inverse(rows: &Rows) -> Option<Rows> {
    let n = rows.len();
    let spec = rows[0][0].spec();
    let mut aug: Rows = rows
        .iter()
        .zip(identity(spec, n))
        .map(|(row, id_row)| row.iter().cloned().chain(id_row).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis (RREF) of the left kernel `{ x : x A = 0 }`.
pub(crate) fn left_kernel(a: &Rows) -> Rows {
    let nrows = a.len();
    let spec = a[0][0].spec();
    // Reduce [A | I]; rows whose A-part vanished carry kernel coordinates.
    let mut aug: Rows = a
        .iter()
        .zip(identity(spec, nrows))
        .map(|(row, id_row)| row.iter().cloned().chain(id_row).collect())
        .collect();
    let ncols = a[0].len();
    // Plain Gaussian elimination restricted to the A-columns.
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, r);
        let inv = aug[pivot_row][col].inverse().expect("pivot is nonzero");
        for x in aug[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..nrows {
            if r != pivot_row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..ncols + nrows {
                    let sub = &f * &aug[pivot_row][c];
                    aug[r][c] = &aug[r][c] - &sub;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    let mut kernel: Rows = aug[pivot_row..]
        .iter()
        .map(|row| row[ncols..].to_vec())
        .collect();
    rref(&mut kernel);
    kernel
}

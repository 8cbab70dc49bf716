//! Dense exact linear algebra over a [`FieldSpec`].

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};

/// Row-reduces `rows` in place to reduced row echelon form and returns the
/// pivot column of each nonzero row.
pub(crate) fn rref(field: FieldSpec, rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col]).unwrap();
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *x = field.sub(x, &field.mul(&f, p));
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ v : A v = 0 }` where `A` is given by its columns. Each basis
/// vector has a 1 in one free coordinate and 0 in the others, so the result
/// is canonical for a given column order.
pub(crate) fn nullspace_of_columns(field: FieldSpec, columns: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let ncols = columns.len();
    let nrows = columns.first().map_or(0, |c| c.len());
    let mut rows: Vec<Vec<Scalar>> = (0..nrows)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let pivots = rref(field, &mut rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = field.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

pub(crate) fn rank(field: FieldSpec, rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut rows = rows.to_vec();
    rref(field, &mut rows, ncols).len()
}

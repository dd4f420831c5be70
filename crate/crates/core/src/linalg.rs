//! Row reduction over GF(q).

use crate::gf::{FieldElem, FieldSpec};

/// Reduced row-echelon form of the span of `rows`. Zero rows are dropped,
/// every pivot is 1 and is the only nonzero entry in its column, so the
/// result is unique per subspace. Returns the rows and their pivot columns.
pub fn rref(field: &FieldSpec, mut rows: Vec<Vec<FieldElem>>, ncols: usize) -> (Vec<Vec<FieldElem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        if inv != FieldElem::ONE {
            for x in rows[r].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let c = row[col];
            if c.is_zero() {
                continue;
            }
            for (x, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(*x, field.mul(c, pv));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(field: &FieldSpec, rows: Vec<Vec<FieldElem>>, ncols: usize) -> usize {
    rref(field, rows, ncols).1.len()
}

/// Reduces `v` against an RREF basis; the result is zero iff `v` lies in the span.
pub fn reduce(field: &FieldSpec, basis: &[Vec<FieldElem>], pivots: &[usize], v: &[FieldElem]) -> Vec<FieldElem> {
    let mut v = v.to_vec();
    for (row, &col) in basis.iter().zip(pivots) {
        let c = v[col];
        if c.is_zero() {
            continue;
        }
        for (x, &b) in v.iter_mut().zip(row) {
            *x = field.sub(*x, field.mul(c, b));
        }
    }
    v
}

/// Basis of `{x : r·x = 0 for every row r}` for an RREF matrix with the given pivots.
pub fn null_space(field: &FieldSpec, basis: &[Vec<FieldElem>], pivots: &[usize], ncols: usize) -> Vec<Vec<FieldElem>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![FieldElem::ZERO; ncols];
            x[free] = FieldElem::ONE;
            for (row, &p) in basis.iter().zip(pivots) {
                x[p] = field.neg(row[free]);
            }
            x
        })
        .collect()
}

//! Rank of sparse matrices over an exact field.

use std::collections::BTreeMap;

use crate::field::{Field, FieldElement};

/// Sparse row: `(column, nonzero entry)` sorted by column.
pub type SparseRow = Vec<(usize, FieldElement)>;

/// Rank by incremental row echelon form, one pivot row per leading column.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        row.retain(|(_, c)| !c.is_zero());
        while let Some(&(lead, ref c)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = c.div(&p[0].1).expect("pivot is nonzero");
                    row = axpy(&row, p, &factor);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `row - factor * pivot`.
fn axpy(row: &SparseRow, pivot: &SparseRow, factor: &FieldElement) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |t| t.0);
        let cj = pivot.get(j).map_or(usize::MAX, |t| t.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, pivot[j].1.mul(factor).neg()));
            j += 1;
        } else {
            let v = row[i].1.sub(&pivot[j].1.mul(factor));
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of an integer matrix read over `field`.
pub fn rank_of_integer_rows(field: Field, rows: &[Vec<(usize, i64)>]) -> usize {
    rank(rows.iter().map(|r| r.iter().map(|&(c, v)| (c, field.from_i64(v))).collect::<SparseRow>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<(usize, i64)>> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, *v)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_of_integer_rows(Field::Rational, &m), 2);
        let m = dense(&[&[2, 0], &[0, 2]]);
        assert_eq!(rank_of_integer_rows(Field::Rational, &m), 2);
        assert_eq!(rank_of_integer_rows(Field::Prime(2), &m), 0);
        assert_eq!(rank_of_integer_rows(Field::Rational, &[]), 0);
    }
}

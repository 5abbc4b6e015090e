//! Exact rank of integer matrices.
//!
//! Boundary matrices are sparse with unit entries, so elimination first
//! pivots on ±1 entries, which keeps every row operation integral and exact.
//! Whatever is left once no unit pivot remains (or once an entry would
//! overflow `i64`) is finished by fraction-free Bareiss elimination over
//! arbitrary-precision integers. Both stages preserve the rank over Q.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, value)` pairs, columns strictly increasing, no zeros.
pub type SparseRow = Vec<(u32, i64)>;

/// Rank over Q of the matrix with the given sparse rows.
pub fn rank(rows: Vec<SparseRow>) -> usize {
    let mut rows: Vec<Option<SparseRow>> = rows
        .into_iter()
        .map(|r| if r.is_empty() { None } else { Some(r) })
        .collect();
    let ncols = rows
        .iter()
        .flatten()
        .filter_map(|r| r.last().map(|&(c, _)| c as usize + 1))
        .max()
        .unwrap_or(0);
    // col -> rows that may hold a nonzero there (stale entries are skipped)
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    for (ri, r) in rows.iter().enumerate() {
        if let Some(r) = r {
            for &(c, _) in r {
                col_rows[c as usize].push(ri as u32);
            }
        }
    }

    let mut rank = 0;
    loop {
        // shortest live row with a unit entry; within it the sparsest column
        let mut best: Option<(usize, usize, u32)> = None;
        for (ri, r) in rows.iter().enumerate() {
            let Some(r) = r else { continue };
            if best.is_some_and(|(len, _, _)| r.len() >= len) {
                continue;
            }
            let pick = r
                .iter()
                .filter(|&&(_, v)| v == 1 || v == -1)
                .min_by_key(|&&(c, _)| col_rows[c as usize].len());
            if let Some(&(c, _)) = pick {
                best = Some((r.len(), ri, c));
                if r.len() == 1 {
                    break;
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = rows[pr].take().expect("live pivot row");
        let pivot_val = lookup(&pivot_row, pc).expect("pivot present");
        rank += 1;

        let targets = std::mem::take(&mut col_rows[pc as usize]);
        let mut overflow = false;
        for &t in &targets {
            let t = t as usize;
            let Some(row) = rows[t].as_ref() else { continue };
            let Some(a) = lookup(row, pc) else { continue };
            // row <- row - (a * pivot_val) * pivot_row, since pivot_val^-1 = pivot_val
            let factor = match a.checked_mul(pivot_val) {
                Some(f) => f,
                None => {
                    overflow = true;
                    break;
                }
            };
            match axpy(row, &pivot_row, factor) {
                Some(new_row) => {
                    for &(c, _) in &new_row {
                        if lookup(row, c).is_none() {
                            col_rows[c as usize].push(t as u32);
                        }
                    }
                    rows[t] = if new_row.is_empty() {
                        None
                    } else {
                        Some(new_row)
                    };
                }
                None => {
                    overflow = true;
                    break;
                }
            }
        }
        if overflow {
            // Rows touched so far are already reduced, the rest still hold the
            // pivot column; together with the pivot row they span the same
            // space as before this step.
            rows[pr] = Some(pivot_row);
            rank -= 1;
            break;
        }
    }

    let rest: Vec<SparseRow> = rows.into_iter().flatten().collect();
    if rest.is_empty() {
        return rank;
    }
    rank + bareiss_rank_sparse(&rest)
}

fn lookup(row: &SparseRow, col: u32) -> Option<i64> {
    row.binary_search_by_key(&col, |&(c, _)| c)
        .ok()
        .map(|k| row[k].1)
}

/// `row - factor * pivot`, `None` on overflow.
fn axpy(row: &SparseRow, pivot: &SparseRow, factor: i64) -> Option<SparseRow> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(u32::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(u32::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i]);
            i += 1;
        } else {
            let sub = pivot[j].1.checked_mul(factor)?;
            let v = if ci == cj {
                let v = row[i].1.checked_sub(sub)?;
                i += 1;
                v
            } else {
                sub.checked_neg()?
            };
            if v != 0 {
                out.push((cj, v));
            }
            j += 1;
        }
    }
    Some(out)
}

fn bareiss_rank_sparse(rows: &[SparseRow]) -> usize {
    let mut cols: Vec<u32> = rows.iter().flatten().map(|&(c, _)| c).collect();
    cols.sort_unstable();
    cols.dedup();
    let index = |c: u32| cols.binary_search(&c).expect("column present");
    let mut dense = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for &(c, v) in row {
            dense[r][index(c)] = BigInt::from(v);
        }
    }
    bareiss_rank(dense)
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].abs())
        else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            let factor = m[i][c].clone();
            for j in c..ncols {
                // every entry stays a minor of the input, so the division is exact
                let v = &m[i][j] * &m[r][c] - &factor * &m[r][j];
                m[i][j] = v / &prev;
            }
            // entries left of c are already zero
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Dense convenience wrapper used by tests and small callers.
pub fn rank_dense(m: &[Vec<i64>]) -> usize {
    let rows = m
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c as u32, v))
                .collect()
        })
        .collect();
    rank(rows)
}

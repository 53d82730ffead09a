//! First integral homology by exact elimination.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyH1 {
    pub rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl HomologyH1 {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// `H_1(L; ℤ)` from the boundary maps `∂₁` and `∂₂`.
pub fn h1<L>(complex: &SimplicialComplex<L>) -> HomologyH1 {
    let v = complex.vertex_count();
    let edges: Vec<&Vec<usize>> = complex.simplices_of_dim(1).collect();
    let edge_index: BTreeMap<&[usize], usize> = edges.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let components = complex.components().len();
    // rank ∂₁ = V - #components for a graph.
    let rank_d1 = v - components;
    let kernel_d1 = edges.len() - rank_d1;

    // Rows are triangles; columns are edges.
    let mut rows: Vec<BTreeMap<usize, BigInt>> = Vec::new();
    for t in complex.simplices_of_dim(2) {
        let mut row = BTreeMap::new();
        let faces = [([t[1], t[2]], 1), ([t[0], t[2]], -1), ([t[0], t[1]], 1)];
        for (e, sign) in faces {
            row.insert(edge_index[&e[..]], BigInt::from(sign));
        }
        rows.push(row);
    }
    let factors = invariant_factors(rows, edges.len());
    let rank_d2 = factors.len();
    let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
    HomologyH1 { rank: kernel_d1 - rank_d2, torsion }
}

/// Nonzero invariant factors of a sparse integer matrix given by rows.
pub(crate) fn invariant_factors(mut rows: Vec<BTreeMap<usize, BigInt>>, ncols: usize) -> Vec<BigInt> {
    let mut factors = Vec::new();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut alive = vec![true; rows.len()];
    // Unit pivots first: they never create fractions and rarely fill in.
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !alive[r] || row.is_empty() {
                continue;
            }
            if best.is_some_and(|(_, _, len)| row.len() >= len) {
                continue;
            }
            if let Some((&c, _)) = row.iter().find(|(_, x)| x.abs().is_one()) {
                best = Some((r, c, row.len()));
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let pivot_row = core::mem::take(&mut rows[pr]);
        alive[pr] = false;
        let pv = pivot_row[&pc].clone();
        let others: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| alive[r] && rows[r].contains_key(&pc)).collect();
        for r in others {
            let x = rows[r][&pc].clone();
            // row_r -= (x / pv) * pivot_row, with pv = ±1.
            let mult = &x * &pv;
            for (&c, y) in &pivot_row {
                let entry = rows[r].entry(c).or_insert_with(BigInt::zero);
                *entry -= &mult * y;
                if entry.is_zero() {
                    rows[r].remove(&c);
                } else {
                    col_rows[c].insert(r);
                }
            }
        }
        factors.push(BigInt::one());
    }
    // Whatever remains has no unit entries; finish densely.
    let remaining: Vec<&BTreeMap<usize, BigInt>> = rows.iter().zip(&alive).filter(|(row, a)| **a && !row.is_empty()).map(|(row, _)| row).collect();
    if !remaining.is_empty() {
        let cols: Vec<usize> = {
            let mut cs: Vec<usize> = remaining.iter().flat_map(|r| r.keys().copied()).collect();
            cs.sort_unstable();
            cs.dedup();
            cs
        };
        let cidx: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut dense: Vec<Vec<BigInt>> = remaining
            .iter()
            .map(|row| {
                let mut d = vec![BigInt::zero(); cols.len()];
                for (c, x) in row.iter() {
                    d[cidx[c]] = x.clone();
                }
                d
            })
            .collect();
        factors.extend(dense_diagonal(&mut dense));
    }
    normalize_factors(factors)
}

fn dense_diagonal(m: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        let p = m[t][t].clone();
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = m[i][t].div_floor(&p);
            for j in t..cols {
                let sub = &q * &m[t][j];
                m[i][j] -= sub;
            }
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = m[t][j].div_floor(&p);
            for i in t..rows {
                let sub = &q * &m[i][t];
                m[i][j] -= sub;
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if clean {
            diag.push(m[t][t].abs());
            t += 1;
        }
    }
    diag
}

fn normalize_factors(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(m: &[&[i64]]) -> Vec<i64> {
        let rows = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, x)| **x != 0).map(|(c, x)| (c, BigInt::from(*x))).collect())
            .collect();
        invariant_factors(rows, m[0].len()).iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn smith_forms() {
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), [1, 6]);
        assert_eq!(factors(&[&[2, 4], &[4, 8]]), [2]);
        assert_eq!(factors(&[&[1, 1], &[1, -1]]), [1, 2]);
        assert_eq!(factors(&[&[0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[&[6, 4], &[4, 6]]), [2, 10]);
    }
}

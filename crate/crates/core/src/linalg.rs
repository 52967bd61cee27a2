//! Exact nullspaces by fraction-free Gauss-Jordan elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{content_scale, Rat};

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Basis of `{ v : M v = 0 }` for the `rows x ncols` matrix `rows`. Each basis
/// vector has integer entries with gcd 1 and a positive entry at its free
/// column; basis vectors are ordered by free column.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let c = content_scale(r);
            r.iter().map(|x| (x * &c).to_integer()).collect()
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..ncols {
        let rank = pivots.len();
        let Some(found) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, found);
        let (head, tail) = m.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        let p = pivot_row[col].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &p * &*x - &f * y;
            }
            primitive(row);
        }
        pivots.push(col);
        if pivots.len() == m.len() {
            break;
        }
    }

    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -Rat::new(row[free].clone(), row[pc].clone());
        }
        let c = content_scale(&v);
        let c = if c.is_negative() { -c } else { c };
        basis.push(v.iter().map(|x| x * &c).collect());
    }
    basis
}

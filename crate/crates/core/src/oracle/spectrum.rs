use std::collections::BTreeMap;

use num_traits::Zero;

use super::algebra::Coordinates;
use crate::error::Result;
use crate::limits::{self, Limits};
use crate::linalg::{int, kernel, Scalar, SparseVec};
use crate::permutation::Permutation;

/// Joint eigenvalues of `X_1, ..., X_n` acting by left multiplication on
/// `C[S_n]`, with the dimension of each joint eigenspace.
///
/// The space is split exactly, one element at a time: each current joint
/// eigenspace is cut into the kernels of `X_j - c` for integer `c` in
/// `[-(j-1), j-1]`.
pub fn spectrum_bruteforce(n: usize) -> Result<BTreeMap<Vec<i64>, usize>> {
    limits::check("regular-representation spectrum", n, Limits::current().spectrum)?;
    let coords = Coordinates::of(n);
    let size = coords.len();
    let mut spaces: Vec<(Vec<i64>, Vec<SparseVec>)> =
        vec![(Vec::new(), (0..size).map(|i| vec![(i, int(1))]).collect())];
    for j in 1..=n {
        // left multiplication by each transposition (i j) as an index map
        let tables: Vec<Vec<usize>> = (1..j)
            .map(|i| {
                let t = Permutation::transposition(i, j, n);
                coords.elements().iter().map(|g| coords.index(&(&t * g))).collect()
            })
            .collect();
        let mut next = Vec::new();
        for (tuple, basis) in spaces {
            let images: Vec<SparseVec> = basis.iter().map(|b| left_multiply(&tables, b)).collect();
            let mut found = 0;
            for c in -(j as i64 - 1)..=(j as i64 - 1) {
                let eigen = restricted_kernel(&basis, &images, &int(c));
                if eigen.is_empty() {
                    continue;
                }
                found += eigen.len();
                let mut t = tuple.clone();
                t.push(c);
                next.push((t, eigen));
            }
            assert_eq!(found, basis.len(), "Jucys-Murphy elements act diagonalizably with integer eigenvalues");
        }
        spaces = next;
    }
    Ok(spaces.into_iter().map(|(t, b)| (t, b.len())).collect())
}

fn left_multiply(tables: &[Vec<usize>], v: &[(usize, Scalar)]) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for table in tables {
        for (i, x) in v {
            *acc.entry(table[*i]).or_insert_with(Scalar::zero) += x;
        }
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Vectors `sum_l y_l b_l` with `sum_l y_l (X b_l - c b_l) = 0`.
fn restricted_kernel(basis: &[SparseVec], images: &[SparseVec], c: &Scalar) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (l, (b, xb)) in basis.iter().zip(images).enumerate() {
        let mut col: BTreeMap<usize, Scalar> = xb.iter().cloned().collect();
        for (i, x) in b {
            *col.entry(*i).or_insert_with(Scalar::zero) -= c * x;
        }
        for (i, x) in col {
            if !x.is_zero() {
                rows.entry(i).or_default().push((l, x));
            }
        }
    }
    kernel(rows.into_values(), basis.len())
        .into_iter()
        .map(|y| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (l, coef) in &y {
                for (i, x) in &basis[*l] {
                    *acc.entry(*i).or_insert_with(Scalar::zero) += coef * x;
                }
            }
            acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
        })
        .collect()
}

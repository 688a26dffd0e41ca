use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{enumerate_partitions, Partition};
use crate::error::{Error, Result};

/// Counts semistandard tableaux of shape `outer` by filling one horizontal
/// strip per entry value; `inner` is the shape filled so far (padded to the
/// length of `outer`).
fn count_fillings(
    outer: &[usize],
    inner: &mut Vec<usize>,
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&boxes, rest)) = content.split_first() else {
        return if inner.as_slice() == outer {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (inner.clone(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let prev = inner.clone();
    let mut total = BigInt::zero();
    add_strip(outer, &prev, inner, 0, boxes, rest, memo, &mut total);
    memo.insert(key, total.clone());
    total
}

#[allow(clippy::too_many_arguments)]
fn add_strip(
    outer: &[usize],
    prev: &[usize],
    shape: &mut Vec<usize>,
    row: usize,
    remaining: usize,
    rest: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
    total: &mut BigInt,
) {
    if remaining == 0 {
        *total += count_fillings(outer, shape, rest, memo);
        return;
    }
    if row == outer.len() {
        return;
    }
    // a horizontal strip never puts two new boxes in one column:
    // the new row length is capped by the previous row's old length
    let cap = if row == 0 {
        outer[0]
    } else {
        outer[row].min(prev[row - 1])
    };
    let room = cap.saturating_sub(prev[row]);
    for add in 0..=room.min(remaining) {
        shape[row] = prev[row] + add;
        add_strip(outer, prev, shape, row + 1, remaining - add, rest, memo, total);
    }
    shape[row] = prev[row];
}

/// Kostka number K_{mu,lam}: semistandard Young tableaux of shape `mu` and content `lam`.
pub fn kostka(mu: &Partition, lam: &Partition) -> Result<BigInt> {
    if mu.n() != lam.n() {
        return Err(Error::SizeMismatch {
            expected: mu.n(),
            found: lam.n(),
        });
    }
    let mut inner = vec![0; mu.len()];
    Ok(count_fillings(mu.parts(), &mut inner, lam.parts(), &mut HashMap::new()))
}

/// Kostka matrix over P(n) in canonical order, `m[shape][content]`.
pub(crate) fn kostka_matrix(n: usize) -> Vec<Vec<BigInt>> {
    let parts = enumerate_partitions(n);
    parts
        .iter()
        .map(|mu| parts.iter().map(|lam| kostka(mu, lam).expect("same n")).collect())
        .collect()
}

/// Inverse of a unit upper-triangular integer matrix by back substitution.
pub(crate) fn invert_unitriangular(k: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let size = k.len();
    let mut inv = vec![vec![BigInt::zero(); size]; size];
    for i in 0..size {
        assert!(k[i][i].is_one(), "Kostka matrix must have unit diagonal");
        inv[i][i] = BigInt::one();
        for j in i + 1..size {
            let mut acc = BigInt::zero();
            for m in i..j {
                acc += &inv[i][m] * &k[m][j];
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

/// Coefficients `c_mu` with m_lam = Σ_mu c_mu s_mu, in canonical order of `mu`.
pub fn inverse_kostka_row(lam: &Partition) -> Vec<(Partition, BigInt)> {
    let n = lam.n();
    let parts = enumerate_partitions(n);
    let idx = parts.iter().position(|q| q == lam).expect("partition of n");
    let inv = invert_unitriangular(&kostka_matrix(n));
    parts.into_iter().zip(inv[idx].iter().cloned()).collect()
}

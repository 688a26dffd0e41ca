//! Slow, independent reference computations used to cross-check the census.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{ClassFunction, Partition};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant_exact(m: &IntMatrix) -> BigInt {
    let n = m.n();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    if negate {
        -det
    } else {
        det
    }
}

/// Permanent by Ryser's inclusion-exclusion over column subsets, visited in
/// Gray-code order so each step updates the row sums by one column.
pub fn permanent_exact(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    let mut row_sums = vec![0i128; n];
    let mut total = BigInt::zero();
    let mut gray = 0u64;
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        gray ^= 1 << col;
        let added = gray >> col & 1 == 1;
        for (i, s) in row_sums.iter_mut().enumerate() {
            let v = i128::from(m.get(i, col));
            if added {
                *s += v;
            } else {
                *s -= v;
            }
        }
        let prod: BigInt = row_sums.iter().map(|&s| BigInt::from(s)).product();
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

/// `Σ_ψ f(type ψ)·Π M[i, ψ(i)]` over all `n!` permutations, with no support
/// pruning. Only practical for small `n`.
pub fn immanant_by_permutations(m: &IntMatrix, f: &ClassFunction) -> Result<BigInt> {
    let n = m.n();
    if f.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: f.n(),
        });
    }
    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut visit = |perm: &[usize]| -> Result<()> {
        let prod: BigInt = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| BigInt::from(m.get(i, j)))
            .product();
        if !prod.is_zero() {
            total += f.value(&cycle_type(perm))? * prod;
        }
        Ok(())
    };
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; n];
    visit(&perm)?;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm)?;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

/// Sum over all `|B| = r` of the immanant of `M[B|B]` padded with identity.
pub fn coefficient_via_subsets(m: &IntMatrix, f: &ClassFunction, r: usize) -> Result<BigInt> {
    let n = m.n();
    if r > n {
        return Err(Error::SizeMismatch { expected: n, found: r });
    }
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let keep: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        total += immanant_by_permutations(&m.pad_with_identity(&keep), f)?;
    }
    Ok(total)
}

//! Enumeration of the permutations that can carry a nonzero product.
//!
//! The lowest unassigned index is either fixed or opens a cycle whose other
//! members are all larger, so every permutation is produced exactly once and
//! only along nonzero off-diagonal entries. Fixed points are left symbolic:
//! each contributes a factor `(x - d_i)`, tracked through the elementary
//! symmetric functions of the diagonal entries seen so far.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::ImmanantalPolynomial;
use crate::combinat::{ClassFunction, Partition, SymmetricGroup};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Weighted census of support permutations, grouped by cycle type.
///
/// `weight(μ, r)` is the sum over permutations of type `μ` with `c` nonfixed
/// points of the off-diagonal product times `e_{r-c}` of the diagonal entries
/// on fixed points. Any class function `f` then gives the coefficient
/// `b_r = Σ_μ f(μ)·weight(μ, r)` of `(-1)^r x^{n-r}` in `GMF_f(xI - M)`.
#[derive(Debug, Clone)]
pub struct PermutationCensus {
    group: Arc<SymmetricGroup>,
    /// Indexed by canonical partition position, then by `r`.
    weights: Vec<Vec<BigInt>>,
}

struct Support<'a> {
    m: &'a IntMatrix,
    off_diagonal: Vec<Vec<usize>>,
}

struct Walk {
    assigned: Vec<bool>,
    cycles: Vec<usize>,
    fixed: usize,
    weights: Vec<Vec<BigInt>>,
}

impl Walk {
    fn new(n: usize, classes: usize) -> Self {
        Walk {
            assigned: vec![false; n],
            cycles: vec![0; n + 1],
            fixed: 0,
            weights: vec![vec![BigInt::zero(); n + 1]; classes],
        }
    }

    fn record(&mut self, group: &SymmetricGroup, weight: &BigInt, e: &[BigInt]) {
        let mut mult = self.cycles.clone();
        mult[1] = self.fixed;
        let idx = group.index_of(&Partition::from_multiplicities(&mult));
        let n = self.assigned.len();
        let moved = n - self.fixed;
        for (j, ej) in e.iter().enumerate() {
            if !ej.is_zero() {
                self.weights[idx][moved + j] += weight * ej;
            }
        }
    }

    fn descend(&mut self, ctx: &Support, group: &SymmetricGroup, from: usize, weight: &BigInt, e: &[BigInt]) {
        let n = self.assigned.len();
        let Some(i) = (from..n).find(|&i| !self.assigned[i]) else {
            self.record(group, weight, e);
            return;
        };
        self.assigned[i] = true;

        self.fixed += 1;
        let extended = with_root(e, ctx.m.get(i, i));
        self.descend(ctx, group, i + 1, weight, &extended);
        self.fixed -= 1;

        self.grow_cycle(ctx, group, i, i, 1, weight, e);
        self.assigned[i] = false;
    }

    #[allow(clippy::too_many_arguments)]
    fn grow_cycle(
        &mut self,
        ctx: &Support,
        group: &SymmetricGroup,
        head: usize,
        tail: usize,
        len: usize,
        weight: &BigInt,
        e: &[BigInt],
    ) {
        for &j in &ctx.off_diagonal[tail] {
            let w = weight * ctx.m.get(tail, j);
            if j == head {
                self.cycles[len] += 1;
                self.descend(ctx, group, head + 1, &w, e);
                self.cycles[len] -= 1;
            } else if j > head && !self.assigned[j] {
                self.assigned[j] = true;
                self.grow_cycle(ctx, group, head, j, len + 1, &w, e);
                self.assigned[j] = false;
            }
        }
    }
}

/// Elementary symmetric functions after adjoining one more value.
fn with_root(e: &[BigInt], d: i64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(e.len() + 1);
    out.push(e[0].clone());
    for j in 1..e.len() {
        out.push(&e[j] + &e[j - 1] * d);
    }
    out.push(&e[e.len() - 1] * d);
    out
}

/// The ways index 0 can be placed: fixed, or on a cycle given as its vertex
/// sequence starting at 0.
fn first_blocks(ctx: &Support) -> Vec<Vec<usize>> {
    fn grow(ctx: &Support, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let tail = *path.last().expect("non-empty path");
        for &j in &ctx.off_diagonal[tail] {
            if j == 0 {
                out.push(path.clone());
            } else if !used[j] {
                used[j] = true;
                path.push(j);
                grow(ctx, path, used, out);
                path.pop();
                used[j] = false;
            }
        }
    }
    let mut out = vec![vec![0]];
    let mut used = vec![false; ctx.m.n()];
    used[0] = true;
    grow(ctx, &mut vec![0], &mut used, &mut out);
    out
}

/// Default refusal threshold for [`PermutationCensus::new_capped`].
pub const DEFAULT_PERMUTATION_CAP: u128 = 100_000_000;

/// Upper bound on the permutations supported on the nonzero entries of `m`,
/// by Bregman's inequality: `Π_i (s_i!)^(1/s_i)` for row support sizes `s_i`
/// (the diagonal always counts, since fixed points are kept symbolic).
pub fn support_permutation_bound(m: &IntMatrix) -> f64 {
    let n = m.n();
    (0..n)
        .map(|i| {
            let s = 1 + (0..n).filter(|&j| j != i && m.get(i, j) != 0).count();
            let log_fact: f64 = (1..=s).map(|k| (k as f64).ln()).sum();
            log_fact / s as f64
        })
        .sum::<f64>()
        .exp()
}

impl PermutationCensus {
    /// Refuses matrices whose support admits more than `cap` permutations
    /// by the Bregman bound.
    pub fn new_capped(m: &IntMatrix, cap: u128) -> Result<Self> {
        let bound = support_permutation_bound(m);
        if bound > cap as f64 * (1.0 + 1e-9) {
            return Err(Error::Capacity {
                what: "support permutations (Bregman bound)",
                requested: bound.min(u128::MAX as f64).round() as u128,
                limit: cap,
            });
        }
        Ok(Self::new(m))
    }

    pub fn new(m: &IntMatrix) -> Self {
        let n = m.n();
        let group = SymmetricGroup::get(n);
        let classes = group.partitions().len();
        if n == 0 {
            let mut weights = vec![vec![BigInt::zero(); 1]; classes];
            weights[0][0] = BigInt::one();
            return PermutationCensus { group, weights };
        }
        let ctx = Support {
            m,
            off_diagonal: (0..n)
                .map(|i| (0..n).filter(|&j| j != i && m.get(i, j) != 0).collect())
                .collect(),
        };
        // independent subtrees, one per placement of index 0
        let partials: Vec<Vec<Vec<BigInt>>> = first_blocks(&ctx)
            .into_par_iter()
            .map(|block| {
                let mut walk = Walk::new(n, classes);
                walk.assigned[0] = true;
                let one = [BigInt::one()];
                if block.len() == 1 {
                    walk.fixed = 1;
                    let e = with_root(&one, m.get(0, 0));
                    walk.descend(&ctx, &group, 1, &BigInt::one(), &e);
                } else {
                    let mut weight = BigInt::one();
                    for (k, &v) in block.iter().enumerate() {
                        walk.assigned[v] = true;
                        weight *= m.get(v, block[(k + 1) % block.len()]);
                    }
                    walk.cycles[block.len()] = 1;
                    walk.descend(&ctx, &group, 1, &weight, &one);
                }
                walk.weights
            })
            .collect();
        let mut weights = vec![vec![BigInt::zero(); n + 1]; classes];
        for partial in partials {
            for (row, add) in weights.iter_mut().zip(partial) {
                for (slot, v) in row.iter_mut().zip(add) {
                    *slot += v;
                }
            }
        }
        PermutationCensus { group, weights }
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn weight(&self, ty: &Partition, r: usize) -> &BigInt {
        &self.weights[self.group.index_of(ty)][r]
    }

    fn check(&self, f: &ClassFunction) -> Result<()> {
        if f.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: f.n(),
            });
        }
        Ok(())
    }

    pub fn polynomial(&self, f: &ClassFunction) -> Result<ImmanantalPolynomial> {
        self.check(f)?;
        let n = self.n();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (fv, row) in f.values().iter().zip(&self.weights) {
            if fv.is_zero() {
                continue;
            }
            for (c, w) in coeffs.iter_mut().zip(row) {
                *c += fv * w;
            }
        }
        Ok(ImmanantalPolynomial::from_coeffs(coeffs))
    }

    /// The constant-term weight alone: `Σ_ψ f(type ψ)·Π M[i, ψ(i)]`.
    pub fn immanant(&self, f: &ClassFunction) -> Result<BigInt> {
        self.check(f)?;
        let n = self.n();
        Ok(f.values().iter().zip(&self.weights).map(|(fv, row)| fv * &row[n]).sum())
    }
}

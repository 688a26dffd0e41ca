//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule, computed on beta-sets (abacus positions) so that rim-hook removal is
//! a single bead move.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{enumerate_partitions, Partition};
use crate::error::{Error, Result};

type Memo = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

fn check_same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// Removes a rim hook of length `len` at beta-number position `idx`, returning
/// the resulting shape and the hook's sign, or `None` when the bead is blocked.
fn remove_rim_hook(beta: &[usize], idx: usize, len: usize) -> Option<(Vec<usize>, bool)> {
    let b = beta[idx];
    if b < len {
        return None;
    }
    let target = b - len;
    if beta.contains(&target) {
        return None;
    }
    let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
    let mut moved: Vec<usize> = beta.to_vec();
    moved[idx] = target;
    moved.sort_unstable_by(|a, b| b.cmp(a));
    let l = moved.len();
    let shape: Vec<usize> = moved
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Some((shape, crossed % 2 == 1))
}

fn mn(shape: &[usize], cycles: &[usize], memo: &mut Memo) -> BigInt {
    let Some((&len, rest)) = cycles.split_first() else {
        return if shape.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let l = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut total = BigInt::zero();
    for idx in 0..l {
        if let Some((smaller, negative)) = remove_rim_hook(&beta, idx, len) {
            let v = mn(&smaller, rest, memo);
            if negative {
                total -= v;
            } else {
                total += v;
            }
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Character value χ_λ(ν) of the irreducible representation `lam` on the class `nu`.
pub fn character(lam: &Partition, nu: &Partition) -> Result<BigInt> {
    check_same_size(lam, nu)?;
    Ok(mn(lam.parts(), nu.parts(), &mut Memo::new()))
}

/// Centralizer order z_λ = Π i^{m_i} m_i!.
pub fn z_value(lam: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lam.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Π_{i≥2} C(m_i(mu), m_i(nu)); multiplicities of the part 1 do not enter.
pub fn partition_binomial(mu: &Partition, nu: &Partition) -> Result<BigInt> {
    check_same_size(mu, nu)?;
    let (mm, mn_) = (mu.multiplicities(), nu.multiplicities());
    let mut acc = BigInt::one();
    for i in 2..mm.len() {
        if mm[i] < mn_[i] {
            return Ok(BigInt::zero());
        }
        acc *= binomial(mm[i], mn_[i]);
    }
    Ok(acc)
}

/// Full character table of 𝔖_n, rows and columns in canonical partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    entries: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let mut memo = Memo::new();
        let entries = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|nu| mn(lam.parts(), nu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable { n, partitions, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Entry at row `lam_idx`, column `nu_idx` (indices into [`Self::partitions`]).
    pub fn entry(&self, lam_idx: usize, nu_idx: usize) -> &BigInt {
        &self.entries[lam_idx][nu_idx]
    }

    pub fn row(&self, lam_idx: usize) -> &[BigInt] {
        &self.entries[lam_idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn factorial(n: usize) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
    }

    /// Brute-force characters of S_3 from its three irreducible
    /// representations: trivial, sign, and the standard 2-dim representation
    /// whose character is (#fixed points − 1).
    #[test]
    fn s3_matches_permutation_model() {
        // classes of S_3: identity, transposition, 3-cycle
        let classes = [p("1,1,1"), p("2,1"), p("3")];
        let fixed_points = [3i64, 1, 0];
        let signs = [1i64, -1, 1];
        for (c, nu) in classes.iter().enumerate() {
            assert_eq!(character(&p("3"), nu).unwrap(), BigInt::from(1));
            assert_eq!(character(&p("1,1,1"), nu).unwrap(), BigInt::from(signs[c]));
            assert_eq!(character(&p("2,1"), nu).unwrap(), BigInt::from(fixed_points[c] - 1));
        }
    }

    #[test]
    fn trivial_and_sign_at_identity() {
        for n in 1..=8 {
            assert_eq!(
                character(&Partition::row(n), &Partition::column(n)).unwrap(),
                BigInt::one()
            );
            assert_eq!(
                character(&Partition::column(n), &Partition::column(n)).unwrap(),
                BigInt::one()
            );
        }
    }

    #[test]
    fn orthogonality_relations() {
        for n in 1..=8 {
            let table = CharacterTable::new(n);
            let parts = table.partitions();
            let nfact = factorial(n);
            let id = parts.len() - 1;
            let dims: BigInt = (0..parts.len()).map(|l| table.entry(l, id).pow(2)).sum();
            assert_eq!(dims, nfact, "sum of squared degrees, n = {n}");
            for a in 0..parts.len() {
                for b in 0..parts.len() {
                    let row: BigInt = (0..parts.len())
                        .map(|v| {
                            let class_size = &nfact / z_value(&parts[v]);
                            class_size * table.entry(a, v) * table.entry(b, v)
                        })
                        .sum();
                    let expected = if a == b { nfact.clone() } else { BigInt::zero() };
                    assert_eq!(row, expected, "row orthogonality n={n} {a} {b}");
                    let col: BigInt = (0..parts.len()).map(|l| table.entry(l, a) * table.entry(l, b)).sum();
                    let expected = if a == b { z_value(&parts[a]) } else { BigInt::zero() };
                    assert_eq!(col, expected, "column orthogonality n={n} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_value(&p("1,1,1")), BigInt::from(6));
        assert_eq!(z_value(&p("2,1")), BigInt::from(2));
        for n in 1..=9 {
            assert_eq!(z_value(&Partition::row(n)), BigInt::from(n));
        }
        // class sizes add up to n!
        for n in 1..=9 {
            let total: BigInt = enumerate_partitions(n).iter().map(|q| factorial(n) / z_value(q)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn partition_binomial_cases() {
        assert_eq!(
            partition_binomial(&p("2,2,1,1"), &p("2,1,1,1,1")).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(partition_binomial(&p("1,1,1,1"), &p("2,1,1")).unwrap(), BigInt::zero());
        for q in enumerate_partitions(7) {
            assert_eq!(partition_binomial(&q, &q).unwrap(), BigInt::one());
        }
        assert!(matches!(
            partition_binomial(&p("2,1"), &p("2")),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(character(&p("2,1"), &p("2")).is_err());
    }
}

//! Class functions on 𝔖_n and inverse Frobenius images of the Schur,
//! elementary, complete homogeneous, power-sum and monomial bases.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::character::{partition_binomial, z_value, CharacterTable};
use super::kostka::{invert_unitriangular, kostka_matrix};
use super::partition::{enumerate_partitions, Partition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Schur,
    Elementary,
    Homogeneous,
    PowerSum,
    Monomial,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Schur,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::PowerSum,
        Basis::Monomial,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Monomial => "m",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "s" => Ok(Basis::Schur),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Homogeneous),
            "p" => Ok(Basis::PowerSum),
            "m" => Ok(Basis::Monomial),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

/// Integer-valued class function on 𝔖_n, stored in canonical partition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<BigInt>,
}

impl ClassFunction {
    /// Tabulates `f` on every partition of `n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigInt) -> Self {
        let values = enumerate_partitions(n).iter().map(&mut f).collect();
        ClassFunction { n, values }
    }

    /// Values must be listed in canonical order (see [`enumerate_partitions`]).
    pub fn from_values(n: usize, values: Vec<BigInt>) -> Result<Self> {
        let expected = SymmetricGroup::get(n).partitions().len();
        if values.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                found: values.len(),
            });
        }
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, nu: &Partition) -> Result<&BigInt> {
        if nu.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: nu.n(),
            });
        }
        let idx = SymmetricGroup::get(self.n).index_of(nu);
        Ok(&self.values[idx])
    }

    /// Value at the identity class `1^n`.
    pub fn at_identity(&self) -> &BigInt {
        self.values.last().expect("P(n) is never empty")
    }
}

/// Character-theoretic data for one `n`, built once and shared.
#[derive(Debug)]
pub struct SymmetricGroup {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    characters: CharacterTable,
    z: Vec<BigInt>,
    kostka: Vec<Vec<BigInt>>,
    inverse_kostka: Vec<Vec<BigInt>>,
    conjugate: Vec<usize>,
}

impl SymmetricGroup {
    /// Shared instance for `n`; built on first use.
    pub fn get(n: usize) -> Arc<SymmetricGroup> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymmetricGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().expect("cache poisoned").get(&n) {
            return Arc::clone(g);
        }
        let built = Arc::new(SymmetricGroup::build(n));
        let mut guard = cache.lock().expect("cache poisoned");
        Arc::clone(guard.entry(n).or_insert(built))
    }

    fn build(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let kostka = kostka_matrix(n);
        let inverse_kostka = invert_unitriangular(&kostka);
        let conjugate = partitions.iter().map(|p| index[&p.conjugate()]).collect();
        SymmetricGroup {
            z: partitions.iter().map(z_value).collect(),
            characters: CharacterTable::new(n),
            partitions,
            index,
            kostka,
            inverse_kostka,
            conjugate,
        }
    }

    pub fn n(&self) -> usize {
        self.characters.n()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn characters(&self) -> &CharacterTable {
        &self.characters
    }

    pub fn z(&self, idx: usize) -> &BigInt {
        &self.z[idx]
    }

    pub fn kostka(&self, shape: usize, content: usize) -> &BigInt {
        &self.kostka[shape][content]
    }

    pub fn inverse_kostka(&self, row: usize, col: usize) -> &BigInt {
        &self.inverse_kostka[row][col]
    }

    fn combine_characters(&self, coeff: impl Fn(usize) -> BigInt) -> Vec<BigInt> {
        let size = self.partitions.len();
        let mut out = vec![BigInt::zero(); size];
        for mu in 0..size {
            let c = coeff(mu);
            if c.is_zero() {
                continue;
            }
            for (slot, chi) in out.iter_mut().zip(self.characters.row(mu)) {
                *slot += &c * chi;
            }
        }
        out
    }

    /// ch⁻¹ of the basis element indexed by the partition at `lam_idx`.
    pub fn inverse_frobenius_at(&self, basis: Basis, lam_idx: usize) -> ClassFunction {
        let size = self.partitions.len();
        let values = match basis {
            Basis::Schur => self.characters.row(lam_idx).to_vec(),
            Basis::PowerSum => (0..size)
                .map(|nu| {
                    if nu == lam_idx {
                        self.z[lam_idx].clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect(),
            Basis::Homogeneous => self.combine_characters(|mu| self.kostka[mu][lam_idx].clone()),
            Basis::Elementary => self.combine_characters(|mu| self.kostka[self.conjugate[mu]][lam_idx].clone()),
            Basis::Monomial => self.combine_characters(|mu| self.inverse_kostka[lam_idx][mu].clone()),
        };
        ClassFunction { n: self.n(), values }
    }

    /// Σ_ν f(ν)·C(mu, ν) for a class function on this group.
    pub fn binomial_pairing(&self, f: &ClassFunction, mu_idx: usize) -> BigInt {
        let mu = &self.partitions[mu_idx];
        self.partitions
            .iter()
            .zip(f.values())
            .filter(|(_, v)| !v.is_zero())
            .map(|(nu, v)| v * partition_binomial(mu, nu).expect("same n"))
            .sum()
    }
}

/// The class function ch⁻¹(τ) for τ the `basis` element indexed by `lam`.
pub fn inverse_frobenius(basis: Basis, lam: &Partition) -> ClassFunction {
    let group = SymmetricGroup::get(lam.n());
    group.inverse_frobenius_at(basis, group.index_of(lam))
}

fn check_same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// α_{λ,μ} = Σ_ν χ_λ(ν)·C(μ, ν). Always a non-negative integer; a negative
/// value here means the character layer is broken, so it panics.
pub fn alpha(lam: &Partition, mu: &Partition) -> Result<BigInt> {
    let value = alpha_tau(Basis::Schur, lam, mu)?;
    assert!(!value.is_negative(), "alpha({lam}, {mu}) = {value} is negative");
    Ok(value)
}

/// α_μ(τ) = Σ_ν ch⁻¹_τ(ν)·C(μ, ν) for τ the `basis` element indexed by `lam`.
pub fn alpha_tau(basis: Basis, lam: &Partition, mu: &Partition) -> Result<BigInt> {
    check_same_size(lam, mu)?;
    let group = SymmetricGroup::get(lam.n());
    let f = group.inverse_frobenius_at(basis, group.index_of(lam));
    Ok(group.binomial_pairing(&f, group.index_of(mu)))
}

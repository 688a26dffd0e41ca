//! Immanants and immanantal polynomials of integer matrices.
//!
//! Production values come from [`PermutationCensus`], which only walks
//! permutations supported on nonzero entries. The [`oracle`] functions are
//! deliberately naive and exist to check it.

mod census;
pub mod oracle;

use num_bigint::BigInt;
use num_traits::Zero;

pub use census::{support_permutation_bound, PermutationCensus, DEFAULT_PERMUTATION_CAP};
pub use oracle::{coefficient_via_subsets, determinant_exact, permanent_exact};

use crate::combinat::{inverse_frobenius, Basis, ClassFunction, Partition};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Exact rational, always in lowest terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Coefficients `b_0..b_n` of `Σ_r (-1)^r b_r x^{n-r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImmanantalPolynomial {
    coeffs: Vec<BigInt>,
}

impl ImmanantalPolynomial {
    pub(crate) fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(!coeffs.is_empty());
        ImmanantalPolynomial { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, r: usize) -> &BigInt {
        &self.coeffs[r]
    }

    /// Value of the polynomial at `x`.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (r, b) in self.coeffs.iter().enumerate() {
            acc *= x;
            if r % 2 == 0 {
                acc += b;
            } else {
                acc -= b;
            }
        }
        acc
    }
}

/// `Σ_ψ f(type ψ)·Π M[i, ψ(i)]`.
pub fn immanant(m: &IntMatrix, f: &ClassFunction) -> Result<BigInt> {
    check_size(m, f.n())?;
    PermutationCensus::new(m).immanant(f)
}

/// The immanant for `χ_λ` divided by `χ_λ(id)`.
pub fn normalized_immanant(m: &IntMatrix, lam: &Partition) -> Result<ExactRational> {
    check_size(m, lam.n())?;
    let chi = inverse_frobenius(Basis::Schur, lam);
    let value = PermutationCensus::new(m).immanant(&chi)?;
    Ok(ExactRational::new(value, chi.at_identity().clone()))
}

/// Coefficients of `GMF_f(xI - M)`.
pub fn imm_polynomial(m: &IntMatrix, f: &ClassFunction) -> Result<ImmanantalPolynomial> {
    check_size(m, f.n())?;
    PermutationCensus::new(m).polynomial(f)
}

fn check_size(m: &IntMatrix, n: usize) -> Result<()> {
    if m.n() != n {
        return Err(Error::SizeMismatch {
            expected: m.n(),
            found: n,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::oracle::immanant_by_permutations;
    use super::*;
    use crate::combinat::enumerate_partitions;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sign(n: usize) -> ClassFunction {
        inverse_frobenius(Basis::Schur, &Partition::column(n))
    }

    fn trivial(n: usize) -> ClassFunction {
        inverse_frobenius(Basis::Schur, &Partition::row(n))
    }

    #[test]
    fn characteristic_polynomials() {
        let s4 = imm_polynomial(&Graph::star(4).laplacian(), &sign(4)).unwrap();
        assert_eq!(s4.coeffs(), ints(&[1, 6, 9, 4, 0]).as_slice());
        let p4 = imm_polynomial(&Graph::path(4).laplacian(), &sign(4)).unwrap();
        assert_eq!(p4.coeffs(), ints(&[1, 6, 10, 4, 0]).as_slice());
        // (x - 1)^2 - 1 for the sign, (x - 1)^2 + 1 for the trivial character
        let p2 = imm_polynomial(&Graph::path(2).laplacian(), &trivial(2)).unwrap();
        assert_eq!(p2.coeffs(), ints(&[1, 2, 2]).as_slice());
    }

    #[test]
    fn small_immanants() {
        let l = Graph::path(2).laplacian();
        assert_eq!(immanant(&l, &trivial(2)).unwrap(), BigInt::from(2));
        assert_eq!(permanent_exact(&l), BigInt::from(2));
        for g in [Graph::cycle(5), Graph::star(5), Graph::complete(4)] {
            let l = g.laplacian();
            assert!(determinant_exact(&l).is_zero());
            assert!(immanant(&l, &sign(g.n())).unwrap().is_zero());
        }
        let norm = normalized_immanant(&Graph::path(3).laplacian(), &"2,1".parse().unwrap()).unwrap();
        let chi = inverse_frobenius(Basis::Schur, &"2,1".parse().unwrap());
        let raw = immanant(&Graph::path(3).laplacian(), &chi).unwrap();
        assert_eq!(norm, ExactRational::new(raw, BigInt::from(2)));
        assert!(matches!(
            immanant(&Graph::path(3).laplacian(), &sign(4)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn census_matches_subset_oracle() {
        let graphs = [
            Graph::path(4),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let l = g.laplacian();
            let census = PermutationCensus::new(&l);
            for lam in enumerate_partitions(g.n()) {
                for basis in Basis::ALL {
                    let f = inverse_frobenius(basis, &lam);
                    let poly = census.polynomial(&f).unwrap();
                    assert_eq!(poly.coefficient(0), f.at_identity());
                    for r in 0..=g.n() {
                        assert_eq!(
                            poly.coefficient(r),
                            &coefficient_via_subsets(&l, &f, r).unwrap(),
                            "{basis} {lam} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn constant_term_is_immanant_of_negation() {
        let l = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
            .unwrap()
            .laplacian();
        let mut neg = IntMatrix::zeros(5);
        for i in 0..5 {
            for j in 0..5 {
                neg.set(i, j, -l.get(i, j));
            }
        }
        for lam in enumerate_partitions(5) {
            let f = inverse_frobenius(Basis::Schur, &lam);
            let poly = imm_polynomial(&l, &f).unwrap();
            assert_eq!(poly.evaluate(&BigInt::zero()), immanant(&neg, &f).unwrap());
            assert_eq!(poly.coefficient(5), &immanant(&l, &f).unwrap());
        }
    }

    #[test]
    fn evaluation_against_sign_definition() {
        // det(xI - L) at x = 3 for the path on three vertices
        let l = Graph::path(3).laplacian();
        let poly = imm_polynomial(&l, &sign(3)).unwrap();
        let mut shifted = IntMatrix::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                shifted.set(i, j, i64::from(i == j) * 3 - l.get(i, j));
            }
        }
        assert_eq!(poly.evaluate(&BigInt::from(3)), determinant_exact(&shifted));
    }

    #[test]
    fn bregman_cap() {
        let k5 = Graph::complete(5).laplacian();
        assert!((support_permutation_bound(&k5) - 120.0).abs() < 1e-6);
        assert!(PermutationCensus::new_capped(&k5, 120).is_ok());
        assert!(matches!(
            PermutationCensus::new_capped(&k5, 119),
            Err(Error::Capacity { .. })
        ));
    }

    proptest! {
        #[test]
        fn dense_matrices_agree_with_oracles(entries in prop::collection::vec(-4i64..=4, 25)) {
            let rows: Vec<Vec<i64>> = entries.chunks(5).map(<[i64]>::to_vec).collect();
            let m = IntMatrix::from_rows(rows).unwrap();
            let census = PermutationCensus::new(&m);
            prop_assert_eq!(census.immanant(&sign(5)).unwrap(), determinant_exact(&m));
            prop_assert_eq!(census.immanant(&trivial(5)).unwrap(), permanent_exact(&m));
            let chi = inverse_frobenius(Basis::Schur, &"3,2".parse().unwrap());
            prop_assert_eq!(census.immanant(&chi).unwrap(), immanant_by_permutations(&m, &chi).unwrap());
        }
    }
}

//! Partitions, symmetric-group characters, Kostka numbers and inverse
//! Frobenius images.

mod character;
mod frobenius;
mod kostka;
mod partition;

pub use character::{character, partition_binomial, z_value, CharacterTable};
pub use frobenius::{alpha, alpha_tau, inverse_frobenius, Basis, ClassFunction, SymmetricGroup};
pub use kostka::{inverse_kostka_row, kostka};
pub use partition::{enumerate_partitions, Partition};

use std::fmt;

use crate::error::{Error, Result};

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Principal submatrix on `indices`, in the order given.
    pub fn principal_submatrix(&self, indices: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    /// The matrix `[M[B|B] 0; 0 I]` in the original index positions: rows and
    /// columns outside `keep` are replaced by identity rows and columns.
    pub fn pad_with_identity(&self, keep: &[bool]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = if keep[i] && keep[j] {
                    self.get(i, j)
                } else if i == j {
                    1
                } else {
                    0
                };
                m.set(i, j, v);
            }
        }
        m
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

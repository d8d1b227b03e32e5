//! Square nonnegative integer matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    k: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let k = rows.len();
        let mut data = Vec::with_capacity(k * k);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::NotSquare);
            }
            for (j, &x) in row.iter().enumerate() {
                if x < 0 {
                    return Err(Error::NegativeEntry { row: i + 1, col: j + 1 });
                }
            }
            data.extend(row);
        }
        Ok(IntMatrix { k, data })
    }

    pub fn zeros(k: usize) -> Self {
        IntMatrix { k, data: vec![0; k * k] }
    }

    pub fn from_fn(k: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                data.push(f(i, j));
            }
        }
        IntMatrix { k, data }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry `v_{i+1, j+1}`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.k + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.k + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.k.max(1)).take(self.k).map(|c| c.to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.k).map(|i| (0..self.k).map(|j| self.get(i, j)).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.k).map(|j| (0..self.k).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn max_entry(&self) -> i64 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// `V'`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.k, |i, j| self.get(j, i))
    }

    /// `V↕ = (v_{k+1-i, j})`.
    pub fn flip_rows(&self) -> Self {
        let k = self.k;
        Self::from_fn(k, |i, j| self.get(k - 1 - i, j))
    }

    /// `V↔ = (v_{i, k+1-j})`.
    pub fn flip_cols(&self) -> Self {
        let k = self.k;
        Self::from_fn(k, |i, j| self.get(i, k - 1 - j))
    }

    /// `V* = (v_{k+1-i, k+1-j})`.
    pub fn rotate(&self) -> Self {
        let k = self.k;
        Self::from_fn(k, |i, j| self.get(k - 1 - i, k - 1 - j))
    }

    /// The same entries in the top-left corner of a larger zero matrix.
    pub fn embedded(&self, k: usize) -> Self {
        Self::from_fn(k.max(self.k), |i, j| if i < self.k && j < self.k { self.get(i, j) } else { 0 })
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::new(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

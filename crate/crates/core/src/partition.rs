//! Partitions, skew shapes, weight vectors and words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(Error::InvalidPartition(format!("negative part {p} at position {}", i + 1)));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn from_slice(parts: &[i64]) -> Result<Self> {
        Self::new(parts.to_vec())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Rectangle `(width^height)`.
    pub fn rectangle(width: i64, height: usize) -> Self {
        if width <= 0 {
            return Self::empty();
        }
        Partition(vec![width; height])
    }

    /// Staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition((1..=k as i64).rev().collect())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based); zero beyond the length.
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> i64 {
        self.part(0)
    }

    pub fn padded(&self, n: usize) -> Vec<i64> {
        (0..n.max(self.len())).map(|i| self.part(i)).collect()
    }

    /// `other ⊂ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let w = self.first().max(0) as usize;
        Partition((0..w).map(|c| self.0.iter().filter(|&&p| p > c as i64).count() as i64).collect())
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The skew diagram `λ/μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn normal(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }

    pub fn row_len(&self, i: usize) -> i64 {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    /// Cells `(row, column)`, both 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        (0..self.rows()).flat_map(move |i| (self.inner.part(i)..self.outer.part(i)).map(move |c| (i, c)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Weight vector reversal `m*`.
pub fn reversed(weight: &[i64]) -> Vec<i64> {
    weight.iter().rev().copied().collect()
}

/// A word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<i64>);

impl Word {
    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    /// `m_j` for `j = 1..=max letter`.
    pub fn counts(&self) -> Vec<i64> {
        let top = self.0.iter().copied().max().unwrap_or(0).max(0) as usize;
        let mut m = vec![0; top];
        for &x in &self.0 {
            m[x as usize - 1] += 1;
        }
        m
    }

    /// `m_1 >= m_2 >= ...`
    pub fn is_positive(&self) -> bool {
        self.counts().windows(2).all(|w| w[0] >= w[1])
    }

    /// Every prefix is positive.
    pub fn is_dominant(&self) -> bool {
        let mut m: Vec<i64> = Vec::new();
        for &x in &self.0 {
            let j = x as usize;
            if m.len() < j {
                m.resize(j, 0);
            }
            m[j - 1] += 1;
            if j > 1 && m[j - 1] > m[j - 2] {
                return false;
            }
        }
        true
    }
}

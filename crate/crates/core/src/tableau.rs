//! Semistandard skew tableaux stored as Gelfand-Tsetlin patterns.
//!
//! Row `i` of the pattern holds `a[i][j] = μ_i + #{entries <= j in row i}` for
//! `j = 0..=k`, where `k` is the value range carried by the tableau.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape, Word};

#[derive(Clone, Debug)]
pub struct Tableau {
    shape: SkewShape,
    range: usize,
    gt: Vec<i64>,
}

impl Tableau {
    /// Builds a tableau from its GT rows (`rows × (range+1)`), validating every invariant.
    pub fn from_gt(shape: SkewShape, range: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let l = shape.rows();
        if rows.len() != l {
            return Err(Error::ShapeMismatch(format!("expected {l} GT rows, got {}", rows.len())));
        }
        let mut gt = Vec::with_capacity(l * (range + 1));
        for (i, row) in rows.iter().enumerate() {
            if row.len() != range + 1 {
                return Err(Error::NotATableau(format!("GT row {} has length {}", i + 1, row.len())));
            }
            gt.extend_from_slice(row);
        }
        let t = Tableau { shape, range, gt };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_gt_unchecked(shape: SkewShape, range: usize, gt: Vec<i64>) -> Self {
        debug_assert_eq!(gt.len(), shape.rows() * (range + 1));
        Tableau { shape, range, gt }
    }

    fn validate(&self) -> Result<()> {
        let k = self.range;
        for i in 0..self.rows() {
            if self.gt(i, 0) != self.shape.inner.part(i) || self.gt(i, k) != self.shape.outer.part(i) {
                return Err(Error::ShapeMismatch(format!("GT row {} does not span its shape row", i + 1)));
            }
            for j in 1..=k {
                if self.gt(i, j - 1) > self.gt(i, j) {
                    return Err(Error::NotATableau(format!("negative count of {j} in row {}", i + 1)));
                }
                if i > 0 && self.gt(i, j) > self.gt(i - 1, j - 1) {
                    return Err(Error::NotATableau(format!(
                        "value {j} in row {} sits below a value >= {j}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds from the skew cells of each row (inner cells omitted); range is the largest entry.
    pub fn from_rows(shape: SkewShape, rows: &[Vec<i64>]) -> Result<Self> {
        let top = rows.iter().flatten().copied().max().unwrap_or(0).max(0) as usize;
        Self::from_rows_with_range(shape, rows, top)
    }

    pub fn from_rows_with_range(shape: SkewShape, rows: &[Vec<i64>], range: usize) -> Result<Self> {
        let l = shape.rows();
        if rows.len() > l && rows[l..].iter().any(|r| !r.is_empty()) {
            return Err(Error::ShapeMismatch(format!("filling has more than {l} rows")));
        }
        for i in 0..l {
            let row: &[i64] = rows.get(i).map(|r| r.as_slice()).unwrap_or(&[]);
            let mu = shape.inner.part(i);
            if row.len() as i64 != shape.row_len(i) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} cells, shape needs {}",
                    i + 1,
                    row.len(),
                    shape.row_len(i)
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                let col = (mu as usize) + c;
                if v < 1 || v as usize > range {
                    return Err(Error::NotATableau(format!(
                        "entry {v} at ({},{}) outside 1..={range}",
                        i + 1,
                        col + 1
                    )));
                }
                if c > 0 && row[c - 1] > v {
                    return Err(Error::RowOrderViolation { row: i + 1, col: col + 1 });
                }
                if i > 0 && (col as i64) >= shape.inner.part(i - 1) {
                    let above = rows[i - 1][col - shape.inner.part(i - 1) as usize];
                    if above >= v {
                        return Err(Error::ColumnOrderViolation { row: i + 1, col: col + 1 });
                    }
                }
            }
        }
        let mut gt = vec![0; l * (range + 1)];
        for i in 0..l {
            let mu = shape.inner.part(i);
            let row: &[i64] = rows.get(i).map(|r| r.as_slice()).unwrap_or(&[]);
            let mut p = 0;
            for j in 0..=range {
                while p < row.len() && row[p] as usize <= j {
                    p += 1;
                }
                gt[i * (range + 1) + j] = mu + p as i64;
            }
        }
        Ok(Tableau { shape, range, gt })
    }

    /// Builds from a recording matrix: `c[i][j-1]` is the number of `j`s in row `i+1`.
    pub fn from_recording(shape: SkewShape, range: usize, c: &[Vec<i64>]) -> Result<Self> {
        let l = shape.rows();
        for (i, row) in c.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x < 0 {
                    return Err(Error::NotATableau(format!("negative count at ({},{})", i + 1, j + 1)));
                }
                if x != 0 && (i >= l || j >= range) {
                    return Err(Error::NotATableau(format!("count outside the shape at ({},{})", i + 1, j + 1)));
                }
            }
        }
        let mut gt = vec![0; l * (range + 1)];
        for i in 0..l {
            let mut acc = shape.inner.part(i);
            gt[i * (range + 1)] = acc;
            for j in 1..=range {
                let x = c.get(i).and_then(|r| r.get(j - 1)).copied().unwrap_or(0);
                acc = acc.checked_add(x).ok_or(Error::Overflow)?;
                gt[i * (range + 1) + j] = acc;
            }
        }
        let t = Tableau { shape, range, gt };
        t.validate()?;
        Ok(t)
    }

    /// `Can(λ)`: row `i` filled with `i`.
    pub fn canonical(lambda: &Partition) -> Self {
        let l = lambda.len();
        let mut gt = vec![0; l * (l + 1)];
        for i in 0..l {
            for j in (i + 1)..=l {
                gt[i * (l + 1) + j] = lambda.part(i);
            }
        }
        Tableau { shape: SkewShape::normal(lambda.clone()), range: l, gt }
    }

    /// The empty tableau on `λ/λ`.
    pub fn empty(lambda: &Partition) -> Self {
        Tableau {
            shape: SkewShape { outer: lambda.clone(), inner: lambda.clone() },
            range: 0,
            gt: lambda.parts().to_vec(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.shape.inner
    }

    /// The value range `k` (entries lie in `1..=k`).
    pub fn range(&self) -> usize {
        self.range
    }

    /// Number of rows `ℓ(λ)`.
    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn is_normal(&self) -> bool {
        self.shape.is_normal()
    }

    pub fn size(&self) -> i64 {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// GT entry `a_{i+1, j}` (row 0-based); rows past the end read 0, columns past `k` read `λ_i`.
    #[inline]
    pub fn gt(&self, i: usize, j: usize) -> i64 {
        if i >= self.rows() {
            0
        } else {
            self.gt[i * (self.range + 1) + j.min(self.range)]
        }
    }

    pub fn gt_row(&self, i: usize) -> &[i64] {
        &self.gt[i * (self.range + 1)..(i + 1) * (self.range + 1)]
    }

    pub fn gt_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows()).map(|i| self.gt_row(i).to_vec()).collect()
    }

    pub(crate) fn gt_flat(&self) -> &[i64] {
        &self.gt
    }

    /// Number of `j`s in row `i` (0-based row, 1-based value).
    pub fn count(&self, i: usize, j: usize) -> i64 {
        if j == 0 || j > self.range {
            0
        } else {
            self.gt(i, j) - self.gt(i, j - 1)
        }
    }

    /// Recording matrix `ℓ × k`.
    pub fn recording_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rows()).map(|i| (1..=self.range).map(|j| self.count(i, j)).collect()).collect()
    }

    /// Weight vector of length `k`.
    pub fn weight(&self) -> Vec<i64> {
        (1..=self.range).map(|j| (0..self.rows()).map(|i| self.count(i, j)).sum()).collect()
    }

    /// Entries of the skew cells of each row, left to right.
    pub fn value_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows())
            .map(|i| {
                let mut row = Vec::with_capacity(self.shape.row_len(i) as usize);
                for j in 1..=self.range {
                    for _ in 0..self.count(i, j) {
                        row.push(j as i64);
                    }
                }
                row
            })
            .collect()
    }

    /// Entry at `(row, col)`, both 0-based; `None` outside the skew shape.
    pub fn entry(&self, i: usize, col: i64) -> Option<i64> {
        if i >= self.rows() || col < self.inner().part(i) || col >= self.outer().part(i) {
            return None;
        }
        (1..=self.range).find(|&j| self.gt(i, j) > col).map(|j| j as i64)
    }

    pub fn max_entry(&self) -> i64 {
        (1..=self.range).rev().find(|&j| (0..self.rows()).any(|i| self.count(i, j) > 0)).unwrap_or(0) as i64
    }

    pub fn min_entry(&self) -> Option<i64> {
        (1..=self.range).find(|&j| (0..self.rows()).any(|i| self.count(i, j) > 0)).map(|j| j as i64)
    }

    /// Same filling with value range `k`; narrowing fails if an entry exceeds `k`.
    pub fn with_range(&self, k: usize) -> Result<Self> {
        if (k as i64) < self.max_entry() {
            return Err(Error::IndexOutOfRange { index: self.max_entry() as usize, range: k });
        }
        let mut gt = Vec::with_capacity(self.rows() * (k + 1));
        for i in 0..self.rows() {
            for j in 0..=k {
                gt.push(self.gt(i, j));
            }
        }
        Ok(Tableau { shape: self.shape.clone(), range: k, gt })
    }

    /// Rows read right to left, top row first.
    pub fn word(&self) -> Word {
        let mut w = Vec::with_capacity(self.size() as usize);
        for row in self.value_rows() {
            w.extend(row.into_iter().rev());
        }
        Word(w)
    }

    /// Littlewood-Richardson: the word is dominant.
    pub fn is_lr(&self) -> bool {
        // Reading row i right to left, the letters j+1 come before j; checking
        // after each row's block of j+1 against the previous rows' j count suffices.
        let k = self.range;
        let mut totals = vec![0i64; k + 2];
        for i in 0..self.rows() {
            for j in (1..=k).rev() {
                let add = self.count(i, j);
                if add == 0 {
                    continue;
                }
                totals[j] += add;
                if j > 1 && totals[j] > totals[j - 1] {
                    return false;
                }
            }
        }
        true
    }

    /// `is_lr` together with weight `nu`.
    pub fn is_lr_of_weight(&self, nu: &Partition) -> bool {
        self.is_lr() && trim(&self.weight()) == nu.parts()
    }
}

/// Drops trailing zeros.
pub(crate) fn trim(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        if self.shape != other.shape {
            return false;
        }
        let k = self.range.max(other.range);
        (0..self.rows()).all(|i| (0..=k).all(|j| self.gt(i, j) == other.gt(i, j)))
    }
}

impl Eq for Tableau {}

impl Hash for Tableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.shape.hash(state);
        self.value_rows().hash(state);
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.value_rows().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            let mut first = true;
            for _ in 0..self.inner().part(i) {
                write!(f, "{}.", if first { "" } else { "," })?;
                first = false;
            }
            for v in row {
                write!(f, "{}{v}", if first { "" } else { "," })?;
                first = false;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[i64]) -> Partition {
        Partition::from_slice(x).unwrap()
    }

    fn skew(o: &[i64], i: &[i64]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn gt_from_rows() {
        let t = Tableau::from_rows(SkewShape::normal(p(&[2, 1])), &[vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.gt_rows(), vec![vec![0, 2, 2], vec![0, 0, 1]]);
        assert_eq!(t.to_string(), "[[1,1],[2]]");
    }

    #[test]
    fn skew_and_violations() {
        let a0 = Tableau::from_rows(skew(&[2, 1], &[1]), &[vec![1], vec![2]]).unwrap();
        assert_eq!(a0.to_string(), "[[.,1],[2]]");
        let err = Tableau::from_rows(SkewShape::normal(p(&[1, 1])), &[vec![1], vec![1]]).unwrap_err();
        assert_eq!(err, Error::ColumnOrderViolation { row: 2, col: 1 });
        let err = Tableau::from_rows(SkewShape::normal(p(&[2])), &[vec![2, 1]]).unwrap_err();
        assert_eq!(err, Error::RowOrderViolation { row: 1, col: 2 });
        assert!(matches!(
            Tableau::from_rows(SkewShape::normal(p(&[2])), &[vec![1]]),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn words_and_lr() {
        let t = |o: &[i64], i: &[i64], rows: &[Vec<i64>]| Tableau::from_rows(skew(o, i), rows).unwrap();
        assert_eq!(t(&[2, 1], &[], &[vec![1, 1], vec![2]]).word().0, vec![1, 1, 2]);
        assert_eq!(t(&[2, 1], &[1], &[vec![1], vec![2]]).word().0, vec![1, 2]);
        assert_eq!(t(&[2, 1], &[], &[vec![1, 2], vec![2]]).word().0, vec![2, 1, 2]);
        assert!(t(&[2, 1], &[1], &[vec![1], vec![2]]).is_lr());
        assert!(!t(&[2], &[1], &[vec![2]]).is_lr());
        assert!(Tableau::canonical(&p(&[3, 2])).is_lr());
    }

    #[test]
    fn canonical_tableaux() {
        assert_eq!(Tableau::canonical(&p(&[2, 1])).to_string(), "[[1,1],[2]]");
        assert_eq!(Tableau::canonical(&p(&[3, 3, 1])).to_string(), "[[1,1,1],[2,2,2],[3]]");
        let e = Tableau::canonical(&Partition::empty());
        assert!(e.is_empty());
        assert_eq!(e, Tableau::empty(&Partition::empty()));
    }

    #[test]
    fn recording_round_trip() {
        let t = Tableau::canonical(&p(&[2, 1]));
        assert_eq!(t.recording_matrix(), vec![vec![2, 0], vec![0, 1]]);
        let back = Tableau::from_recording(t.shape().clone(), 2, &t.recording_matrix()).unwrap();
        assert_eq!(back, t);
        let bad = Tableau::from_recording(SkewShape::normal(p(&[1, 1])), 2, &[vec![0, 1], vec![1, 0]]);
        assert!(matches!(bad, Err(Error::NotATableau(_))));
    }

    #[test]
    fn equality_ignores_range() {
        let t = Tableau::canonical(&p(&[2, 1]));
        let w = t.with_range(4).unwrap();
        assert_eq!(t, w);
        assert_eq!(w.weight(), vec![2, 1, 0, 0]);
        assert!(t.with_range(1).is_err());
    }

    #[test]
    fn entries() {
        let t = Tableau::from_rows(skew(&[3, 2], &[1]), &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(t.entry(0, 0), None);
        assert_eq!(t.entry(0, 2), Some(2));
        assert_eq!(t.entry(1, 0), Some(2));
        assert_eq!(t.weight(), vec![1, 2, 1]);
        assert_eq!(t.min_entry(), Some(1));
        assert_eq!(t.max_entry(), 3);
    }
}

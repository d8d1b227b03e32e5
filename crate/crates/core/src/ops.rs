//! Structural operations: relabelling, splitting, attachment, composition, rotation.

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

impl Tableau {
    /// Adds `d` to every entry. The value range moves by `d` as well.
    pub fn shift_values(&self, d: i64) -> Result<Tableau> {
        let k = self.range() as i64;
        if let Some(min) = self.min_entry() {
            if min + d < 1 {
                return Err(Error::UnderflowBelowOne);
            }
        }
        let new_k = (k + d).max(0);
        let new_k = new_k.max(self.max_entry() + d).max(0) as usize;
        let mut gt = Vec::with_capacity(self.rows() * (new_k + 1));
        for i in 0..self.rows() {
            for j in 0..=new_k as i64 {
                let src = j - d;
                gt.push(if src <= 0 { self.inner().part(i) } else { self.gt(i, src as usize) });
            }
        }
        Ok(Tableau::from_gt_unchecked(self.shape().clone(), new_k, gt))
    }

    /// `(T_{<=r}, T_{>r})`; the second part keeps its labels and the full range.
    pub fn split_at_value(&self, r: usize) -> (Tableau, Tableau) {
        let r_eff = r.min(self.range());
        let mid = Partition::new((0..self.rows()).map(|i| self.gt(i, r_eff)).collect())
            .expect("GT column is a partition");
        let low_shape = SkewShape { outer: mid.clone(), inner: self.inner().clone() };
        let mut low = Vec::with_capacity(low_shape.rows() * (r + 1));
        for i in 0..low_shape.rows() {
            for j in 0..=r {
                low.push(self.gt(i, j));
            }
        }
        let high_shape = SkewShape { outer: self.outer().clone(), inner: mid };
        let k = self.range().max(r);
        let mut high = Vec::with_capacity(self.rows() * (k + 1));
        for i in 0..self.rows() {
            let base = self.gt(i, r_eff);
            for j in 0..=k {
                high.push(self.gt(i, j).max(base));
            }
        }
        (
            Tableau::from_gt_unchecked(low_shape, r, low),
            Tableau::from_gt_unchecked(high_shape, k, high),
        )
    }

    /// The rows `start..end` as a tableau of their own, same range.
    pub fn restrict_rows(&self, start: usize, end: usize) -> Result<Tableau> {
        let end = end.min(self.rows());
        let pick = |p: &Partition| (start..end).map(|i| p.part(i)).collect::<Vec<_>>();
        let shape = SkewShape::new(Partition::new(pick(self.outer()))?, Partition::new(pick(self.inner()))?)?;
        let mut gt = Vec::with_capacity(shape.rows() * (self.range() + 1));
        for i in start..start + shape.rows() {
            gt.extend_from_slice(self.gt_row(i));
        }
        Ok(Tableau::from_gt_unchecked(shape, self.range(), gt))
    }

    /// `T1 ★ T2` where `T1` lies on `μ/ν` and `T2` on `λ/μ`.
    pub fn attach(t1: &Tableau, t2: &Tableau) -> Result<Tableau> {
        if t1.outer() != t2.inner() {
            return Err(Error::ShapeMismatch(format!(
                "outer shape {} does not match inner shape {}",
                t1.outer(),
                t2.inner()
            )));
        }
        let shape = SkewShape { outer: t2.outer().clone(), inner: t1.inner().clone() };
        let range = t1.range().max(t2.range());
        Tableau::assemble(shape, range, &[(t1, 0, 0), (t2, 0, 0)]).map_err(|e| match e {
            Error::RowOrderViolation { row, col } | Error::ColumnOrderViolation { row, col } => {
                Error::OrderViolation { row, col }
            }
            e => e,
        })
    }

    /// Builds a tableau on `shape` whose cells are covered exactly once by the translated
    /// pieces `(tableau, row offset, column offset)`.
    pub fn assemble(shape: SkewShape, range: usize, pieces: &[(&Tableau, usize, i64)]) -> Result<Tableau> {
        let l = shape.rows();
        let mut grid: Vec<Vec<i64>> = (0..l).map(|i| vec![0; shape.row_len(i) as usize]).collect();
        for &(t, dr, dc) in pieces {
            for (i, row) in t.value_rows().into_iter().enumerate() {
                let ti = i + dr;
                let start = t.inner().part(i) + dc;
                for (c, v) in row.into_iter().enumerate() {
                    let col = start + c as i64;
                    let slot = (ti < l)
                        .then(|| col - shape.inner.part(ti))
                        .filter(|&x| x >= 0 && col < shape.outer.part(ti))
                        .map(|x| &mut grid[ti][x as usize]);
                    match slot {
                        Some(cell) if *cell == 0 => *cell = v,
                        _ => {
                            return Err(Error::ShapeMismatch(format!(
                                "cell ({},{}) is outside the frame or covered twice",
                                ti + 1,
                                col + 1
                            )))
                        }
                    }
                }
            }
        }
        if let Some((i, c)) = grid
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|&v| v == 0).map(|c| (i, c)))
        {
            return Err(Error::ShapeMismatch(format!(
                "cell ({},{}) is not covered",
                i + 1,
                shape.inner.part(i) + c as i64 + 1
            )));
        }
        Tableau::from_rows_with_range(shape, &grid, range)
    }

    /// `lower ∘_{a,b} upper`: `upper` (on `λ/μ`) is placed `a` columns to the right and
    /// `b` empty rows above `lower` (on `ν/τ`). The empty rows have length `ν_1`.
    pub fn compose(lower: &Tableau, upper: &Tableau, a: i64, b: usize) -> Result<Tableau> {
        let nu1 = lower.outer().first();
        if a < nu1 {
            return Err(Error::OffsetTooSmall(format!("offset {a} is below {nu1}")));
        }
        let l = upper.rows();
        let mut outer: Vec<i64> = (0..l).map(|i| upper.outer().part(i) + a).collect();
        let mut inner: Vec<i64> = (0..l).map(|i| upper.inner().part(i) + a).collect();
        outer.extend(std::iter::repeat_n(nu1, b));
        inner.extend(std::iter::repeat_n(nu1, b));
        outer.extend_from_slice(&lower.outer().padded(lower.rows()));
        inner.extend_from_slice(&lower.inner().padded(lower.rows()));
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        let range = lower.range().max(upper.range());
        Tableau::assemble(shape, range, &[(upper, 0, a), (lower, l + b, 0)])
    }

    /// `lower ∘ upper`, i.e. `∘_{ν_1, 0}`.
    pub fn compose_default(lower: &Tableau, upper: &Tableau) -> Result<Tableau> {
        Tableau::compose(lower, upper, lower.outer().first(), 0)
    }

    /// Rotation by 180 degrees inside the box `width^height`, entries `v -> k+1-v`.
    pub fn rotate_in_box(&self, width: i64, height: usize) -> Result<Tableau> {
        if self.outer().first() > width || self.rows() > height {
            return Err(Error::ShapeMismatch(format!("{} does not fit in a {width}x{height} box", self.shape())));
        }
        let k = self.range();
        let flip = |p: &Partition| -> Result<Partition> {
            Partition::new((0..height).map(|i| width - p.part(height - 1 - i)).collect())
        };
        let shape = SkewShape::new(flip(self.inner())?, flip(self.outer())?)?;
        let c: Vec<Vec<i64>> = (0..height)
            .map(|i| (1..=k).map(|j| self.count(height - 1 - i, k + 1 - j)).collect())
            .collect();
        Tableau::from_recording(shape, k, &c)
    }

    /// `A•` for a normal-shape tableau: shape `r^ℓ/(r-λ_ℓ,...,r-λ_1)`.
    pub fn rotate180(&self) -> Result<Tableau> {
        if !self.is_normal() {
            return Err(Error::SkewInputNotSupported("rotate180"));
        }
        self.rotate_in_box(self.outer().first(), self.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[i64]) -> Partition {
        Partition::from_slice(x).unwrap()
    }

    fn t(o: &[i64], i: &[i64], rows: &[Vec<i64>]) -> Tableau {
        Tableau::from_rows(SkewShape::new(p(o), p(i)).unwrap(), rows).unwrap()
    }

    #[test]
    fn shifting() {
        let one = t(&[1], &[], &[vec![1]]);
        assert_eq!(one.shift_values(2).unwrap(), t(&[1], &[], &[vec![3]]));
        assert_eq!(one.shift_values(2).unwrap().range(), 3);
        assert_eq!(one.shift_values(0).unwrap(), one);
        assert_eq!(one.shift_values(-1), Err(Error::UnderflowBelowOne));
        let three = t(&[1], &[], &[vec![3]]);
        assert_eq!(three.shift_values(-2).unwrap(), one);
        assert_eq!(three.shift_values(-2).unwrap().range(), 1);
    }

    #[test]
    fn splitting() {
        let x = t(&[2, 1], &[], &[vec![1, 2], vec![2]]);
        let (lo, hi) = x.split_at_value(1);
        assert_eq!(lo, t(&[1], &[], &[vec![1]]));
        assert_eq!(hi, t(&[2, 1], &[1], &[vec![2], vec![2]]));
        assert_eq!(Tableau::attach(&lo, &hi).unwrap(), x);
        let (all, none) = x.split_at_value(2);
        assert_eq!(all, x);
        assert!(none.is_empty());
        let (none, all) = x.split_at_value(0);
        assert!(none.is_empty());
        assert_eq!(all, x);
    }

    #[test]
    fn attaching() {
        let can1 = Tableau::canonical(&p(&[1]));
        let upper = t(&[2, 1], &[1], &[vec![2], vec![2]]);
        assert_eq!(Tableau::attach(&can1, &upper).unwrap().to_string(), "[[1,2],[2]]");
        let e = Tableau::empty(&p(&[1]));
        assert_eq!(Tableau::attach(&e, &upper).unwrap(), upper);
        assert!(matches!(Tableau::attach(&upper, &upper), Err(Error::ShapeMismatch(_))));
        let bad = t(&[2, 1], &[1], &[vec![1], vec![1]]);
        assert!(matches!(Tableau::attach(&can1, &bad), Err(Error::OrderViolation { .. })));
    }

    #[test]
    fn composing() {
        let one = t(&[1], &[], &[vec![1]]);
        assert_eq!(Tableau::compose(&one, &one, 1, 0).unwrap().to_string(), "[[.,1],[1]]");
        let c11 = Tableau::canonical(&p(&[1, 1]));
        let c2 = Tableau::canonical(&p(&[2]));
        let stacked = Tableau::compose(&c11, &c2, 1, 0).unwrap();
        assert_eq!(stacked.to_string(), "[[.,1,1],[1],[2]]");
        assert_eq!(stacked.outer(), &p(&[3, 1, 1]));
        let gapped = Tableau::compose(&c11, &c2, 1, 2).unwrap();
        assert_eq!(gapped.outer(), &p(&[3, 1, 1, 1, 1]));
        assert_eq!(gapped.inner(), &p(&[1, 1, 1]));
        assert_eq!(gapped.to_string(), "[[.,1,1],[.],[.],[1],[2]]");
        let e = Tableau::empty(&Partition::empty());
        assert_eq!(Tableau::compose(&e, &c2, 0, 0).unwrap(), c2);
        assert!(matches!(Tableau::compose(&c2, &c2, 1, 0), Err(Error::OffsetTooSmall(_))));
    }

    #[test]
    fn rotation() {
        let r = Tableau::canonical(&p(&[2, 1])).rotate180().unwrap();
        assert_eq!(r.to_string(), "[[.,1],[2,2]]");
        assert_eq!(r.outer(), &p(&[2, 2]));
        let one = Tableau::canonical(&p(&[1]));
        assert_eq!(one.rotate180().unwrap(), one);
        let row = t(&[2], &[], &[vec![1, 1]]);
        assert_eq!(row.rotate180().unwrap(), row);
        assert_eq!(r.rotate_in_box(2, 2).unwrap(), Tableau::canonical(&p(&[2, 1])));
        assert!(matches!(r.rotate180(), Err(Error::SkewInputNotSupported(_))));
    }
}

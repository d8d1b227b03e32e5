//! Brute-force reference algorithms working on explicit fillings.
//!
//! Nothing here calls the GT-pattern maps; these are the independent references the
//! fast maps are checked against.

pub mod enumerate;
pub mod probes;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

pub use enumerate::{
    enumerate_lr, enumerate_tableaux, lr_coefficient, partitions, partitions_up_to, subpartitions,
    EnumerationBounds,
};

fn normal(rows: &[Vec<i64>], range: usize) -> Tableau {
    let outer = Partition::new(rows.iter().map(|r| r.len() as i64).collect()).expect("row lengths decrease");
    Tableau::from_rows_with_range(SkewShape::normal(outer), rows, range).expect("oracle builds a tableau")
}

/// Filling-level Bender-Knuth move.
pub fn naive_bk(a: &Tableau, r: usize) -> Result<Tableau> {
    if r == 0 || r >= a.range() {
        return Err(Error::IndexOutOfRange { index: r, range: a.range() });
    }
    let (r, s) = (r as i64, r as i64 + 1);
    let mut out = a.value_rows();
    for i in 0..a.rows() {
        let mu = a.inner().part(i);
        let mut free = Vec::new();
        let (mut na, mut nb) = (0, 0);
        for (c, &v) in out[i].iter().enumerate() {
            let col = mu + c as i64;
            if v == r && a.entry(i + 1, col) != Some(s) {
                free.push(c);
                na += 1;
            } else if v == s && (i == 0 || a.entry(i - 1, col) != Some(r)) {
                free.push(c);
                nb += 1;
            }
        }
        for (n, &c) in free.iter().enumerate() {
            out[i][c] = if n < nb { r } else { s };
        }
        debug_assert_eq!(na + nb, free.len());
    }
    Tableau::from_rows_with_range(a.shape().clone(), &out, a.range())
}

/// Order in which inner corners are chosen for sliding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerOrder {
    TopFirst,
    BottomFirst,
}

/// Rectification by square moves, top inner corner first.
pub fn naive_jdt(a: &Tableau) -> Tableau {
    naive_jdt_with(a, CornerOrder::TopFirst)
}

pub fn naive_jdt_with(a: &Tableau, order: CornerOrder) -> Tableau {
    // 0 marks an inner cell or the hole.
    let mut rows: Vec<Vec<i64>> = (0..a.rows())
        .map(|i| {
            let mut r = vec![0; a.inner().part(i) as usize];
            r.extend(a.value_rows()[i].iter());
            r
        })
        .collect();
    let mut inner: Vec<usize> = (0..a.rows()).map(|i| a.inner().part(i) as usize).collect();
    loop {
        let corners: Vec<usize> = (0..rows.len())
            .filter(|&i| inner[i] > 0 && inner.get(i + 1).copied().unwrap_or(0) < inner[i])
            .collect();
        let Some(&ci) = (match order {
            CornerOrder::TopFirst => corners.first(),
            CornerOrder::BottomFirst => corners.last(),
        }) else {
            break;
        };
        inner[ci] -= 1;
        let (mut i, mut c) = (ci, inner[ci]);
        loop {
            let right = rows[i].get(c + 1).copied();
            let below = rows.get(i + 1).and_then(|r| r.get(c)).copied();
            match (right, below) {
                (None, None) => {
                    rows[i].pop();
                    break;
                }
                (Some(x), Some(y)) if y <= x => {
                    rows[i][c] = y;
                    i += 1;
                }
                (None, Some(y)) => {
                    rows[i][c] = y;
                    i += 1;
                }
                (Some(x), _) => {
                    rows[i][c] = x;
                    c += 1;
                }
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
            inner.pop();
        }
    }
    normal(&rows, a.range())
}

/// Schützenberger evacuation of a normal-shape tableau: empty the corner cell, slide the
/// hole out, and record `m + 1 - v` where the hole leaves.
pub fn naive_evacuation(a: &Tableau) -> Result<Tableau> {
    if !a.is_normal() {
        return Err(Error::SkewInputNotSupported("naive_evacuation"));
    }
    let m = a.range() as i64;
    let mut rows = a.value_rows();
    let mut out: Vec<Vec<i64>> = rows.iter().map(|r| vec![0; r.len()]).collect();
    while rows.first().is_some_and(|r| !r.is_empty()) {
        let v = rows[0][0];
        let (mut i, mut c) = (0, 0);
        loop {
            let right = rows[i].get(c + 1).copied();
            let below = rows.get(i + 1).and_then(|r| r.get(c)).copied();
            match (right, below) {
                (None, None) => break,
                (Some(x), Some(y)) if y <= x => {
                    rows[i][c] = y;
                    i += 1;
                }
                (None, Some(y)) => {
                    rows[i][c] = y;
                    i += 1;
                }
                (Some(x), _) => {
                    rows[i][c] = x;
                    c += 1;
                }
            }
        }
        rows[i].pop();
        out[i][c] = m + 1 - v;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
    }
    Tableau::from_rows_with_range(a.shape().clone(), &out, a.range())
}

fn row_insert(p: &mut Vec<Vec<i64>>, mut x: i64) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

/// Row-insertion RSK of the lexicographically sorted biword of `V`.
pub fn naive_rsk(v: &IntMatrix) -> (Tableau, Tableau) {
    let k = v.k();
    let mut p: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for _ in 0..v.get(i, j) {
                let r = row_insert(&mut p, j as i64 + 1);
                if r == q.len() {
                    q.push(Vec::new());
                }
                q[r].push(i as i64 + 1);
            }
        }
    }
    (normal(&p, k), normal(&q, k))
}

/// Reverse row insertion: the matrix `V` with `naive_rsk(V) = (B, A)`.
pub fn rsk_inverse(b: &Tableau, a: &Tableau) -> Result<IntMatrix> {
    if !b.is_normal() || b.shape() != a.shape() {
        return Err(Error::NotInImage("tableaux must share a normal shape".into()));
    }
    let k = b.range().max(a.range());
    let mut p = b.value_rows();
    let mut q = a.value_rows();
    let mut v = IntMatrix::zeros(k);
    while let Some(top) = q.iter().flatten().copied().max() {
        // Rightmost occurrence of the largest recording entry is a corner.
        let (mut r, _) = q
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row.last().filter(|&&x| x == top).map(|_| (r, row.len())))
            .max_by_key(|&(_, len)| len)
            .expect("largest entry sits at a row end");
        q[r].pop();
        let mut x = p[r].pop().expect("same shape");
        while r > 0 {
            r -= 1;
            let c = p[r].iter().rposition(|&y| y < x).ok_or_else(|| Error::NotInImage("reverse bump failed".into()))?;
            x = std::mem::replace(&mut p[r][c], x);
        }
        let (i, j) = (top as usize - 1, x as usize - 1);
        v.set(i, j, v.get(i, j) + 1);
        while q.last().is_some_and(|row| row.is_empty()) {
            q.pop();
            p.pop();
        }
    }
    let (b2, a2) = naive_rsk(&v);
    if &b2 != b || &a2 != a {
        return Err(Error::NotInImage("pair is not an RSK image".into()));
    }
    Ok(v)
}

fn column_insert(cols: &mut Vec<Vec<i64>>, mut x: i64) -> usize {
    for (c, col) in cols.iter_mut().enumerate() {
        match col.iter().position(|&y| y >= x) {
            Some(r) => x = std::mem::replace(&mut col[r], x),
            None => {
                col.push(x);
                return col.len() - 1;
            }
        }
        let _ = c;
    }
    cols.push(vec![x]);
    0
}

/// Burge correspondence by column insertion: pairs sorted with the row index
/// increasing and, within a row, the column index decreasing.
pub fn naive_burge(v: &IntMatrix) -> (Tableau, Tableau) {
    let k = v.k();
    let mut p_cols: Vec<Vec<i64>> = Vec::new();
    let mut q_rows: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        for j in (0..k).rev() {
            for _ in 0..v.get(i, j) {
                let r = column_insert(&mut p_cols, j as i64 + 1);
                if r == q_rows.len() {
                    q_rows.push(Vec::new());
                }
                q_rows[r].push(i as i64 + 1);
            }
        }
    }
    let height = p_cols.first().map_or(0, |c| c.len());
    let p_rows: Vec<Vec<i64>> =
        (0..height).map(|r| p_cols.iter().filter_map(|c| c.get(r).copied()).collect()).collect();
    (normal(&p_rows, k), normal(&q_rows, k))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Inner,
    Moving(i64),
    Fixed(i64),
    Placed(i64),
}

/// Tableau switching by sliding the outer tableau into the cells of the inner one,
/// largest entries (rightmost first) processed first.
pub fn naive_switch(b: &Tableau, a: &Tableau) -> Result<(Tableau, Tableau)> {
    if b.outer() != a.inner() {
        return Err(Error::ShapeMismatch("outer shape of B must be the inner shape of A".into()));
    }
    let l = a.rows();
    let mut grid: Vec<Vec<Cell>> = (0..l).map(|i| vec![Cell::Inner; a.outer().part(i) as usize]).collect();
    let mut order = Vec::new();
    for (i, row) in b.value_rows().into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            let col = (b.inner().part(i) as usize) + c;
            grid[i][col] = Cell::Moving(v);
            order.push((v, col, i));
        }
    }
    for (i, row) in a.value_rows().into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            grid[i][(a.inner().part(i) as usize) + c] = Cell::Fixed(v);
        }
    }
    order.sort_by(|x, y| y.0.cmp(&x.0).then(y.1.cmp(&x.1)));
    for (v, col, row) in order {
        let (mut i, mut c) = (row, col);
        loop {
            let right = match grid[i].get(c + 1) {
                Some(&Cell::Fixed(x)) => Some(x),
                _ => None,
            };
            let below = match grid.get(i + 1).and_then(|r| r.get(c)) {
                Some(&Cell::Fixed(x)) => Some(x),
                _ => None,
            };
            match (right, below) {
                (None, None) => break,
                (Some(x), Some(y)) if y <= x => {
                    grid[i][c] = Cell::Fixed(y);
                    i += 1;
                }
                (None, Some(y)) => {
                    grid[i][c] = Cell::Fixed(y);
                    i += 1;
                }
                (Some(x), _) => {
                    grid[i][c] = Cell::Fixed(x);
                    c += 1;
                }
            }
        }
        grid[i][c] = Cell::Placed(v);
    }
    let sigma = Partition::new(
        grid.iter()
            .map(|row| row.iter().filter(|c| matches!(c, Cell::Inner | Cell::Fixed(_))).count() as i64)
            .collect(),
    )?;
    let pick = |f: fn(&Cell) -> Option<i64>| -> Vec<Vec<i64>> {
        grid.iter().map(|row| row.iter().filter_map(f).collect()).collect()
    };
    let a_rows = pick(|c| if let Cell::Fixed(x) = c { Some(*x) } else { None });
    let b_rows = pick(|c| if let Cell::Placed(x) = c { Some(*x) } else { None });
    let a2 = Tableau::from_rows_with_range(SkewShape::new(sigma.clone(), b.inner().clone())?, &a_rows, a.range())?;
    let b2 = Tableau::from_rows_with_range(SkewShape::new(a.outer().clone(), sigma)?, &b_rows, b.range())?;
    Ok((a2, b2))
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

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn bk_toggles_free_block() {
        let can = Tableau::canonical(&p(&[2, 1]));
        assert_eq!(naive_bk(&can, 1).unwrap().to_string(), "[[1,2],[2]]");
        let x = t(&[4, 1], &[], &[vec![1, 1, 1, 2], vec![2]]);
        assert_eq!(naive_bk(&x, 1).unwrap().to_string(), "[[1,1,2,2],[2]]");
    }

    #[test]
    fn jdt_small() {
        assert_eq!(naive_jdt(&t(&[2, 1], &[1], &[vec![1], vec![2]])).to_string(), "[[1],[2]]");
        assert_eq!(naive_jdt(&t(&[2, 1], &[1], &[vec![1], vec![1]])).to_string(), "[[1,1]]");
        let n = Tableau::canonical(&p(&[3, 1]));
        assert_eq!(naive_jdt(&n), n);
    }

    #[test]
    fn rsk_small() {
        let (b, a) = naive_rsk(&m(&[&[1, 0], &[0, 1]]));
        assert_eq!((b.to_string(), a.to_string()), ("[[1,2]]".into(), "[[1,2]]".into()));
        let (b, a) = naive_rsk(&m(&[&[0, 1], &[1, 0]]));
        assert_eq!((b.to_string(), a.to_string()), ("[[1],[2]]".into(), "[[1],[2]]".into()));
        let v = m(&[&[1, 1], &[0, 1]]);
        let (b, a) = naive_rsk(&v);
        assert_eq!((b.to_string(), a.to_string()), ("[[1,2,2]]".into(), "[[1,1,2]]".into()));
        assert_eq!(rsk_inverse(&b, &a).unwrap(), v);
    }

    #[test]
    fn burge_small() {
        let (b, _) = naive_burge(&m(&[&[1, 0], &[0, 1]]));
        assert_eq!(b.to_string(), "[[1],[2]]");
        let (b, a) = naive_burge(&m(&[&[3]]));
        assert_eq!((b.to_string(), a.to_string()), ("[[1,1,1]]".into(), "[[1,1,1]]".into()));
    }

    #[test]
    fn switch_small() {
        let (a2, b2) = naive_switch(&Tableau::canonical(&p(&[1])), &t(&[2, 1], &[1], &[vec![1], vec![1]])).unwrap();
        assert_eq!(a2.to_string(), "[[1,1]]");
        assert_eq!(b2.to_string(), "[[.,.],[1]]");
    }
}

//! Exhaustive enumeration of partitions, tableaux and LR tableaux.

use serde::{Deserialize, Serialize};

use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

/// Caps for exhaustive suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBounds {
    pub max_size: usize,
    pub max_length: usize,
    pub max_value: usize,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds { max_size: 6, max_length: 3, max_value: 4 }
    }
}

impl EnumerationBounds {
    pub fn extended() -> Self {
        EnumerationBounds { max_size: 8, max_length: 4, max_value: 4 }
    }

    /// Every skew shape `λ/μ` with `|λ| <= max_size`, `ℓ(λ) <= max_length`.
    pub fn skew_shapes(&self) -> Vec<SkewShape> {
        partitions_up_to(self.max_size, self.max_length)
            .into_iter()
            .flat_map(|l| subpartitions(&l).into_iter().map(move |m| SkewShape { outer: l.clone(), inner: m }))
            .collect()
    }

    /// Every tableau on every shape in [`Self::skew_shapes`] with entries `<= max_value`.
    pub fn tableaux(&self) -> Vec<Tableau> {
        self.skew_shapes().iter().flat_map(|s| enumerate_tableaux(s, self.max_value)).collect()
    }

    /// Every LR tableau `A ∈ LR(λ/μ, ν)` within the bounds.
    pub fn lr_tableaux(&self) -> Vec<Tableau> {
        let mut out = Vec::new();
        for s in self.skew_shapes() {
            let n = s.size() as usize;
            for nu in partitions(n, self.max_length) {
                out.extend(enumerate_lr(&s.outer, &s.inner, &nu));
            }
        }
        out
    }
}

/// Partitions of `n` with at most `max_len` parts, in decreasing lexicographic order.
pub fn partitions(n: usize, max_len: usize) -> Vec<Partition> {
    fn go(n: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_slice(cur).expect("decreasing"));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as i64, n as i64, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions(n, max_len)).collect()
}

/// Every `μ ⊂ λ`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::from_slice(cur).expect("decreasing"));
            return;
        }
        for p in 0..=lambda.part(i).min(cap) {
            cur.push(p);
            go(lambda, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, i64::MAX, &mut Vec::new(), &mut out);
    out
}

/// Every tableau in `YT(λ/μ; k)`, lexicographic in the row-major GT matrix.
pub fn enumerate_tableaux(shape: &SkewShape, k: usize) -> Vec<Tableau> {
    let l = shape.rows();
    let mut out = Vec::new();
    if k == 0 {
        if shape.size() == 0 {
            out.push(Tableau::empty(&shape.outer));
        }
        return out;
    }
    let mut gt = vec![0i64; l * (k + 1)];
    fill(shape, k, 0, 1, &mut gt, &mut out);
    out
}

fn fill(shape: &SkewShape, k: usize, i: usize, j: usize, gt: &mut Vec<i64>, out: &mut Vec<Tableau>) {
    let l = shape.rows();
    let w = k + 1;
    if i == l {
        let rows: Vec<Vec<i64>> = gt.chunks(w).map(|c| c.to_vec()).collect();
        out.push(Tableau::from_gt(shape.clone(), k, &rows).expect("enumerated pattern is valid"));
        return;
    }
    if j == 1 {
        gt[i * w] = shape.inner.part(i);
    }
    let lam = shape.outer.part(i);
    let above = |gt: &Vec<i64>, jj: usize| if i == 0 { i64::MAX } else { gt[(i - 1) * w + jj - 1] };
    if j == k {
        if lam >= gt[i * w + k - 1] && lam <= above(gt, k) {
            gt[i * w + k] = lam;
            fill(shape, k, i + 1, 1, gt, out);
        }
        return;
    }
    let lo = gt[i * w + j - 1];
    let hi = lam.min(above(gt, j));
    for x in lo..=hi {
        gt[i * w + j] = x;
        fill(shape, k, i, j + 1, gt, out);
    }
}

/// Every `A ∈ LR(λ/μ, ν)`, generated row by row with the lattice condition built in.
pub fn enumerate_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if !lambda.contains(mu) || lambda.size() - mu.size() != nu.size() {
        return out;
    }
    let shape = SkewShape { outer: lambda.clone(), inner: mu.clone() };
    let k = nu.len();
    let l = lambda.len();
    let mut c = vec![vec![0i64; k + 1]; l];
    let mut totals = vec![0i64; k + 2];
    lr_row(&shape, nu, 0, 1, &mut c, &mut totals, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn lr_row(
    shape: &SkewShape,
    nu: &Partition,
    i: usize,
    j: usize,
    c: &mut Vec<Vec<i64>>,
    totals: &mut Vec<i64>,
    out: &mut Vec<Tableau>,
) {
    let l = shape.rows();
    let k = nu.len();
    if i == l {
        if (1..=k).all(|j| totals[j] == nu.part(j - 1)) {
            let rec: Vec<Vec<i64>> = c.iter().map(|r| r[1..].to_vec()).collect();
            out.push(Tableau::from_recording(shape.clone(), k, &rec).expect("LR filling is a tableau"));
        }
        return;
    }
    let len = shape.row_len(i);
    let used: i64 = c[i][1..j].iter().sum();
    let top = k.min(i + 1);
    if j > top {
        if used != len {
            return;
        }
        // Row i is read right to left, so its q's precede its (q-1)'s.
        if (2..=top).all(|q| totals[q] + c[i][q] <= totals[q - 1]) {
            for q in 1..=top {
                totals[q] += c[i][q];
            }
            lr_row(shape, nu, i + 1, 1, c, totals, out);
            for q in 1..=top {
                totals[q] -= c[i][q];
            }
        }
        return;
    }
    let a_prev = shape.inner.part(i) + used;
    let above = if i == 0 { i64::MAX } else { shape.inner.part(i - 1) + c[i - 1][1..j].iter().sum::<i64>() };
    let cap = (len - used).min(above - a_prev).min(nu.part(j - 1) - totals[j]);
    if cap < 0 {
        return;
    }
    let choices = if j == top {
        if len - used > cap {
            return;
        }
        (len - used)..=(len - used)
    } else {
        0..=cap
    };
    for x in choices {
        c[i][j] = x;
        lr_row(shape, nu, i, j + 1, c, totals, out);
    }
    c[i][j] = 0;
}

pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    enumerate_lr(lambda, mu, nu).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(x: &[i64]) -> Partition {
        Partition::from_slice(x).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5, 5).len(), 7);
        assert_eq!(partitions(5, 2).len(), 3);
        assert_eq!(partitions(0, 0).len(), 1);
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
    }

    #[test]
    fn small_tableau_lists() {
        let ts = enumerate_tableaux(&SkewShape::normal(p(&[2, 1])), 2);
        let shown: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        // Lexicographic on GT rows: (0,1,2) precedes (0,2,2).
        assert_eq!(shown, vec!["[[1,2],[2]]", "[[1,1],[2]]"]);
        assert_eq!(enumerate_tableaux(&SkewShape::normal(p(&[1])), 3).len(), 3);
        assert_eq!(enumerate_tableaux(&SkewShape::normal(p(&[2, 2])), 2).len(), 1);
        // Kostka-free check: semistandard tableaux of shape (2,1) with entries <= 3.
        assert_eq!(enumerate_tableaux(&SkewShape::normal(p(&[2, 1])), 3).len(), 8);
    }

    #[test]
    fn lr_matches_filtered_enumeration() {
        let b = EnumerationBounds { max_size: 6, max_length: 3, max_value: 3 };
        for s in b.skew_shapes() {
            let n = s.size() as usize;
            let all = enumerate_tableaux(&s, 3);
            for nu in partitions(n, 3) {
                let direct: HashSet<Tableau> = enumerate_lr(&s.outer, &s.inner, &nu).into_iter().collect();
                let filtered: HashSet<Tableau> =
                    all.iter().filter(|t| t.is_lr_of_weight(&nu)).cloned().collect();
                assert_eq!(direct, filtered, "shape {s} weight {nu}");
            }
        }
    }

    #[test]
    fn small_lr_coefficients() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[3])), 0);
    }
}

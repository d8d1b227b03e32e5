//! Bit sizes `⟨D⟩ = n·⌈log₂(m+1)⌉` of the integer arrays that encode values.
//!
//! A tableau is stored by its recording matrix, either densely (only the entries the
//! shape does not force to zero) or as nonzero triples, whichever is shorter. Matrices
//! are stored as nonzero triples, plane functions cellwise.

use crate::bijections::PlaneFunction;
use crate::matrix::IntMatrix;
use crate::tableau::Tableau;

/// `n·⌈log₂(m+1)⌉` with `m` the largest entry; every entry takes at least one bit.
pub fn array_bits(d: &[i64]) -> u64 {
    let m = d.iter().copied().max().unwrap_or(0).max(1) as u64;
    let width = 64 - m.leading_zeros() as u64;
    d.len() as u64 * width
}

/// The integer array a tableau is stored as: whichever of the dense and sparse forms
/// takes fewer bits, behind a tag.
pub fn tableau_array(t: &Tableau) -> Vec<i64> {
    let (dense, sparse) = (dense_array(t), sparse_array(t));
    if array_bits(&dense) <= array_bits(&sparse) {
        dense
    } else {
        sparse
    }
}

/// `[0, k, rows, μ padded to rows, band]`, where row `i` lists `c_{i,j}` for every `j`
/// from `1 + #{r < i : μ_r <= μ_i}` (the cells stacked above its first cell) to `k`.
fn dense_array(t: &Tableau) -> Vec<i64> {
    let inner = t.inner();
    let mut d = vec![0, t.range() as i64, t.rows() as i64];
    d.extend((0..t.rows()).map(|i| inner.part(i)));
    for i in 0..t.rows() {
        let stacked = (0..i).filter(|&r| inner.part(r) <= inner.part(i)).count();
        d.extend((stacked + 1..=t.range()).map(|j| t.count(i, j)));
    }
    d
}

/// `[1, k, ℓ(μ), μ]` and a triple `(i, j, c_{i,j})` per nonzero count.
fn sparse_array(t: &Tableau) -> Vec<i64> {
    let inner = t.inner().parts();
    let mut d = vec![1, t.range() as i64, inner.len() as i64];
    d.extend_from_slice(inner);
    for i in 0..t.rows() {
        for j in 1..=t.range() {
            let c = t.count(i, j);
            if c != 0 {
                d.extend([i as i64 + 1, j as i64, c]);
            }
        }
    }
    d
}

/// The dimensions `k, k` and a triple `(i, j, v)` per nonzero entry.
pub fn matrix_array(v: &IntMatrix) -> Vec<i64> {
    let k = v.rows().len() as i64;
    let mut d = vec![k, k];
    for (i, row) in v.rows().iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                d.extend([i as i64 + 1, j as i64 + 1, x]);
            }
        }
    }
    d
}

pub fn tableau_bits(t: &Tableau) -> u64 {
    array_bits(&tableau_array(t))
}

pub fn matrix_bits(v: &IntMatrix) -> u64 {
    array_bits(&matrix_array(v))
}

pub fn plane_bits(f: &PlaneFunction) -> u64 {
    array_bits(&f.values.concat())
}

/// Bits of the GT pattern, the encoding used for storage.
pub fn gt_bits(t: &Tableau) -> u64 {
    array_bits(&t.gt_rows().concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn widths() {
        assert_eq!(array_bits(&[1, 0, 1]), 3);
        assert_eq!(array_bits(&[3]), 2);
        assert_eq!(array_bits(&[4, 0]), 6);
        assert_eq!(array_bits(&[0, 0]), 2);
        assert_eq!(array_bits(&[]), 0);
    }

    #[test]
    fn sparse_matrix() {
        let m = IntMatrix::from_fn(2, |i, j| i64::from(i == 1 && j == 0) * 3);
        assert_eq!(matrix_array(&m), vec![2, 2, 2, 1, 3]);
    }

    #[test]
    fn shorter_form_wins() {
        let can = Tableau::canonical(&Partition::from_slice(&[3, 2, 1]).unwrap());
        assert_eq!(tableau_array(&can), vec![0, 3, 3, 0, 0, 0, 3, 0, 0, 2, 0, 1]);
        let empty = Tableau::empty(&Partition::from_slice(&[2, 1]).unwrap());
        assert_eq!(tableau_array(&empty), vec![0, 0, 2, 2, 1]);
        let one = Tableau::canonical(&Partition::from_slice(&[1]).unwrap()).shift_values(4).unwrap();
        assert_eq!(tableau_array(&one), vec![1, 5, 0, 1, 5, 1]);
    }
}

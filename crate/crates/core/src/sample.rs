//! Seeded random tableaux for fuzzing beyond the exhaustive bounds.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

/// Fills `shape` cell by cell in reading order, each entry uniform among the values
/// that still leave room for the cells below it.
pub fn random_tableau<R: Rng>(shape: &SkewShape, k: usize, rng: &mut R) -> Result<Tableau> {
    let (outer, inner) = (&shape.outer, &shape.inner);
    let conj = outer.conjugate();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(shape.rows());
    for i in 0..shape.rows() {
        let mu = inner.part(i) as usize;
        let mut row = Vec::with_capacity(shape.row_len(i) as usize);
        for col in mu..outer.part(i) as usize {
            let below = conj.part(col) - i as i64 - 1;
            let left = row.last().copied().unwrap_or(1);
            let above = if i > 0 && col >= inner.part(i - 1) as usize {
                rows[i - 1][col - inner.part(i - 1) as usize] + 1
            } else {
                1
            };
            let (lo, hi) = (left.max(above), k as i64 - below);
            if lo > hi {
                return Err(Error::IndexOutOfRange { index: (lo as usize).max(1), range: k });
            }
            row.push(rng.gen_range(lo..=hi));
        }
        rows.push(row);
    }
    Tableau::from_rows_with_range(shape.clone(), &rows, k)
}

/// A random skew shape with `|λ| <= max_size` and at most `max_length` rows.
pub fn random_shape<R: Rng>(max_size: usize, max_length: usize, rng: &mut R) -> SkewShape {
    let pick = |rng: &mut R, budget: i64, rows: usize| {
        let mut parts = Vec::new();
        let (mut left, mut cap) = (budget, budget);
        for _ in 0..rows {
            let p = rng.gen_range(0..=cap.min(left));
            parts.push(p);
            left -= p;
            cap = p;
        }
        Partition::new(parts).expect("parts decrease")
    };
    let outer = pick(rng, max_size as i64, max_length);
    let mut cap = i64::MAX;
    let cut: Vec<i64> = outer
        .parts()
        .iter()
        .map(|&p| {
            cap = rng.gen_range(0..=p.min(cap));
            cap
        })
        .collect();
    SkewShape::new(outer, Partition::new(cut).expect("parts decrease")).expect("inner fits")
}

/// `n` random tableaux from a fixed seed.
pub fn random_tableaux(seed: u64, n: usize, max_size: usize, max_length: usize, k: usize) -> Vec<Tableau> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let shape = random_shape(max_size, max_length, &mut rng);
        if let Ok(t) = random_tableau(&shape, k, &mut rng) {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible_and_valid() {
        let a = random_tableaux(7, 50, 12, 5, 6);
        assert_eq!(a, random_tableaux(7, 50, 12, 5, 6));
        assert!(a.iter().all(|t| t.range() == 6 && t.outer().len() <= 5 && t.outer().size() <= 12));
        assert!(a.iter().any(|t| t.size() >= 5));
    }

    #[test]
    fn tall_column_needs_room() {
        let shape = SkewShape::normal(Partition::from_slice(&[1, 1, 1]).unwrap());
        let mut rng = StdRng::seed_from_u64(1);
        assert!(random_tableau(&shape, 2, &mut rng).is_err());
        assert_eq!(random_tableau(&shape, 3, &mut rng).unwrap().to_string(), "[[1],[2],[3]]");
    }
}

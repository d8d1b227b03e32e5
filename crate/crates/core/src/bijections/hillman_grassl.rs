use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::Partition;
use crate::tableau::Tableau;

use super::rsk;

/// A nonnegative integer function on the cells of `[λ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneFunction {
    pub shape: Partition,
    pub values: Vec<Vec<i64>>,
}

impl PlaneFunction {
    pub fn new(shape: Partition, values: Vec<Vec<i64>>) -> Result<Self> {
        if values.len() != shape.len() || values.iter().enumerate().any(|(i, r)| r.len() as i64 != shape.part(i)) {
            return Err(Error::ShapeMismatch(format!("values do not fill {shape}")));
        }
        for (i, r) in values.iter().enumerate() {
            if let Some(j) = r.iter().position(|&x| x < 0) {
                return Err(Error::NegativeEntry { row: i + 1, col: j + 1 });
            }
        }
        Ok(PlaneFunction { shape, values })
    }

    pub fn zeros(shape: Partition) -> Self {
        let values = shape.parts().iter().map(|&m| vec![0; m as usize]).collect();
        PlaneFunction { shape, values }
    }

    /// `F(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.values[i][j]
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.values.len()).flat_map(move |i| (0..self.values[i].len()).map(move |j| (i, j)))
    }

    /// Diagonal contents `c = j - i` present in `[λ]`.
    pub fn contents(&self) -> std::ops::Range<i64> {
        1 - self.shape.len() as i64..self.shape.first()
    }

    /// `α_c`: the sum along diagonal `c`.
    pub fn alpha(&self, c: i64) -> i64 {
        self.cells().filter(|&(i, j)| j as i64 - i as i64 == c).map(|(i, j)| self.get(i, j)).sum()
    }

    /// `β_c`: the sum over the rectangle cornered at the last cell of diagonal `c`.
    pub fn beta(&self, c: i64) -> i64 {
        let Some((ci, cj)) = self.cells().filter(|&(i, j)| j as i64 - i as i64 == c).last() else {
            return 0;
        };
        self.cells().filter(|&(i, j)| i <= ci && j <= cj).map(|(i, j)| self.get(i, j)).sum()
    }

    /// Rows and columns weakly increase.
    pub fn is_reverse_plane_partition(&self) -> bool {
        self.cells().all(|(i, j)| {
            (j == 0 || self.get(i, j - 1) <= self.get(i, j)) && (i == 0 || self.get(i - 1, j) <= self.get(i, j))
        })
    }
}

impl fmt::Display for PlaneFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// Last cell `(i_c, j_c)` (1-based) of diagonal `c`.
fn corner(shape: &Partition, c: i64) -> (usize, usize) {
    (1..=shape.len()).rev().find_map(|i| {
        let j = i as i64 + c;
        (j >= 1 && j <= shape.part(i - 1)).then_some((i, j as usize))
    }).expect("diagonal meets the shape")
}

/// Whether the rectangle at the last cell of diagonal `c` is a row or column prefix
/// of the zero-filled square, so that the square RSK already knows its shape.
fn is_prefix_corner(shape: &Partition, c: i64) -> bool {
    let (i, j) = corner(shape, c);
    i == shape.len() || j as i64 == shape.first()
}

/// Number of RSK calls [`hillman_grassl`] makes on shape `λ`: one for the square plus one
/// per rim corner whose rectangle is neither a row nor a column prefix.
pub fn hillman_grassl_calls(shape: &Partition) -> usize {
    let k = (shape.first() as usize).max(shape.len());
    if k == 0 {
        return 0;
    }
    let inner = (1 - shape.len() as i64..shape.first()).filter(|&c| !is_prefix_corner(shape, c)).count();
    1 + inner
}

pub(crate) fn embed(f: &PlaneFunction, rows: usize, cols: usize, k: usize) -> IntMatrix {
    IntMatrix::from_fn(k, |i, j| {
        if i < rows && j < cols && i < f.values.len() && j < f.values[i].len() {
            f.get(i, j)
        } else {
            0
        }
    })
}

/// Builds `G` from `φ` of the zero-filled square, `(B, A)`. Diagonal `c`, read back from
/// its last cell `(i_c, j_c)`, is the RSK shape of the rectangle of `F` cornered there:
/// a column of `A`'s pattern when `j_c = λ_1`, of `B`'s when `i_c = ℓ(λ)`, and otherwise
/// the shape of `rect(i_c, j_c)`'s insertion tableau.
pub(crate) fn assemble(
    shape: &Partition,
    b: &Tableau,
    a: &Tableau,
    mut rect: impl FnMut(usize, usize) -> Result<Tableau>,
) -> Result<PlaneFunction> {
    let mut g = PlaneFunction::zeros(shape.clone());
    let (l, m) = (shape.len(), shape.first() as usize);
    for c in 1 - l as i64..m as i64 {
        let (ic, jc) = corner(shape, c);
        let (src, q) = if jc == m {
            (a.clone(), ic)
        } else if ic == l {
            (b.clone(), jc)
        } else {
            let p = rect(ic, jc)?;
            let q = p.range();
            (p, q)
        };
        for t in 0..ic.min(jc) {
            g.values[ic - 1 - t][jc - 1 - t] = src.gt(t, q);
        }
    }
    Ok(g)
}

/// Hillman-Grassl `θ_λ` via RSK on the zero-filled `k × k` square, `k = max(λ_1, ℓ(λ))`,
/// plus one RSK call per rim rectangle that is not a row or column prefix.
pub fn hillman_grassl(f: &PlaneFunction) -> Result<PlaneFunction> {
    let k = (f.shape.first() as usize).max(f.shape.len());
    let (b, a) = rsk(&embed(f, k, k, k))?;
    assemble(&f.shape, &b, &a, |i, j| Ok(rsk(&embed(f, i, j, k))?.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_on(shape: &Partition, max: i64) -> Vec<PlaneFunction> {
        let n = shape.size() as usize;
        let mut out = Vec::new();
        let mut digits = vec![0i64; n];
        loop {
            let mut it = digits.iter().copied();
            let values = shape.parts().iter().map(|&m| (0..m).map(|_| it.next().unwrap()).collect()).collect();
            out.push(PlaneFunction::new(shape.clone(), values).unwrap());
            let Some(p) = digits.iter().position(|&d| d < max) else { break };
            digits[p] += 1;
            digits[..p].iter_mut().for_each(|d| *d = 0);
        }
        out
    }

    #[test]
    fn corner_from_rim() {
        // Rectangle at (1,1) is no prefix of the 2x2 square: the single-call join would give 0 there.
        let f = PlaneFunction::new(Partition::from_slice(&[2, 1]).unwrap(), vec![vec![1, 0], vec![0]]).unwrap();
        assert_eq!(hillman_grassl(&f).unwrap().values, vec![vec![1, 1], vec![1]]);
        assert_eq!(hillman_grassl_calls(&Partition::from_slice(&[2, 1]).unwrap()), 2);
        assert_eq!(hillman_grassl_calls(&Partition::from_slice(&[3, 3]).unwrap()), 1);
    }

    #[test]
    fn trivial_cases() {
        let s = Partition::from_slice(&[3, 1]).unwrap();
        assert_eq!(hillman_grassl(&PlaneFunction::zeros(s.clone())).unwrap(), PlaneFunction::zeros(s));
        let one = Partition::from_slice(&[1]).unwrap();
        let f = PlaneFunction::new(one, vec![vec![5]]).unwrap();
        assert_eq!(hillman_grassl(&f).unwrap(), f);
    }

    #[test]
    fn sums_match_and_injective() {
        for shape in [[2, 1].as_slice(), &[2, 2], &[3, 1], &[1, 1, 1], &[3, 2, 1]] {
            let shape = Partition::from_slice(shape).unwrap();
            let max = if shape.size() > 4 { 1 } else { 2 };
            let mut seen = std::collections::HashSet::new();
            for f in all_on(&shape, max) {
                let g = hillman_grassl(&f).unwrap();
                assert!(g.is_reverse_plane_partition(), "{f} -> {g}");
                for c in f.contents() {
                    assert_eq!(g.alpha(c), f.beta(c), "{f} -> {g} at {c}");
                }
                assert!(seen.insert(g));
            }
        }
    }
}

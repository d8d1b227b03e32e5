//! Bender-Knuth moves on GT patterns and the words `z_m`, `t_{r,m-r}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// A product of generators `s_{r_1} s_{r_2} ... s_{r_N}` acting on range `m`.
/// The rightmost generator acts first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BkWord {
    pub indices: Vec<usize>,
    pub m: usize,
}

impl BkWord {
    pub fn new(indices: Vec<usize>, m: usize) -> Result<Self> {
        if let Some(&r) = indices.iter().find(|&&r| r == 0 || r >= m) {
            return Err(Error::IndexOutOfRange { index: r, range: m });
        }
        Ok(BkWord { indices, m })
    }

    /// Product `self · other` (so `other` acts first).
    pub fn times(&self, other: &BkWord) -> BkWord {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        BkWord { indices, m: self.m.max(other.m) }
    }

    /// The same generators with every index raised by `d`.
    pub fn shifted(&self, d: usize) -> BkWord {
        BkWord { indices: self.indices.iter().map(|r| r + d).collect(), m: self.m + d }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// `z_m = (s_1)(s_2 s_1)...(s_{m-1} ... s_1)`.
pub fn z_word(m: usize) -> BkWord {
    let mut indices = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for top in 1..m {
        indices.extend((1..=top).rev());
    }
    BkWord { indices, m }
}

/// `t_{r,s} = (s_s ... s_{m-1}) ... (s_2 ... s_{r+1})(s_1 ... s_r)` with `m = r + s`.
pub fn t_word(r: usize, s: usize) -> BkWord {
    let mut indices = Vec::with_capacity(r * s);
    for p in (1..=s).rev() {
        indices.extend(p..p + r);
    }
    BkWord { indices, m: r + s }
}

/// In-place Bender-Knuth move `s_r` on a flat GT buffer.
pub(crate) fn bk_in_place(gt: &mut [i64], rows: usize, k: usize, r: usize, infinity: i64) {
    let w = k + 1;
    for i in 0..rows {
        let up = if i == 0 { infinity } else { gt[(i - 1) * w + r - 1] };
        let down = if i + 1 < rows { gt[(i + 1) * w + r + 1] } else { 0 };
        let row = &mut gt[i * w..(i + 1) * w];
        row[r] = row[r + 1].min(up) + row[r - 1].max(down) - row[r];
    }
}

fn sentinel(a: &Tableau) -> i64 {
    a.outer().first() + a.outer().size() + 1
}

/// `s_r(A)` for `1 <= r < k`.
pub fn bk(a: &Tableau, r: usize) -> Result<Tableau> {
    if r == 0 || r >= a.range() {
        return Err(Error::IndexOutOfRange { index: r, range: a.range() });
    }
    let mut gt = a.gt_flat().to_vec();
    bk_in_place(&mut gt, a.rows(), a.range(), r, sentinel(a));
    Ok(Tableau::from_gt_unchecked(a.shape().clone(), a.range(), gt))
}

/// Applies `w` to `A`, rightmost generator first.
pub fn apply_bk_word(a: &Tableau, w: &BkWord) -> Result<Tableau> {
    let k = a.range();
    if let Some(&r) = w.indices.iter().find(|&&r| r == 0 || r >= k) {
        return Err(Error::IndexOutOfRange { index: r, range: k });
    }
    let mut gt = a.gt_flat().to_vec();
    let inf = sentinel(a);
    for &r in w.indices.iter().rev() {
        bk_in_place(&mut gt, a.rows(), k, r, inf);
    }
    Ok(Tableau::from_gt_unchecked(a.shape().clone(), k, gt))
}

//! Fundamental symmetry maps through companion tableaux, and the chain-removal map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{reversed, Partition, SkewShape};
use crate::tableau::{trim, Tableau};

use super::xi;

/// A triple `(μ, ν, λ)` naming the sets `LR(λ/μ, ν)`, `CF(μ, ν, λ)` and `CF*(μ, ν, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrTriple {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
}

fn lr_weight(a: &Tableau) -> Result<Partition> {
    if !a.is_lr() {
        return Err(Error::NotLittlewoodRichardson);
    }
    Partition::new(a.weight())
}

/// `γ`: `LR(λ/μ, ν) -> CF*(μ, ν, λ)`, the shape-`μ` tableau with
/// `d_{i,j} = a_{l-j+i, l-j} - a_{l-j+i+1, l-j+1}` read off the GT pattern.
pub fn gamma(a: &Tableau) -> Result<Tableau> {
    lr_weight(a)?;
    let l = a.rows();
    let mu = a.inner().clone();
    // a(p, q) with p 1-based; rows past l read 0.
    let g = |p: usize, q: usize| a.gt(p - 1, q);
    let d: Vec<Vec<i64>> = (1..=mu.len())
        .map(|i| (1..=l).map(|j| if j < i { 0 } else { g(l - j + i, l - j) - g(l - j + i + 1, l - j + 1) }).collect())
        .collect();
    Tableau::from_recording(SkewShape::normal(mu), l, &d)
}

/// Inverse of [`gamma`]; `λ` fixes the outer shape.
pub fn gamma_inverse(b: &Tableau, lambda: &Partition) -> Result<Tableau> {
    let l = lambda.len().max(b.range());
    if !b.is_normal() || b.rows() > l {
        return Err(Error::NotInImage(format!("{b} is not a companion of {lambda}")));
    }
    let d = |i: usize, j: usize| b.count(i - 1, j);
    let rows: Vec<Vec<i64>> = (1..=l)
        .map(|p| {
            (0..=l)
                .map(|q| {
                    if q >= p {
                        lambda.part(p - 1)
                    } else {
                        (0..=l - p).map(|t| d(p - q, l - q - t)).sum()
                    }
                })
                .collect()
        })
        .collect();
    let mut rows = rows;
    if rows[lambda.len()..].iter().flatten().any(|&x| x != 0) {
        return Err(Error::NotInImage(format!("{b} does not fit inside {lambda}")));
    }
    rows.truncate(lambda.len());
    let inner = Partition::new(rows.iter().map(|r| r[0]).collect())
        .map_err(|_| Error::NotInImage("inner shape is not a partition".into()))?;
    let shape = SkewShape::new(lambda.clone(), inner).map_err(|e| Error::NotInImage(e.to_string()))?;
    let a = Tableau::from_gt(shape, l, &rows).map_err(|e| Error::NotInImage(e.to_string()))?;
    if !a.is_lr() {
        return Err(Error::NotInImage("preimage is not LR".into()));
    }
    Ok(a)
}

/// `τ`: `LR(λ/μ, ν) -> CF(ν, μ, λ)`, with `e_{i,j} = c_{j,i}`.
pub fn tau(a: &Tableau) -> Result<Tableau> {
    let nu = lr_weight(a)?;
    let l = a.rows();
    let e: Vec<Vec<i64>> = (1..=nu.len()).map(|i| (1..=l).map(|j| a.count(j - 1, i)).collect()).collect();
    Tableau::from_recording(SkewShape::normal(nu), l, &e)
}

/// Inverse of [`tau`]; `μ` fixes the inner shape.
pub fn tau_inverse(b: &Tableau, mu: &Partition) -> Result<Tableau> {
    if !b.is_normal() {
        return Err(Error::NotInImage(format!("{b} is skew")));
    }
    let w = b.weight();
    let l = w.len().max(mu.len());
    let outer = Partition::new((0..l).map(|j| mu.part(j) + w.get(j).copied().unwrap_or(0)).collect())
        .map_err(|_| Error::NotInImage("outer shape is not a partition".into()))?;
    let c: Vec<Vec<i64>> = (1..=l).map(|j| (1..=b.rows()).map(|i| b.count(i - 1, j)).collect()).collect();
    let shape = SkewShape::new(outer, mu.clone())?;
    let a = Tableau::from_recording(shape, b.rows(), &c).map_err(|e| Error::NotInImage(e.to_string()))?;
    if !a.is_lr() {
        return Err(Error::NotInImage("preimage is not LR".into()));
    }
    Ok(a)
}

/// `ρ₂ = τ⁻¹ ∘ ξᴺ ∘ γ`.
pub fn rho2(a: &Tableau) -> Result<Tableau> {
    let nu = lr_weight(a)?;
    tau_inverse(&xi(&gamma(a)?)?, &nu)
}

/// `ρ₂′ = γ⁻¹ ∘ ξᴺ ∘ τ`.
pub fn rho2_prime(a: &Tableau) -> Result<Tableau> {
    gamma_inverse(&xi(&tau(a)?)?, a.outer())
}

/// Membership of `B` in `CF(μ, ν, λ)` (or `CF*` when `starred`).
pub fn lr_membership(b: &Tableau, ctx: &LrTriple, starred: bool) -> Result<bool> {
    if b.shape() != &SkewShape::normal(ctx.mu.clone()) {
        return Err(Error::ShapeMismatch(format!("{} is not the shape {}", b.shape(), ctx.mu)));
    }
    let l = ctx.lambda.len();
    if !ctx.lambda.contains(&ctx.nu) || b.max_entry() as usize > l {
        return Ok(false);
    }
    let diff: Vec<i64> = (0..l).map(|i| ctx.lambda.part(i) - ctx.nu.part(i)).collect();
    let want = if starred { reversed(&diff) } else { diff };
    let mut got = b.weight();
    got.resize(l.max(got.len()), 0);
    if trim(&got) != trim(&want) {
        return Ok(false);
    }
    let lower = if starred { b.with_range(l)?.rotate180()? } else { b.clone() };
    Ok(Tableau::compose_default(&lower, &Tableau::canonical(&ctx.nu))?.is_lr())
}

/// Recording matrix and per-row chain lengths of the chain-removal procedure.
struct ChainRun {
    v: Vec<Vec<i64>>,
    lengths: Vec<Vec<usize>>,
}

fn chain_removal(a: &Tableau) -> ChainRun {
    let l = a.rows();
    let mut rows: Vec<Vec<i64>> = a
        .value_rows()
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let mut full = vec![0; a.inner().part(i) as usize];
            full.extend(r);
            full
        })
        .collect();
    let mut v = vec![vec![0i64; l]; l];
    let mut lengths = vec![Vec::new(); l];
    for i in (1..=l).rev() {
        let mut used: Vec<Vec<bool>> = rows.iter().map(|r| vec![false; r.len()]).collect();
        let removed = rows[i - 1].clone();
        for pos in (0..removed.len()).rev() {
            let mut chain = vec![(i, pos)];
            let mut cur = removed[pos];
            let mut r = i;
            while r > 1 {
                let above = &rows[r - 2];
                let pick = (0..above.len())
                    .rev()
                    .filter(|&p| !used[r - 2][p] && above[p] < cur)
                    .max_by_key(|&p| (above[p], p));
                let Some(p) = pick else { break };
                used[r - 2][p] = true;
                cur = above[p];
                r -= 1;
                chain.push((r, p));
            }
            lengths[i - 1].push(chain.len());
            if cur == 0 {
                v[i - 1][r - 1] += 1;
                for t in (1..chain.len()).rev() {
                    let (from_row, from_pos) = chain[t - 1];
                    let (to_row, to_pos) = chain[t];
                    let x = rows[from_row - 1][from_pos];
                    if x as usize <= to_row {
                        rows[to_row - 1][to_pos] = x;
                    }
                }
            }
        }
        rows[i - 1].clear();
    }
    ChainRun { v, lengths }
}

/// `ρ₃`: the chain-removal symmetry `LR(λ/μ, ν) -> LR(λ/ν, μ)`.
pub fn rho3(a: &Tableau) -> Result<Tableau> {
    let nu = lr_weight(a)?;
    let run = chain_removal(a);
    let k = a.inner().len();
    let v: Vec<Vec<i64>> = run.v.iter().map(|r| r[..k].to_vec()).collect();
    let shape = SkewShape::new(a.outer().clone(), nu)?;
    Tableau::from_recording(shape, k, &v).map_err(|e| Error::NotInImage(e.to_string()))
}

/// Lengths of the chains built when removing each row (top row first), in build order.
pub fn rho3_chain_lengths(a: &Tableau) -> Result<Vec<Vec<usize>>> {
    lr_weight(a)?;
    Ok(chain_removal(a).lengths)
}

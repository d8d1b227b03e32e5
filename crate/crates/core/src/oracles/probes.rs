//! Exhaustive probes for the open agreement and counting questions.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{lr_membership, octahedral, rho1, rho2, rho2_prime, rho3, LrTriple};
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

use super::{enumerate_lr, enumerate_tableaux, lr_coefficient, partitions, partitions_up_to, subpartitions, EnumerationBounds};

/// One LR tableau on which the symmetry maps disagree.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetryMismatch {
    pub input: String,
    pub rho1: String,
    pub rho2: String,
    pub rho2_prime: String,
    pub rho3: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub bounds: EnumerationBounds,
    pub checked: usize,
    pub mismatches: Vec<SymmetryMismatch>,
}

fn show(r: crate::Result<Tableau>) -> String {
    match r {
        Ok(t) => t.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Compares `ρ₁`, `ρ₂`, `ρ₂′` and `ρ₃` pointwise on every LR tableau within `bounds`.
pub fn agreement_probe(bounds: &EnumerationBounds) -> SymmetryReport {
    let all = bounds.lr_tableaux();
    let mismatches = all
        .par_iter()
        .filter_map(|a| {
            let r1 = rho1(a);
            let others = [rho2(a), rho2_prime(a), rho3(a)];
            if r1.is_ok() && others.iter().all(|r| r == &r1) {
                return None;
            }
            let [r2, r2p, r3] = others;
            Some(SymmetryMismatch {
                input: a.to_string(),
                rho1: show(r1),
                rho2: show(r2),
                rho2_prime: show(r2p),
                rho3: show(r3),
            })
        })
        .collect();
    SymmetryReport { bounds: *bounds, checked: all.len(), mismatches }
}

/// A triple whose four counts differ.
#[derive(Clone, Debug, Serialize)]
pub struct CountMismatch {
    pub triple: LrTriple,
    pub lr: usize,
    pub lr_swapped: usize,
    pub cf: usize,
    pub cf_star: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub checked: usize,
    pub mismatches: Vec<CountMismatch>,
}

fn all_triples(bounds: &EnumerationBounds) -> Vec<LrTriple> {
    let mut out = Vec::new();
    for lambda in partitions_up_to(bounds.max_size, bounds.max_length) {
        for mu in subpartitions(&lambda) {
            let n = (lambda.size() - mu.size()) as usize;
            for nu in partitions(n, bounds.max_length) {
                out.push(LrTriple { mu: mu.clone(), nu, lambda: lambda.clone() });
            }
        }
    }
    out
}

/// `|CF(μ, ν, λ)|` or `|CF*(μ, ν, λ)|` by filtering every tableau of shape `μ`.
pub fn cf_count(ctx: &LrTriple, starred: bool) -> usize {
    enumerate_tableaux(&SkewShape::normal(ctx.mu.clone()), ctx.lambda.len())
        .iter()
        .filter(|b| lr_membership(b, ctx, starred).unwrap_or(false))
        .count()
}

/// `c(λ; μ, ν) = c(λ; ν, μ) = |CF(μ, ν, λ)| = |CF*(μ, ν, λ)|` on every triple within `bounds`.
pub fn count_symmetry_probe(bounds: &EnumerationBounds) -> CountReport {
    let triples = all_triples(bounds);
    let mismatches = triples
        .par_iter()
        .filter_map(|t| {
            let lr = lr_coefficient(&t.lambda, &t.mu, &t.nu);
            let lr_swapped = lr_coefficient(&t.lambda, &t.nu, &t.mu);
            let cf = cf_count(t, false);
            let cf_star = cf_count(t, true);
            (lr != lr_swapped || lr != cf || lr != cf_star)
                .then(|| CountMismatch { triple: t.clone(), lr, lr_swapped, cf, cf_star })
        })
        .collect();
    CountReport { checked: triples.len(), mismatches }
}

/// A quadruple `(τ, λ, μ, ν)` where the octahedral map fails to match the two sides.
#[derive(Clone, Debug, Serialize)]
pub struct OctahedralMismatch {
    pub tau: Partition,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub left: usize,
    pub right: usize,
    pub image_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OctahedralReport {
    pub max_size: usize,
    pub checked: usize,
    pub mismatches: Vec<OctahedralMismatch>,
}

/// `Σ_σ c(σ; λ, μ) c(τ; σ, ν) = Σ_π c(π; μ, ν) c(τ; λ, π)` for every `|τ| <= max_size`, with
/// the octahedral map checked to send the left set injectively into the right one.
pub fn octahedral_count_probe(max_size: usize) -> OctahedralReport {
    let mut quads = Vec::new();
    for tau in partitions_up_to(max_size, max_size) {
        for lambda in subpartitions(&tau) {
            let rest = (tau.size() - lambda.size()) as usize;
            for m in 0..=rest {
                for mu in partitions(m, max_size) {
                    for nu in partitions(rest - m, max_size) {
                        quads.push((tau.clone(), lambda.clone(), mu.clone(), nu));
                    }
                }
            }
        }
    }
    let mismatches = quads
        .par_iter()
        .filter_map(|(tau, lambda, mu, nu)| {
            let mut pairs = Vec::new();
            for sigma in subpartitions(tau) {
                if !sigma.contains(lambda) {
                    continue;
                }
                for a in enumerate_lr(&sigma, lambda, mu) {
                    for b in enumerate_lr(tau, &sigma, nu) {
                        pairs.push((a.clone(), b));
                    }
                }
            }
            let right: usize = subpartitions(tau)
                .iter()
                .filter(|pi| pi.size() == mu.size() + nu.size())
                .map(|pi| lr_coefficient(pi, mu, nu) * lr_coefficient(tau, lambda, pi))
                .sum();
            let mut seen = HashSet::new();
            let image_ok = pairs.iter().all(|(a, b)| match octahedral(a, b) {
                Ok((b1, d)) => {
                    b1.is_lr_of_weight(nu)
                        && b1.inner() == mu
                        && d.is_lr_of_weight(b1.outer())
                        && d.inner() == lambda
                        && d.outer() == tau
                        && seen.insert((b1, d))
                }
                Err(_) => false,
            });
            (pairs.len() != right || !image_ok).then(|| OctahedralMismatch {
                tau: tau.clone(),
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
                left: pairs.len(),
                right,
                image_ok,
            })
        })
        .collect();
    OctahedralReport { max_size, checked: quads.len(), mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_probes_are_clean() {
        let b = EnumerationBounds { max_size: 5, max_length: 3, max_value: 3 };
        let r = agreement_probe(&b);
        assert!(r.checked > 0 && r.mismatches.is_empty(), "{:?}", r.mismatches.first());
        let c = count_symmetry_probe(&b);
        assert!(c.checked > 0 && c.mismatches.is_empty(), "{:?}", c.mismatches.first());
        let o = octahedral_count_probe(4);
        assert!(o.checked > 0 && o.mismatches.is_empty(), "{:?}", o.mismatches.first());
    }
}

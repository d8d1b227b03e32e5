use crate::error::{Error, Result};
use crate::tableau::Tableau;

use super::zeta;

/// Octahedral map `ς(A, B) = (B', D)` for `A ∈ LR(σ/λ, μ)`, `B ∈ LR(τ/σ, ν)`,
/// giving `B' ∈ LR(π/μ, ν)` and `D ∈ LR(τ/λ, π)`.
pub fn octahedral(a: &Tableau, b: &Tableau) -> Result<(Tableau, Tableau)> {
    if !a.is_lr() || !b.is_lr() {
        return Err(Error::NotLittlewoodRichardson);
    }
    if a.outer() != b.inner() {
        return Err(Error::ShapeMismatch(format!("{} does not sit on {}", b.shape(), a.shape())));
    }
    let (_, c1) = zeta(&Tableau::canonical(a.inner()), a)?;
    let (b1, c2) = zeta(&c1, b)?;
    let (_, d) = zeta(&Tableau::canonical(b1.outer()), &c2)?;
    Ok((b1, d))
}

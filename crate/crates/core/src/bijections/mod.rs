//! The named bijections, each built from Bender-Knuth words and switching.

mod burge;
mod hillman_grassl;
mod octahedral;
mod symmetry;

pub use burge::burge;
pub use hillman_grassl::{hillman_grassl, hillman_grassl_calls, PlaneFunction};
pub(crate) use hillman_grassl::{assemble as hillman_grassl_assemble, embed as hillman_grassl_embed};
pub use octahedral::octahedral;
pub use symmetry::{
    gamma, gamma_inverse, lr_membership, rho2, rho2_prime, rho3, rho3_chain_lengths, tau, tau_inverse, LrTriple,
};

use crate::bk::{apply_bk_word, t_word, z_word};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

/// Schützenberger involution `ξ = z_m`, skew shapes allowed.
pub fn xi(a: &Tableau) -> Result<Tableau> {
    apply_bk_word(a, &z_word(a.range()))
}

/// `ξᴺ`: the restriction of [`xi`] to normal shapes.
pub fn xi_normal(a: &Tableau) -> Result<Tableau> {
    if !a.is_normal() {
        return Err(Error::SkewInputNotSupported("xi_normal"));
    }
    xi(a)
}

/// `ξ(Can(μ))` from its closed form: `a_{1,r} = μ_{k-r} - μ_{k-r+1}`, `a_{i,j} = a_{1,j-i+1}`.
pub fn evacuation_of_canonical(mu: &Partition) -> Tableau {
    let l = mu.len();
    let k = l + 1;
    // first[r-1] = a_{1,r}, with μ indexed from 1.
    let first: Vec<i64> = (1..=l).map(|r| mu.part(k - r - 1) - mu.part(k - r)).collect();
    let c: Vec<Vec<i64>> =
        (1..=l).map(|i| (1..=l).map(|j| if j >= i { first[j - i] } else { 0 }).collect()).collect();
    Tableau::from_recording(SkewShape::normal(mu.clone()), l, &c).expect("closed form is a tableau")
}

/// Tableau switching: `B` on `π/μ`, `A` on `λ/π` give `(A', B')` with `A'` on `σ/μ`
/// carrying the weight of `A` and `B'` on `λ/σ` carrying the weight of `B`.
pub fn zeta(b: &Tableau, a: &Tableau) -> Result<(Tableau, Tableau)> {
    if b.outer() != a.inner() {
        return Err(Error::ShapeMismatch(format!("{} does not sit on {}", a.shape(), b.shape())));
    }
    let r = b.range();
    let q = a.range();
    let joined = Tableau::attach(b, &a.shift_values(r as i64)?)?;
    let switched = apply_bk_word(&joined, &t_word(r, q))?;
    let (a2, high) = switched.split_at_value(q);
    let b2 = high.shift_values(-(q as i64))?;
    Ok((a2, b2))
}

/// `ζᴺ`: switching where `B` has normal shape.
pub fn zeta_normal(b: &Tableau, a: &Tableau) -> Result<(Tableau, Tableau)> {
    if !b.is_normal() {
        return Err(Error::SkewInputNotSupported("zeta_normal"));
    }
    zeta(b, a)
}

/// `ζᴸᴿ`: switching restricted to pairs of LR tableaux.
pub fn zeta_lr(b: &Tableau, a: &Tableau) -> Result<(Tableau, Tableau)> {
    if !b.is_lr() || !a.is_lr() {
        return Err(Error::NotLittlewoodRichardson);
    }
    zeta(b, a)
}

/// Jeu de taquin rectification, as the first component of `ζᴺ(Can(μ), A)`.
pub fn psi(a: &Tableau) -> Result<Tableau> {
    Ok(zeta_normal(&Tableau::canonical(a.inner()), a)?.0)
}

/// Partial sums `(a_1+...+a_{k-d}, ..., a_1)` for `d = 0` (outer) or `d = 1` (inner).
fn staircase_sums(w: &[i64], drop: usize) -> Result<Partition> {
    let k = w.len();
    let parts = (0..k)
        .map(|i| w[..k.saturating_sub(i + drop)].iter().try_fold(0i64, |s, &x| s.checked_add(x)).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// The staircase skew tableaux `(Y, X)` whose rectifications form `φ(V)`.
pub fn rsk_staircases(v: &IntMatrix) -> Result<(Tableau, Tableau)> {
    let k = v.k();
    let (a, b) = (v.row_sums(), v.col_sums());
    let y_shape = SkewShape::new(staircase_sums(&a, 0)?, staircase_sums(&a, 1)?)?;
    let x_shape = SkewShape::new(staircase_sums(&b, 0)?, staircase_sums(&b, 1)?)?;
    let y_rec: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| v.get(k - 1 - i, j)).collect()).collect();
    let x_rec: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| v.get(j, k - 1 - i)).collect()).collect();
    Ok((Tableau::from_recording(y_shape, k, &y_rec)?, Tableau::from_recording(x_shape, k, &x_rec)?))
}

/// RSK `φ(V) = (B, A)`: insertion tableau of weight the column sums, recording
/// tableau of weight the row sums.
pub fn rsk(v: &IntMatrix) -> Result<(Tableau, Tableau)> {
    let (y, x) = rsk_staircases(v)?;
    Ok((psi(&y)?, psi(&x)?))
}

/// Littlewood-Robinson map `A -> (A', C')` with `C'` an LR tableau on `λ/μ`.
pub fn phi_lr(a: &Tableau) -> Result<(Tableau, Tableau)> {
    let (a1, b1) = zeta_normal(&Tableau::canonical(a.inner()), a)?;
    let (_, c1) = zeta_normal(&Tableau::canonical(a1.outer()), &b1)?;
    Ok((a1, c1))
}

/// Inverse of [`phi_lr`]: the two switches undone in reverse order.
pub fn phi_lr_inverse(a1: &Tableau, c1: &Tableau) -> Result<Tableau> {
    if !a1.is_normal() || !c1.is_lr() || a1.outer().parts() != trim_weight(c1).parts() {
        return Err(Error::NotInImage(format!("({a1}, {c1}) is not in the image")));
    }
    let (_, b1) = zeta(&Tableau::canonical(c1.inner()), c1)?;
    Ok(zeta(a1, &b1)?.1)
}

fn trim_weight(t: &Tableau) -> Partition {
    Partition::new(t.weight()).unwrap_or_else(|_| Partition::empty())
}

/// Reversal `χ`.
pub fn chi(a: &Tableau) -> Result<Tableau> {
    let (a1, c1) = zeta(&Tableau::canonical(a.inner()), a)?;
    let (_, a2) = zeta(&xi(&a1)?, &c1)?;
    Ok(a2)
}

/// Fundamental symmetry `ρ₁`: `LR(λ/μ, ν) -> LR(λ/ν, μ)` by switching with `Can(μ)`.
pub fn rho1(a: &Tableau) -> Result<Tableau> {
    if !a.is_lr() {
        return Err(Error::NotLittlewoodRichardson);
    }
    Ok(zeta(&Tableau::canonical(a.inner()), a)?.1)
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

    fn a0() -> Tableau {
        t(&[2, 1], &[1], &[vec![1], vec![2]])
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&t(&[3], &[], &[vec![1, 1, 2]])).unwrap().to_string(), "[[1,2,2]]");
        let can = Tableau::canonical(&p(&[2, 1]));
        assert_eq!(xi(&can).unwrap().to_string(), "[[1,2],[2]]");
        assert_eq!(xi(&xi(&a0()).unwrap()).unwrap(), a0());
        assert!(xi_normal(&a0()).is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(evacuation_of_canonical(&p(&[2, 1])).to_string(), "[[1,2],[2]]");
        assert_eq!(evacuation_of_canonical(&p(&[1])).to_string(), "[[1]]");
        assert_eq!(evacuation_of_canonical(&p(&[4])).to_string(), "[[1,1,1,1]]");
        for mu in [p(&[3, 1]), p(&[2, 2, 1]), p(&[4, 2, 2, 1]), Partition::empty()] {
            assert_eq!(evacuation_of_canonical(&mu), xi(&Tableau::canonical(&mu)).unwrap());
        }
    }

    #[test]
    fn zeta_examples() {
        let (a1, b1) = zeta(&Tableau::canonical(&p(&[1])), &t(&[2, 1], &[1], &[vec![1], vec![1]])).unwrap();
        assert_eq!(a1.to_string(), "[[1,1]]");
        assert_eq!(b1.to_string(), "[[.,.],[1]]");
        let (a2, e) = zeta(&Tableau::empty(&p(&[1])), &a0()).unwrap();
        assert_eq!(a2, a0());
        assert!(e.is_empty());
        let (x, y) = zeta(&Tableau::canonical(&p(&[1])), &a0()).unwrap();
        let (b_back, a_back) = zeta(&x, &y).unwrap();
        assert_eq!((b_back, a_back), (Tableau::canonical(&p(&[1])), a0()));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&a0()).unwrap().to_string(), "[[1],[2]]");
        assert_eq!(psi(&t(&[2, 1], &[1], &[vec![1], vec![1]])).unwrap().to_string(), "[[1,1]]");
        let n = Tableau::canonical(&p(&[3, 1]));
        assert_eq!(psi(&n).unwrap(), n);
    }

    #[test]
    fn rsk_examples() {
        let show = |v: IntMatrix| {
            let (b, a) = rsk(&v).unwrap();
            (b.to_string(), a.to_string())
        };
        assert_eq!(show(m(&[&[1, 0], &[0, 1]])), ("[[1,2]]".into(), "[[1,2]]".into()));
        assert_eq!(show(m(&[&[0, 1], &[1, 0]])), ("[[1],[2]]".into(), "[[1],[2]]".into()));
        assert_eq!(show(m(&[&[1, 1], &[0, 1]])), ("[[1,2,2]]".into(), "[[1,1,2]]".into()));
        assert_eq!(show(m(&[])), ("[]".into(), "[]".into()));
    }

    #[test]
    fn phi_lr_examples() {
        let (x, y) = phi_lr(&a0()).unwrap();
        assert_eq!((x.to_string(), y), ("[[1],[2]]".to_string(), a0()));
        let n = t(&[3, 1], &[], &[vec![1, 2, 3], vec![2]]);
        let (x, y) = phi_lr(&n).unwrap();
        assert_eq!((x, y), (n.clone(), Tableau::canonical(n.outer())));
        let b = t(&[2, 1], &[1], &[vec![1], vec![1]]);
        let (x, y) = phi_lr(&b).unwrap();
        assert_eq!((x.to_string(), y.clone()), ("[[1,1]]".to_string(), b.clone()));
        assert_eq!(phi_lr_inverse(&x, &y).unwrap(), b);
        let bounds = crate::oracles::EnumerationBounds { max_size: 5, max_length: 3, max_value: 3 };
        for a in bounds.tableaux() {
            let (x, y) = phi_lr(&a).unwrap();
            assert_eq!(phi_lr_inverse(&x, &y).unwrap(), a, "{a}");
        }
    }

    #[test]
    fn chi_examples() {
        let n = t(&[3, 1], &[], &[vec![1, 2, 3], vec![2]]);
        assert_eq!(chi(&n).unwrap(), xi(&n).unwrap());
        assert_eq!(chi(&chi(&a0()).unwrap()).unwrap(), a0());
        assert_eq!(chi(&a0()).unwrap(), a0());
    }

    #[test]
    fn rho1_examples() {
        assert_eq!(rho1(&a0()).unwrap(), t(&[2, 1], &[1, 1], &[vec![1], vec![]]));
        let can = Tableau::canonical(&p(&[3, 2]));
        assert_eq!(rho1(&can).unwrap(), Tableau::empty(&p(&[3, 2])));
        assert_eq!(rho1(&t(&[2], &[1], &[vec![2]])), Err(Error::NotLittlewoodRichardson));
    }
}

use crate::bijections::{
    evacuation_of_canonical, gamma, gamma_inverse, hillman_grassl_assemble, hillman_grassl_embed,
    rsk_staircases, tau, tau_inverse,
};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

use super::{Circuit, MapId, Reduction, Step, Value};

type Pre = dyn Fn(&Value) -> Result<Value> + Send + Sync;

fn lin(name: &'static str, f: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static) -> Circuit {
    Circuit::Linear(Step::new(name, f))
}

/// One base call on `pre(x)` with `x` carried alongside; `post(y, x)` joins them.
fn call(
    pre_name: &'static str,
    pre: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static,
    post_name: &'static str,
    post: impl Fn(&Value, &Value) -> Result<Value> + Send + Sync + 'static,
) -> Circuit {
    let pre: Box<Pre> = Box::new(pre);
    Circuit::par(
        Step::new(pre_name, move |x| Ok(Value::pair(pre(x)?, x.clone()))),
        Circuit::Base,
        Circuit::Linear(Step::identity()),
        Step::new(post_name, move |v| {
            let (y, x) = v.as_pair()?;
            post(y, x)
        }),
    )
}

fn trivial(
    pre_name: &'static str,
    pre: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static,
    post_name: &'static str,
    post: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static,
) -> Circuit {
    Circuit::Trivial { pre: Step::new(pre_name, pre), post: Step::new(post_name, post) }
}

fn tab(v: &Value, i: usize) -> Result<&Tableau> {
    match v {
        Value::Tuple(xs) => xs.get(i).ok_or(Error::WrongValue("tuple"))?.as_tableau(),
        _ => Err(Error::WrongValue("tuple")),
    }
}

fn tup(xs: Vec<Tableau>) -> Value {
    Value::Tuple(xs.into_iter().map(Value::Tableau).collect())
}

fn first(v: &Value) -> Result<Value> {
    Ok(v.as_pair()?.0.clone())
}

fn second(v: &Value) -> Result<Value> {
    Ok(v.as_pair()?.1.clone())
}

fn id(v: &Value) -> Result<Value> {
    Ok(v.clone())
}

fn can_mu(t: &Tableau) -> Tableau {
    Tableau::canonical(t.inner())
}

fn shifted(t: &Tableau, d: usize) -> Result<Tableau> {
    t.shift_values(d as i64)
}

fn require_lr(t: &Tableau) -> Result<()> {
    if t.is_lr() {
        Ok(())
    } else {
        Err(Error::NotLittlewoodRichardson)
    }
}

fn require_normal(t: &Tableau, what: &'static str) -> Result<()> {
    if t.is_normal() {
        Ok(())
    } else {
        Err(Error::SkewInputNotSupported(what))
    }
}

fn phi_via_psi() -> Reduction {
    let c = Circuit::par(
        Step::new("staircases", |v| {
            let (y, x) = rsk_staircases(v.as_matrix()?)?;
            Ok(Value::tableaux(y, x))
        }),
        Circuit::Base,
        Circuit::Base,
        Step::identity(),
    );
    Reduction::new("phi_via_psi", MapId::Phi, MapId::Psi, 2, c)
}

fn psi_via_phi_lr() -> Reduction {
    Reduction::new("psi_via_phiLR", MapId::Psi, MapId::PhiLr, 1, trivial("id", id, "first", first))
}

fn phi_lr_via_zeta_n() -> Reduction {
    let c = Circuit::seq(
        trivial(
            "can_mu",
            |x| {
                let a = x.as_tableau()?;
                Ok(Value::tableaux(can_mu(a), a.clone()))
            },
            "id",
            id,
        ),
        call(
            "can_outer",
            |x| {
                let (a1, b1) = x.as_tableau_pair()?;
                Ok(Value::tableaux(Tableau::canonical(a1.outer()), b1.clone()))
            },
            "join",
            |y, x| Ok(Value::pair(x.as_pair()?.0.clone(), y.as_pair()?.1.clone())),
        ),
    );
    Reduction::new("phiLR_via_zetaN", MapId::PhiLr, MapId::ZetaN, 2, c)
}

/// `ζ` from three evacuations: `ξ(B)`, then the joined tableau, then the lower part.
fn zeta_via_evacuation(name: &str, source: MapId, base: MapId) -> Reduction {
    let c = Circuit::chain(vec![
        call(
            "take_b",
            |x| Ok(Value::Tableau(x.as_tableau_pair()?.0.clone())),
            "attach",
            |y, x| {
                let (b, a) = x.as_tableau_pair()?;
                let joined = Tableau::attach(y.as_tableau()?, &shifted(a, b.range())?)?;
                Ok(tup(vec![joined, b.clone(), a.clone()]))
            },
        ),
        call(
            "take_joined",
            |x| Ok(Value::Tableau(tab(x, 0)?.clone())),
            "split",
            |y, x| {
                let q = tab(x, 2)?.range();
                let (low, high) = y.as_tableau()?.split_at_value(q);
                Ok(Value::tableaux(low, high.shift_values(-(q as i64))?))
            },
        ),
        call("take_low", first, "join", |y, x| Ok(Value::pair(y.clone(), x.as_pair()?.1.clone()))),
    ]);
    Reduction::new(name, source, base, 3, c)
}

fn xi_n_via_phi() -> Reduction {
    let c = trivial(
        "flipped_recording",
        |x| {
            let a = x.as_tableau()?;
            require_normal(a, "xiN")?;
            let k = a.range();
            if a.rows() > k {
                return Err(Error::NotATableau(format!("{a} has more rows than its range")));
            }
            Ok(Value::Matrix(IntMatrix::from_fn(k, |i, j| if i < a.rows() { a.count(i, k - j) } else { 0 })))
        },
        "first",
        first,
    );
    Reduction::new("xiN_via_phi", MapId::XiN, MapId::Phi, 1, c)
}

fn rho1_via_zeta_n() -> Reduction {
    let c = trivial(
        "can_mu",
        |x| {
            let a = x.as_tableau()?;
            require_lr(a)?;
            Ok(Value::tableaux(can_mu(a), a.clone()))
        },
        "second",
        second,
    );
    Reduction::new("rho1_via_zetaN", MapId::Rho1, MapId::ZetaN, 1, c)
}

fn zeta_n_via_zeta() -> Reduction {
    let c = trivial(
        "check_normal",
        |x| {
            require_normal(x.as_tableau_pair()?.0, "zetaN")?;
            Ok(x.clone())
        },
        "id",
        id,
    );
    Reduction::new("zetaN_via_zeta", MapId::ZetaN, MapId::Zeta, 1, c)
}

/// Suffix sums `(w_2+...+w_k, w_3+...+w_k, ..., 0)` of a weight padded to length `k`.
fn suffix_sums(w: &[i64], k: usize) -> Result<Partition> {
    Partition::new((1..=k).map(|i| w.iter().skip(i).sum()).collect())
}

/// Both tableaux are completed to LR tableaux by canonical blocks placed up and to the
/// right, in a separate component, so that switching the frame switches the pair.
fn zeta_via_zeta_lr() -> Reduction {
    let pre = |x: &Value| -> Result<Value> {
        let (b, a) = x.as_tableau_pair()?;
        if b.outer() != a.inner() {
            return Err(Error::ShapeMismatch(format!("{} does not sit on {}", a.shape(), b.shape())));
        }
        let (lambda, pi, mu) = (a.outer(), a.inner(), b.inner());
        let k = lambda.len().max(a.range()).max(b.range());
        let alpha = suffix_sums(&a.weight(), k)?;
        let beta = suffix_sums(&b.weight(), k)?;
        let (l1, a1) = (lambda.first(), alpha.first());
        let frame = |top: &dyn Fn(usize) -> i64, mid: &dyn Fn(usize) -> i64, low: &Partition| {
            let parts: Vec<i64> =
                (0..k).map(top).chain((0..k).map(mid)).chain((0..k).map(|i| low.part(i))).collect();
            Partition::new(parts)
        };
        let lam_hat = frame(&|r| l1 + a1 + beta.part(r), &|i| l1 + alpha.part(i), lambda)?;
        let pi_hat = frame(&|r| l1 + a1 + beta.part(r), &|_| l1, pi)?;
        let mu_hat = frame(&|_| l1 + a1, &|_| l1, mu)?;
        let can_alpha = Tableau::canonical(&alpha);
        let can_beta = Tableau::canonical(&beta);
        let a_hat = Tableau::assemble(
            SkewShape::new(lam_hat, pi_hat.clone())?,
            k,
            &[(&can_alpha, k, l1), (a, 2 * k, 0)],
        )?;
        let b_hat = Tableau::assemble(SkewShape::new(pi_hat, mu_hat)?, k, &[(&can_beta, 0, l1 + a1), (b, 2 * k, 0)])?;
        Ok(Value::tableaux(b_hat, a_hat))
    };
    let post = |y: &Value, x: &Value| -> Result<Value> {
        let (b, a) = x.as_tableau_pair()?;
        let k = a.outer().len().max(a.range()).max(b.range());
        let (a_hat, b_hat) = y.as_tableau_pair()?;
        let a2 = a_hat.restrict_rows(2 * k, 3 * k)?.with_range(a.range())?;
        let b2 = b_hat.restrict_rows(2 * k, 3 * k)?.with_range(b.range())?;
        Ok(Value::tableaux(a2, b2))
    };
    Reduction::new("zeta_via_zetaLR", MapId::Zeta, MapId::ZetaLr, 1, call("lr_frames", pre, "restrict", post))
}

fn frame_size(b: &Tableau, a: &Tableau) -> usize {
    a.outer().len().max(a.range()).max(b.range())
}

/// `ζᴸᴿ` from three fundamental symmetries around a stacked frame.
fn zeta_lr_via_rho1() -> Reduction {
    let c = Circuit::chain(vec![
        call(
            "take_b",
            |x| {
                let (b, a) = x.as_tableau_pair()?;
                require_lr(a)?;
                if b.outer() != a.inner() {
                    return Err(Error::ShapeMismatch(format!("{} does not sit on {}", a.shape(), b.shape())));
                }
                Ok(Value::Tableau(b.clone()))
            },
            "stack",
            |y, x| {
                let (b, a) = x.as_tableau_pair()?;
                let c = y.as_tableau()?;
                let k = frame_size(b, a);
                let s = a.weight().first().copied().unwrap_or(0);
                let t = a.outer().first();
                let g = Tableau::canonical(&Partition::rectangle(s, k));
                let tau = c.inner();
                let outer: Vec<i64> =
                    std::iter::repeat_n(t + s, k).chain((0..k).map(|i| a.outer().part(i))).collect();
                let inner: Vec<i64> = std::iter::repeat_n(t, k).chain((0..k).map(|i| tau.part(i))).collect();
                let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
                let d = Tableau::assemble(shape, 2 * k, &[(&g, 0, t), (c, k, 0), (&shifted(a, k)?, k, 0)])?;
                Ok(Value::pair(Value::Tableau(d), x.clone()))
            },
        ),
        call(
            "take_stack",
            first,
            "split_high",
            |y, x| {
                let (b, a) = x.as_pair()?.1.as_tableau_pair()?;
                let k = frame_size(b, a);
                let (f, high) = y.as_tableau()?.split_at_value(k);
                let b2 = high.restrict_rows(k, 2 * k)?.shift_values(-(k as i64))?.with_range(b.range())?;
                Ok(tup(vec![f, b2, a.clone(), b.clone()]))
            },
        ),
        call(
            "take_low",
            |x| Ok(Value::Tableau(tab(x, 0)?.clone())),
            "split_high",
            |y, x| {
                let (b2, a) = (tab(x, 1)?, tab(x, 2)?);
                let k = frame_size(tab(x, 3)?, a);
                let (_, high) = y.as_tableau()?.split_at_value(k);
                let a2 = high.restrict_rows(k, 2 * k)?.shift_values(-(k as i64))?.with_range(a.range())?;
                Ok(Value::tableaux(a2, b2.clone()))
            },
        ),
    ]);
    Reduction::new("zetaLR_via_rho1", MapId::ZetaLr, MapId::Rho1, 3, c)
}

fn zeta_via_zeta_n() -> Reduction {
    let c = Circuit::seq(
        call(
            "normalise",
            |x| {
                let (b, a) = x.as_tableau_pair()?;
                let l = b.inner().len();
                let lower = Tableau::attach(&Tableau::canonical(b.inner()), &shifted(b, l)?)?;
                Ok(Value::tableaux(lower, a.clone()))
            },
            "split",
            |y, x| {
                let b = x.as_tableau_pair()?.0;
                let l = b.inner().len();
                let (a1, d1) = y.as_tableau_pair()?;
                let (c1, high) = d1.split_at_value(l);
                let b1 = high.shift_values(-(l as i64))?.with_range(b.range())?;
                Ok(tup(vec![a1.clone(), c1, b1]))
            },
        ),
        call(
            "take_pair",
            |x| Ok(Value::tableaux(tab(x, 0)?.clone(), tab(x, 1)?.clone())),
            "join",
            |y, x| Ok(Value::pair(y.as_pair()?.1.clone(), Value::Tableau(tab(x, 2)?.clone()))),
        ),
    );
    Reduction::new("zeta_via_zetaN", MapId::Zeta, MapId::ZetaN, 2, c)
}

fn rho2_via_xi_n() -> Reduction {
    let c = call(
        "gamma",
        |x| Ok(Value::Tableau(gamma(x.as_tableau()?)?)),
        "tau_inverse",
        |y, x| {
            let nu = Partition::new(x.as_tableau()?.weight())?;
            Ok(Value::Tableau(tau_inverse(y.as_tableau()?, &nu)?))
        },
    );
    Reduction::new("rho2_via_xiN", MapId::Rho2, MapId::XiN, 1, c)
}

fn xi_n_via_rho2() -> Reduction {
    let c = call(
        "gamma_inverse",
        |x| {
            let a = x.as_tableau()?;
            require_normal(a, "xiN")?;
            let w = a.weight();
            let k = w.len();
            let nu = |i: usize| w[..k - i].iter().sum::<i64>();
            let lambda = Partition::new((1..=k).map(|i| nu(i) + w[k - i]).collect())?;
            Ok(Value::Tableau(gamma_inverse(a, &lambda)?))
        },
        "tau",
        |y, x| Ok(Value::Tableau(tau(y.as_tableau()?)?.with_range(x.as_tableau()?.range())?)),
    );
    Reduction::new("xiN_via_rho2", MapId::XiN, MapId::Rho2, 1, c)
}

fn xi_n_via_chi() -> Reduction {
    let c = trivial(
        "check_normal",
        |x| {
            require_normal(x.as_tableau()?, "xiN")?;
            Ok(x.clone())
        },
        "id",
        id,
    );
    Reduction::new("xiN_via_chi", MapId::XiN, MapId::Chi, 1, c)
}

/// Alphabet of the lower block: at least the range of `A` and the length of `μ`.
fn lower_alphabet(a: &Tableau) -> usize {
    a.range().max(a.inner().len())
}

/// Stack `C° ★ (A + K)` where `C° = ξ(Can μ)` on the alphabet `K`.
fn stack_reversal(c0: &Tableau, a: &Tableau) -> Result<Value> {
    let big = lower_alphabet(a);
    let b = Tableau::attach(c0, &shifted(a, big)?)?;
    Ok(Value::pair(Value::Tableau(b), Value::Tableau(a.clone())))
}

fn chi_tail() -> Vec<Circuit> {
    vec![
        call("take_stack", first, "split", |y, x| {
            let a = x.as_pair()?.1.as_tableau()?;
            let (a0, c1) = y.as_tableau()?.split_at_value(a.range());
            Ok(tup(vec![a0, c1, a.clone()]))
        }),
        call(
            "take_low",
            |x| Ok(Value::Tableau(tab(x, 0)?.clone())),
            "restack",
            |y, x| {
                let b = Tableau::attach(y.as_tableau()?, tab(x, 1)?)?;
                Ok(Value::pair(Value::Tableau(b), Value::Tableau(tab(x, 2)?.clone())))
            },
        ),
        call("take_stack", first, "split", |y, x| {
            let a = x.as_pair()?.1.as_tableau()?;
            let big = lower_alphabet(a);
            let (_, high) = y.as_tableau()?.split_at_value(big);
            Ok(Value::Tableau(high.shift_values(-(big as i64))?.with_range(a.range())?))
        }),
    ]
}

fn chi_via_xi_n() -> Reduction {
    let mut parts = vec![call(
        "can_mu",
        |x| Ok(Value::Tableau(can_mu(x.as_tableau()?).with_range(lower_alphabet(x.as_tableau()?))?)),
        "stack",
        |y, x| stack_reversal(y.as_tableau()?, x.as_tableau()?),
    )];
    parts.extend(chi_tail());
    Reduction::new("chi_via_xiN", MapId::Chi, MapId::XiN, 4, Circuit::chain(parts))
}

fn chi_via_xi_n_closed() -> Reduction {
    let mut parts = vec![lin("closed_stack", |x| {
        let a = x.as_tableau()?;
        let mu = a.inner();
        let c0 = evacuation_of_canonical(mu).shift_values((lower_alphabet(a) - mu.len()) as i64)?;
        stack_reversal(&c0, a)
    })];
    parts.extend(chi_tail());
    Reduction::new("chi_via_xiN_closed", MapId::Chi, MapId::XiN, 3, Circuit::chain(parts))
}

fn varsigma_via_zeta() -> Reduction {
    let c = Circuit::chain(vec![
        call(
            "can_lambda",
            |x| {
                let (a, b) = x.as_tableau_pair()?;
                require_lr(a)?;
                require_lr(b)?;
                if a.outer() != b.inner() {
                    return Err(Error::ShapeMismatch(format!("{} does not sit on {}", b.shape(), a.shape())));
                }
                Ok(Value::tableaux(can_mu(a), a.clone()))
            },
            "take_c",
            |y, x| Ok(Value::pair(y.as_pair()?.1.clone(), x.as_pair()?.1.clone())),
        ),
        trivial("id", id, "id", id),
        call(
            "can_pi",
            |x| {
                let (b1, c2) = x.as_tableau_pair()?;
                Ok(Value::tableaux(Tableau::canonical(b1.outer()), c2.clone()))
            },
            "join",
            |y, x| Ok(Value::pair(x.as_pair()?.0.clone(), y.as_pair()?.1.clone())),
        ),
    ]);
    Reduction::new("varsigma_via_zeta", MapId::Varsigma, MapId::Zeta, 3, c)
}

fn flips_then(name: &str, source: MapId, base: MapId) -> Reduction {
    let c = Circuit::par(
        Step::new("flips", |v| {
            let m = v.as_matrix()?;
            Ok(Value::pair(Value::Matrix(m.flip_rows()), Value::Matrix(m.flip_cols())))
        }),
        Circuit::Base,
        Circuit::Base,
        Step::new("join", |v| {
            let (x, y) = v.as_pair()?;
            Ok(Value::pair(x.as_pair()?.0.clone(), y.as_pair()?.1.clone()))
        }),
    );
    Reduction::new(name, source, base, 2, c)
}

fn is_rectangle(v: &Value) -> bool {
    match v {
        Value::Plane(f) => f.shape.parts().iter().all(|&p| p == f.shape.first()),
        _ => false,
    }
}

fn theta_via_phi() -> Reduction {
    let c = call(
        "embed",
        |x| {
            let f = x.as_plane()?;
            let k = (f.shape.first() as usize).max(f.shape.len());
            Ok(Value::Matrix(hillman_grassl_embed(f, k, k, k)))
        },
        "read_diagonals",
        |y, x| {
            let f = x.as_plane()?;
            let (b, a) = y.as_tableau_pair()?;
            let g = hillman_grassl_assemble(&f.shape, b, a, |_, _| {
                Err(Error::NotInImage(format!("{} is not a rectangle", f.shape)))
            })?;
            Ok(Value::Plane(g))
        },
    );
    Reduction::new("theta_via_phi", MapId::Theta, MapId::Phi, 1, c).restricted(is_rectangle)
}

/// Every registered reduction.
pub fn registry() -> Vec<Reduction> {
    vec![
        phi_via_psi(),
        psi_via_phi_lr(),
        phi_lr_via_zeta_n(),
        zeta_via_evacuation("zeta_via_xi", MapId::Zeta, MapId::Xi),
        zeta_via_evacuation("zetaN_via_xiN", MapId::ZetaN, MapId::XiN),
        xi_n_via_phi(),
        rho1_via_zeta_n(),
        zeta_n_via_zeta(),
        zeta_via_zeta_lr(),
        zeta_lr_via_rho1(),
        zeta_via_zeta_n(),
        rho2_via_xi_n(),
        xi_n_via_rho2(),
        xi_n_via_chi(),
        chi_via_xi_n(),
        chi_via_xi_n_closed(),
        varsigma_via_zeta(),
        flips_then("burge_via_phi", MapId::Burge, MapId::Phi),
        flips_then("phi_via_burge", MapId::Phi, MapId::Burge),
        theta_via_phi(),
    ]
}

pub fn lookup(name: &str) -> Option<Reduction> {
    registry().into_iter().find(|r| r.name == name)
}

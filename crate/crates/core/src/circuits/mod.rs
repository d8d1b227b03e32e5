//! Parallel-sequential circuits over linear steps and one base map, with base-call counting.

mod graph;
mod maps;
mod registry;
mod value;

pub use graph::{ReductionGraph, CORE_MAPS};
pub use maps::MapId;
pub use maps::{all_matrices, all_plane_functions, lr_pairs, normal_tableaux};
pub use registry::{lookup, registry};
pub use value::Value;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

type StepFn = dyn Fn(&Value) -> Result<Value> + Send + Sync;

/// A named linear-cost step.
#[derive(Clone)]
pub struct Step {
    pub name: &'static str,
    f: Arc<StepFn>,
}

impl Step {
    pub fn new(name: &'static str, f: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        Step { name, f: Arc::new(f) }
    }

    pub fn identity() -> Self {
        Step::new("id", |x| Ok(x.clone()))
    }

    pub fn apply(&self, x: &Value) -> Result<Value> {
        (self.f)(x)
    }
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

#[derive(Clone, Debug)]
pub enum Circuit {
    Linear(Step),
    Base,
    /// `pre`, one base call, `post`.
    Trivial { pre: Step, post: Step },
    Sequential(Box<Circuit>, Box<Circuit>),
    /// `pre` yields a pair; the branches run on its halves; `post` joins their outputs.
    Parallel { pre: Step, left: Box<Circuit>, right: Box<Circuit>, post: Step },
}

impl Circuit {
    pub fn seq(a: Circuit, b: Circuit) -> Circuit {
        Circuit::Sequential(Box::new(a), Box::new(b))
    }

    /// Left-nested sequence of the given circuits.
    pub fn chain(parts: Vec<Circuit>) -> Circuit {
        parts.into_iter().reduce(Circuit::seq).unwrap_or(Circuit::Linear(Step::identity()))
    }

    pub fn par(pre: Step, left: Circuit, right: Circuit, post: Step) -> Circuit {
        Circuit::Parallel { pre, left: Box::new(left), right: Box::new(right), post }
    }

    /// Number of base calls.
    pub fn cost(&self) -> usize {
        match self {
            Circuit::Linear(_) => 0,
            Circuit::Base | Circuit::Trivial { .. } => 1,
            Circuit::Sequential(a, b) => a.cost() + b.cost(),
            Circuit::Parallel { left, right, .. } => left.cost() + right.cost(),
        }
    }

    /// Names of every linear step, in evaluation order.
    pub fn steps(&self) -> Vec<&'static str> {
        match self {
            Circuit::Linear(s) => vec![s.name],
            Circuit::Base => vec![],
            Circuit::Trivial { pre, post } => vec![pre.name, post.name],
            Circuit::Sequential(a, b) => [a.steps(), b.steps()].concat(),
            Circuit::Parallel { pre, left, right, post } => {
                [vec![pre.name], left.steps(), right.steps(), vec![post.name]].concat()
            }
        }
    }

    /// Every base call replaced by `inner`.
    pub fn substitute(&self, inner: &Circuit) -> Circuit {
        match self {
            Circuit::Linear(s) => Circuit::Linear(s.clone()),
            Circuit::Base => inner.clone(),
            Circuit::Trivial { pre, post } => Circuit::chain(vec![
                Circuit::Linear(pre.clone()),
                inner.clone(),
                Circuit::Linear(post.clone()),
            ]),
            Circuit::Sequential(a, b) => Circuit::seq(a.substitute(inner), b.substitute(inner)),
            Circuit::Parallel { pre, left, right, post } => {
                Circuit::par(pre.clone(), left.substitute(inner), right.substitute(inner), post.clone())
            }
        }
    }
}

/// Base calls and bit sizes of one evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub base_calls: usize,
    pub input_bits: u64,
    pub output_bits: u64,
}

impl CostReport {
    pub fn ratio(&self) -> f64 {
        self.output_bits as f64 / self.input_bits.max(1) as f64
    }
}

pub type BaseFn<'a> = &'a (dyn Fn(&Value) -> Result<Value> + Sync);

fn annotate(path: &str, e: Error) -> Error {
    match e {
        Error::Circuit { .. } => e,
        e => Error::Circuit { path: path.to_string(), source: Box::new(e) },
    }
}

fn run(c: &Circuit, base: BaseFn, x: &Value, path: &str, calls: &AtomicUsize) -> Result<Value> {
    match c {
        Circuit::Linear(s) => s.apply(x).map_err(|e| annotate(&format!("{path}/{}", s.name), e)),
        Circuit::Base => {
            calls.fetch_add(1, Ordering::Relaxed);
            base(x).map_err(|e| annotate(&format!("{path}/base"), e))
        }
        Circuit::Trivial { pre, post } => {
            let y = pre.apply(x).map_err(|e| annotate(&format!("{path}/{}", pre.name), e))?;
            calls.fetch_add(1, Ordering::Relaxed);
            let z = base(&y).map_err(|e| annotate(&format!("{path}/base"), e))?;
            post.apply(&z).map_err(|e| annotate(&format!("{path}/{}", post.name), e))
        }
        Circuit::Sequential(a, b) => {
            let y = run(a, base, x, &format!("{path}/seq.0"), calls)?;
            run(b, base, &y, &format!("{path}/seq.1"), calls)
        }
        Circuit::Parallel { pre, left, right, post } => {
            let split = pre.apply(x).map_err(|e| annotate(&format!("{path}/{}", pre.name), e))?;
            let (l, r) = split.as_pair().map_err(|e| annotate(&format!("{path}/{}", pre.name), e))?;
            let (yl, yr) = rayon::join(
                || run(left, base, l, &format!("{path}/par.left"), calls),
                || run(right, base, r, &format!("{path}/par.right"), calls),
            );
            let joined = Value::pair(yl?, yr?);
            post.apply(&joined).map_err(|e| annotate(&format!("{path}/{}", post.name), e))
        }
    }
}

/// Runs `c` on `input` with `base` bound to the base map.
pub fn evaluate(c: &Circuit, base: BaseFn, input: &Value) -> Result<(Value, CostReport)> {
    let calls = AtomicUsize::new(0);
    let out = run(c, base, input, "", &calls)?;
    let report = CostReport {
        base_calls: calls.into_inner(),
        input_bits: input.bits(),
        output_bits: out.bits(),
    };
    Ok((out, report))
}

/// `source ↪ base`: a circuit computing `source` from calls to `base`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub name: String,
    pub source: MapId,
    pub base: MapId,
    pub circuit: Circuit,
    pub declared_cost: usize,
    /// Inputs the construction applies to, beyond the source map's own domain.
    pub applies: fn(&Value) -> bool,
    pub restricted: bool,
}

fn always(_: &Value) -> bool {
    true
}

impl Reduction {
    pub fn new(name: &str, source: MapId, base: MapId, declared_cost: usize, circuit: Circuit) -> Self {
        Reduction { name: name.to_string(), source, base, circuit, declared_cost, applies: always, restricted: false }
    }

    pub fn restricted(mut self, applies: fn(&Value) -> bool) -> Self {
        self.applies = applies;
        self.restricted = true;
        self
    }

    /// Evaluates with the reference implementation of the base map.
    pub fn run(&self, input: &Value) -> Result<(Value, CostReport)> {
        let base = self.base;
        evaluate(&self.circuit, &move |v: &Value| base.apply(v), input)
    }

    /// The circuit agrees with the source map on `input` and spends exactly the declared cost.
    pub fn verify(&self, input: &Value) -> Result<bool> {
        let want = self.source.apply(input)?;
        let (got, report) = self.run(input)?;
        Ok(got == want && report.base_calls == self.declared_cost)
    }
}

/// `r1 ∘ r2`: every base call of `r1` replaced by `r2`'s circuit; costs multiply.
pub fn compose_reductions(r1: &Reduction, r2: &Reduction) -> Result<Reduction> {
    if r1.base != r2.source {
        return Err(Error::MapMismatch(format!("{} reduces to {}, not {}", r1.name, r1.base, r2.source)));
    }
    Ok(Reduction {
        name: format!("{}.{}", r1.name, r2.name),
        source: r1.source,
        base: r2.base,
        circuit: r1.circuit.substitute(&r2.circuit),
        declared_cost: r1.declared_cost * r2.declared_cost,
        applies: r1.applies,
        restricted: r1.restricted || r2.restricted,
    })
}

/// `α ↪ α` at cost 1.
pub fn identity_reduction(map: MapId) -> Reduction {
    Reduction::new(&format!("{map}_via_{map}"), map, map, 1, Circuit::Base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use crate::partition::{Partition, SkewShape};
    use crate::tableau::Tableau;

    fn a0() -> Tableau {
        let s = SkewShape::new(Partition::from_slice(&[2, 1]).unwrap(), Partition::from_slice(&[1]).unwrap()).unwrap();
        Tableau::from_rows(s, &[vec![1], vec![2]]).unwrap()
    }

    #[test]
    fn identity_step_costs_nothing() {
        let c = Circuit::Linear(Step::identity());
        let x = Value::Tableau(a0());
        let (y, r) = evaluate(&c, &|v: &Value| Ok(v.clone()), &x).unwrap();
        assert_eq!((y, r.base_calls), (x, 0));
    }

    #[test]
    fn phi_via_psi_on_identity() {
        let r = lookup("phi_via_psi").unwrap();
        let v = Value::Matrix(IntMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap());
        let (out, rep) = r.run(&v).unwrap();
        let (b, a) = out.as_tableau_pair().unwrap();
        assert_eq!((b.to_string(), a.to_string(), rep.base_calls), ("[[1,2]]".into(), "[[1,2]]".into(), 2));
    }

    #[test]
    fn plain_chi_uses_four_calls() {
        let r = lookup("chi_via_xiN").unwrap();
        let (out, rep) = r.run(&Value::Tableau(a0())).unwrap();
        assert_eq!(out, Value::Tableau(crate::bijections::chi(&a0()).unwrap()));
        assert_eq!(rep.base_calls, 4);
    }

    #[test]
    fn composition_multiplies() {
        let r1 = lookup("phi_via_psi").unwrap();
        let r2 = lookup("psi_via_phiLR").unwrap();
        let c = compose_reductions(&r1, &r2).unwrap();
        assert_eq!(c.declared_cost, 2);
        assert_eq!(c.circuit.cost(), 2);
        let z = compose_reductions(&lookup("zeta_via_xi").unwrap(), &identity_reduction(MapId::Xi)).unwrap();
        assert_eq!(z.declared_cost, 3);
        assert!(matches!(compose_reductions(&r2, &r1), Err(Error::MapMismatch(_))));
        let v = Value::Matrix(IntMatrix::new(vec![vec![1, 1], vec![0, 1]]).unwrap());
        assert!(c.verify(&v).unwrap());
    }

    #[test]
    fn errors_carry_paths() {
        let r = lookup("rho1_via_zetaN").unwrap();
        let bad = Value::Matrix(IntMatrix::zeros(1));
        match r.run(&bad) {
            Err(Error::Circuit { path, .. }) => assert!(path.contains("can_mu") || path.contains('/'), "{path}"),
            other => panic!("{other:?}"),
        }
    }
}

//! Exhaustive property suites. Each property runs over an enumerated domain and reports
//! how many instances failed, with the smallest failing instance as a counterexample.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{
    self as bij, gamma, gamma_inverse, hillman_grassl, lr_membership, rho3_chain_lengths, rsk_staircases, tau,
    tau_inverse, LrTriple, PlaneFunction,
};
use crate::bk::{apply_bk_word, bk, t_word, z_word, BkWord};
use crate::circuits::{all_matrices, all_plane_functions, lr_pairs, registry, MapId, ReductionGraph, Value, CORE_MAPS};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::oracles::{
    self, naive_bk, naive_burge, naive_evacuation, naive_jdt, naive_jdt_with, naive_rsk, naive_switch,
    probes, rsk_inverse, CornerOrder, EnumerationBounds,
};
use crate::partition::{Partition, SkewShape};
use crate::sample::random_tableaux;
use crate::tableau::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    Bk,
    Oracles,
    Identities,
    Reductions,
    Symmetries,
    HillmanGrassl,
    Sizes,
    Fuzz,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::Bk,
        Group::Oracles,
        Group::Identities,
        Group::Reductions,
        Group::Symmetries,
        Group::HillmanGrassl,
        Group::Sizes,
        Group::Fuzz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Bk => "bk",
            Group::Oracles => "oracles",
            Group::Identities => "identities",
            Group::Reductions => "reductions",
            Group::Symmetries => "symmetries",
            Group::HillmanGrassl => "hillman-grassl",
            Group::Sizes => "sizes",
            Group::Fuzz => "fuzz",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Group::ALL.into_iter().find(|g| g.name() == s).ok_or(Error::WrongValue("suite group"))
    }
}

/// Outcome of one property.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub group: Group,
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Which suites to run and on what bounds.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub bounds: EnumerationBounds,
    pub extended_bounds: EnumerationBounds,
    pub octahedral_max: usize,
    pub groups: Vec<Group>,
    /// Seed of the random tableaux in the fuzz group.
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20_240_601;

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            bounds: EnumerationBounds::default(),
            extended_bounds: EnumerationBounds::extended(),
            octahedral_max: 6,
            groups: Group::ALL.to_vec(),
            seed: DEFAULT_SEED,
        }
    }
}

/// Runs `ok` on every item; failures (including errors) are counted and the one with the
/// shortest rendering is kept.
pub fn check_with<T: Sync>(
    group: Group,
    name: &str,
    items: &[T],
    show: impl Fn(&T) -> String + Sync,
    ok: impl Fn(&T) -> Result<bool> + Sync,
) -> PropertyResult {
    let failed: Vec<(usize, String)> = items
        .par_iter()
        .filter_map(|x| match ok(x) {
            Ok(true) => None,
            Ok(false) => Some(show(x)),
            Err(e) => Some(format!("{} ({e})", show(x))),
        })
        .map(|s| (s.len(), s))
        .collect();
    PropertyResult {
        group,
        name: name.to_string(),
        checked: items.len(),
        failures: failed.len(),
        counterexample: failed.into_iter().min().map(|(_, s)| s),
    }
}

pub fn check<T: Sync + fmt::Display>(
    group: Group,
    name: &str,
    items: &[T],
    ok: impl Fn(&T) -> Result<bool> + Sync,
) -> PropertyResult {
    check_with(group, name, items, |x| x.to_string(), ok)
}

fn show_pair(p: &(Tableau, Tableau)) -> String {
    format!("({}, {})", p.0, p.1)
}

fn show_indexed(p: &(Tableau, usize)) -> String {
    format!("{} at {}", p.0, p.1)
}

/// Tableaux paired with every BK index they admit.
fn indexed(ts: &[Tableau]) -> Vec<(Tableau, usize)> {
    ts.iter().flat_map(|t| (1..t.range()).map(move |r| (t.clone(), r))).collect()
}

/// `bk` against the filling-level oracle, for any candidate implementation.
pub fn bk_oracle_property(bounds: &EnumerationBounds, imp: fn(&Tableau, usize) -> Result<Tableau>) -> PropertyResult {
    let items = indexed(&bounds.tableaux());
    check_with(Group::Oracles, "bk = naive_bk", &items, show_indexed, |(t, r)| Ok(imp(t, *r)? == naive_bk(t, *r)?))
}

pub fn bk_suite(bounds: &EnumerationBounds) -> Vec<PropertyResult> {
    let ts = bounds.tableaux();
    let idx = indexed(&ts);
    let far: Vec<(Tableau, usize, usize)> = ts
        .iter()
        .flat_map(|t| {
            let k = t.range();
            (1..k).flat_map(move |i| (i + 2..k).map(move |j| (t.clone(), i, j)))
        })
        .collect();
    let splits: Vec<(Tableau, usize)> = ts.iter().flat_map(|t| (0..=t.range()).map(move |l| (t.clone(), l))).collect();
    let word = |t: &Tableau, w: &BkWord| apply_bk_word(t, w);
    vec![
        check_with(Group::Bk, "s_r is an involution", &idx, show_indexed, |(t, r)| Ok(bk(&bk(t, *r)?, *r)? == *t)),
        check_with(
            Group::Bk,
            "s_i s_j = s_j s_i for |i-j| >= 2",
            &far,
            |(t, i, j)| format!("{t} at {i},{j}"),
            |(t, i, j)| Ok(bk(&bk(t, *i)?, *j)? == bk(&bk(t, *j)?, *i)?),
        ),
        check(Group::Bk, "z_m is an involution", &ts, |t| {
            let z = z_word(t.range());
            Ok(word(&word(t, &z)?, &z)? == *t)
        }),
        check_with(Group::Bk, "t_{s,r} t_{r,s} = 1", &splits, show_indexed, |(t, r)| {
            let s = t.range() - r;
            Ok(word(&word(t, &t_word(*r, s))?, &t_word(s, *r))? == *t)
        }),
        check_with(Group::Bk, "z_{l+k} = z_k t_{l,k} z_l", &splits, show_indexed, |(t, l)| {
            let k = t.range() - l;
            let w = z_word(k).times(&t_word(*l, k)).times(&z_word(*l));
            Ok(word(t, &z_word(t.range()))? == word(t, &w)?)
        }),
    ]
}

fn switch_pairs(bounds: &EnumerationBounds) -> Vec<(Tableau, Tableau)> {
    MapId::Zeta
        .suite(bounds)
        .iter()
        .map(|v| {
            let (b, a) = v.as_tableau_pair().expect("pair suite");
            (b.clone(), a.clone())
        })
        .collect()
}

fn matrices() -> Vec<IntMatrix> {
    (0..=3).flat_map(|k| all_matrices(k, 2)).collect()
}

pub fn oracle_suite(bounds: &EnumerationBounds) -> Vec<PropertyResult> {
    let ts = bounds.tableaux();
    let ms = matrices();
    let mut out = vec![
        bk_oracle_property(bounds, bk),
        check(Group::Oracles, "psi = naive_jdt", &ts, |t| Ok(bij::psi(t)? == naive_jdt(t))),
        check(Group::Oracles, "naive_jdt is corner-order independent", &ts, |t| {
            Ok(naive_jdt_with(t, CornerOrder::TopFirst) == naive_jdt_with(t, CornerOrder::BottomFirst))
        }),
        check(Group::Oracles, "rsk = naive_rsk", &ms, |m| Ok(bij::rsk(m)? == naive_rsk(m))),
        check(Group::Oracles, "rsk_inverse round trip", &ms, |m| {
            let (b, a) = naive_rsk(m);
            Ok(rsk_inverse(&b, &a)? == *m)
        }),
        check(Group::Oracles, "burge = naive_burge", &ms, |m| Ok(bij::burge(m)? == naive_burge(m))),
        check_with(Group::Oracles, "zeta = naive_switch", &switch_pairs(bounds), show_pair, |(b, a)| {
            Ok(bij::zeta(b, a)? == naive_switch(b, a)?)
        }),
    ];
    let shapes = bounds.skew_shapes();
    out.push(check(Group::Oracles, "enumeration is duplicate free and in bounds", &shapes, |s| {
        let ts = oracles::enumerate_tableaux(s, bounds.max_value);
        let distinct: HashSet<&Tableau> = ts.iter().collect();
        Ok(distinct.len() == ts.len() && ts.iter().all(|t| t.shape() == s && t.max_entry() <= bounds.max_value as i64))
    }));
    out
}

fn weight_partition(t: &Tableau) -> Option<Partition> {
    Partition::new(t.weight()).ok()
}

fn reversed_weight(t: &Tableau) -> Vec<i64> {
    let mut w = t.weight();
    w.reverse();
    w
}

pub fn identity_suite(bounds: &EnumerationBounds) -> Vec<PropertyResult> {
    let ts = bounds.tableaux();
    let normal: Vec<Tableau> = ts.iter().filter(|t| t.is_normal()).cloned().collect();
    let lr = bounds.lr_tableaux();
    let ms = matrices();
    let pairs = lr_pairs(bounds);
    let g = Group::Identities;
    vec![
        check(g, "xi = naive evacuation on normal shapes", &normal, |t| Ok(bij::xi(t)? == naive_evacuation(t)?)),
        check(g, "xi = z_m word", &ts, |t| Ok(bij::xi(t)? == apply_bk_word(t, &z_word(t.range()))?)),
        check(g, "psi of the staircases gives the RSK pair", &ms, |m| {
            let (y, x) = rsk_staircases(m)?;
            Ok((bij::psi(&y)?, bij::psi(&x)?) == naive_rsk(m))
        }),
        check(g, "first component of zeta(Can mu, A) is the rectification", &ts, |t| {
            Ok(bij::zeta_normal(&Tableau::canonical(t.inner()), t)?.0 == naive_jdt(t))
        }),
        check(g, "phi_LR = (psi, LR tableau of the rectified shape)", &ts, |t| {
            let (a1, c1) = bij::phi_lr(t)?;
            Ok(a1 == bij::psi(t)? && c1.is_lr_of_weight(a1.outer()) && c1.shape() == t.shape())
        }),
        check(g, "xiN(A) = psi(A rotated)", &normal, |t| Ok(bij::xi_normal(t)? == bij::psi(&t.rotate180()?)?)),
        check(g, "rsk of the transpose swaps the pair", &ms, |m| {
            let (b, a) = bij::rsk(m)?;
            Ok(bij::rsk(&m.transpose())? == (a, b))
        }),
        check(g, "rsk of the rotation evacuates both", &ms, |m| {
            let (b, a) = bij::rsk(m)?;
            Ok(bij::rsk(&m.rotate())? == (bij::xi(&b)?, bij::xi(&a)?))
        }),
        check(g, "LR iff psi is canonical", &ts, |t| {
            let canonical = weight_partition(t).is_some_and(|w| bij::psi(t).is_ok_and(|p| p == Tableau::canonical(&w)));
            Ok(t.is_lr() == canonical)
        }),
        check_with(g, "zeta keeps LR pairs LR", &pairs, show_pair, |(b, a)| {
            let (a1, b1) = bij::zeta_lr(b, a)?;
            Ok(a1.is_lr() && b1.is_lr())
        }),
        check(g, "chi is an involution", &ts, |t| Ok(bij::chi(&bij::chi(t)?)? == *t)),
        check(g, "gamma lands in CF* and inverts", &lr, |a| {
            let d = gamma(a)?;
            let ctx = LrTriple { mu: a.inner().clone(), nu: Partition::new(a.weight())?, lambda: a.outer().clone() };
            Ok(lr_membership(&d, &ctx, true)? && gamma_inverse(&d, a.outer())? == *a)
        }),
        check(g, "tau lands in CF and inverts", &lr, |a| {
            let e = tau(a)?;
            let nu = Partition::new(a.weight())?;
            let ctx = LrTriple { mu: nu.clone(), nu: a.inner().clone(), lambda: a.outer().clone() };
            Ok(lr_membership(&e, &ctx, false)? && tau_inverse(&e, a.inner())? == *a)
        }),
        check(g, "rho2 and rho2' are mutually inverse symmetries", &lr, |a| {
            let b = bij::rho2(a)?;
            let mu = a.inner();
            let ok = b.is_lr_of_weight(mu) && b.outer() == a.outer() && b.inner().parts() == a.weight().as_slice().trim();
            Ok(ok && bij::rho2_prime(&b)? == *a && bij::rho2(&bij::rho2_prime(a)?)? == *a)
        }),
        check_with(g, "octahedral map lands in the right set and inverts", &pairs, show_pair, |(a, b)| {
            let (b1, d) = bij::octahedral(a, b)?;
            let nu = Partition::new(b.weight())?;
            let mu = Partition::new(a.weight())?;
            Ok(b1.is_lr_of_weight(&nu) && b1.inner() == &mu && d.is_lr_of_weight(b1.outer()) && d.shape() == &SkewShape::new(b.outer().clone(), a.inner().clone())?)
        }),
    ]
}

trait Trim {
    fn trim(&self) -> &[i64];
}

impl Trim for [i64] {
    fn trim(&self) -> &[i64] {
        let n = self.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        &self[..n]
    }
}

/// `λ/μ` of weight `ν` goes to `λ/ν` of weight `μ`.
fn is_symmetric_image(a: &Tableau, b: &Tableau) -> bool {
    b.is_lr_of_weight(a.inner()) && b.outer() == a.outer() && b.inner().parts() == a.weight().as_slice().trim()
}

/// The row-4 chain lengths of the worked chain-removal example.
pub fn chain_example() -> (Tableau, Vec<usize>) {
    let shape = SkewShape::new(
        Partition::from_slice(&[9, 7, 6, 5]).expect("partition"),
        Partition::from_slice(&[7, 6, 3, 1]).expect("partition"),
    )
    .expect("shape");
    let a = Tableau::from_rows(shape, &[vec![1, 1], vec![1], vec![1, 2, 2], vec![1, 2, 2, 3]]).expect("tableau");
    (a, vec![4, 3, 2, 2, 1])
}

pub fn symmetry_suite(bounds: &EnumerationBounds, conj: &EnumerationBounds, octahedral_max: usize) -> Vec<PropertyResult> {
    let ts = bounds.tableaux();
    let lr = bounds.lr_tableaux();
    let g = Group::Symmetries;
    let mut out = vec![
        check(g, "xi is an involution reversing weight", &ts, |t| {
            let x = bij::xi(t)?;
            Ok(bij::xi(&x)? == *t && x.weight() == reversed_weight(t))
        }),
        check_with(g, "zeta exchanges weights and is an involution", &switch_pairs(bounds), show_pair, |(b, a)| {
            let (a1, b1) = bij::zeta(b, a)?;
            Ok(a1.weight() == a.weight() && b1.weight() == b.weight() && bij::zeta(&a1, &b1)? == (b.clone(), a.clone()))
        }),
        check(g, "rho1 is an involutive symmetry", &lr, |a| {
            let b = bij::rho1(a)?;
            Ok(is_symmetric_image(a, &b) && bij::rho1(&b)? == *a)
        }),
        check(g, "rho3 is an involutive symmetry", &lr, |a| {
            let b = bij::rho3(a)?;
            Ok(is_symmetric_image(a, &b) && bij::rho3(&b)? == *a)
        }),
    ];
    let (a, want) = chain_example();
    out.push(check(g, "chain example lengths", &[a], |a| Ok(rho3_chain_lengths(a)?[3] == want)));
    let c1 = probes::agreement_probe(conj);
    out.push(PropertyResult {
        group: g,
        name: "rho1 = rho2 = rho2' = rho3".into(),
        checked: c1.checked,
        failures: c1.mismatches.len(),
        counterexample: c1.mismatches.first().map(|m| serde_json::to_string(m).unwrap_or_default()),
    });
    let counts = probes::count_symmetry_probe(conj);
    out.push(PropertyResult {
        group: g,
        name: "LR and CF counts agree".into(),
        checked: counts.checked,
        failures: counts.mismatches.len(),
        counterexample: counts.mismatches.first().map(|m| serde_json::to_string(m).unwrap_or_default()),
    });
    let oct = probes::octahedral_count_probe(octahedral_max);
    out.push(PropertyResult {
        group: g,
        name: "octahedral count identity".into(),
        checked: oct.checked,
        failures: oct.mismatches.len(),
        counterexample: oct.mismatches.first().map(|m| serde_json::to_string(m).unwrap_or_default()),
    });
    out
}

pub fn reduction_suite(bounds: &EnumerationBounds) -> Vec<PropertyResult> {
    let mut out: Vec<PropertyResult> = registry()
        .iter()
        .map(|r| {
            let suite: Vec<Value> = r.source.suite(bounds).into_iter().filter(|v| (r.applies)(v)).collect();
            let name = format!("{} (cost {})", r.name, r.declared_cost);
            check(Group::Reductions, &name, &suite, |v| r.verify(v))
        })
        .collect();
    let graph = ReductionGraph::standard();
    let max = graph.max_min_cost(&CORE_MAPS);
    out.push(PropertyResult {
        group: Group::Reductions,
        name: "largest minimal cost between core maps is 36, from chi to rho1".into(),
        checked: CORE_MAPS.len() * (CORE_MAPS.len() - 1),
        failures: usize::from(max != Some((MapId::Chi, MapId::Rho1, 36))),
        counterexample: max.filter(|m| *m != (MapId::Chi, MapId::Rho1, 36)).map(|m| format!("{m:?}")),
    });
    out
}

/// Plane functions with entries `<= 2` on the three small shapes.
pub fn plane_suite() -> Vec<(Partition, Vec<PlaneFunction>)> {
    [[2, 1], [2, 2], [3, 1]]
        .iter()
        .map(|s| {
            let p = Partition::from_slice(s).expect("partition");
            let fs = all_plane_functions(&p, 2);
            (p, fs)
        })
        .collect()
}

pub fn hillman_grassl_suite() -> Vec<PropertyResult> {
    let mut out = Vec::new();
    for (shape, fs) in plane_suite() {
        let g = Group::HillmanGrassl;
        out.push(check(g, &format!("theta on {shape} gives reverse plane partitions with alpha = beta"), &fs, |f| {
            let h = hillman_grassl(f)?;
            Ok(h.is_reverse_plane_partition() && f.contents().all(|c| h.alpha(c) == f.beta(c)))
        }));
        let images: Vec<PlaneFunction> = fs.iter().filter_map(|f| hillman_grassl(f).ok()).collect();
        let distinct: HashSet<&PlaneFunction> = images.iter().collect();
        out.push(PropertyResult {
            group: g,
            name: format!("theta on {shape} is injective"),
            checked: fs.len(),
            failures: fs.len() - distinct.len(),
            counterexample: None,
        });
    }
    out
}

/// Largest output-to-input bit ratio of one map over its suite.
#[derive(Clone, Debug, Serialize)]
pub struct SizeRow {
    pub map: String,
    pub instances: usize,
    pub max_ratio: f64,
    pub worst: Option<String>,
}

fn size_row(map: &str, suite: &[Value], f: impl Fn(&Value) -> Result<Value> + Sync) -> SizeRow {
    let worst = suite
        .par_iter()
        .filter_map(|v| f(v).ok().map(|out| (out.bits() as f64 / v.bits().max(1) as f64, v)))
        .max_by(|x, y| x.0.total_cmp(&y.0));
    SizeRow {
        map: map.to_string(),
        instances: suite.len(),
        max_ratio: worst.map_or(0.0, |w| w.0),
        worst: worst.map(|w| w.1.to_string()),
    }
}

/// Size-neutrality bound recorded for every map.
pub const SIZE_BOUND: f64 = 4.0;

pub fn size_report(bounds: &EnumerationBounds) -> Vec<SizeRow> {
    let mut rows: Vec<SizeRow> = MapId::ALL.iter().map(|m| size_row(m.name(), &m.suite(bounds), |v| m.apply(v))).collect();
    let lr: Vec<Value> = MapId::Rho1.suite(bounds);
    let one = |f: fn(&Tableau) -> Result<Tableau>| move |v: &Value| Ok(Value::Tableau(f(v.as_tableau()?)?));
    rows.push(size_row("gamma", &lr, one(gamma)));
    rows.push(size_row("tau", &lr, one(tau)));
    rows.push(size_row("rho2_prime", &lr, one(bij::rho2_prime)));
    rows.push(size_row("rho3", &lr, one(bij::rho3)));
    rows
}

pub fn size_suite(bounds: &EnumerationBounds) -> Vec<PropertyResult> {
    size_report(bounds)
        .into_iter()
        .map(|r| PropertyResult {
            group: Group::Sizes,
            name: format!("{} output/input bits = {:.3} < {SIZE_BOUND}", r.map, r.max_ratio),
            checked: r.instances,
            failures: usize::from(r.max_ratio >= SIZE_BOUND),
            counterexample: (r.max_ratio >= SIZE_BOUND).then(|| r.worst.clone().unwrap_or_default()),
        })
        .collect()
}

/// Random tableaux larger than the exhaustive bounds, against the oracles.
pub fn fuzz_suite(seed: u64) -> Vec<PropertyResult> {
    let ts = random_tableaux(seed, 300, 14, 5, 7);
    let idx = indexed(&ts);
    let normal: Vec<Tableau> = ts.iter().filter(|t| t.is_normal()).cloned().collect();
    let cuts: Vec<(Tableau, Tableau)> = ts
        .iter()
        .map(|t| {
            let r = t.range() / 2;
            let (low, high) = t.split_at_value(r);
            let high = high.shift_values(-(r as i64)).expect("high part has entries > r");
            (low, high)
        })
        .collect();
    let g = Group::Fuzz;
    vec![
        check_with(g, "bk = naive_bk", &idx, show_indexed, |(t, r)| Ok(bk(t, *r)? == naive_bk(t, *r)?)),
        check(g, "psi = naive_jdt", &ts, |t| Ok(bij::psi(t)? == naive_jdt(t))),
        check(g, "xi is an involution", &ts, |t| Ok(bij::xi(&bij::xi(t)?)? == *t)),
        check(g, "xi = naive evacuation on normal shapes", &normal, |t| Ok(bij::xi(t)? == naive_evacuation(t)?)),
        check_with(g, "zeta = naive_switch", &cuts, show_pair, |(b, a)| Ok(bij::zeta(b, a)? == naive_switch(b, a)?)),
    ]
}

/// Runs the selected groups.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<PropertyResult> {
    let mut out = Vec::new();
    for g in &cfg.groups {
        out.extend(match g {
            Group::Bk => bk_suite(&cfg.bounds),
            Group::Oracles => oracle_suite(&cfg.bounds),
            Group::Identities => identity_suite(&cfg.bounds),
            Group::Reductions => reduction_suite(&cfg.bounds),
            Group::Symmetries => symmetry_suite(&cfg.bounds, &cfg.extended_bounds, cfg.octahedral_max),
            Group::HillmanGrassl => hillman_grassl_suite(),
            Group::Sizes => size_suite(&cfg.bounds),
            Group::Fuzz => fuzz_suite(cfg.seed),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> EnumerationBounds {
        EnumerationBounds { max_size: 4, max_length: 3, max_value: 3 }
    }

    fn all_pass(rs: &[PropertyResult]) {
        let bad: Vec<_> = rs.iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn small_suites_pass() {
        let b = small();
        all_pass(&bk_suite(&b));
        all_pass(&oracle_suite(&b));
        all_pass(&identity_suite(&b));
        all_pass(&hillman_grassl_suite());
        all_pass(&fuzz_suite(3));
    }

    fn broken_bk(a: &Tableau, r: usize) -> Result<Tableau> {
        let out = bk(a, r)?;
        Ok(if a.size() >= 3 && a.rows() >= 2 { a.clone() } else { out })
    }

    #[test]
    fn mutation_is_caught_with_a_small_counterexample() {
        let r = bk_oracle_property(&small(), broken_bk);
        assert!(!r.passed());
        let cx = r.counterexample.unwrap();
        assert!(cx.len() < 30, "{cx}");
    }

    #[test]
    fn zero_bounds_pass_vacuously() {
        let cfg = SuiteConfig {
            bounds: EnumerationBounds { max_size: 0, max_length: 0, max_value: 0 },
            extended_bounds: EnumerationBounds { max_size: 0, max_length: 0, max_value: 0 },
            octahedral_max: 0,
            groups: vec![Group::Bk, Group::Oracles, Group::Symmetries],
            seed: DEFAULT_SEED,
        };
        all_pass(&run_suite(&cfg));
    }
}

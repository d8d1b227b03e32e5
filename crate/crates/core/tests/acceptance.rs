//! The ten acceptance criteria, one PASS/FAIL line each, all inside a single test.

use std::time::Instant;

use ytab::bench::{bench, DEFAULT_KS, DEFAULT_REPETITIONS};
use ytab::circuits::{lookup, registry, MapId, ReductionGraph, CORE_MAPS};
use ytab::oracles::{probes, EnumerationBounds};
use ytab::verify::{self, PropertyResult, SIZE_BOUND};

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite_outcome(rs: &[PropertyResult], extra: bool) -> Outcome {
    let checked: usize = rs.iter().map(|r| r.checked).sum();
    let bad: Vec<String> = rs
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({} failures, e.g. {})", r.name, r.failures, r.counterexample.clone().unwrap_or_default()))
        .collect();
    Outcome {
        passed: bad.is_empty() && extra && checked > 0,
        detail: if bad.is_empty() {
            format!("{} properties, {checked} instances, 0 failures", rs.len())
        } else {
            bad.join("; ")
        },
    }
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, f64) {
    let t = Instant::now();
    let o = f();
    (o, t.elapsed().as_secs_f64())
}

#[test]
fn acceptance() {
    let scaling = timed(|| match bench(MapId::XiN, &DEFAULT_KS, DEFAULT_REPETITIONS) {
        Ok(r) => {
            let ratios = r.ratios();
            let shown: Vec<String> = ratios.iter().map(|x| format!("{x:.2}")).collect();
            Outcome {
                passed: ratios.len() == DEFAULT_KS.len() - 1
                    && ratios.iter().all(|x| (5.0..=12.0).contains(x))
                    && r.total_secs < 60.0,
                detail: format!("k = {DEFAULT_KS:?}, ratios [{}]", shown.join(", ")),
            }
        }
        Err(e) => Outcome { passed: false, detail: e.to_string() },
    });

    let bounds = EnumerationBounds::default();
    let conj = EnumerationBounds::extended();
    let mut lines = Vec::new();
    let mut record = |n: usize, title: &str, (o, secs): (Outcome, f64)| {
        let line = format!("{} {n:>2} {title}: {} [{secs:.1}s]", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        println!("{line}");
        lines.push((o.passed, line));
    };

    record(1, "BK relations", timed(|| {
        let t = Instant::now();
        let rs = verify::bk_suite(&bounds);
        let fast = t.elapsed().as_secs() < 120;
        let many = rs.iter().all(|r| r.checked >= 1000);
        suite_outcome(&rs, fast && many)
    }));

    record(2, "oracle equivalence", timed(|| {
        let rs = verify::oracle_suite(&bounds);
        let rsk = rs.iter().find(|r| r.name == "rsk = naive_rsk").map_or(0, |r| r.checked);
        // 3^(k*k) matrices for each k in 0..=3.
        suite_outcome(&rs, rsk == 1 + 3 + 81 + 19_683)
    }));

    record(3, "identity suite", timed(|| suite_outcome(&verify::identity_suite(&bounds), true)));

    record(4, "reduction suite", timed(|| {
        let rs = verify::reduction_suite(&bounds);
        let circuits = registry().len();
        let expected = [
            ("phi_via_psi", 2),
            ("zeta_via_xi", 3),
            ("zetaLR_via_rho1", 3),
            ("chi_via_xiN_closed", 3),
            ("xiN_via_phi", 1),
            ("varsigma_via_zeta", 3),
            ("theta_via_phi", 1),
        ];
        let costs_ok = expected.iter().all(|(n, c)| lookup(n).is_some_and(|r| r.declared_cost == *c && r.circuit.cost() == *c));
        let mut o = suite_outcome(&rs, circuits >= 18 && costs_ok);
        o.detail = format!("{circuits} circuits; {}", o.detail);
        o
    }));

    record(5, "largest minimal reduction cost", timed(|| {
        let g = ReductionGraph::standard();
        let max = g.max_min_cost(&CORE_MAPS);
        Outcome {
            passed: max == Some((MapId::Chi, MapId::Rho1, 36)),
            detail: match max {
                Some((s, t, c)) => format!("{c}, computing {s} from {t}"),
                None => "some pair is unreachable".into(),
            },
        }
    }));

    record(6, "cubic scaling of xiN", scaling);

    record(7, "agreement of the four symmetry maps", timed(|| {
        let r = probes::agreement_probe(&conj);
        Outcome {
            passed: r.checked > 0 && r.mismatches.is_empty(),
            detail: format!("{} LR tableaux, {} mismatches", r.checked, r.mismatches.len()),
        }
    }));

    record(8, "count symmetries", timed(|| {
        let c = probes::count_symmetry_probe(&conj);
        let o = probes::octahedral_count_probe(6);
        Outcome {
            passed: c.checked > 0 && c.mismatches.is_empty() && o.checked > 0 && o.mismatches.is_empty(),
            detail: format!(
                "{} triples with {} mismatches, {} octahedral quadruples with {} mismatches",
                c.checked,
                c.mismatches.len(),
                o.checked,
                o.mismatches.len()
            ),
        }
    }));

    record(9, "Hillman-Grassl", timed(|| suite_outcome(&verify::hillman_grassl_suite(), true)));

    record(10, "size neutrality", timed(|| {
        let rows = verify::size_report(&bounds);
        let worst = rows.iter().max_by(|a, b| a.max_ratio.total_cmp(&b.max_ratio)).expect("maps");
        let over: Vec<String> =
            rows.iter().filter(|r| r.max_ratio >= SIZE_BOUND).map(|r| format!("{} {:.3}", r.map, r.max_ratio)).collect();
        Outcome {
            passed: over.is_empty(),
            detail: if over.is_empty() {
                format!("{} maps, largest ratio {:.3} ({}) < {SIZE_BOUND}", rows.len(), worst.max_ratio, worst.map)
            } else {
                over.join(", ")
            },
        }
    }));

    let failed: Vec<&String> = lines.iter().filter(|(ok, _)| !ok).map(|(_, l)| l).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

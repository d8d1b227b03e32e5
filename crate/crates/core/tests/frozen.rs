use ytab::bijections::{self as bij, evacuation_of_canonical, hillman_grassl, PlaneFunction};
use ytab::circuits::{MapId, ReductionGraph, CORE_MAPS};
use ytab::oracles::{enumerate_lr, enumerate_tableaux, lr_coefficient};
use ytab::verify::chain_example;
use ytab::{IntMatrix, Partition, SkewShape, Tableau};

fn p(parts: &[i64]) -> Partition {
    Partition::from_slice(parts).unwrap()
}

fn t(outer: &[i64], inner: &[i64], rows: &[&[i64]]) -> Tableau {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    Tableau::from_rows(SkewShape::new(p(outer), p(inner)).unwrap(), &rows).unwrap()
}

#[test]
fn evacuation_values() {
    let can = Tableau::canonical(&p(&[2, 1]));
    assert_eq!(bij::xi(&can).unwrap().to_string(), "[[1,2],[2]]");
    assert_eq!(evacuation_of_canonical(&p(&[3, 1])).to_string(), "[[1,2,2],[2]]");
    let a = t(&[3, 2], &[], &[&[1, 1, 3], &[2, 3]]);
    assert_eq!(bij::xi(&a).unwrap().to_string(), "[[1,1,2],[3,3]]");
}

#[test]
fn rsk_values() {
    let id = IntMatrix::from_fn(2, |i, j| i64::from(i == j));
    let (b, a) = bij::rsk(&id).unwrap();
    assert_eq!((b.to_string(), a.to_string()), ("[[1,2]]".into(), "[[1,2]]".into()));
    let anti = IntMatrix::from_fn(2, |i, j| i64::from(i + j == 1));
    let (b, a) = bij::rsk(&anti).unwrap();
    assert_eq!((b.to_string(), a.to_string()), ("[[1],[2]]".into(), "[[1],[2]]".into()));
}

#[test]
fn rectification_value() {
    let a = t(&[2, 1], &[1], &[&[1], &[2]]);
    assert_eq!(bij::psi(&a).unwrap().to_string(), "[[1],[2]]");
    let b = t(&[2, 2], &[1], &[&[2], &[1, 3]]);
    assert_eq!(bij::psi(&b).unwrap().to_string(), "[[1,2],[3]]");
}

#[test]
fn lr_counts() {
    assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    assert_eq!(lr_coefficient(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
    assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1]), &p(&[2, 1])), 1);
    assert_eq!(enumerate_lr(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).len(), 2);
    assert_eq!(enumerate_tableaux(&SkewShape::normal(p(&[2, 1])), 3).len(), 8);
}

#[test]
fn symmetry_of_a_single_cell() {
    let a = t(&[2, 1, 1], &[1, 1, 1], &[&[1], &[], &[]]);
    assert_eq!(bij::rho1(&a).unwrap().to_string(), "[[.,1],[2],[3]]");
    assert_eq!(bij::rho3(&a).unwrap(), bij::rho1(&a).unwrap());
}

#[test]
fn chain_lengths() {
    let (a, want) = chain_example();
    assert_eq!(bij::rho3_chain_lengths(&a).unwrap()[3], want);
}

#[test]
fn hillman_grassl_single_box() {
    let f = PlaneFunction::new(p(&[1]), vec![vec![2]]).unwrap();
    assert_eq!(hillman_grassl(&f).unwrap(), f);
}

#[test]
fn graph_constant() {
    let g = ReductionGraph::standard();
    assert_eq!(g.max_min_cost(&CORE_MAPS), Some((MapId::Chi, MapId::Rho1, 36)));
    assert_eq!(g.min_cost(MapId::Phi, MapId::Psi), Some(2));
    assert_eq!(g.min_cost(MapId::XiN, MapId::Phi), Some(1));
}

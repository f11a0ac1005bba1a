use std::path::PathBuf;

use hypmat::jordan::{verify_representation, Algebra, PointSet, TargetMatroid};
use hypmat::matroid::{
    check_polymatroid, enumerate, verify_basis_exchange, Family, RankOracle, RankTable,
};

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn load(points: &str, matroid: &str) -> (PointSet, TargetMatroid) {
    (
        PointSet::from_json(&data(points)).unwrap(),
        TargetMatroid::from_json(&data(matroid)).unwrap(),
    )
}

/// Rank 3, every non-basis a 3-circuit, two lines meet in at most one point.
fn assert_paving_configuration(t: &TargetMatroid) {
    assert_eq!(t.rank, 3);
    let table = t.rank_table().unwrap();
    let bases = enumerate(&table, Family::Bases).unwrap();
    assert_eq!(verify_basis_exchange(&bases).unwrap(), None);
    let masks = t.nonbasis_masks().unwrap();
    for (i, a) in masks.iter().enumerate() {
        assert_eq!(table.rank(*a), 2);
        for b in &masks[i + 1..] {
            assert!((a & b).count_ones() <= 1);
        }
    }
    let circuits = enumerate(&table, Family::Circuits).unwrap();
    assert!(masks.iter().all(|m| circuits.contains(m)));
}

#[test]
fn non_pappus_quaternionic_points() {
    let (pts, target) = load("nonpappus_points.json", "nonpappus_matroid.json");
    assert_eq!((pts.algebra, pts.len(), target.ground), (Algebra::H, 9, 9));
    assert_paving_configuration(&target);
    let check = verify_representation(&pts, &target).unwrap();
    assert_eq!(check.subsets_checked, 512);
    assert!(check.represents, "{:?}", check.mismatches);
}

#[test]
fn complex_truncation_breaks_non_pappus() {
    let (pts, target) = load("nonpappus_points.json", "nonpappus_matroid.json");
    let check = verify_representation(&pts.truncate(Algebra::C).unwrap(), &target).unwrap();
    assert!(!check.represents);
    assert!(!check.mismatches.is_empty());
}

#[test]
fn non_desargues_octonionic_points() {
    let (pts, target) = load("nondesargues_points.json", "nondesargues_matroid.json");
    assert_eq!((pts.algebra, pts.len()), (Algebra::O, 10));
    assert_paving_configuration(&target);
    let check = verify_representation(&pts, &target).unwrap();
    assert_eq!(check.subsets_checked, 1024);
    assert!(check.represents, "{:?}", check.mismatches);
}

#[test]
fn point_ranks_form_polymatroids() {
    for (p, m) in [
        ("nonpappus_points.json", "nonpappus_matroid.json"),
        ("nondesargues_points.json", "nondesargues_matroid.json"),
    ] {
        let (pts, _) = load(p, m);
        let jm = hypmat::jordan::matroid_from_points(pts.projections().unwrap()).unwrap();
        let table = RankTable::from_oracle(&jm).unwrap();
        assert!(check_polymatroid(&table).is_ok());
    }
}

use std::fmt::Write as _;
use std::path::PathBuf;

use hbcells::combinatorics::{partitions, Partition};
use hbcells::decomposition::{cell, random_point, Cell};
use hbcells::field::{PrimeField, DEFAULT_PRIME};
use hbcells::hbmatrix::{generic_matrix, param_shape, ShapeKind};
use hbcells::localsb::BivarRing;
use hbcells::symbolic::{specialize, ParamBivarPoly};

#[test]
fn cells_round_trip_through_json() {
    for n in 1..=10 {
        for m in partitions(n).unwrap() {
            let c = cell(&m);
            let text = serde_json::to_string(&c).unwrap();
            let back: Cell = serde_json::from_str(&text).unwrap();
            assert_eq!(back, c, "{m}");
        }
    }
}

#[test]
fn polynomials_round_trip_through_strings() {
    let m = Partition::new(vec![1, 5, 8, 10]).unwrap();
    for g in cell(&m).minors {
        let back: ParamBivarPoly = g.to_string().parse().unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn seed_42_specialization_matches_golden() {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let ring = BivarRing::new(f);
    let mut out = String::new();
    for parts in [vec![1, 5, 8, 10], vec![2, 3, 5, 7], vec![1, 1, 1, 1, 2]] {
        let m = Partition::new(parts).unwrap();
        let (mat, index) = generic_matrix(&m, &param_shape(&m, ShapeKind::Full));
        let point = random_point(&f, index.len(), 42);
        let s = specialize(&mat, &point, &f).unwrap();
        let _ = writeln!(out, "m = {m}");
        let _ = writeln!(out, "point = {point:?}");
        for i in 1..=s.nrows() {
            let row: Vec<String> = s.row(i).iter().map(|p| ring.format(p)).collect();
            let _ = writeln!(out, "  {}", row.join(" | "));
        }
    }
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/specialize_seed42.txt");
    if std::env::var_os("HBCELLS_BLESS").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    assert_eq!(out, std::fs::read_to_string(&path).unwrap());
}

#![allow(dead_code)]

use std::path::PathBuf;

use hypmat::matroid::Hypergraph;
use hypmat::sampling::stream_rng;
use hypmat::vamoslab::hnk_hypergraph;

pub fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

pub fn hypergraph(name: &str) -> Hypergraph {
    Hypergraph::from_json(&data(name)).unwrap()
}

/// Random hypergraphs with `2n <= 12` and `2 <= d < n`, reproducible from `seed`.
pub fn random_hypergraphs(count: usize, seed: u64) -> Vec<Hypergraph> {
    let mut rng = stream_rng(seed, 0);
    (0..count)
        .map(|i| {
            let n = 3 + i % 4;
            let d = 2 + (i / 4) % (n - 2).clamp(1, 2);
            Hypergraph::random(n, d, 0.5, &mut rng).unwrap()
        })
        .collect()
}

/// Shipped hypergraphs, small families and seeded random instances; all
/// with `2n <= 12` and `d >= 2`.
pub fn corpus() -> Vec<Hypergraph> {
    let mut c: Vec<Hypergraph> = [
        "diamond.json",
        "burton_gn_5.json",
        "dfz.json",
        "complete_3_6.json",
    ]
    .iter()
    .map(|f| hypergraph(f))
    .collect();
    for n in 3..=6 {
        c.push(Hypergraph::empty(n, 2).unwrap());
        c.push(Hypergraph::complete(n, 2).unwrap());
    }
    c.push(Hypergraph::complete(5, 3).unwrap());
    c.push(Hypergraph::empty(6, 3).unwrap());
    for (n, k) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (4, 3)] {
        c.push(hnk_hypergraph(n, k).unwrap());
    }
    c.extend(random_hypergraphs(16, 7));
    c
}

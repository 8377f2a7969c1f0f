#![allow(dead_code)]

use coxlab::poset::{generators, lattice_structure, LatticeStructure, Poset};

pub const CORPUS_SEED: u64 = 20240531;

/// Distributive lattices: Boolean 1..4, chains 1..6, products of chains up
/// to 4×4 and J(q) for 50 seeded random q on 3 to 5 elements.
pub fn distributive_corpus() -> Vec<(String, LatticeStructure)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("boolean:{n}"), generators::boolean(n).unwrap()));
    }
    for n in 1..=6 {
        let c = generators::chain(n).unwrap();
        out.push((format!("chain:{n}"), lattice_structure(&c).unwrap()));
    }
    for a in 2..=4 {
        for b in a..=4 {
            out.push((format!("product:{a}:{b}"), generators::product_of_chains(a, b).unwrap()));
        }
    }
    for seed in 0..50u64 {
        let n = 3 + (seed % 3) as usize;
        out.push((
            format!("jrandom:{n} seed {seed}"),
            generators::jrandom(n, CORPUS_SEED + seed).unwrap(),
        ));
    }
    out
}

/// M3, N5, the eight-element lattice and ten seeded random lattices.
pub fn non_distributive_corpus() -> Vec<(String, LatticeStructure)> {
    let mut out = vec![
        ("m3".to_string(), generators::m3()),
        ("n5".to_string(), generators::n5()),
        ("paper-lattice8".to_string(), generators::paper_lattice8()),
    ];
    for (k, l) in generators::non_distributive_lattices(10, 6, CORPUS_SEED)
        .into_iter()
        .enumerate()
    {
        out.push((format!("nondistributive #{k}"), l));
    }
    out
}

pub fn lattice_corpus() -> Vec<(String, LatticeStructure)> {
    let mut out = distributive_corpus();
    out.extend(non_distributive_corpus());
    out
}

/// Every corpus lattice plus non-lattice posets: the ten-element poset,
/// antichains, all posets on up to four elements and seeded random posets.
pub fn poset_corpus() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = lattice_corpus()
        .into_iter()
        .map(|(n, l)| (n, l.into_poset()))
        .collect();
    out.push(("paper-poset10".into(), generators::paper_poset10()));
    for n in 1..=3 {
        out.push((format!("antichain:{n}"), generators::antichain(n).unwrap()));
    }
    for n in 1..=4 {
        for (k, p) in generators::all_posets(n).into_iter().enumerate() {
            out.push((format!("poset {n}.{k}"), p));
        }
    }
    for seed in 0..10 {
        out.push((
            format!("random:7 seed {seed}"),
            generators::random_poset(7, CORPUS_SEED + seed).unwrap(),
        ));
    }
    out
}

//! Standard families of posets and lattices, plus the two worked fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{birkhoff, lattice_structure, LatticeStructure, Poset, PosetError};

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn positive(family: &str, n: usize) -> Result<(), PosetError> {
    if n == 0 {
        return Err(PosetError::InvalidParameter(format!(
            "{family} needs at least one element"
        )));
    }
    Ok(())
}

/// The chain `1 < 2 < … < n`.
pub fn chain(n: usize) -> Result<Poset, PosetError> {
    positive("chain", n)?;
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_index_relations(numbered(n), &pairs)
}

/// `n` pairwise incomparable elements `1..n`.
pub fn antichain(n: usize) -> Result<Poset, PosetError> {
    positive("antichain", n)?;
    Poset::from_index_relations(numbered(n), &[])
}

/// The Boolean lattice of subsets of `{1..n}`; `boolean(0)` is a point.
pub fn boolean(n: usize) -> Result<LatticeStructure, PosetError> {
    if n == 0 {
        let point = Poset::from_index_relations(vec!["{}".into()], &[])?;
        return Ok(lattice_structure(&point).expect("a point is a lattice"));
    }
    birkhoff(&antichain(n)?)
}

fn five_element(labels: [&str; 5], pairs: &[(&str, &str)]) -> LatticeStructure {
    let p = Poset::from_relations(&labels, pairs).expect("valid fixture");
    lattice_structure(&p).expect("fixture is a lattice")
}

/// The diamond `M₃`.
pub fn m3() -> LatticeStructure {
    five_element(
        ["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
}

/// The pentagon `N₅` with `a < b`.
pub fn n5() -> LatticeStructure {
    five_element(
        ["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
}

/// Cartesian product with the componentwise order; labels are `(x,y)`.
pub fn product(p: &Poset, q: &Poset) -> Result<Poset, PosetError> {
    let (n, m) = (p.len(), q.len());
    let labels = (0..n * m)
        .map(|k| format!("({},{})", p.label(k / m), q.label(k % m)))
        .collect();
    let mut pairs = Vec::new();
    for &(x, y) in p.covers() {
        for b in 0..m {
            pairs.push((x * m + b, y * m + b));
        }
    }
    for &(x, y) in q.covers() {
        for a in 0..n {
            pairs.push((a * m + x, a * m + y));
        }
    }
    Poset::from_index_relations(labels, &pairs)
}

pub fn product_of_chains(a: usize, b: usize) -> Result<LatticeStructure, PosetError> {
    let p = product(&chain(a)?, &chain(b)?)?;
    Ok(lattice_structure(&p).expect("products of chains are lattices"))
}

/// A random naturally labelled poset: each pair `i < j` is related with
/// probability 2/5, independently. Deterministic for a fixed seed.
pub fn random_poset(n: usize, seed: u64) -> Result<Poset, PosetError> {
    positive("random", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.4) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_index_relations(numbered(n), &pairs)
}

/// `q` with a new bottom `bot` and a new top `top` adjoined.
pub fn with_bounds(q: &Poset) -> Result<Poset, PosetError> {
    let n = q.len();
    let mut labels = vec!["bot".to_string()];
    labels.extend(q.labels().iter().cloned());
    labels.push("top".into());
    let mut pairs: Vec<(usize, usize)> = q.covers().iter().map(|&(x, y)| (x + 1, y + 1)).collect();
    for x in 1..=n {
        pairs.push((0, x));
        pairs.push((x, n + 1));
    }
    if n == 0 {
        pairs.push((0, 1));
    }
    Poset::from_index_relations(labels, &pairs)
}

/// `random_poset(n, seed)` with a new bottom and top adjoined.
pub fn random_bounded(n: usize, seed: u64) -> Result<Poset, PosetError> {
    with_bounds(&random_poset(n, seed)?)
}

/// The ideal lattice of a random poset.
pub fn jrandom(n: usize, seed: u64) -> Result<LatticeStructure, PosetError> {
    birkhoff(&random_poset(n, seed)?)
}

/// Seeded non-distributive lattices found by rejection sampling over
/// [`random_bounded`] with `3..=max_core` interior elements.
pub fn non_distributive_lattices(count: usize, max_core: usize, seed: u64) -> Vec<LatticeStructure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<LatticeStructure> = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(3..=max_core.max(3));
        let p = random_bounded(n, rng.gen()).expect("valid size");
        if let Ok(l) = lattice_structure(&p) {
            if !l.is_distributive() && !out.iter().any(|o| o.poset().is_isomorphic(l.poset())) {
                out.push(l);
            }
        }
    }
    out
}

/// Every poset with `n` elements up to isomorphism, from natural labellings.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out: Vec<Poset> = Vec::new();
    let mut seen_rel = std::collections::HashSet::new();
    for mask in 0u64..(1u64 << slots.len()) {
        let pairs: Vec<(usize, usize)> = (0..slots.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| slots[b])
            .collect();
        let p = Poset::from_index_relations(numbered(n), &pairs).expect("natural labelling is acyclic");
        // Different masks often close to the same relation.
        if !seen_rel.insert(p.covers().to_vec()) {
            continue;
        }
        if !out.iter().any(|q| q.is_isomorphic(&p)) {
            out.push(p);
        }
    }
    out
}

/// The ten-element bounded poset of the grade-bijection worked example
/// (2-Gorenstein, not Auslander regular).
pub fn paper_poset10() -> Poset {
    let labels: Vec<String> = (0..10).map(|i| i.to_string()).collect();
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 5),
        (1, 4),
        (1, 7),
        (1, 8),
        (2, 4),
        (2, 6),
        (2, 8),
        (3, 4),
        (3, 6),
        (3, 7),
        (4, 9),
        (5, 6),
        (5, 7),
        (5, 8),
        (6, 9),
        (7, 9),
        (8, 9),
    ];
    Poset::from_index_relations(labels, &edges).expect("valid fixture")
}

/// The eight-element non-distributive lattice whose proper upper intervals
/// are all distributive.
pub fn paper_lattice8() -> LatticeStructure {
    let labels: Vec<String> = (1..=8).map(|i| i.to_string()).collect();
    let edges = [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 5),
        (2, 6),
        (3, 6),
        (4, 6),
        (4, 7),
        (5, 8),
        (6, 8),
        (7, 8),
    ];
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let p = Poset::from_index_relations(labels, &pairs).expect("valid fixture");
    lattice_structure(&p).expect("fixture is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let p = paper_poset10();
        assert_eq!(p.len(), 10);
        assert_eq!(p.covers().len(), 20);
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(9));

        let l = paper_lattice8();
        assert_eq!(l.len(), 8);
        assert_eq!(l.poset().covers().len(), 11);
        assert_eq!(l.poset().label(l.bottom()), "1");
        assert_eq!(l.poset().label(l.top()), "8");
        assert_eq!(l.poset().linext(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(!l.is_distributive());
        assert_eq!(l.meet_irreducibles().len(), 4);
    }

    #[test]
    fn boolean_zero_is_a_point() {
        let l = boolean(0).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_poset(6, 7).unwrap(), random_poset(6, 7).unwrap());
        assert_eq!(
            jrandom(4, 7).unwrap().poset(),
            jrandom(4, 7).unwrap().poset()
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(chain(0), Err(PosetError::InvalidParameter(_))));
        assert!(matches!(antichain(0), Err(PosetError::InvalidParameter(_))));
    }

    #[test]
    fn poset_counts() {
        // Numbers of unlabelled posets: 1, 2, 5, 16.
        let counts: Vec<usize> = (1..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }

    #[test]
    fn product_of_chains_sizes() {
        let l = product_of_chains(2, 3).unwrap();
        assert_eq!(l.len(), 6);
        assert!(l.is_distributive());
    }

    #[test]
    fn rejection_sampling_finds_non_distributive_lattices() {
        let ls = non_distributive_lattices(5, 5, 1);
        assert_eq!(ls.len(), 5);
        assert!(ls.iter().all(|l| !l.is_distributive()));
    }
}

mod common;

use std::sync::Arc;

use coxlab::analysis::{cartan_matrix, coxeter_matrix, distributive_via_coxeter};
use coxlab::homalg::{hom_dimension, pdim, IncidenceHomology, Representation};
use coxlab::poset::{birkhoff, generators, order_ideals, rowmotion_map, LatticeStructure, Poset};

/// Distributive iff no five-element sublattice is M3 or N5.
fn has_m3_or_n5(l: &LatticeStructure) -> bool {
    let n = l.len();
    let p = l.poset();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                let bottom = l.meet(a, c);
                let top = l.join(a, c);
                let diamond = a < b
                    && b < c
                    && l.meet(a, b) == bottom
                    && l.meet(b, c) == bottom
                    && l.join(a, b) == top
                    && l.join(b, c) == top
                    && ![bottom, top].contains(&a)
                    && ![bottom, top].contains(&b)
                    && ![bottom, top].contains(&c);
                let pentagon = p.lt(a, b)
                    && l.meet(b, c) == bottom
                    && l.join(b, c) == top
                    && l.join(a, c) == top
                    && bottom != a
                    && top != b
                    && bottom != c
                    && top != c;
                if diamond || pentagon {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn distributivity_agrees_with_sublattice_search() {
    for (name, l) in common::lattice_corpus() {
        assert_eq!(l.is_distributive(), !has_m3_or_n5(&l), "{name}");
        assert_eq!(distributive_via_coxeter(&l), l.is_distributive(), "{name}");
    }
}

#[test]
fn birkhoff_round_trip() {
    for (name, l) in common::distributive_corpus() {
        let ji = l.join_irreducibles();
        let rebuilt = birkhoff(&l.poset().induced(&ji)).unwrap();
        assert!(rebuilt.poset().is_isomorphic(l.poset()), "{name}");
    }
}

/// Rowmotion as toggles at each element of q, from the top of a linear
/// extension down.
fn toggle_rowmotion(q: &Poset, ideal: &[bool]) -> Vec<bool> {
    let mut cur = ideal.to_vec();
    for &x in q.linext().iter().rev() {
        let can_add = !cur[x] && q.lower_covers(x).iter().all(|&w| cur[w]);
        let can_remove = cur[x] && q.upper_covers(x).iter().all(|&y| !cur[y]);
        if can_add || can_remove {
            cur[x] = !cur[x];
        }
    }
    cur
}

#[test]
fn rowmotion_matches_toggle_composition() {
    for seed in 0..20 {
        let q = generators::random_poset(5, common::CORPUS_SEED + seed).unwrap();
        let l = birkhoff(&q).unwrap();
        let ideals = order_ideals(&q, 4096).unwrap();
        let row = rowmotion_map(&l).unwrap();
        let as_mask = |i: usize| -> Vec<bool> {
            let label = l.poset().label(i);
            let id = ideals.iter().find(|id| id.label(&q) == label).unwrap();
            (0..q.len()).map(|x| id.contains(x)).collect()
        };
        for (x, &r) in row.iter().enumerate() {
            assert_eq!(as_mask(r), toggle_rowmotion(&q, &as_mask(x)), "seed {seed} element {x}");
        }
    }
}

#[test]
fn cartan_entries_are_hom_dimensions() {
    for (name, p) in common::poset_corpus().into_iter().filter(|(_, p)| p.len() <= 12) {
        let base = Arc::new(p.clone());
        let ord = p.linext();
        let w = cartan_matrix(&p, ord).to_int_rows().unwrap();
        for i in 0..p.len() {
            let pi = Representation::projective(&base, ord[i]).unwrap();
            for j in 0..p.len() {
                let pj = Representation::projective(&base, ord[j]).unwrap();
                assert_eq!(hom_dimension(&pi, &pj) as i64, w[i][j], "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn projective_dimensions_count_filters() {
    for (name, p) in common::poset_corpus() {
        let base = Arc::new(p.clone());
        for x in 0..p.len() {
            let proj = Representation::projective(&base, x).unwrap();
            assert_eq!(proj.total_dim(), p.up_set(x).len(), "{name}");
        }
    }
}

#[test]
fn euler_rows_on_chains() {
    for n in 1..=6 {
        let l = coxlab::poset::lattice_structure(&generators::chain(n).unwrap()).unwrap();
        let enc = coxlab::poset::MeetIrreducibleEncoding::new(&l).unwrap();
        let c = coxeter_matrix(l.poset(), l.poset().linext()).to_int_rows().unwrap();
        for (x, expected) in c.iter().enumerate() {
            assert_eq!(&enc.euler_row(x).unwrap(), expected);
        }
    }
}

#[test]
fn homological_invariants_across_corpus() {
    let mut saw_ag = false;
    let mut saw_non_ag = false;
    for (name, p) in common::poset_corpus().into_iter().filter(|(_, p)| p.len() <= 16) {
        let h = IncidenceHomology::new(&p).unwrap();
        let ag = h.is_auslander_gorenstein().unwrap();
        let grades = h.grades().unwrap();
        let law = (0..p.len()).all(|x| grades[x] == h.pdim_injective(x));
        assert_eq!(ag, law, "{name}");
        saw_ag |= ag;
        saw_non_ag |= !ag;
        if p.is_bounded() {
            assert_eq!(grades[p.top().unwrap()], 0, "{name}");
            assert!(h.is_n_gorenstein(1), "{name}");
        }
        if ag {
            let phi = h.grade_permutation_ar().unwrap();
            assert_eq!(phi, h.grade_permutation_corollary().unwrap(), "{name}");
            let cog = h.cogrades().unwrap();
            assert!((0..p.len()).all(|x| cog[phi.apply(x)] == grades[x]), "{name}");
            for x in 0..p.len() {
                assert_eq!(h.grade_partner_by_cograde(x).unwrap(), phi.apply(x), "{name}");
            }
        }
    }
    assert!(saw_ag && saw_non_ag);
}

#[test]
fn direct_dimensions_match_engine() {
    let p = generators::paper_poset10();
    let base = Arc::new(p.clone());
    let h = IncidenceHomology::new(&p).unwrap();
    for x in 0..p.len() {
        let inj = Representation::injective(&base, x).unwrap();
        assert_eq!(pdim(&inj).unwrap(), h.pdim_injective(x));
        let s = Representation::simple(&base, x).unwrap();
        assert_eq!(pdim(&s).unwrap(), h.pdim_simple(x));
    }
}

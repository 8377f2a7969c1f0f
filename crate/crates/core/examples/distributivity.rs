//! A lattice is distributive exactly when the leftmost nonzero entries of
//! the rows of its Coxeter matrix lie in distinct columns.

use coxlab::analysis::distributive_via_coxeter;
use coxlab::linalg::leftmost_profile;
use coxlab::poset::generators;

fn main() {
    let mut lattices = vec![
        ("boolean(3)".to_string(), generators::boolean(3).unwrap()),
        ("product(3,3)".to_string(), generators::product_of_chains(3, 3).unwrap()),
        ("m3".to_string(), generators::m3()),
        ("n5".to_string(), generators::n5()),
        ("lattice8".to_string(), generators::paper_lattice8()),
    ];
    for (k, l) in generators::non_distributive_lattices(3, 6, 11).into_iter().enumerate() {
        lattices.push((format!("random{k} ({} elements)", l.len()), l));
    }
    for (name, l) in &lattices {
        let c = coxlab::analysis::coxeter_matrix(l.poset(), l.poset().linext());
        let profile: Vec<String> = leftmost_profile(&c)
            .iter()
            .map(|c| c.map_or("-".into(), |j| (j + 1).to_string()))
            .collect();
        println!(
            "{name:<24} distributive {:<5} PU form {:<5} leftmost columns {}",
            l.is_distributive(),
            distributive_via_coxeter(l),
            profile.join(" ")
        );
    }
}

//! Minimal resolutions over the 2-chain and the homological profile of a
//! few incidence algebras.

use std::sync::Arc;

use coxlab::homalg::{min_injective_coresolution, min_projective_resolution, IncidenceHomology, Representation};
use coxlab::poset::generators;

fn main() {
    let chain = Arc::new(generators::chain(2).unwrap());
    let a = Representation::regular_module(&chain);
    let cores = min_injective_coresolution(&a, 2).unwrap();
    println!("coresolution of A over the 2-chain: terms {:?}", cores.terms());
    let s = Representation::simple(&chain, 0).unwrap();
    let res = min_projective_resolution(&s, 2).unwrap();
    println!("resolution of S(1): terms {:?}, exact {}, minimal {}", res.terms(), res.is_exact(), res.is_minimal());
    println!("P(1) as a representation:\n{}", Representation::projective(&chain, 0).unwrap().dump());

    let cases = [
        ("boolean(3)", generators::boolean(3).unwrap().into_poset()),
        ("n5", generators::n5().into_poset()),
        ("ten-element", generators::paper_poset10()),
    ];
    for (name, p) in cases {
        let h = IncidenceHomology::new(&p).unwrap();
        let prof = h.profile().unwrap();
        println!(
            "{name}: gldim {}, grades {:?}, pdim I {:?}, Gorenstein level {}, AG {}",
            prof.gldim, prof.grade, prof.pdim_injective, prof.gorenstein_level, prof.is_auslander_gorenstein
        );
    }
}

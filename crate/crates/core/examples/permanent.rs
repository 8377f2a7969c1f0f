//! Permanents of Coxeter matrices: ±1 for a distributive lattice, −1501 for
//! the ten-element poset that is 2-Gorenstein but not Auslander regular.

use coxlab::analysis::coxeter_matrix;
use coxlab::linalg::{determinant, permanent, permanent_sparse};
use coxlab::poset::generators;

fn main() {
    let p = generators::paper_poset10();
    let c = coxeter_matrix(&p, p.linext());
    println!("ten-element poset: permanent {}", permanent(&c).unwrap());
    println!("                   determinant {}", determinant(&c).unwrap());

    for n in 1..=4 {
        let l = generators::boolean(n).unwrap();
        let c = coxeter_matrix(l.poset(), l.poset().linext());
        println!("boolean({n}): permanent {}", permanent(&c).unwrap());
    }

    let big = generators::boolean(5).unwrap();
    let c = coxeter_matrix(big.poset(), big.poset().linext());
    println!("boolean(5), 32x32 by sparse expansion: {}", permanent_sparse(&c, 1 << 22).unwrap());
}

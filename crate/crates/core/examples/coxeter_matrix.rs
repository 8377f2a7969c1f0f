//! Cartan and Coxeter matrices of the eight-element lattice, and the law
//! C · dim P(x) = −dim I(x).

use coxlab::analysis::{cartan_matrix, coxeter_matrix, dimension_vector, dimension_vector_law};
use coxlab::poset::generators;

fn main() {
    let l = generators::paper_lattice8();
    let p = l.poset();
    let ord = p.linext();
    println!("Cartan matrix (ordering {}):", p.labels().join(" "));
    print!("{}", cartan_matrix(p, ord).to_aligned());
    let c = coxeter_matrix(p, ord);
    println!("Coxeter matrix:");
    print!("{}", c.to_aligned());

    let x = p.require("2").unwrap();
    let image = c.mul(&dimension_vector(p, ord, x, true));
    println!(
        "C · dim P(2) = {:?}, dim I(2) = {:?}",
        image.to_int_rows().unwrap().concat(),
        dimension_vector(p, ord, x, false).to_int_rows().unwrap().concat()
    );
    println!("law holds for every element: {}", dimension_vector_law(p, ord));
}

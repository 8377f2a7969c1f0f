//! Rows of the Coxeter matrix predicted from reduced Euler characteristics
//! of the meet-irreducible encoding.

use coxlab::analysis::coxeter_matrix;
use coxlab::poset::{generators, MeetIrreducibleEncoding};

fn main() {
    let l = generators::paper_lattice8();
    let p = l.poset();
    let enc = MeetIrreducibleEncoding::new(&l).unwrap();
    println!("meet-irreducibles: {}", enc.m_poset.labels().join(" "));
    let c = coxeter_matrix(p, p.linext()).to_int_rows().unwrap();
    for x in p.linext().iter().copied() {
        let ideal = enc.zeta(x).map_or("(bottom)".to_string(), |z| z.label(&enc.m_poset));
        let row = enc.euler_row(x).unwrap();
        println!(
            "{}: ζ = {ideal:<8} row {:?} matches C: {}",
            p.label(x),
            row,
            row == c[x]
        );
    }
}

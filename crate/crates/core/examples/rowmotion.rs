//! On a distributive lattice the grade bijection, read either way, is
//! rowmotion, and the Coxeter permutation is its inverse.

use coxlab::analysis::coxeter_permutation;
use coxlab::homalg::IncidenceHomology;
use coxlab::linalg::Permutation;
use coxlab::poset::{generators, rowmotion_map};

fn main() {
    let l = generators::jrandom(4, 3).unwrap();
    let p = l.poset();
    println!("J(q) with {} ideals: {}", p.len(), p.labels().join(" "));
    let row = Permutation::new(rowmotion_map(&l).unwrap()).unwrap();
    let h = IncidenceHomology::new(p).unwrap();
    let ar = h.grade_permutation_ar().unwrap();
    let cor = h.grade_permutation_corollary().unwrap();
    let lambda = coxeter_permutation(p, p.linext());
    let show = |s: &Permutation| {
        (0..p.len())
            .map(|x| format!("{}->{}", p.label(x), p.label(s.apply(x))))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("rowmotion:        {}", show(&row));
    println!("grade (AR route): {}", show(&ar));
    println!("grade (corollary):{}", show(&cor));
    println!("coxeter λ:        {}", show(&lambda));
    println!("λ ∘ row = id: {}", lambda.compose(&row).is_identity());
    println!("rowmotion order: {:?}", row.cycles().iter().map(Vec::len).collect::<Vec<_>>());
}

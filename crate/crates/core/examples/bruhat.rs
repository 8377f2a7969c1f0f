//! Bruhat factorisation M = U1 · P · U2 of a 4×4 Coxeter matrix.

use coxlab::linalg::{bruhat, has_pu_form, Matrix, Permutation};

fn main() {
    let c = Matrix::from_int_rows(&[
        [0, 0, 0, -1],
        [0, 0, 1, -1],
        [0, 1, 0, -1],
        [-1, 1, 1, -1],
    ]);
    let f = bruhat(&c).unwrap();
    println!("U1:\n{}", f.u1.to_aligned());
    println!("P: {} {}", f.p, f.p.cycle_notation());
    println!("U2:\n{}", f.u2.to_aligned());
    println!("reconstructs: {}", f.reconstruct() == c);
    println!("PU form: {}", has_pu_form(&c));

    // Another upper unitriangular factor works with the same P.
    let u2 = Matrix::from_int_rows(&[
        [-1, 1, 1, -1],
        [0, 1, 0, -1],
        [0, 0, 1, -1],
        [0, 0, 0, -1],
    ]);
    let reversal = Permutation::new(vec![3, 2, 1, 0]).unwrap();
    println!("P · U2' = C: {}", reversal.to_matrix().mul(&u2) == c);
}

use coxlab::analysis::{cartan_matrix, coxeter_matrix};
use coxlab::linalg::{bruhat, determinant, permanent, Matrix, Permutation, Rational};
use coxlab::poset::generators;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small(), n * n).prop_map(move |v| {
        Matrix::from_fn(n, n, |i, j| Rational::from(v[i * n + j]))
    })
}

/// Upper triangular with the given diagonal and random entries above it.
fn upper(n: usize, unipotent: bool) -> impl Strategy<Value = Matrix> {
    (
        prop::collection::vec(small(), n * n),
        prop::collection::vec(prop_oneof![-2i64..=-1, 1i64..=2], n),
    )
        .prop_map(move |(v, d)| {
            Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => Rational::from(v[i * n + j]),
                std::cmp::Ordering::Equal if unipotent => Rational::one(),
                std::cmp::Ordering::Equal => Rational::from(d[i]),
                std::cmp::Ordering::Greater => Rational::zero(),
            })
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn naive_permanent(m: &Matrix) -> Rational {
    fn go(m: &Matrix, row: usize, used: &mut Vec<bool>) -> Rational {
        if row == m.rows() {
            return Rational::one();
        }
        let mut total = Rational::zero();
        for j in 0..m.cols() {
            if !used[j] && !m[(row, j)].is_zero() {
                used[j] = true;
                total += &(&m[(row, j)] * &go(m, row + 1, used));
                used[j] = false;
            }
        }
        total
    }
    go(m, 0, &mut vec![false; m.cols()])
}

fn cofactor_determinant(m: &Matrix) -> Rational {
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&k| k != j).collect();
        let minor = m.select_rows(&(1..n).collect::<Vec<_>>()).select_cols(&rest);
        let term = &m[(0, j)] * &cofactor_determinant(&minor);
        if j % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

fn sized<T: std::fmt::Debug, S: Strategy<Value = T>>(f: impl Fn(usize) -> S) -> impl Strategy<Value = T> {
    (1usize..=6).prop_flat_map(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bruhat_recovers_planted_permutation(
        (a, sigma, b) in sized(|n| (upper(n, false), permutation(n), upper(n, false)))
    ) {
        let m = a.mul(&sigma.to_matrix()).mul(&b);
        let f = bruhat(&m).unwrap();
        prop_assert_eq!(f.reconstruct(), m);
        prop_assert!(f.u1.is_upper_triangular() && f.u2.is_upper_triangular());
        prop_assert_eq!(f.p, sigma);
    }

    #[test]
    fn bruhat_permutation_is_invariant_under_unipotent_factors(
        (m, u, v) in sized(|n| (square(n), upper(n, true), upper(n, true)))
    ) {
        prop_assume!(!determinant(&m).unwrap().is_zero());
        let p = bruhat(&m).unwrap().p;
        prop_assert_eq!(bruhat(&u.mul(&m).mul(&v)).unwrap().p, p);
    }

    #[test]
    fn ryser_matches_naive_expansion(m in sized(square)) {
        prop_assert_eq!(permanent(&m).unwrap(), naive_permanent(&m));
    }

    #[test]
    fn bruhat_determinant_matches_elimination(m in sized(square)) {
        let det = determinant(&m).unwrap();
        prop_assert_eq!(&det, &cofactor_determinant(&m));
        if !det.is_zero() {
            let f = bruhat(&m).unwrap();
            let diag: Rational = f.u1.diagonal().into_iter().chain(f.u2.diagonal()).product();
            prop_assert_eq!(diag * Rational::from(f.p.sign()), det);
        }
    }

    #[test]
    fn permanent_is_invariant_under_reordering(seed in 0u64..1000, sigma in permutation(7)) {
        let p = generators::random_poset(7, seed).unwrap();
        let ord: Vec<usize> = p.linext().iter().map(|&x| p.linext()[sigma.apply(x)]).collect();
        let c1 = coxeter_matrix(&p, p.linext());
        let c2 = coxeter_matrix(&p, &ord);
        prop_assert_eq!(permanent(&c1).unwrap(), permanent(&c2).unwrap());
        // Reordering conjugates the Cartan matrix by a permutation matrix.
        let w1 = cartan_matrix(&p, p.linext());
        let w2 = cartan_matrix(&p, &ord);
        let pos: Vec<usize> = ord.iter().map(|x| p.linext().iter().position(|y| y == x).unwrap()).collect();
        let q = Permutation::new(pos).unwrap().to_matrix();
        prop_assert_eq!(w2, q.mul(&w1).mul(&q.transpose()));
    }
}

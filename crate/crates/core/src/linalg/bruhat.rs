//! Bruhat factorisation `M = U₁ · P · U₂` of invertible matrices.

use super::{LinalgError, Matrix, Permutation, Rational};

/// `u1 · p.to_matrix() · u2` reconstructs the factored matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatFactorisation {
    pub u1: Matrix,
    pub p: Permutation,
    pub u2: Matrix,
}

impl BruhatFactorisation {
    pub fn reconstruct(&self) -> Matrix {
        self.u1.mul(&self.p.to_matrix()).mul(&self.u2)
    }
}

/// Factors an invertible square matrix as `U₁ P U₂` with `U₁`, `U₂` upper
/// triangular.
///
/// Columns are swept left to right. In each column the pivot is the lowest
/// row not yet used that has a nonzero entry there; entries above it are
/// cleared with row operations (accumulated into `U₁`) and entries to its
/// right with column operations (accumulated into `U₂`). Every row operation
/// adds a lower row to a higher one and every column operation adds a left
/// column to a right one, so both accumulators stay upper unitriangular. The
/// pivot magnitudes are folded into `U₂`.
///
/// When every row of `m` has its leftmost nonzero entry in a distinct column
/// no row operation is ever needed and `U₁` is the identity.
pub fn bruhat(m: &Matrix) -> Result<BruhatFactorisation, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    // a = left · m · right throughout.
    let mut left = Matrix::identity(n);
    let mut right = Matrix::identity(n);
    let mut used = vec![false; n];
    let mut sigma = vec![usize::MAX; n];

    for c in 0..n {
        let r = (0..n)
            .rev()
            .find(|&r| !used[r] && !a[(r, c)].is_zero())
            .ok_or(LinalgError::Singular)?;
        used[r] = true;
        sigma[r] = c;
        let pivot = a[(r, c)].clone();

        for i in 0..r {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] / &pivot;
            for j in 0..n {
                let v = &f * &a[(r, j)];
                a[(i, j)] -= &v;
                let w = &f * &left[(r, j)];
                left[(i, j)] -= &w;
            }
        }
        for j in c + 1..n {
            if a[(r, j)].is_zero() {
                continue;
            }
            let f = &a[(r, j)] / &pivot;
            for i in 0..n {
                let v = &f * &a[(i, c)];
                a[(i, j)] -= &v;
                let w = &f * &right[(i, c)];
                right[(i, j)] -= &w;
            }
        }
    }

    let p = Permutation::new(sigma).expect("one pivot per row and column");
    // a = P · D with D[c][c] the pivot sitting in column c.
    let mut d = Matrix::zeros(n, n);
    for r in 0..n {
        let c = p.apply(r);
        d[(c, c)] = a[(r, c)].clone();
    }
    let u1 = left.invert()?;
    let u2 = d.mul(&right.invert()?);
    Ok(BruhatFactorisation { u1, p, u2 })
}

/// `true` iff every row has a nonzero entry and no two rows start in the
/// same column.
pub fn has_pu_form(m: &Matrix) -> bool {
    pu_permutation(m).is_some()
}

/// The leftmost-nonzero profile as a permutation, when it is one.
pub fn pu_permutation(m: &Matrix) -> Option<Permutation> {
    if !m.is_square() {
        return None;
    }
    let profile: Option<Vec<usize>> = m.leftmost_profile().into_iter().collect();
    Permutation::new(profile?).ok()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &Matrix) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut a = m.clone();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[(i, j)] * &a[(k, k)]) - &(&a[(i, k)] * &a[(k, j)]);
                a[(i, j)] = &v / &prev;
            }
            a[(i, k)] = Rational::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

use std::fmt;

use super::{LinalgError, Matrix, Rational};

/// A permutation of `0..n` in one-line notation: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, LinalgError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(LinalgError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The permutation with 1-based one-line notation `images`.
    pub fn from_one_based(images: &[usize]) -> Result<Permutation, LinalgError> {
        if images.contains(&0) {
            return Err(LinalgError::NotAPermutation(images.to_vec()));
        }
        Permutation::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Cycle decomposition, each cycle starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The permutation matrix with `P[i][σ(i)] = 1`.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &j) in self.images.iter().enumerate() {
            m[(i, j)] = Rational::one();
        }
        m
    }

    /// Reads a permutation back from a 0/1 matrix with exactly one 1 in
    /// every row and column.
    pub fn from_matrix(m: &Matrix) -> Result<Permutation, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotAPermutationMatrix);
        }
        let mut images = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut found = None;
            for (j, e) in m.row(i).iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if !e.is_one() || found.is_some() {
                    return Err(LinalgError::NotAPermutationMatrix);
                }
                found = Some(j);
            }
            images.push(found.ok_or(LinalgError::NotAPermutationMatrix)?);
        }
        Permutation::new(images).map_err(|_| LinalgError::NotAPermutationMatrix)
    }

    /// Cycle notation with 1-based points, fixed points included.
    pub fn cycle_notation(&self) -> String {
        if self.is_empty() {
            return "()".into();
        }
        self.cycles()
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_based())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", pts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversal_matrix_matches_printed_fixture() {
        let p = Permutation::from_one_based(&[4, 3, 2, 1]).unwrap();
        let expected = Matrix::from_int_rows(&[
            [0, 0, 0, 1],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [1, 0, 0, 0],
        ]);
        assert_eq!(p.to_matrix(), expected);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
    }

    #[test]
    fn rejects_non_permutation_matrices() {
        let twos = Matrix::from_int_rows(&[[2, 0], [0, 1]]);
        assert_eq!(
            Permutation::from_matrix(&twos),
            Err(LinalgError::NotAPermutationMatrix)
        );
        let doubled = Matrix::from_int_rows(&[[1, 1], [0, 1]]);
        assert!(Permutation::from_matrix(&doubled).is_err());
        let column_clash = Matrix::from_int_rows(&[[1, 0], [1, 0]]);
        assert!(Permutation::from_matrix(&column_clash).is_err());
    }

    #[test]
    fn cycles_and_sign() {
        let p = Permutation::from_one_based(&[2, 3, 1, 4]).unwrap();
        assert_eq!(p.cycle_notation(), "(1 2 3)(4)");
        assert_eq!(p.sign(), 1);
        assert_eq!(Permutation::from_one_based(&[2, 1]).unwrap().sign(), -1);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn matrix_of_composition_is_product() {
        let p = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let q = Permutation::from_one_based(&[3, 2, 1]).unwrap();
        // P_σ P_τ has its 1 in row i at column τ(σ(i)).
        assert_eq!(p.to_matrix().mul(&q.to_matrix()), q.compose(&p).to_matrix());
    }
}

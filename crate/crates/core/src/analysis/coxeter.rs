//! Cartan and Coxeter matrices of incidence algebras and the permutations
//! read off them.

use super::AnalysisError;
use crate::homalg::IncidenceHomology;
use crate::linalg::{bruhat, has_pu_form, Matrix, Permutation, Rational};
use crate::poset::{LatticeStructure, Poset};

/// How the elements are listed along the rows and columns of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingChoice {
    LinearExtension,
    Admissible,
    Explicit(Vec<usize>),
}

impl OrderingChoice {
    /// The element sequence; `homology` is used for admissible orderings and
    /// computed when absent.
    pub fn resolve(
        &self,
        p: &Poset,
        homology: Option<&IncidenceHomology>,
    ) -> Result<Vec<usize>, AnalysisError> {
        match self {
            OrderingChoice::LinearExtension => Ok(p.linext().to_vec()),
            OrderingChoice::Admissible => match homology {
                Some(h) => admissible_ordering(h),
                None => admissible_ordering(&IncidenceHomology::new(p)?),
            },
            OrderingChoice::Explicit(seq) => {
                let mut seen = vec![false; p.len()];
                for &x in seq {
                    if x >= p.len() || std::mem::replace(&mut seen[x], true) {
                        return Err(AnalysisError::InvalidOrdering(format!(
                            "{seq:?} is not a permutation of the {} elements",
                            p.len()
                        )));
                    }
                }
                if seq.len() != p.len() {
                    return Err(AnalysisError::InvalidOrdering(format!(
                        "ordering lists {} of {} elements",
                        seq.len(),
                        p.len()
                    )));
                }
                Ok(seq.clone())
            }
        }
    }

    /// Parses a whitespace-separated list of labels.
    pub fn from_labels(p: &Poset, text: &str) -> Result<OrderingChoice, AnalysisError> {
        let seq = text
            .split_whitespace()
            .map(|l| p.require(l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OrderingChoice::Explicit(seq))
    }
}

/// `ω[i][j] = 1` iff `ord[j] ≤ ord[i]`.
pub fn cartan_matrix(p: &Poset, ord: &[usize]) -> Matrix {
    Matrix::from_fn(ord.len(), ord.len(), |i, j| {
        if p.leq(ord[j], ord[i]) {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `C = −ωᵀ ω⁻¹`.
pub fn coxeter_matrix(p: &Poset, ord: &[usize]) -> Matrix {
    let omega = cartan_matrix(p, ord);
    let inv = omega.invert().expect("Cartan matrices are unitriangular up to reordering");
    omega.transpose().mul(&inv).neg()
}

/// Non-increasing grade, ties broken by position in the linear extension.
pub fn admissible_ordering(h: &IncidenceHomology) -> Result<Vec<usize>, AnalysisError> {
    let grades = h.grades()?;
    let mut ord = h.poset().linext().to_vec();
    ord.sort_by_key(|&x| std::cmp::Reverse(grades[x]));
    Ok(ord)
}

/// Rewrites a permutation of positions in `ord` as one of elements.
pub fn positions_to_elements(ord: &[usize], sigma: &Permutation) -> Permutation {
    let mut images = vec![0; ord.len()];
    for i in 0..ord.len() {
        images[ord[i]] = ord[sigma.apply(i)];
    }
    Permutation::new(images).expect("relabelled permutation")
}

/// Rewrites a permutation of elements as one of positions in `ord`.
pub fn elements_to_positions(ord: &[usize], sigma: &Permutation) -> Permutation {
    let mut pos = vec![0; ord.len()];
    for (i, &x) in ord.iter().enumerate() {
        pos[x] = i;
    }
    Permutation::new(ord.iter().map(|&x| pos[sigma.apply(x)]).collect())
        .expect("relabelled permutation")
}

/// Leftmost-nonzero profile of the Coxeter matrix as a map on elements when
/// it is a permutation, otherwise the Bruhat permutation.
pub fn coxeter_permutation(p: &Poset, ord: &[usize]) -> Permutation {
    let c = coxeter_matrix(p, ord);
    let sigma = match crate::linalg::pu_permutation(&c) {
        Some(lambda) => lambda,
        None => bruhat(&c).expect("Coxeter matrices are invertible").p,
    };
    positions_to_elements(ord, &sigma)
}

/// PU form of the Coxeter matrix under the linear extension.
pub fn distributive_via_coxeter(l: &LatticeStructure) -> bool {
    has_pu_form(&coxeter_matrix(l.poset(), l.poset().linext()))
}

/// Dimension vector of `P(x)` (`up`) or `I(x)` as a column in `ord`.
pub fn dimension_vector(p: &Poset, ord: &[usize], x: usize, up: bool) -> Matrix {
    Matrix::from_fn(ord.len(), 1, |i, _| {
        let inside = if up { p.leq(x, ord[i]) } else { p.leq(ord[i], x) };
        Rational::from(inside as i64)
    })
}

/// `C · dim P(x) = −dim I(x)` for every `x`.
pub fn dimension_vector_law(p: &Poset, ord: &[usize]) -> bool {
    let c = coxeter_matrix(p, ord);
    (0..p.len()).all(|x| {
        c.mul(&dimension_vector(p, ord, x, true)) == dimension_vector(p, ord, x, false).neg()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::permanent;
    use crate::poset::generators;

    fn linext(p: &Poset) -> Vec<usize> {
        p.linext().to_vec()
    }

    #[test]
    fn small_cartan_matrices() {
        let a = generators::antichain(3).unwrap();
        assert!(cartan_matrix(&a, &linext(&a)).is_identity());
        let c = generators::chain(2).unwrap();
        assert_eq!(cartan_matrix(&c, &linext(&c)), Matrix::from_int_rows(&[[1, 0], [1, 1]]));
    }

    #[test]
    fn three_chain_coxeter() {
        let c = generators::chain(3).unwrap();
        let cox = coxeter_matrix(&c, &linext(&c));
        assert_eq!(cox, Matrix::from_int_rows(&[[0, 0, -1], [1, 0, -1], [0, 1, -1]]));
        assert_eq!(coxeter_permutation(&c, &linext(&c)).images(), &[2, 0, 1]);
        assert!(dimension_vector_law(&c, &linext(&c)));
    }

    #[test]
    fn explicit_orderings_are_validated() {
        let c = generators::chain(3).unwrap();
        assert!(OrderingChoice::Explicit(vec![0, 0, 1]).resolve(&c, None).is_err());
        assert!(OrderingChoice::Explicit(vec![0, 1]).resolve(&c, None).is_err());
        let ord = OrderingChoice::from_labels(&c, "3 1 2").unwrap();
        assert_eq!(ord.resolve(&c, None).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn admissible_orderings() {
        let b = generators::boolean(2).unwrap();
        let ord = OrderingChoice::Admissible.resolve(b.poset(), None).unwrap();
        assert_eq!(ord.first(), Some(&b.bottom()));
        assert_eq!(ord.last(), Some(&b.top()));
        let a = generators::antichain(4).unwrap();
        assert_eq!(OrderingChoice::Admissible.resolve(&a, None).unwrap(), linext(&a));
    }

    #[test]
    fn reordering_conjugates() {
        let p = generators::paper_poset10();
        let ord = linext(&p);
        let mut rev = ord.clone();
        rev.reverse();
        let sigma = Permutation::new((0..p.len()).rev().collect()).unwrap().to_matrix();
        let (w1, w2) = (cartan_matrix(&p, &ord), cartan_matrix(&p, &rev));
        assert_eq!(w2, sigma.mul(&w1).mul(&sigma.transpose()));
        assert_eq!(
            permanent(&coxeter_matrix(&p, &ord)).unwrap(),
            permanent(&coxeter_matrix(&p, &rev)).unwrap()
        );
    }

    #[test]
    fn position_element_round_trip() {
        let ord = vec![2, 0, 1, 3];
        let sigma = Permutation::new(vec![1, 3, 0, 2]).unwrap();
        assert_eq!(elements_to_positions(&ord, &positions_to_elements(&ord, &sigma)), sigma);
    }

    #[test]
    fn distributivity_criterion_on_small_lattices() {
        assert!(distributive_via_coxeter(&generators::boolean(3).unwrap()));
        assert!(!distributive_via_coxeter(&generators::m3()));
        assert!(!distributive_via_coxeter(&generators::n5()));
        assert!(!distributive_via_coxeter(&generators::paper_lattice8()));
    }
}

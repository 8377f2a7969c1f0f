//! Minimal projective resolutions and injective coresolutions.

use std::sync::Arc;

use super::repr::{Morphism, Representation};
use super::HomalgError;
use crate::linalg::{Matrix, Rational};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal resolution. For the projective kind, `differentials[0]` is the
/// augmentation `P_0 → M` and `differentials[k]` is `P_k → P_{k-1}`. For the
/// injective kind, `differentials[0]` is `M → I^0` and `differentials[k]` is
/// `I^{k-1} → I^k`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub module: Representation,
    /// Indecomposable summands of each term, as elements in basis order.
    pub generators: Vec<Vec<usize>>,
    pub modules: Vec<Representation>,
    pub differentials: Vec<Morphism>,
}

impl Resolution {
    /// Index of the last nonzero term; 0 for the zero module.
    pub fn length(&self) -> usize {
        self.generators.len().saturating_sub(1)
    }

    /// Multiplicity of each indecomposable in each term.
    pub fn terms(&self) -> Vec<Vec<usize>> {
        let n = self.module.base().len();
        self.generators
            .iter()
            .map(|gens| {
                let mut mult = vec![0; n];
                for &g in gens {
                    mult[g] += 1;
                }
                mult
            })
            .collect()
    }

    /// Pointwise exactness of the augmented complex.
    pub fn is_exact(&self) -> bool {
        let n = self.module.base().len();
        let ranks: Vec<Vec<usize>> = self.differentials.iter().map(Morphism::ranks).collect();
        (0..n).all(|x| {
            let len = self.modules.len();
            if len == 0 {
                return self.module.dim(x) == 0;
            }
            // rank(into term k) + rank(out of term k) = dim of term k
            let edge = ranks[0][x] == self.module.dim(x);
            edge && (0..len).all(|k| {
                ranks[k][x] + ranks.get(k + 1).map_or(0, |r| r[x]) == self.modules[k].dim(x)
            })
        })
    }

    /// Each differential between terms vanishes on tops (projective) or
    /// socles (injective).
    pub fn is_minimal(&self) -> bool {
        let p = self.module.base().clone();
        (1..self.differentials.len()).all(|k| {
            let d = &self.differentials[k];
            (0..p.len()).all(|x| match self.kind {
                // Rows of P_{k-1} at x indexed by generators sitting at x.
                ResolutionKind::Projective => {
                    let basis = free_basis(&p, &self.generators[k - 1], x, true);
                    basis.iter().enumerate().all(|(i, &g)| {
                        self.generators[k - 1][g] != x || d.components[x].row(i).iter().all(Rational::is_zero)
                    })
                }
                ResolutionKind::Injective => {
                    let basis = free_basis(&p, &self.generators[k - 1], x, false);
                    basis.iter().enumerate().all(|(j, &g)| {
                        self.generators[k - 1][g] != x
                            || d.components[x].column(j).iter().all(Rational::is_zero)
                    })
                }
            })
        })
    }
}

/// Generators of a free (`up`) or cofree module present at `x`, in basis order.
fn free_basis(p: &Poset, gens: &[usize], x: usize, up: bool) -> Vec<usize> {
    (0..gens.len())
        .filter(|&g| if up { p.leq(gens[g], x) } else { p.leq(x, gens[g]) })
        .collect()
}

/// Projective cover `⊕ P(x_g) → M`, generators listed by element and then
/// by top basis vector.
pub fn projective_cover(m: &Representation) -> (Vec<usize>, Morphism) {
    let (gens, epi) = cover(m);
    let mut mult = vec![0; m.base().len()];
    for &g in &gens {
        mult[g] += 1;
    }
    (mult, epi)
}

fn cover(m: &Representation) -> (Vec<usize>, Morphism) {
    let base = m.base().clone();
    let top = m.top();
    let mut gens = Vec::new();
    let mut vectors = Vec::new();
    for x in 0..base.len() {
        for k in 0..top.dims[x] {
            gens.push(x);
            vectors.push(top.basis[x].select_cols(&[k]));
        }
    }
    let free = Representation::free(&base, &gens);
    let components = (0..base.len())
        .map(|y| {
            let mut c = Matrix::zeros(m.dim(y), 0);
            for g in 0..gens.len() {
                if base.leq(gens[g], y) {
                    c = c.hstack(&m.map(gens[g], y).mul(&vectors[g]));
                }
            }
            c
        })
        .collect();
    let epi = Morphism {
        source: free,
        target: m.clone(),
        components,
    };
    (gens, epi)
}

/// Injective envelope `M → ⊕ I(x_g)`, dual to the projective cover of `D(M)`.
pub fn injective_envelope(m: &Representation) -> (Vec<usize>, Morphism) {
    let op = Arc::new(m.base().opposite());
    let (mult, epi) = projective_cover(&m.dual_over(op));
    (mult, epi.dual_over(m.base()))
}

type Pieces = (Vec<Vec<usize>>, Vec<Representation>, Vec<Morphism>);

fn projective_over(
    m: &Representation,
    max_len: usize,
) -> Result<Pieces, HomalgError> {
    let mut generators = Vec::new();
    let mut modules = Vec::new();
    let mut differentials = Vec::new();
    let mut current = m.clone();
    let mut inclusion: Option<Morphism> = None;
    while !current.is_zero() {
        if generators.len() > max_len {
            return Err(HomalgError::LengthExceeded(max_len));
        }
        let (gens, epi) = cover(&current);
        let d = match &inclusion {
            None => epi.clone(),
            Some(inc) => inc.compose(&epi),
        };
        let (kernel, inc) = epi.kernel();
        generators.push(gens);
        modules.push(epi.source.clone());
        differentials.push(d);
        current = kernel;
        inclusion = Some(inc);
    }
    Ok((generators, modules, differentials))
}

/// Minimal projective resolution; fails once a term of degree beyond
/// `max_len` would be needed.
pub fn min_projective_resolution(m: &Representation, max_len: usize) -> Result<Resolution, HomalgError> {
    let (generators, modules, differentials) = projective_over(m, max_len)?;
    Ok(Resolution {
        kind: ResolutionKind::Projective,
        module: m.clone(),
        generators,
        modules,
        differentials,
    })
}

/// Minimal injective coresolution, the dual of the minimal projective
/// resolution of `D(M)` over the opposite poset.
pub fn min_injective_coresolution(m: &Representation, max_len: usize) -> Result<Resolution, HomalgError> {
    let op = Arc::new(m.base().opposite());
    let (generators, modules, differentials) = projective_over(&m.dual_over(op), max_len)?;
    let base = m.base();
    Ok(Resolution {
        kind: ResolutionKind::Injective,
        module: m.clone(),
        generators,
        modules: modules.iter().map(|q| q.dual_over(base.clone())).collect(),
        differentials: differentials.iter().map(|d| d.dual_over(base)).collect(),
    })
}

pub fn pdim(m: &Representation) -> Result<usize, HomalgError> {
    Ok(min_projective_resolution(m, m.base().len())?.length())
}

pub fn idim(m: &Representation) -> Result<usize, HomalgError> {
    Ok(min_injective_coresolution(m, m.base().len())?.length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::generators;

    fn arc(p: Poset) -> Arc<Poset> {
        Arc::new(p)
    }

    #[test]
    fn two_chain_simple_resolution() {
        // 0 → P(2) → P(1) → S(1) → 0
        let p = arc(generators::chain(2).unwrap());
        let s = Representation::simple(&p, 0).unwrap();
        let r = min_projective_resolution(&s, 4).unwrap();
        assert_eq!(r.terms(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(r.length(), 1);
        assert!(r.is_exact());
        assert!(r.is_minimal());
    }

    #[test]
    fn two_chain_regular_coresolution() {
        // 0 → A → I(2)² → I(1) → 0
        let p = arc(generators::chain(2).unwrap());
        let a = Representation::regular_module(&p);
        let r = min_injective_coresolution(&a, 4).unwrap();
        assert_eq!(r.terms(), vec![vec![0, 2], vec![1, 0]]);
        assert!(r.is_exact());
        assert!(r.is_minimal());
        for d in &r.differentials {
            d.validate().unwrap();
        }
    }

    #[test]
    fn covers_and_envelopes() {
        let p = arc(generators::n5().into_poset());
        for x in 0..p.len() {
            let s = Representation::simple(&p, x).unwrap();
            let (mult, epi) = projective_cover(&s);
            epi.validate().unwrap();
            assert!(epi.is_surjective());
            assert_eq!(mult.iter().sum::<usize>(), 1);
            assert_eq!(mult[x], 1);
            let (mult, mono) = injective_envelope(&s);
            mono.validate().unwrap();
            assert!(mono.is_injective());
            assert_eq!(mult[x], 1);
        }
    }

    #[test]
    fn projectives_and_injectives_have_dimension_zero() {
        let p = arc(generators::paper_lattice8().into_poset());
        for x in 0..p.len() {
            assert_eq!(pdim(&Representation::projective(&p, x).unwrap()).unwrap(), 0);
            assert_eq!(idim(&Representation::injective(&p, x).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn resolutions_of_random_modules_are_exact_and_minimal() {
        let p = arc(generators::boolean(3).unwrap().into_poset());
        let a = Representation::regular_module(&p);
        let d = Representation::cogenerator(&p);
        for m in [&a, &d] {
            let r = min_projective_resolution(m, 8).unwrap();
            assert!(r.is_exact() && r.is_minimal());
            let r = min_injective_coresolution(m, 8).unwrap();
            assert!(r.is_exact() && r.is_minimal());
        }
    }

    #[test]
    fn length_cap_is_enforced() {
        let p = arc(generators::chain(3).unwrap());
        let s = Representation::simple(&p, 0).unwrap();
        assert!(matches!(
            min_projective_resolution(&s, 0),
            Err(HomalgError::LengthExceeded(0))
        ));
    }
}

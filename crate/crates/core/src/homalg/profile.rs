//! Grade data of an incidence algebra, computed once from per-element
//! resolutions.

use std::sync::Arc;

use serde::Serialize;

use super::repr::Representation;
use super::resolution::{min_injective_coresolution, min_projective_resolution};
use super::HomalgError;
use crate::linalg::Permutation;
use crate::poset::Poset;

type Terms = Vec<Vec<usize>>;

/// Minimal (co)resolutions of every indecomposable projective, injective
/// and simple module, reduced to their term multiplicities.
#[derive(Debug, Clone)]
pub struct IncidenceHomology {
    poset: Arc<Poset>,
    /// Coresolution of `P(y)`, indexed by `y`.
    proj_cores: Vec<Terms>,
    /// Resolution of `I(x)`, indexed by `x`.
    inj_res: Vec<Terms>,
    /// Resolution of `S(x)`, indexed by `x`.
    simple_res: Vec<Terms>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalProfile {
    pub elements: Vec<String>,
    pub grade: Vec<usize>,
    pub cograde: Vec<usize>,
    pub pdim_injective: Vec<usize>,
    pub idim_projective: Vec<usize>,
    pub pdim_simple: Vec<usize>,
    pub perfect: Vec<bool>,
    pub gldim: usize,
    pub gorenstein_level: usize,
    pub is_auslander_gorenstein: bool,
    pub is_diagonal: Option<bool>,
    pub dominant_numbers: Option<Vec<usize>>,
}

fn sum_terms<'a>(n: usize, all: impl Iterator<Item = &'a Terms>) -> Terms {
    let mut out: Terms = Vec::new();
    for terms in all {
        for (k, t) in terms.iter().enumerate() {
            if out.len() <= k {
                out.push(vec![0; n]);
            }
            for x in 0..n {
                out[k][x] += t[x];
            }
        }
    }
    out
}

fn length(t: &Terms) -> usize {
    t.len().saturating_sub(1)
}

fn first_degree(terms: &Terms, x: usize) -> Option<usize> {
    terms.iter().position(|t| t[x] > 0)
}

impl IncidenceHomology {
    pub fn new(p: &Poset) -> Result<IncidenceHomology, HomalgError> {
        let base = Arc::new(p.clone());
        let n = base.len();
        let per_element = |x: usize| -> Result<(Terms, Terms, Terms), HomalgError> {
            let proj = Representation::projective(&base, x)?;
            let inj = Representation::injective(&base, x)?;
            let simple = Representation::simple(&base, x)?;
            Ok((
                min_injective_coresolution(&proj, n)?.terms(),
                min_projective_resolution(&inj, n)?.terms(),
                min_projective_resolution(&simple, n)?.terms(),
            ))
        };
        let results: Vec<Result<(Terms, Terms, Terms), HomalgError>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..n).map(|x| s.spawn(move || per_element(x))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("resolution worker panicked"))
                .collect()
        });
        let mut proj_cores = Vec::with_capacity(n);
        let mut inj_res = Vec::with_capacity(n);
        let mut simple_res = Vec::with_capacity(n);
        for r in results {
            let (a, b, c) = r?;
            proj_cores.push(a);
            inj_res.push(b);
            simple_res.push(c);
        }
        Ok(IncidenceHomology {
            poset: base,
            proj_cores,
            inj_res,
            simple_res,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    fn name(&self, x: usize) -> String {
        self.poset.label(x).to_string()
    }

    /// Term multiplicities of the minimal injective coresolution of `A`.
    pub fn regular_coresolution(&self) -> Terms {
        sum_terms(self.poset.len(), self.proj_cores.iter())
    }

    /// Term multiplicities of the minimal projective resolution of `D(A)`.
    pub fn cogenerator_resolution(&self) -> Terms {
        sum_terms(self.poset.len(), self.inj_res.iter())
    }

    pub fn projective_coresolution(&self, y: usize) -> &Terms {
        &self.proj_cores[y]
    }

    pub fn injective_resolution(&self, x: usize) -> &Terms {
        &self.inj_res[x]
    }

    pub fn simple_resolution(&self, x: usize) -> &Terms {
        &self.simple_res[x]
    }

    pub fn pdim_injective(&self, x: usize) -> usize {
        length(&self.inj_res[x])
    }

    pub fn idim_projective(&self, y: usize) -> usize {
        length(&self.proj_cores[y])
    }

    pub fn pdim_simple(&self, x: usize) -> usize {
        length(&self.simple_res[x])
    }

    pub fn gldim(&self) -> usize {
        (0..self.poset.len()).map(|x| self.pdim_simple(x)).max().unwrap_or(0)
    }

    pub fn idim_regular(&self) -> usize {
        (0..self.poset.len()).map(|y| self.idim_projective(y)).max().unwrap_or(0)
    }

    pub fn grade(&self, x: usize) -> Result<usize, HomalgError> {
        first_degree(&self.regular_coresolution(), x).ok_or_else(|| {
            HomalgError::InternalInconsistency(format!("I({}) never occurs", self.name(x)))
        })
    }

    pub fn cograde(&self, x: usize) -> Result<usize, HomalgError> {
        first_degree(&self.cogenerator_resolution(), x).ok_or_else(|| {
            HomalgError::InternalInconsistency(format!("P({}) never occurs", self.name(x)))
        })
    }

    pub fn grades(&self) -> Result<Vec<usize>, HomalgError> {
        (0..self.poset.len()).map(|x| self.grade(x)).collect()
    }

    pub fn cogrades(&self) -> Result<Vec<usize>, HomalgError> {
        (0..self.poset.len()).map(|x| self.cograde(x)).collect()
    }

    /// `pdim I^i` for each term of the coresolution of `A`.
    pub fn coresolution_term_pdims(&self) -> Vec<usize> {
        self.regular_coresolution()
            .iter()
            .map(|t| {
                (0..t.len())
                    .filter(|&x| t[x] > 0)
                    .map(|x| self.pdim_injective(x))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// `pdim I^i ≤ i` for every `i < n`.
    pub fn is_n_gorenstein(&self, n: usize) -> bool {
        self.coresolution_term_pdims()
            .iter()
            .enumerate()
            .take(n)
            .all(|(i, &d)| d <= i)
    }

    /// Largest `n` with [`Self::is_n_gorenstein`], capped at `idim A + 1`.
    pub fn gorenstein_level(&self) -> usize {
        let pd = self.coresolution_term_pdims();
        pd.iter()
            .enumerate()
            .position(|(i, &d)| d > i)
            .unwrap_or(pd.len())
    }

    fn grade_matches_pdim(&self) -> Result<bool, HomalgError> {
        Ok(self
            .grades()?
            .iter()
            .enumerate()
            .all(|(x, &g)| g == self.pdim_injective(x)))
    }

    /// Checks `grade S(x) = pdim I(x)` for all `x` and the defining bound on
    /// every coresolution term; the two verdicts must agree.
    pub fn is_auslander_gorenstein(&self) -> Result<bool, HomalgError> {
        let by_grades = self.grade_matches_pdim()?;
        let direct = self.is_n_gorenstein(usize::MAX);
        if by_grades != direct {
            return Err(HomalgError::InternalInconsistency(format!(
                "grade criterion says {by_grades}, term bound says {direct}"
            )));
        }
        Ok(direct)
    }

    fn require_ag(&self) -> Result<(), HomalgError> {
        if self.is_auslander_gorenstein()? {
            Ok(())
        } else {
            Err(HomalgError::NotAuslanderGorenstein)
        }
    }

    /// Degrees `l` with `pdim I^i < pdim I^l` for all `i < l`.
    pub fn dominant_numbers(&self) -> Result<Vec<usize>, HomalgError> {
        self.require_ag()?;
        let pd = self.coresolution_term_pdims();
        Ok((0..pd.len())
            .filter(|&l| pd[..l].iter().all(|&d| d < pd[l]))
            .collect())
    }

    pub fn perfect_simples(&self) -> Result<Vec<usize>, HomalgError> {
        self.require_ag()?;
        let grades = self.grades()?;
        Ok((0..self.poset.len())
            .filter(|&x| grades[x] == self.pdim_simple(x))
            .collect())
    }

    pub fn is_diagonal(&self) -> Result<bool, HomalgError> {
        Ok(self.perfect_simples()?.len() == self.poset.len())
    }

    /// `x ↦ y` where `P(y)` is the last term of the resolution of `I(x)`.
    pub fn grade_permutation_ar(&self) -> Result<Permutation, HomalgError> {
        self.require_ag()?;
        let images = (0..self.poset.len())
            .map(|x| {
                let last = self.inj_res[x].last().expect("I(x) is nonzero");
                if last.iter().sum::<usize>() != 1 {
                    return Err(HomalgError::LastTermDecomposable(self.name(x)));
                }
                Ok(last.iter().position(|&m| m == 1).expect("one summand"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.to_permutation(images)
    }

    /// `x ↦` the unique `y` with `idim P(y) = grade S(x)` whose coresolution
    /// contains `I(x)`.
    pub fn grade_permutation_corollary(&self) -> Result<Permutation, HomalgError> {
        self.require_ag()?;
        let grades = self.grades()?;
        let images = (0..self.poset.len())
            .map(|x| {
                let found: Vec<usize> = (0..self.poset.len())
                    .filter(|&y| {
                        self.idim_projective(y) == grades[x]
                            && self.proj_cores[y].iter().any(|t| t[x] > 0)
                    })
                    .collect();
                match found.as_slice() {
                    [y] => Ok(*y),
                    _ => Err(HomalgError::NotUnique(self.name(x), found.len())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.to_permutation(images)
    }

    /// Among the `y` with `I(x)` in degree `grade S(x)` of the coresolution
    /// of `P(y)`, the unique one whose `cograde S(y)` equals that grade.
    pub fn grade_partner_by_cograde(&self, x: usize) -> Result<usize, HomalgError> {
        let r = self.grade(x)?;
        let cogrades = self.cogrades()?;
        let found: Vec<usize> = (0..self.poset.len())
            .filter(|&y| self.proj_cores[y].get(r).is_some_and(|t| t[x] > 0) && cogrades[y] == r)
            .collect();
        match found.as_slice() {
            [y] => Ok(*y),
            _ => Err(HomalgError::NotUnique(self.name(x), found.len())),
        }
    }

    fn to_permutation(&self, images: Vec<usize>) -> Result<Permutation, HomalgError> {
        Permutation::new(images.clone()).map_err(|_| {
            HomalgError::InternalInconsistency(format!("grade map {images:?} is not bijective"))
        })
    }

    pub fn profile(&self) -> Result<HomologicalProfile, HomalgError> {
        let n = self.poset.len();
        let grade = self.grades()?;
        let ag = self.is_auslander_gorenstein()?;
        Ok(HomologicalProfile {
            elements: self.poset.labels().to_vec(),
            cograde: self.cogrades()?,
            pdim_injective: (0..n).map(|x| self.pdim_injective(x)).collect(),
            idim_projective: (0..n).map(|y| self.idim_projective(y)).collect(),
            pdim_simple: (0..n).map(|x| self.pdim_simple(x)).collect(),
            perfect: (0..n).map(|x| grade[x] == self.pdim_simple(x)).collect(),
            grade,
            gldim: self.gldim(),
            gorenstein_level: self.gorenstein_level(),
            is_auslander_gorenstein: ag,
            is_diagonal: if ag { Some(self.is_diagonal()?) } else { None },
            dominant_numbers: if ag { Some(self.dominant_numbers()?) } else { None },
        })
    }
}

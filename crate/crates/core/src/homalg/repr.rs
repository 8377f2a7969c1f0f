//! Representations of incidence algebras and their morphisms.

use std::fmt::Write as _;
use std::sync::Arc;

use super::HomalgError;
use crate::linalg::{Matrix, Rational};
use crate::poset::Poset;

/// A representation of the incidence algebra of `base`: a vector space of
/// dimension `dims[x]` at every element and a linear map `M_x → M_y` for
/// every comparable pair `x ≤ y`, acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    base: Arc<Poset>,
    dims: Vec<usize>,
    maps: Vec<Option<Matrix>>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation(dims {:?})", self.dims)
    }
}

impl Representation {
    /// Builds a representation from a map-producing closure and checks
    /// identity and functoriality.
    pub fn new(
        base: Arc<Poset>,
        dims: Vec<usize>,
        mut map: impl FnMut(usize, usize) -> Matrix,
    ) -> Result<Representation, HomalgError> {
        let r = Representation::build(base, dims, &mut map);
        r.validate()?;
        Ok(r)
    }

    pub(crate) fn build(
        base: Arc<Poset>,
        dims: Vec<usize>,
        map: &mut dyn FnMut(usize, usize) -> Matrix,
    ) -> Representation {
        let n = base.len();
        assert_eq!(dims.len(), n, "one dimension per element");
        let mut maps = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                if base.leq(x, y) {
                    maps[x * n + y] = Some(if x == y {
                        Matrix::identity(dims[x])
                    } else {
                        map(x, y)
                    });
                }
            }
        }
        Representation { base, dims, maps }
    }

    /// The zero representation.
    pub fn zero(base: &Arc<Poset>) -> Representation {
        let dims = vec![0; base.len()];
        Representation::build(base.clone(), dims, &mut |_, _| Matrix::zeros(0, 0))
    }

    /// `⊕_g P(gens[g])`. At `y` the basis is the generators `g` with
    /// `gens[g] ≤ y`, in order.
    pub fn free(base: &Arc<Poset>, gens: &[usize]) -> Representation {
        let p = base.clone();
        let support = |y: usize| -> Vec<usize> {
            (0..gens.len()).filter(|&g| p.leq(gens[g], y)).collect()
        };
        let dims = (0..base.len()).map(|y| support(y).len()).collect();
        Representation::build(base.clone(), dims, &mut |x, y| {
            let (sx, sy) = (support(x), support(y));
            let mut m = Matrix::zeros(sy.len(), sx.len());
            for (j, g) in sx.iter().enumerate() {
                let i = sy.binary_search(g).expect("support grows upward");
                m[(i, j)] = Rational::one();
            }
            m
        })
    }

    /// `⊕_g I(cogens[g])`. At `y` the basis is the cogenerators `g` with
    /// `y ≤ cogens[g]`, in order.
    pub fn cofree(base: &Arc<Poset>, cogens: &[usize]) -> Representation {
        let p = base.clone();
        let support = |y: usize| -> Vec<usize> {
            (0..cogens.len()).filter(|&g| p.leq(y, cogens[g])).collect()
        };
        let dims = (0..base.len()).map(|y| support(y).len()).collect();
        Representation::build(base.clone(), dims, &mut |x, y| {
            let (sx, sy) = (support(x), support(y));
            let mut m = Matrix::zeros(sy.len(), sx.len());
            for (i, g) in sy.iter().enumerate() {
                let j = sx.binary_search(g).expect("support shrinks upward");
                m[(i, j)] = Rational::one();
            }
            m
        })
    }

    pub fn simple(base: &Arc<Poset>, x: usize) -> Result<Representation, HomalgError> {
        check_element(base, x)?;
        let dims = (0..base.len()).map(|y| (y == x) as usize).collect();
        Ok(Representation::build(base.clone(), dims, &mut |a, b| {
            Matrix::zeros((b == x) as usize, (a == x) as usize)
        }))
    }

    pub fn projective(base: &Arc<Poset>, x: usize) -> Result<Representation, HomalgError> {
        check_element(base, x)?;
        Ok(Representation::free(base, &[x]))
    }

    pub fn injective(base: &Arc<Poset>, x: usize) -> Result<Representation, HomalgError> {
        check_element(base, x)?;
        Ok(Representation::cofree(base, &[x]))
    }

    /// `A = ⊕_x P(x)`.
    pub fn regular_module(base: &Arc<Poset>) -> Representation {
        let all: Vec<usize> = (0..base.len()).collect();
        Representation::free(base, &all)
    }

    /// `D(A) = ⊕_x I(x)`.
    pub fn cogenerator(base: &Arc<Poset>) -> Representation {
        let all: Vec<usize> = (0..base.len()).collect();
        Representation::cofree(base, &all)
    }

    pub fn base(&self) -> &Arc<Poset> {
        &self.base
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// The structure map `M_x → M_y`; panics unless `x ≤ y`.
    pub fn map(&self, x: usize, y: usize) -> &Matrix {
        self.maps[x * self.base.len() + y]
            .as_ref()
            .expect("structure maps exist only for comparable pairs")
    }

    /// Identity on the diagonal, correct shapes and `M(y,z)·M(x,y) = M(x,z)`.
    pub fn validate(&self) -> Result<(), HomalgError> {
        let p = &self.base;
        let n = p.len();
        for x in 0..n {
            for y in 0..n {
                if !p.leq(x, y) {
                    continue;
                }
                let m = self.map(x, y);
                if m.rows() != self.dims[y] || m.cols() != self.dims[x] {
                    return Err(HomalgError::Invalid(format!(
                        "map {}→{} has shape {}x{}",
                        p.label(x),
                        p.label(y),
                        m.rows(),
                        m.cols()
                    )));
                }
                if x == y && !m.is_identity() {
                    return Err(HomalgError::Invalid(format!(
                        "map at {} is not the identity",
                        p.label(x)
                    )));
                }
                for z in 0..n {
                    if p.leq(y, z) && &self.map(y, z).mul(m) != self.map(x, z) {
                        return Err(HomalgError::Invalid(format!(
                            "functoriality fails on {} ≤ {} ≤ {}",
                            p.label(x),
                            p.label(y),
                            p.label(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The dual representation over the opposite poset `base`, which must be
    /// the opposite of `self.base()`.
    pub(crate) fn dual_over(&self, base: Arc<Poset>) -> Representation {
        let n = self.base.len();
        let mut maps = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                if self.base.leq(x, y) {
                    maps[y * n + x] = Some(self.map(x, y).transpose());
                }
            }
        }
        Representation {
            base,
            dims: self.dims.clone(),
            maps,
        }
    }

    /// The dual representation `D(M)` over the opposite poset.
    pub fn dual(&self) -> Representation {
        self.dual_over(Arc::new(self.base.opposite()))
    }

    /// Image of the radical at `x`, spanned by the images of the maps from
    /// lower covers.
    fn radical_span(&self, x: usize) -> Matrix {
        let lower = self.base.lower_covers(x);
        let mut span = Matrix::zeros(self.dims[x], 0);
        for &w in lower {
            span = span.hstack(self.map(w, x));
        }
        span
    }

    /// Top dimensions with a basis witness: at each `x`, coordinate vectors
    /// of `M_x` complementing the radical.
    pub fn top(&self) -> Layer {
        let mut dims = Vec::with_capacity(self.dims.len());
        let mut basis = Vec::with_capacity(self.dims.len());
        for x in 0..self.base.len() {
            let coords = self.radical_span(x).complement_coordinates();
            dims.push(coords.len());
            let mut b = Matrix::zeros(self.dims[x], coords.len());
            for (k, &c) in coords.iter().enumerate() {
                b[(c, k)] = Rational::one();
            }
            basis.push(b);
        }
        Layer { dims, basis }
    }

    pub fn radical(&self) -> Vec<usize> {
        (0..self.base.len())
            .map(|x| self.radical_span(x).rank())
            .collect()
    }

    /// Socle dimensions with a basis: at each `x`, the common kernel of the
    /// maps to upper covers.
    pub fn socle(&self) -> Layer {
        let mut dims = Vec::with_capacity(self.dims.len());
        let mut basis = Vec::with_capacity(self.dims.len());
        for x in 0..self.base.len() {
            let mut stacked = Matrix::zeros(0, self.dims[x]);
            for &y in self.base.upper_covers(x) {
                stacked = stacked.vstack(self.map(x, y));
            }
            let ns = stacked.nullspace().basis;
            dims.push(ns.cols());
            basis.push(ns);
        }
        Layer { dims, basis }
    }

    /// Debug dump: `x: dim` per element, then `x<=y:` and the matrix text
    /// for every strictly comparable pair.
    pub fn dump(&self) -> String {
        let p = &self.base;
        let mut s = String::new();
        for x in 0..p.len() {
            let _ = writeln!(s, "{}: {}", p.label(x), self.dims[x]);
        }
        for x in 0..p.len() {
            for y in 0..p.len() {
                if p.lt(x, y) {
                    let _ = write!(s, "{}<={}:\n{}", p.label(x), p.label(y), self.map(x, y).to_text());
                }
            }
        }
        s
    }
}

fn check_element(base: &Poset, x: usize) -> Result<(), HomalgError> {
    if x >= base.len() {
        return Err(HomalgError::UnknownElement(x.to_string()));
    }
    Ok(())
}

/// Per-element dimensions of a top or socle with chosen basis vectors.
#[derive(Debug, Clone)]
pub struct Layer {
    pub dims: Vec<usize>,
    pub basis: Vec<Matrix>,
}

/// A morphism of representations over the same poset.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: Representation,
    pub target: Representation,
    pub components: Vec<Matrix>,
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism({:?} -> {:?})", self.source.dims, self.target.dims)
    }
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        components: Vec<Matrix>,
    ) -> Result<Morphism, HomalgError> {
        let f = Morphism {
            source,
            target,
            components,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(m: &Representation) -> Morphism {
        let components = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
        Morphism {
            source: m.clone(),
            target: m.clone(),
            components,
        }
    }

    /// Shapes agree and `f_y · S(x,y) = T(x,y) · f_x` for all `x ≤ y`.
    pub fn validate(&self) -> Result<(), HomalgError> {
        let p = self.source.base.clone();
        let n = p.len();
        if self.components.len() != n || self.target.base.len() != n {
            return Err(HomalgError::Invalid("component count".into()));
        }
        for x in 0..n {
            let c = &self.components[x];
            if c.rows() != self.target.dims[x] || c.cols() != self.source.dims[x] {
                return Err(HomalgError::Invalid(format!(
                    "component at {} has the wrong shape",
                    p.label(x)
                )));
            }
        }
        for x in 0..n {
            for &y in p.upper_covers(x) {
                let lhs = self.components[y].mul(self.source.map(x, y));
                let rhs = self.target.map(x, y).mul(&self.components[x]);
                if lhs != rhs {
                    return Err(HomalgError::Invalid(format!(
                        "square {}→{} does not commute",
                        p.label(x),
                        p.label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Morphism {
        let components = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| g.mul(f))
            .collect();
        Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(Matrix::rank).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.ranks()
            .iter()
            .zip(&self.source.dims)
            .all(|(r, d)| r == d)
    }

    pub fn is_surjective(&self) -> bool {
        self.ranks()
            .iter()
            .zip(&self.target.dims)
            .all(|(r, d)| r == d)
    }

    /// The kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, Morphism) {
        let p = self.source.base.clone();
        let spaces: Vec<_> = self.components.iter().map(Matrix::nullspace).collect();
        let dims = spaces.iter().map(|ns| ns.basis.cols()).collect();
        let src = &self.source;
        let kernel = Representation::build(p, dims, &mut |x, y| {
            // The basis at y is the identity on its free rows, so coordinates
            // of a kernel vector are read off there.
            src.map(x, y)
                .mul(&spaces[x].basis)
                .select_rows(&spaces[y].free)
        });
        let inclusion = Morphism {
            source: kernel.clone(),
            target: self.source.clone(),
            components: spaces.into_iter().map(|ns| ns.basis).collect(),
        };
        (kernel, inclusion)
    }

    /// The dual morphism `D(T) → D(S)` over the opposite poset `base`.
    pub(crate) fn dual_over(&self, base: &Arc<Poset>) -> Morphism {
        Morphism {
            source: self.target.dual_over(base.clone()),
            target: self.source.dual_over(base.clone()),
            components: self.components.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// `dim Hom(M, N)`, by solving the commuting-square equations directly.
pub fn hom_dimension(m: &Representation, n: &Representation) -> usize {
    let p = m.base.clone();
    let count = p.len();
    let mut offsets = Vec::with_capacity(count);
    let mut unknowns = 0;
    for x in 0..count {
        offsets.push(unknowns);
        unknowns += n.dims[x] * m.dims[x];
    }
    // f_x is n.dims[x] × m.dims[x], flattened row-major.
    let var = |x: usize, i: usize, j: usize| offsets[x] + i * m.dims[x] + j;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for &(x, y) in p.covers() {
        let (mxy, nxy) = (m.map(x, y), n.map(x, y));
        // (f_y · M(x,y) − N(x,y) · f_x)[i][j] = 0
        for i in 0..n.dims[y] {
            for j in 0..m.dims[x] {
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..m.dims[y] {
                    row[var(y, i, k)] += &mxy[(k, j)];
                }
                for k in 0..n.dims[x] {
                    row[var(x, k, j)] -= &nxy[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    let entries = rows.concat();
    let system = Matrix::new(entries.len() / unknowns.max(1), unknowns, entries)
        .expect("rectangular system");
    unknowns - system.rank()
}

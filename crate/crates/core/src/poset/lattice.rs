use super::Poset;

/// A poset together with its meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeStructure {
    base: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Why a poset is not a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotALattice {
    Empty,
    NoMeet(usize, usize),
    NoJoin(usize, usize),
}

impl NotALattice {
    pub fn describe(&self, p: &Poset) -> String {
        match *self {
            NotALattice::Empty => "empty poset".into(),
            NotALattice::NoMeet(a, b) => {
                format!("{} and {} have no greatest lower bound", p.label(a), p.label(b))
            }
            NotALattice::NoJoin(a, b) => {
                format!("{} and {} have no least upper bound", p.label(a), p.label(b))
            }
        }
    }
}

fn least_of(p: &Poset, cands: &[usize]) -> Option<usize> {
    cands
        .iter()
        .copied()
        .find(|&c| cands.iter().all(|&d| p.leq(c, d)))
}

fn greatest_of(p: &Poset, cands: &[usize]) -> Option<usize> {
    cands
        .iter()
        .copied()
        .find(|&c| cands.iter().all(|&d| p.leq(d, c)))
}

/// Meet and join tables, or the first pair lacking a bound.
pub fn lattice_structure(p: &Poset) -> Result<LatticeStructure, NotALattice> {
    let n = p.len();
    if n == 0 {
        return Err(NotALattice::Empty);
    }
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in x..n {
            let ups: Vec<usize> = (0..n).filter(|&z| p.leq(x, z) && p.leq(y, z)).collect();
            let j = least_of(p, &ups).ok_or(NotALattice::NoJoin(x, y))?;
            let downs: Vec<usize> = (0..n).filter(|&z| p.leq(z, x) && p.leq(z, y)).collect();
            let m = greatest_of(p, &downs).ok_or(NotALattice::NoMeet(x, y))?;
            join[x * n + y] = j;
            join[y * n + x] = j;
            meet[x * n + y] = m;
            meet[y * n + x] = m;
        }
    }
    let bottom = p.bottom().expect("lattices are bounded");
    let top = p.top().expect("lattices are bounded");
    Ok(LatticeStructure {
        base: p.clone(),
        meet,
        join,
        bottom,
        top,
    })
}

impl LatticeStructure {
    /// Builds a lattice from precomputed tables, which must be correct.
    pub(crate) fn from_tables(base: Poset, meet: Vec<usize>, join: Vec<usize>) -> LatticeStructure {
        let bottom = base.bottom().expect("lattices are bounded");
        let top = base.top().expect("lattices are bounded");
        LatticeStructure {
            base,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.base
    }

    pub fn into_poset(self) -> Poset {
        self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// A triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.base.lower_covers(x).len() == 1)
            .collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.base.upper_covers(x).len() == 1)
            .collect()
    }

    /// The lattice `[z, 1̂]`, keeping the inherited linear extension.
    pub fn upper_interval(&self, z: usize) -> LatticeStructure {
        let members = self.base.up_set(z);
        let sub = self.base.induced(&members);
        let m = members.len();
        let pos = |x: usize| members.binary_search(&x).expect("interval is closed");
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for (a, &x) in members.iter().enumerate() {
            for (b, &y) in members.iter().enumerate() {
                meet[a * m + b] = pos(self.meet(x, y));
                join[a * m + b] = pos(self.join(x, y));
            }
        }
        LatticeStructure::from_tables(sub, meet, join)
    }

    /// Smallest proper upper interval failing distributivity, if any; "proper"
    /// excludes `z = 0̂`.
    pub fn non_distributive_proper_interval(&self) -> Option<usize> {
        self.base
            .linext()
            .iter()
            .rev()
            .copied()
            .filter(|&z| z != self.bottom)
            .find(|&z| !self.upper_interval(z).is_distributive())
    }
}

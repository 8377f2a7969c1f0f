//! Order ideals, the lattice `J(q)` and rowmotion.

use std::collections::HashMap;

use super::{LatticeStructure, Poset, PosetError};

/// Default cap on the number of order ideals enumerated by [`birkhoff`].
pub const MAX_IDEALS: usize = 4096;

/// A down-closed subset of a poset, as sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: Vec<usize>,
}

impl OrderIdeal {
    /// Wraps `members` after checking it is down-closed in `base`.
    pub fn new(base: &Poset, mut members: Vec<usize>) -> Option<OrderIdeal> {
        members.sort_unstable();
        members.dedup();
        let closed = members
            .iter()
            .all(|&y| base.lower_covers(y).iter().all(|x| members.binary_search(x).is_ok()));
        closed.then_some(OrderIdeal { members })
    }

    /// The ideal generated by `gens`.
    pub fn generated(base: &Poset, gens: &[usize]) -> OrderIdeal {
        let members = (0..base.len())
            .filter(|&x| gens.iter().any(|&g| base.leq(x, g)))
            .collect();
        OrderIdeal { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Maximal members of the ideal.
    pub fn maximal(&self, base: &Poset) -> Vec<usize> {
        self.members
            .iter()
            .copied()
            .filter(|&x| !self.members.iter().any(|&y| base.lt(x, y)))
            .collect()
    }

    /// Minimal elements of the complement.
    pub fn complement_minimal(&self, base: &Poset) -> Vec<usize> {
        (0..base.len())
            .filter(|&x| !self.contains(x))
            .filter(|&x| base.lower_covers(x).iter().all(|&y| self.contains(y)))
            .collect()
    }

    pub fn label(&self, base: &Poset) -> String {
        let names: Vec<&str> = self.members.iter().map(|&x| base.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// All order ideals of `q`, sorted by size and then lexicographically.
pub fn order_ideals(q: &Poset, cap: usize) -> Result<Vec<OrderIdeal>, PosetError> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    // Extend along the linear extension: x may join an ideal only when all
    // its lower covers are already present.
    for &x in q.linext() {
        let mut added = Vec::new();
        for ideal in &out {
            if q.lower_covers(x).iter().all(|y| ideal.contains(y)) {
                let mut next = ideal.clone();
                next.push(x);
                added.push(next);
            }
        }
        out.extend(added);
        if out.len() > cap {
            return Err(PosetError::TooManyIdeals { limit: cap });
        }
    }
    let mut ideals: Vec<OrderIdeal> = out
        .into_iter()
        .map(|mut m| {
            m.sort_unstable();
            OrderIdeal { members: m }
        })
        .collect();
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(ideals)
}

/// The distributive lattice `J(q)` of order ideals ordered by inclusion.
/// Element labels are the ideals written as `{a,b}`.
pub fn birkhoff(q: &Poset) -> Result<LatticeStructure, PosetError> {
    birkhoff_with_cap(q, MAX_IDEALS)
}

pub fn birkhoff_with_cap(q: &Poset, cap: usize) -> Result<LatticeStructure, PosetError> {
    let ideals = order_ideals(q, cap)?;
    let n = ideals.len();
    let index: HashMap<&[usize], usize> = ideals
        .iter()
        .enumerate()
        .map(|(i, id)| (id.members(), i))
        .collect();
    let mut leq = vec![false; n * n];
    let mut covers = Vec::new();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if a.is_subset(b) {
                leq[i * n + j] = true;
                if b.len() == a.len() + 1 {
                    covers.push((i, j));
                }
            }
        }
    }
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            let inter: Vec<usize> = a.members.iter().copied().filter(|&x| b.contains(x)).collect();
            let mut uni: Vec<usize> = a.members.iter().chain(&b.members).copied().collect();
            uni.sort_unstable();
            uni.dedup();
            meet[i * n + j] = index[inter.as_slice()];
            join[i * n + j] = index[uni.as_slice()];
        }
    }
    let labels = ideals.iter().map(|id| id.label(q)).collect();
    let base = Poset::assemble(labels, leq, covers, None);
    Ok(LatticeStructure::from_tables(base, meet, join))
}

/// Identification of a distributive lattice with the order ideals of its
/// join-irreducibles.
#[derive(Debug, Clone)]
pub struct JoinIrreducibleModel {
    /// The poset of join-irreducibles (indices `k` refer to `elements[k]`).
    pub poset: Poset,
    pub elements: Vec<usize>,
    /// For each lattice element, the ideal of join-irreducibles below it.
    pub ideal_of: Vec<OrderIdeal>,
    element_of: HashMap<Vec<usize>, usize>,
}

impl JoinIrreducibleModel {
    pub fn new(l: &LatticeStructure) -> Result<JoinIrreducibleModel, PosetError> {
        if let Some(w) = l.distributivity_witness() {
            return Err(PosetError::NotDistributive(describe_triple(l, w)));
        }
        let elements = l.join_irreducibles();
        let poset = l.poset().induced(&elements);
        let ideal_of: Vec<OrderIdeal> = (0..l.len())
            .map(|x| OrderIdeal {
                members: (0..elements.len())
                    .filter(|&k| l.poset().leq(elements[k], x))
                    .collect(),
            })
            .collect();
        let element_of = ideal_of
            .iter()
            .enumerate()
            .map(|(x, id)| (id.members.clone(), x))
            .collect();
        Ok(JoinIrreducibleModel {
            poset,
            elements,
            ideal_of,
            element_of,
        })
    }

    pub fn element(&self, ideal: &OrderIdeal) -> usize {
        self.element_of[&ideal.members]
    }

    pub fn rowmotion(&self, x: usize) -> usize {
        let gens = self.ideal_of[x].complement_minimal(&self.poset);
        self.element(&OrderIdeal::generated(&self.poset, &gens))
    }

    /// Inverse rowmotion: the complement of the filter generated by the
    /// maximal elements of the ideal.
    pub fn rowmotion_inverse(&self, x: usize) -> usize {
        let ideal = &self.ideal_of[x];
        let tops = ideal.maximal(&self.poset);
        let members = (0..self.poset.len())
            .filter(|&k| !tops.iter().any(|&t| self.poset.leq(t, k)))
            .collect();
        self.element(&OrderIdeal { members })
    }
}

pub(crate) fn describe_triple(l: &LatticeStructure, (x, y, z): (usize, usize, usize)) -> String {
    let p = l.poset();
    format!(
        "{} ∧ ({} ∨ {}) differs from ({} ∧ {}) ∨ ({} ∧ {})",
        p.label(x),
        p.label(y),
        p.label(z),
        p.label(x),
        p.label(y),
        p.label(x),
        p.label(z)
    )
}

/// Rowmotion `x ↦ ⟨min(J∖x)⟩` on a distributive lattice.
pub fn rowmotion(l: &LatticeStructure, x: usize) -> Result<usize, PosetError> {
    Ok(JoinIrreducibleModel::new(l)?.rowmotion(x))
}

/// Rowmotion on every element, as an element-index map.
pub fn rowmotion_map(l: &LatticeStructure) -> Result<Vec<usize>, PosetError> {
    let model = JoinIrreducibleModel::new(l)?;
    Ok((0..l.len()).map(|x| model.rowmotion(x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::generators;

    #[test]
    fn antichain_gives_boolean_square() {
        let l = birkhoff(&generators::antichain(2).unwrap()).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.is_distributive());
        assert!(l
            .poset()
            .is_isomorphic(generators::boolean(2).unwrap().poset()));
    }

    #[test]
    fn two_chain_gives_three_chain() {
        let l = birkhoff(&generators::chain(2).unwrap()).unwrap();
        assert!(l.poset().is_isomorphic(&generators::chain(3).unwrap()));
    }

    #[test]
    fn ideal_cap_is_enforced() {
        let q = generators::antichain(5).unwrap();
        assert_eq!(
            birkhoff_with_cap(&q, 16).unwrap_err(),
            PosetError::TooManyIdeals { limit: 16 }
        );
    }

    #[test]
    fn rowmotion_on_three_chain_is_a_three_cycle() {
        // J(2-chain) = {∅, {1}, {1,2}}; enumerating gives ∅→{1}→{1,2}→∅.
        let l = birkhoff(&generators::chain(2).unwrap()).unwrap();
        let p = l.poset();
        let e = p.require("{}").unwrap();
        let m = p.require("{1}").unwrap();
        let t = p.require("{1,2}").unwrap();
        assert_eq!(rowmotion(&l, e).unwrap(), m);
        assert_eq!(rowmotion(&l, m).unwrap(), t);
        assert_eq!(rowmotion(&l, t).unwrap(), e);
    }

    #[test]
    fn rowmotion_on_boolean_square_swaps() {
        let l = generators::boolean(2).unwrap();
        let p = l.poset();
        let a = p.require("{1}").unwrap();
        let b = p.require("{2}").unwrap();
        assert_eq!(rowmotion(&l, l.bottom()).unwrap(), l.top());
        assert_eq!(rowmotion(&l, l.top()).unwrap(), l.bottom());
        assert_eq!(rowmotion(&l, a).unwrap(), b);
        assert_eq!(rowmotion(&l, b).unwrap(), a);
    }

    #[test]
    fn rowmotion_rejects_non_distributive() {
        assert!(matches!(
            rowmotion(&generators::n5(), 0),
            Err(PosetError::NotDistributive(_))
        ));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let l = generators::product_of_chains(3, 3).unwrap();
        let model = JoinIrreducibleModel::new(&l).unwrap();
        for x in 0..l.len() {
            assert_eq!(model.rowmotion_inverse(model.rowmotion(x)), x);
        }
        assert_eq!(model.rowmotion(l.top()), l.bottom());
    }
}

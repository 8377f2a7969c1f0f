//! Encoding of a lattice whose proper upper intervals are distributive by
//! order ideals of its meet-irreducibles, and the Coxeter rows it predicts.

use std::collections::HashMap;

use super::{LatticeStructure, OrderIdeal, Poset, PosetError};

/// Largest antichain `min(Yᶜ)` whose subsets [`euler_row`] will enumerate.
const MAX_SUBSET_BASE: usize = 24;

#[derive(Debug, Clone)]
pub struct MeetIrreducibleEncoding {
    /// Meet-irreducibles (bottom excluded) with the order reversed, so that
    /// the sets of meet-irreducibles above an element are order ideals.
    pub m_poset: Poset,
    /// Lattice index of each element of `m_poset`.
    pub m_elements: Vec<usize>,
    /// The ideals `ζ(x)` for every non-bottom `x`, in lattice index order.
    pub family: Vec<OrderIdeal>,
    /// Lattice element of each member of `family`.
    pub owners: Vec<usize>,
    zeta: Vec<Option<usize>>,
    index: HashMap<Vec<usize>, usize>,
    bottom: usize,
    top: usize,
    len: usize,
}

impl MeetIrreducibleEncoding {
    pub fn new(l: &LatticeStructure) -> Result<MeetIrreducibleEncoding, PosetError> {
        if let Some(z) = l.non_distributive_proper_interval() {
            return Err(PosetError::PreconditionViolated(format!(
                "upper interval above {} is not distributive",
                l.poset().label(z)
            )));
        }
        let p = l.poset();
        let m_elements: Vec<usize> = l
            .meet_irreducibles()
            .into_iter()
            .filter(|&x| x != l.bottom())
            .collect();
        let m_poset = p.induced(&m_elements).opposite();
        let mut family = Vec::new();
        let mut owners = Vec::new();
        let mut zeta = vec![None; l.len()];
        let mut index = HashMap::new();
        for (x, slot) in zeta.iter_mut().enumerate() {
            if x == l.bottom() {
                continue;
            }
            let members = (0..m_elements.len())
                .filter(|&k| p.leq(x, m_elements[k]))
                .collect();
            let ideal = OrderIdeal::new(&m_poset, members).ok_or_else(|| {
                PosetError::EncodingInvariant(format!(
                    "meet-irreducibles above {} are not an order ideal",
                    p.label(x)
                ))
            })?;
            if index.insert(ideal.members().to_vec(), family.len()).is_some() {
                return Err(PosetError::EncodingInvariant(format!(
                    "two elements share the ideal {}",
                    ideal.label(&m_poset)
                )));
            }
            *slot = Some(family.len());
            family.push(ideal);
            owners.push(x);
        }
        let enc = MeetIrreducibleEncoding {
            m_poset,
            m_elements,
            family,
            owners,
            zeta,
            index,
            bottom: l.bottom(),
            top: l.top(),
            len: l.len(),
        };
        enc.check(l).map_err(PosetError::EncodingInvariant)?;
        Ok(enc)
    }

    /// `ζ(x)`; `None` for the bottom.
    pub fn zeta(&self, x: usize) -> Option<&OrderIdeal> {
        self.zeta[x].map(|k| &self.family[k])
    }

    /// The lattice element whose image is `ideal`, if it lies in the family.
    pub fn element_of(&self, ideal: &OrderIdeal) -> Option<usize> {
        self.index.get(ideal.members()).map(|&k| self.owners[k])
    }

    /// Checks the structural properties promised for the encoding.
    pub fn check(&self, l: &LatticeStructure) -> Result<(), String> {
        let m = &self.m_poset;
        let name = |x: usize| l.poset().label(x).to_string();
        // Down-closure under inclusion: removing a maximal member stays inside.
        for b in &self.family {
            for t in b.maximal(m) {
                let smaller: Vec<usize> =
                    b.members().iter().copied().filter(|&k| k != t).collect();
                if !self.index.contains_key(&smaller) {
                    return Err(format!("family not down-closed below {}", b.label(m)));
                }
            }
        }
        let non_bottom: Vec<usize> = (0..self.len).filter(|&x| x != self.bottom).collect();
        for &x in &non_bottom {
            for &y in &non_bottom {
                let (zx, zy) = (self.zeta(x).unwrap(), self.zeta(y).unwrap());
                if l.poset().leq(x, y) != zy.is_subset(zx) {
                    return Err(format!("ζ is not order-reversing on {}, {}", name(x), name(y)));
                }
                let inter: Vec<usize> = zx
                    .members()
                    .iter()
                    .copied()
                    .filter(|&k| zy.contains(k))
                    .collect();
                if self.zeta(l.join(x, y)).unwrap().members() != inter.as_slice() {
                    return Err(format!("join of {}, {} is not an intersection", name(x), name(y)));
                }
                let mut uni: Vec<usize> = zx.members().iter().chain(zy.members()).copied().collect();
                uni.sort_unstable();
                uni.dedup();
                let mt = l.meet(x, y);
                let ok = match self.index.get(&uni) {
                    Some(&k) => self.owners[k] == mt,
                    None => mt == self.bottom,
                };
                if !ok {
                    return Err(format!("meet of {}, {} is not a union", name(x), name(y)));
                }
            }
        }
        for k in 0..m.len() {
            if !self.family.iter().any(|f| f.contains(k)) {
                return Err(format!("{} lies in no member of the family", m.label(k)));
            }
        }
        Ok(())
    }

    /// The Coxeter-matrix row of `y` predicted by the Euler-characteristic
    /// formula, indexed by lattice element.
    pub fn euler_row(&self, y: usize) -> Result<Vec<i64>, PosetError> {
        let mut row = vec![0i64; self.len];
        let Some(ideal) = self.zeta(y) else {
            row[self.top] = -1;
            return Ok(row);
        };
        let mins = ideal.complement_minimal(&self.m_poset);
        if mins.len() > MAX_SUBSET_BASE {
            return Err(PosetError::TooLarge {
                n: mins.len(),
                limit: MAX_SUBSET_BASE,
            });
        }
        let mut chi = 0i64;
        for mask in 0u32..(1u32 << mins.len()) {
            let face: Vec<usize> = (0..mins.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| mins[b])
                .collect();
            let generated = OrderIdeal::generated(&self.m_poset, &face);
            if let Some(col) = self.element_of(&generated) {
                let sign = if face.len().is_multiple_of(2) { 1 } else { -1 };
                row[col] -= sign;
                chi += sign;
            }
        }
        row[self.bottom] += chi;
        Ok(row)
    }
}

/// Convenience wrapper around [`MeetIrreducibleEncoding::new`].
pub fn meet_irreducible_encoding(
    l: &LatticeStructure,
) -> Result<MeetIrreducibleEncoding, PosetError> {
    MeetIrreducibleEncoding::new(l)
}

pub fn euler_row(enc: &MeetIrreducibleEncoding, y: usize) -> Result<Vec<i64>, PosetError> {
    enc.euler_row(y)
}

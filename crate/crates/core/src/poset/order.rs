use std::collections::{HashMap, HashSet};

use super::PosetError;
use crate::linalg::Matrix;

/// Largest poset accepted from user input.
pub const MAX_ELEMENTS: usize = 64;

/// A finite poset stored by its cover relation, its full order relation and
/// a fixed linear extension.
///
/// Elements are addressed by index `0..len()` in label order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    linext: Vec<usize>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from arbitrary (possibly redundant) relations `x ≤ y`.
    pub fn from_relations<S: AsRef<str>>(
        labels: &[S],
        pairs: &[(S, S)],
    ) -> Result<Poset, PosetError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.to_string()))
        };
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            idx_pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Poset::from_index_relations(labels, &idx_pairs)
    }

    /// Same as [`Poset::from_relations`] with relations given by index.
    pub fn from_index_relations(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge {
                n,
                limit: MAX_ELEMENTS,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            assert!(a < n && b < n, "relation index out of range");
            if a != b && !succ[a].contains(&b) {
                succ[a].push(b);
            }
        }
        if let Some(cycle) = find_cycle(&succ) {
            return Err(PosetError::CycleDetected(
                cycle.into_iter().map(|i| labels[i].clone()).collect(),
            ));
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
            for &j in &succ[i] {
                leq[i * n + j] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y
                    && leq[x * n + y]
                    && !(0..n).any(|z| z != x && z != y && leq[x * n + z] && leq[z * n + y])
                {
                    covers.push((x, y));
                }
            }
        }
        Ok(Poset::assemble(labels, leq, covers, None))
    }

    /// Assembles a poset from a relation known to be a partial order and its
    /// cover pairs, skipping validation.
    pub(crate) fn assemble(
        labels: Vec<String>,
        leq: Vec<bool>,
        mut covers: Vec<(usize, usize)>,
        linext: Option<Vec<usize>>,
    ) -> Poset {
        let n = labels.len();
        covers.sort_unstable();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        let linext = linext.unwrap_or_else(|| greedy_linear_extension(&lower));
        Poset {
            labels,
            leq,
            covers,
            upper,
            lower,
            linext,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require(&self, label: &str) -> Result<usize, PosetError> {
        self.index_of(label)
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Cover pairs `(x, y)` with `x ⋖ y`, sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// The fixed linear extension, as element indices.
    pub fn linext(&self) -> &[usize] {
        &self.linext
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// The unique minimum, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Same elements with the order reversed; the linear extension is reversed too.
    pub fn opposite(&self) -> Poset {
        let n = self.len();
        let leq = (0..n * n).map(|k| self.leq[(k % n) * n + k / n]).collect();
        let covers = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        let linext = self.linext.iter().rev().copied().collect();
        Poset::assemble(self.labels.clone(), leq, covers, Some(linext))
    }

    /// The induced subposet on `subset` (indices into `self`, kept in the
    /// given order as the new label order). The linear extension is the
    /// restriction of `self`'s.
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let m = subset.len();
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let mut leq = vec![false; m * m];
        for (a, &x) in subset.iter().enumerate() {
            for (b, &y) in subset.iter().enumerate() {
                leq[a * m + b] = self.leq(x, y);
            }
        }
        let mut covers = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a != b
                    && leq[a * m + b]
                    && !(0..m).any(|c| c != a && c != b && leq[a * m + c] && leq[c * m + b])
                {
                    covers.push((a, b));
                }
            }
        }
        let pos: HashMap<usize, usize> = subset.iter().enumerate().map(|(a, &x)| (x, a)).collect();
        let linext = self
            .linext
            .iter()
            .filter_map(|x| pos.get(x).copied())
            .collect();
        Poset::assemble(labels, leq, covers, Some(linext))
    }

    /// Elements `y` with `y ≥ x`.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    /// Elements `y` with `y ≤ x`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(y, x)).collect()
    }

    /// `zeta[i][j] = 1` iff `linext[i] ≤ linext[j]`.
    pub fn zeta_matrix(&self) -> Matrix {
        let ord = &self.linext;
        Matrix::from_int_rows(
            &ord.iter()
                .map(|&x| ord.iter().map(|&y| self.leq(x, y) as i64).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    }

    pub fn mobius_matrix(&self) -> Matrix {
        self.zeta_matrix()
            .invert()
            .expect("zeta matrix is unitriangular")
    }

    /// Whether an explicit isomorphism `self → other` exists, by brute force
    /// over candidate bijections that respect up/down set sizes.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        find_isomorphism(self, other).is_some()
    }
}

/// Greedy linear extension: repeatedly take the smallest-index element whose
/// lower covers have all been placed.
fn greedy_linear_extension(lower: &[Vec<usize>]) -> Vec<usize> {
    let n = lower.len();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n)
            .find(|&x| !placed[x] && lower[x].iter().all(|&y| placed[y]))
            .expect("cover graph is acyclic");
        placed[next] = true;
        out.push(next);
    }
    out
}

fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = vec![Mark::New; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < succ[v].len() {
                let w = succ[v][*next];
                *next += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    Mark::Active => {
                        let mut cycle = vec![w];
                        let mut u = v;
                        while u != w {
                            cycle.push(u);
                            u = parent[u];
                        }
                        cycle.reverse();
                        cycle.rotate_right(1);
                        cycle.push(w);
                        return Some(cycle);
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    None
}

/// A bijection `f` from elements of `a` to elements of `b` with
/// `x ≤ y ⇔ f(x) ≤ f(y)`, found by backtracking.
pub fn find_isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.covers().len() != b.covers().len() {
        return None;
    }
    let sig = |p: &Poset, x: usize| (p.up_set(x).len(), p.down_set(x).len());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        a: &Poset,
        b: &Poset,
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
        sig: &dyn Fn(&Poset, usize) -> (usize, usize),
    ) -> bool {
        if k == a.len() {
            return true;
        }
        let x = a.linext()[k];
        for y in 0..b.len() {
            if used[y] || sig(a, x) != sig(b, y) {
                continue;
            }
            let consistent = a.linext()[..k].iter().all(|&z| {
                let w = map[z];
                a.leq(z, x) == b.leq(w, y) && a.leq(x, z) == b.leq(y, w)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(a, b, k + 1, map, used, sig) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
    if go(a, b, 0, &mut map, &mut used, &sig) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn redundant_relation_is_reduced() {
        let p = Poset::from_relations(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(p.linext(), &[0, 1, 2]);
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn two_cycle_is_detected() {
        let err = Poset::from_relations(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        match err {
            PosetError::CycleDetected(w) => {
                assert_eq!(w.first(), w.last());
                assert_eq!(w.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn longer_cycle_witness_is_a_closed_walk() {
        let err = Poset::from_relations(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "b")],
        )
        .unwrap_err();
        let PosetError::CycleDetected(w) = err else {
            panic!()
        };
        assert_eq!(w.first(), w.last());
        assert_eq!(w.len(), 4);
        assert!(!w.contains(&"a".to_string()));
    }

    #[test]
    fn duplicate_and_unknown_labels() {
        assert_eq!(
            Poset::from_relations(&["a", "a"], &[]).unwrap_err(),
            PosetError::DuplicateLabel("a".into())
        );
        assert_eq!(
            Poset::from_relations(&["a"], &[("a", "z")]).unwrap_err(),
            PosetError::UnknownLabel("z".into())
        );
    }

    #[test]
    fn linear_extension_breaks_ties_by_label_order() {
        let p = Poset::from_relations(&["x", "y", "z"], &[("z", "x")]).unwrap();
        assert_eq!(p.linext(), &[1, 2, 0]);
    }

    #[test]
    fn zeta_and_mobius_of_chain() {
        let p = Poset::from_relations(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        let z = p.zeta_matrix();
        assert_eq!(z, Matrix::from_int_rows(&[[1, 1, 1], [0, 1, 1], [0, 0, 1]]));
        let mu = p.mobius_matrix();
        assert_eq!(mu, Matrix::from_int_rows(&[[1, -1, 0], [0, 1, -1], [0, 0, 1]]));
        assert!(z.mul(&mu).is_identity());
    }

    #[test]
    fn opposite_reverses_everything() {
        let p = Poset::from_relations(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let q = p.opposite();
        assert!(q.leq(1, 0) && q.leq(2, 0) && !q.leq(0, 1));
        assert_eq!(q.linext(), &[2, 1, 0]);
        assert_eq!(q.opposite(), p);
    }

    #[test]
    fn isomorphism_search() {
        let v = Poset::from_relations(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let v2 = Poset::from_relations(&["p", "q", "r"], &[("q", "p"), ("q", "r")]).unwrap();
        let wedge = Poset::from_relations(&["a", "b", "c"], &[("b", "a"), ("c", "a")]).unwrap();
        assert!(v.is_isomorphic(&v2));
        assert!(!v.is_isomorphic(&wedge));
    }
}

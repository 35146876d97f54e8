//! Green's relations computed from principal one-sided ideals.

use std::collections::HashMap;

use serde::Serialize;

use super::FiniteInverseMonoid;
use crate::bitset::ElemSet;

/// Class ids per element for each of `R`, `L`, `H`, `D`; ids are assigned in
/// order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenClasses {
    pub r: Vec<usize>,
    pub l: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
}

fn classes_by_key<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.map(|k| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

impl GreenClasses {
    pub fn r_class(&self, a: usize) -> Vec<usize> {
        members(&self.r, a)
    }

    pub fn l_class(&self, a: usize) -> Vec<usize> {
        members(&self.l, a)
    }

    pub fn h_class(&self, a: usize) -> Vec<usize> {
        members(&self.h, a)
    }

    pub fn d_class(&self, a: usize) -> Vec<usize> {
        members(&self.d, a)
    }

    pub fn d_equivalent(&self, a: usize, b: usize) -> bool {
        self.d[a] == self.d[b]
    }

    /// Sizes of the classes each element belongs to, as `(R, L, H, D)`.
    pub fn class_sizes(&self) -> Vec<(usize, usize, usize, usize)> {
        let count = |ids: &[usize]| {
            let mut c = vec![0usize; ids.len()];
            for &i in ids {
                c[i] += 1;
            }
            ids.iter().map(|&i| c[i]).collect::<Vec<_>>()
        };
        let (r, l, h, d) = (count(&self.r), count(&self.l), count(&self.h), count(&self.d));
        (0..self.r.len()).map(|a| (r[a], l[a], h[a], d[a])).collect()
    }
}

fn members(ids: &[usize], a: usize) -> Vec<usize> {
    (0..ids.len()).filter(|&x| ids[x] == ids[a]).collect()
}

impl FiniteInverseMonoid {
    pub fn green_classes(&self) -> GreenClasses {
        let n = self.size();
        let right = |a: usize| ElemSet::from_iter(n, (0..n).map(|s| self.mul(a, s)));
        let left = |a: usize| ElemSet::from_iter(n, (0..n).map(|s| self.mul(s, a)));
        let r = classes_by_key((0..n).map(right));
        let l = classes_by_key((0..n).map(left));
        let h = classes_by_key((0..n).map(|a| (r[a], l[a])));
        // D = R v L: union-find over both partitions
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut first_r = HashMap::new();
        let mut first_l = HashMap::new();
        for a in 0..n {
            for other in [*first_r.entry(r[a]).or_insert(a), *first_l.entry(l[a]).or_insert(a)] {
                let (x, y) = (find(&mut parent, a), find(&mut parent, other));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
        let d = classes_by_key(roots.into_iter());
        GreenClasses { r, l, h, d }
    }

    /// The maximal subgroup `H_e` of an idempotent as a sorted element list.
    pub fn h_class_of(&self, e: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| self.range_idempotent(a) == e && self.domain_idempotent(a) == e)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::monoid::{chain_semilattice, symmetric_inverse_monoid};

    #[test]
    fn semilattice_classes_are_singletons() {
        let g = chain_semilattice(4).green_classes();
        assert_eq!(g.d, vec![0, 1, 2, 3]);
    }

    #[test]
    fn sim2_d_classes_by_rank() {
        let m = symmetric_inverse_monoid(2);
        let g = m.green_classes();
        let mut sizes: Vec<usize> = g.class_sizes().iter().map(|c| c.3).collect();
        sizes.sort_unstable();
        // rank 0: 1 element, rank 1: 4 elements, rank 2: 2 elements
        assert_eq!(sizes, vec![1, 2, 2, 4, 4, 4, 4]);
        for &e in m.idempotents() {
            assert_eq!(g.h_class(e), m.h_class_of(e));
        }
    }
}

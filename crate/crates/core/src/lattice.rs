//! The lattice of all subgroups of a finite group.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bitset::ElemSet;
use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    /// Sorted by (order, member list): index 0 is trivial, the last is `G`.
    subgroups: Vec<Subgroup>,
    index: HashMap<ElemSet, usize>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    normal: Vec<bool>,
    /// `conj[h * |G| + g]` is the id of `g^{-1} H g`.
    conj: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup: start from the cyclic subgroups and join
    /// with cyclic subgroups until nothing new appears.
    pub fn enumerate(group: FiniteGroup, cap: usize) -> Result<Self, GroupError> {
        if group.order() > cap {
            return Err(GroupError::CapExceeded {
                order: group.order(),
                cap,
            });
        }
        let mut cyclic: Vec<Subgroup> = group.elements().map(|g| group.generate(&[g])).collect();
        cyclic.sort();
        cyclic.dedup();

        let mut found: HashMap<ElemSet, Subgroup> = HashMap::new();
        let mut frontier: Vec<Subgroup> = Vec::new();
        for c in &cyclic {
            if found.insert(c.as_set().clone(), c.clone()).is_none() {
                frontier.push(c.clone());
            }
        }
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = group.join(&h, c);
                if !found.contains_key(j.as_set()) {
                    found.insert(j.as_set().clone(), j.clone());
                    frontier.push(j);
                }
            }
        }
        let mut subgroups: Vec<Subgroup> = found.into_values().collect();
        subgroups.sort();
        Ok(Self::from_subgroups(group, subgroups))
    }

    fn from_subgroups(group: FiniteGroup, subgroups: Vec<Subgroup>) -> Self {
        let m = subgroups.len();
        let n = group.order();
        let index: HashMap<ElemSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_set().clone(), i))
            .collect();
        let mut leq = vec![false; m * m];
        for (i, a) in subgroups.iter().enumerate() {
            for (j, b) in subgroups.iter().enumerate() {
                leq[i * m + j] = a.is_subgroup_of(b);
            }
        }
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for i in 0..m {
            for j in i..m {
                let inter = subgroups[i].intersection(&subgroups[j]);
                let mi = index[inter.as_set()];
                // smallest subgroup above both; ids sorted by order so the
                // first upper bound is the least one
                let ji = (0..m)
                    .find(|&k| leq[i * m + k] && leq[j * m + k])
                    .expect("G bounds everything");
                meet[i * m + j] = mi;
                meet[j * m + i] = mi;
                join[i * m + j] = ji;
                join[j * m + i] = ji;
            }
        }
        let mut conj = vec![0; m * n];
        for (h, sub) in subgroups.iter().enumerate() {
            for g in 0..n {
                let c = group.conjugate_subgroup(sub, g);
                conj[h * n + g] = index[c.as_set()];
            }
        }
        let normal: Vec<bool> = (0..m).map(|h| (0..n).all(|g| conj[h * n + g] == h)).collect();
        let mut class_of = vec![usize::MAX; m];
        let mut classes = Vec::new();
        for h in 0..m {
            if class_of[h] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| conj[h * n + g]).collect();
            members.sort_unstable();
            members.dedup();
            for &k in &members {
                class_of[k] = classes.len();
            }
            classes.push(members);
        }
        SubgroupLattice {
            group,
            subgroups,
            index,
            leq,
            join,
            meet,
            normal,
            conj,
            class_of,
            classes,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn trivial_id(&self) -> usize {
        0
    }

    pub fn whole_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Id of an arbitrary subgroup of the group.
    pub fn id_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.as_set()).copied()
    }

    pub fn id_of_set(&self, s: &ElemSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `H <= K`.
    pub fn leq(&self, h: usize, k: usize) -> bool {
        self.leq[h * self.len() + k]
    }

    /// `<H u K>`.
    pub fn join(&self, h: usize, k: usize) -> usize {
        self.join[h * self.len() + k]
    }

    /// `H n K`.
    pub fn meet(&self, h: usize, k: usize) -> usize {
        self.meet[h * self.len() + k]
    }

    pub fn is_normal(&self, h: usize) -> bool {
        self.normal[h]
    }

    /// `H` normal in `K` (requires `H <= K`).
    pub fn is_normal_in(&self, h: usize, k: usize) -> bool {
        debug_assert!(self.leq(h, k));
        self.subgroups[k].members().all(|g| self.conj(h, g) == h)
    }

    /// Id of `g^{-1} H g`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.conj[h * self.group.order() + g]
    }

    pub fn conjugacy_class(&self, h: usize) -> &[usize] {
        &self.classes[self.class_of[h]]
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn are_conjugate(&self, h: usize, k: usize) -> bool {
        self.class_of[h] == self.class_of[k]
    }

    /// Ids of the subgroups `K <= H` with `K` normal in `H`.
    pub fn normal_subgroups_of(&self, h: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.leq(k, h) && self.is_normal_in(k, h))
            .collect()
    }

    /// Length of the shortest chain `H = K_m <| ... <| K_0 = G`, found by
    /// breadth-first search downward from `G` along normality edges;
    /// `None` when `H` is not subnormal.
    pub fn subnormal_defect(&self, h: usize) -> Option<usize> {
        self.subnormal_chain(h).map(|c| c.len() - 1)
    }

    /// A shortest subnormal chain from `G` down to `H`, both included.
    pub fn subnormal_chain(&self, h: usize) -> Option<Vec<usize>> {
        let m = self.len();
        let top = self.whole_id();
        let mut parent = vec![usize::MAX; m];
        parent[top] = top;
        let mut queue = VecDeque::from([top]);
        while let Some(k) = queue.pop_front() {
            if k == h {
                let mut chain = vec![h];
                let mut x = h;
                while x != top {
                    x = parent[x];
                    chain.push(x);
                }
                chain.reverse();
                return Some(chain);
            }
            for (j, p) in parent.iter_mut().enumerate().take(m) {
                if *p == usize::MAX && j != k && self.leq(h, j) && self.leq(j, k) && self.is_normal_in(j, k) {
                    *p = k;
                    queue.push_back(j);
                }
            }
        }
        None
    }

    /// Covering pairs `(lower, upper)` of the containment order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a != b && self.leq(a, b) && !(0..m).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// Hasse diagram of containment in DOT. Normal subgroups are boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph subgroup_lattice {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, h) in self.subgroups.iter().enumerate() {
            let shape = if self.normal[i] { "box" } else { "ellipse" };
            let _ = writeln!(out, "  s{i} [label=\"#{i} |H|={}\", shape={shape}];", h.order());
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(out, "  s{a} -> s{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::preset;

    fn lattice(name: &str) -> SubgroupLattice {
        SubgroupLattice::enumerate(preset(name).unwrap(), 64).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        for (name, count) in [("C1", 1), ("S3", 6), ("S4", 30), ("D4", 10), ("Q8", 6)] {
            assert_eq!(lattice(name).len(), count, "{name}");
        }
    }

    #[test]
    fn ordering_puts_trivial_first_and_whole_last() {
        let l = lattice("S4");
        assert_eq!(l.subgroup(0).order(), 1);
        assert_eq!(l.subgroup(l.whole_id()).order(), 24);
        for w in l.subgroups().windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn defects() {
        let l = lattice("S4");
        let g = l.group();
        let h = g.generate(&[g.element_by_label("(1 2)(3 4)").unwrap()]);
        let id = l.id_of(&h).unwrap();
        assert_eq!(l.subnormal_defect(id), Some(2));
        assert_eq!(l.subnormal_defect(l.whole_id()), Some(0));
        let s3 = lattice("S3");
        let t = s3.group().generate(&[s3.group().element_by_label("(1 2)").unwrap()]);
        assert_eq!(s3.subnormal_defect(s3.id_of(&t).unwrap()), None);
    }

    #[test]
    fn normal_iff_singleton_class() {
        for name in ["S4", "D4", "Q8", "A4"] {
            let l = lattice(name);
            for h in 0..l.len() {
                assert_eq!(l.is_normal(h), l.conjugacy_class(h).len() == 1);
            }
        }
    }

    #[test]
    fn dot_has_one_node_per_subgroup() {
        let l = lattice("S3");
        let dot = l.to_dot();
        assert_eq!(dot.matches("label=").count(), 6);
        assert!(dot.contains("shape=box"));
        assert_eq!(lattice("C1").to_dot().matches("label=").count(), 1);
    }
}

//! Finite groups given by full multiplication tables, their subgroups, and
//! the classical series used as oracles for the monoid-side results.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bitset::ElemSet;
use crate::error::GroupError;
use crate::iso::{self, Magma};

/// Default hard cap on group order for full-table validation.
pub const DEFAULT_ORDER_CAP: usize = 64;

/// Environment variable overriding [`DEFAULT_ORDER_CAP`].
pub const CAP_ENV: &str = "COSETLAB_CAP_ORDER";

/// The order cap in effect: `COSETLAB_CAP_ORDER` when set and numeric,
/// otherwise [`DEFAULT_ORDER_CAP`].
pub fn hard_order_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// Permutations multiply left to right: in `p*q`, `p` is applied first.
pub const PERMUTATION_CONVENTION: &str = "permutations compose left-to-right: (p*q)(x) = q(p(x)), p applied first";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    /// Elements are permutations of `0..degree`, stored as image vectors.
    Permutation {
        degree: usize,
        images: Vec<Vec<usize>>,
    },
    CayleyTable,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    backend: Backend,
}

/// A subgroup, stored as its member set in the parent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: ElemSet,
}

impl Subgroup {
    pub fn from_set(members: ElemSet) -> Self {
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn as_set(&self) -> &ElemSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_set(self.members.intersection(&other.members))
    }
}

/// `G/N` together with the projection of `G` onto it.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    /// Coset index of every element of the parent group.
    pub projection: Vec<usize>,
    /// Minimal-index representative of each coset.
    pub representatives: Vec<usize>,
}

impl Magma for FiniteGroup {
    fn size(&self) -> usize {
        self.order
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
}

impl FiniteGroup {
    /// Validates a Cayley table (row `i`, column `j` holds `i*j`).
    pub fn from_table(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Invalid("empty table".into()));
        }
        if n > cap {
            return Err(GroupError::CapExceeded { order: n, cap });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Invalid(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::OutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order: n,
                    });
                }
                mul.push(v);
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![0; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    let left = at(ab, c);
                    let right = at(a, at(b, c));
                    if left != right {
                        return Err(GroupError::NotAssociative { a, b, c, left, right });
                    }
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        Ok(FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv,
            identity,
            labels,
            backend: Backend::CayleyTable,
        })
    }

    /// Closes the generators (image vectors over `0..degree`) to a group.
    /// Elements are indexed in lexicographic order of their image vectors,
    /// so the identity is always element 0.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self, GroupError> {
        let identity: Vec<usize> = (0..degree).collect();
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(GroupError::Invalid(format!(
                    "generator {g:?} is not a permutation of degree {degree}"
                )));
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next = compose(&elements[i], g);
                if !seen.contains(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            order: elements.len() + 1,
                            cap,
                        });
                    }
                    seen.insert(next.clone());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        elements.sort();
        let pos: HashMap<Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for p in &elements {
            for q in &elements {
                mul.push(pos[&compose(p, q)]);
            }
        }
        let inv = elements
            .iter()
            .map(|p| {
                let mut r = vec![0; degree];
                for (i, &x) in p.iter().enumerate() {
                    r[x] = i;
                }
                pos[&r]
            })
            .collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv,
            identity: 0,
            labels,
            backend: Backend::Permutation {
                degree,
                images: elements,
            },
        })
    }

    pub(crate) fn from_parts(
        name: String,
        mul: Vec<usize>,
        inv: Vec<usize>,
        identity: usize,
        labels: Vec<String>,
    ) -> Self {
        let order = inv.len();
        debug_assert_eq!(mul.len(), order * order);
        FiniteGroup {
            name,
            order,
            mul,
            inv,
            identity,
            labels,
            backend: Backend::CayleyTable,
        }
    }

    /// Builds a group from a closed subset of some larger multiplication;
    /// `op` must restrict to a group on `elements` with identity `identity`.
    pub fn from_closed_subset(
        name: impl Into<String>,
        elements: &[usize],
        identity: usize,
        op: impl Fn(usize, usize) -> usize,
        label: impl Fn(usize) -> String,
    ) -> Result<Self, GroupError> {
        let pos: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut rows = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                let p = op(a, b);
                row.push(
                    *pos.get(&p)
                        .ok_or_else(|| GroupError::Invalid(format!("product of {a} and {b} leaves the subset")))?,
                );
            }
            rows.push(row);
        }
        let labels = elements.iter().map(|&x| label(x)).collect();
        let g = Self::from_table(name, rows, Some(labels), usize::MAX)?;
        if elements[g.identity] != identity {
            return Err(GroupError::Invalid("identity mismatch".into()));
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row-major copy of the multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// `g^{-1} x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Finds an element by its display label. For permutation groups any
    /// cycle notation of the element is accepted, e.g. `(1 2)(3 4)`.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Some(i);
        }
        if let Backend::Permutation { degree, images } = &self.backend {
            let p = crate::parse::parse_cycles(label, *degree).ok()?;
            return images.iter().position(|q| *q == p);
        }
        None
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_set(ElemSet::from_iter(self.order, [self.identity]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_set(ElemSet::full(self.order))
    }

    /// Smallest subgroup containing `gens` (closure under right
    /// multiplication by the generators, starting from the identity).
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut set = ElemSet::new(self.order);
        set.insert(self.identity);
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        Subgroup::from_set(set)
    }

    /// `<H, K>`.
    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        if h.is_subgroup_of(k) {
            return k.clone();
        }
        if k.is_subgroup_of(h) {
            return h.clone();
        }
        let gens: Vec<usize> = h.members().chain(k.members()).collect();
        self.generate(&gens)
    }

    /// Whether the subset is a subgroup (non-empty, closed under products
    /// and inverses).
    pub fn is_subgroup(&self, set: &ElemSet) -> bool {
        set.contains(self.identity)
            && set
                .iter()
                .all(|a| set.contains(self.inv(a)) && set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    /// `g^{-1} H g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        Subgroup::from_set(ElemSet::from_iter(self.order, h.members().map(|x| self.conj(x, g))))
    }

    /// Whether `H` is normal in `K`; `H` must be contained in `K`.
    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> Result<bool, GroupError> {
        if let Some(x) = h.members().find(|&x| !k.contains(x)) {
            return Err(GroupError::NotContained(x));
        }
        Ok(self.normality_witness(h, k).is_none())
    }

    /// An element of `K` whose conjugation moves `H`, if any.
    fn normality_witness(&self, h: &Subgroup, k: &Subgroup) -> Option<usize> {
        k.members().find(|&g| h.members().any(|x| !h.contains(self.conj(x, g))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normality_witness(h, &self.whole()).is_none()
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(h, &self.whole())
    }

    /// `N_K(H) = {k in K : k^{-1} H k = H}`.
    pub fn normalizer_in(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElemSet::from_iter(
            self.order,
            k.members()
                .filter(|&g| h.members().all(|x| h.contains(self.conj(x, g)))),
        ))
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::from_set(ElemSet::from_iter(
            self.order,
            (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))),
        ))
    }

    /// `[H, K] = <[h, k] : h in H, k in K>`.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut gens = ElemSet::new(self.order);
        for a in h.members() {
            for b in k.members() {
                gens.insert(self.commutator(a, b));
            }
        }
        self.generate(&gens.to_vec())
    }

    /// `G = G^(0) >= G^(1) >= ...`, ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("non-empty");
            let next = self.commutator_subgroup(last, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// `G = g_1 >= [g_1, G] >= ...`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().expect("non-empty");
            let next = self.commutator_subgroup(last, &whole);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// Length of the lower central series, or `None` if it stabilizes
    /// above the trivial subgroup.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        (s.last().expect("non-empty").order() == 1).then(|| s.len() - 1)
    }

    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        (s.last().expect("non-empty").order() == 1).then(|| s.len() - 1)
    }

    /// `G/N` with cosets represented by their minimal element index.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientGroup, GroupError> {
        if let Some(g) = self.normality_witness(n, &self.whole()) {
            return Err(GroupError::NotNormal(g));
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(g);
            for x in n.members() {
                projection[self.mul(x, g)] = c;
            }
        }
        let m = representatives.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &representatives {
            for &b in &representatives {
                mul.push(projection[self.mul(a, b)]);
            }
        }
        let inv = representatives.iter().map(|&a| projection[self.inv(a)]).collect();
        let labels = representatives
            .iter()
            .map(|&a| format!("N{}", self.labels[a]))
            .collect();
        let group = FiniteGroup::from_parts(format!("{}/N", self.name), mul, inv, projection[self.identity], labels);
        Ok(QuotientGroup {
            group,
            projection,
            representatives,
        })
    }

    /// The subgroup as a group in its own right, with the embedding that
    /// sends its element `i` to `embedding[i]`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let embedding: Vec<usize> = h.members().collect();
        let pos: HashMap<usize, usize> = embedding.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let m = embedding.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embedding {
            for &b in &embedding {
                mul.push(pos[&self.mul(a, b)]);
            }
        }
        let inv = embedding.iter().map(|&a| pos[&self.inv(a)]).collect();
        let labels = embedding.iter().map(|&a| self.labels[a].clone()).collect();
        let mut g = FiniteGroup::from_parts(format!("{}<{}>", self.name, m), mul, inv, pos[&self.identity], labels);
        if let Backend::Permutation { degree, images } = &self.backend {
            g.backend = Backend::Permutation {
                degree: *degree,
                images: embedding.iter().map(|&a| images[a].clone()).collect(),
            };
        }
        (g, embedding)
    }

    /// Cartesian product with componentwise multiplication; element
    /// `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let size = n * m;
        let mut mul = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let (a1, b1) = (x / m, x % m);
                let (a2, b2) = (y / m, y % m);
                mul.push(self.mul(a1, a2) * m + other.mul(b1, b2));
            }
        }
        let inv = (0..size).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        let labels = (0..size)
            .map(|x| format!("({},{})", self.labels[x / m], other.labels[x % m]))
            .collect();
        FiniteGroup::from_parts(
            format!("{}x{}", self.name, other.name),
            mul,
            inv,
            self.identity * m + other.identity,
            labels,
        )
    }

    /// Order and centralizer size of each element; invariant under
    /// isomorphism.
    pub fn element_signatures(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .map(|a| {
                let centralizer = (0..self.order).filter(|&g| self.mul(a, g) == self.mul(g, a)).count();
                (self.element_order(a), centralizer)
            })
            .collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}

/// An explicit isomorphism `a -> b` (element `i` maps to `map[i]`), if the
/// groups are isomorphic.
pub fn group_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return None;
    }
    iso::find_isomorphism(
        a,
        b,
        &a.element_signatures(),
        &b.element_signatures(),
        &[(a.identity(), b.identity())],
    )
}

pub fn groups_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    group_isomorphism(a, b).is_some()
}

/// Cycle notation with 1-based points, `()` for the identity.
pub fn cycle_notation(images: &[usize]) -> String {
    let mut seen = vec![false; images.len()];
    let mut out = String::new();
    for start in 0..images.len() {
        if seen[start] || images[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = images[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = images[x];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::preset;

    fn el(g: &FiniteGroup, l: &str) -> usize {
        g.element_by_label(l).unwrap_or_else(|| panic!("no element {l}"))
    }

    #[test]
    fn s3_generation_and_conjugation() {
        let s3 = preset("S3").unwrap();
        assert_eq!(s3.order(), 6);
        let all = s3.generate(&[el(&s3, "(1 2)"), el(&s3, "(1 3)")]);
        assert_eq!(all.order(), 6);
        let h = s3.generate(&[el(&s3, "(1 2)")]);
        let c = s3.conjugate_subgroup(&h, el(&s3, "(1 2 3)"));
        assert_eq!(c, s3.generate(&[el(&s3, "(2 3)")]));
        assert_eq!(s3.conjugate_subgroup(&h, s3.identity()), h);
        assert_eq!(s3.normalizer(&h), h);
        assert_eq!(s3.normalizer(&s3.trivial_subgroup()), s3.whole());
    }

    #[test]
    fn empty_generators_give_trivial() {
        let s4 = preset("S4").unwrap();
        assert_eq!(s4.generate(&[]), s4.trivial_subgroup());
        assert_eq!(s4.generate(&[el(&s4, "(1 2)(3 4)")]).order(), 2);
    }

    #[test]
    fn normality() {
        let s3 = preset("S3").unwrap();
        let a3 = s3.generate(&[el(&s3, "(1 2 3)")]);
        let t = s3.generate(&[el(&s3, "(1 2)")]);
        assert!(s3.is_normal_in(&a3, &s3.whole()).unwrap());
        assert!(!s3.is_normal_in(&t, &s3.whole()).unwrap());
        assert!(s3.is_normal_in(&t, &t).unwrap());
        assert!(matches!(
            s3.is_normal_in(&s3.whole(), &t),
            Err(GroupError::NotContained(_))
        ));
        let s4 = preset("S4").unwrap();
        let v4 = s4.generate(&[el(&s4, "(1 2)(3 4)"), el(&s4, "(1 3)(2 4)")]);
        assert!(s4.is_normal(&v4));
    }

    #[test]
    fn quotients() {
        let s3 = preset("S3").unwrap();
        let a3 = s3.generate(&[el(&s3, "(1 2 3)")]);
        assert_eq!(s3.quotient(&a3).unwrap().group.order(), 2);
        assert_eq!(s3.quotient(&s3.whole()).unwrap().group.order(), 1);
        let t = s3.generate(&[el(&s3, "(1 2)")]);
        assert!(matches!(s3.quotient(&t), Err(GroupError::NotNormal(_))));
        let s4 = preset("S4").unwrap();
        let v4 = s4.generate(&[el(&s4, "(1 2)(3 4)"), el(&s4, "(1 3)(2 4)")]);
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(groups_isomorphic(&q.group, &s3));
        // representatives are coset minima
        for (c, &r) in q.representatives.iter().enumerate() {
            assert_eq!((0..24).find(|&g| q.projection[g] == c), Some(r));
        }
    }

    #[test]
    fn classical_series() {
        let cases = [
            ("C1", Some(0), Some(0)),
            ("C6", Some(1), Some(1)),
            ("Q8", Some(2), Some(2)),
            ("D4", Some(2), Some(2)),
            ("S3", None, Some(2)),
            ("S4", None, Some(3)),
            ("A4", None, Some(2)),
        ];
        for (name, class, dl) in cases {
            let g = preset(name).unwrap();
            assert_eq!(g.nilpotency_class(), class, "{name}");
            assert_eq!(g.derived_length(), dl, "{name}");
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let q8 = preset("Q8").unwrap();
        let inv = (0..8)
            .filter(|&x| x != q8.identity() && q8.mul(x, x) == q8.identity())
            .count();
        assert_eq!(inv, 1);
    }

    #[test]
    fn non_associative_table_is_rejected_with_witness() {
        // a quasigroup of order 3 that is not a group
        let rows = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        let err = FiniteGroup::from_table("bad", rows, None, 64).unwrap_err();
        assert!(matches!(
            err,
            GroupError::NoInverse(_) | GroupError::NotAssociative { .. }
        ));
    }

    #[test]
    fn cycle_notation_round_trip() {
        assert_eq!(cycle_notation(&[1, 0, 3, 2]), "(1 2)(3 4)");
        assert_eq!(cycle_notation(&[0, 1]), "()");
        assert_eq!(cycle_notation(&[1, 2, 0]), "(1 2 3)");
    }

    #[test]
    fn left_to_right_composition() {
        let s3 = preset("S3").unwrap();
        // (1 2) then (1 3): 1->2->2, 2->1->3, 3->3->1
        let p = s3.mul(el(&s3, "(1 2)"), el(&s3, "(1 3)"));
        assert_eq!(s3.label(p), "(1 2 3)");
    }
}

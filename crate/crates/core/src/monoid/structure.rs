//! Precomputed order-theoretic data of an inverse monoid: natural order,
//! idempotent joins, unit group, natural connection and centrality tables.

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;

use super::{FiniteInverseMonoid, GreenClasses, SubMonoidView};
use crate::bitset::ElemSet;
use crate::group::{FiniteGroup, Subgroup};

/// The group of units extracted as a group in its own right.
#[derive(Debug, Clone)]
pub struct UnitGroup {
    pub group: FiniteGroup,
    /// Unit index to monoid index.
    pub elements: Vec<usize>,
    /// Monoid index to unit index.
    pub index_of: Vec<Option<usize>>,
}

impl UnitGroup {
    pub fn to_monoid(&self, g: usize) -> usize {
        self.elements[g]
    }
}

/// Outcome of checking that the natural connection is a dual isomorphism
/// from `E` onto a sublattice of `L(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualIsoReport {
    pub holds: bool,
    pub witness: Option<String>,
    /// Number of distinct subgroups `e theta`.
    pub image_size: usize,
}

#[derive(Debug)]
pub struct MonoidStructure {
    monoid: FiniteInverseMonoid,
    leq: Vec<bool>,
    idem: Vec<usize>,
    idem_pos: Vec<usize>,
    joins: Vec<Option<usize>>,
    units: UnitGroup,
    theta: Vec<ElemSet>,
    filters: Vec<ElemSet>,
    centre: ElemSet,
    central_in_filter: Vec<bool>,
    factorizable: bool,
    green: OnceLock<GreenClasses>,
    dual: OnceLock<DualIsoReport>,
}

impl MonoidStructure {
    pub fn new(monoid: FiniteInverseMonoid) -> Self {
        let n = monoid.size();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            let r = monoid.range_idempotent(a);
            for b in 0..n {
                leq[a * n + b] = monoid.mul(r, b) == a;
            }
        }
        let idem = monoid.idempotents().to_vec();
        let k = idem.len();
        let mut idem_pos = vec![usize::MAX; n];
        for (i, &e) in idem.iter().enumerate() {
            idem_pos[e] = i;
        }
        let mut joins = vec![None; k * k];
        for i in 0..k {
            for j in i..k {
                let (e, f) = (idem[i], idem[j]);
                let upper: Vec<usize> = idem
                    .iter()
                    .copied()
                    .filter(|&u| leq[e * n + u] && leq[f * n + u])
                    .collect();
                let least = upper.iter().copied().find(|&u| upper.iter().all(|&v| leq[u * n + v]));
                joins[i * k + j] = least;
                joins[j * k + i] = least;
            }
        }

        let unit_elems = monoid.unit_elements();
        let mut index_of = vec![None; n];
        for (i, &u) in unit_elems.iter().enumerate() {
            index_of[u] = Some(i);
        }
        let group = FiniteGroup::from_closed_subset(
            "units",
            &unit_elems,
            monoid.identity(),
            |a, b| monoid.mul(a, b),
            |a| monoid.label(a).to_string(),
        )
        .expect("units of an inverse monoid form a group");
        let units = UnitGroup {
            group,
            elements: unit_elems,
            index_of,
        };

        let theta: Vec<ElemSet> = idem
            .iter()
            .map(|&e| {
                ElemSet::from_iter(
                    units.elements.len(),
                    units
                        .elements
                        .iter()
                        .enumerate()
                        .filter(|&(_, &g)| monoid.mul(e, g) == e)
                        .map(|(i, _)| i),
                )
            })
            .collect();
        let filters: Vec<ElemSet> = idem
            .iter()
            .map(|&e| ElemSet::from_iter(n, (0..n).filter(|&s| leq[e * n + s])))
            .collect();
        let centre = monoid.centre();
        let mut central_in_filter = vec![false; k * k];
        for i in 0..k {
            for j in 0..k {
                let f = idem[j];
                central_in_filter[i * k + j] = filters[i].contains(f) && monoid.commutes_with_all(f, &filters[i]);
            }
        }
        let factorizable = monoid.is_factorizable();
        MonoidStructure {
            monoid,
            leq,
            idem,
            idem_pos,
            joins,
            units,
            theta,
            filters,
            centre,
            central_in_filter,
            factorizable,
            green: OnceLock::new(),
            dual: OnceLock::new(),
        }
    }

    pub fn monoid(&self) -> &FiniteInverseMonoid {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    pub fn zero(&self) -> usize {
        self.monoid.zero()
    }

    pub fn identity(&self) -> usize {
        self.monoid.identity()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    /// Idempotents in increasing index order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idem
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idem_pos[a] != usize::MAX
    }

    fn pos(&self, e: usize) -> usize {
        let p = self.idem_pos[e];
        assert!(p != usize::MAX, "element {e} is not idempotent");
        p
    }

    /// Least upper bound of two idempotents in `E`, if it exists.
    pub fn join(&self, e: usize, f: usize) -> Option<usize> {
        let k = self.idem.len();
        self.joins[self.pos(e) * k + self.pos(f)]
    }

    /// Every pair of idempotents has a join.
    pub fn has_all_joins(&self) -> bool {
        self.joins.iter().all(Option::is_some)
    }

    pub fn units(&self) -> &UnitGroup {
        &self.units
    }

    /// `e theta = {g unit : eg = e}` as a set of unit indices.
    pub fn theta(&self, e: usize) -> &ElemSet {
        &self.theta[self.pos(e)]
    }

    /// `e theta` as a subgroup of the unit group.
    pub fn natural_connection(&self, e: usize) -> Subgroup {
        Subgroup::from_set(self.theta(e).clone())
    }

    /// Members of the filter `e^` of an idempotent.
    pub fn filter(&self, e: usize) -> &ElemSet {
        &self.filters[self.pos(e)]
    }

    pub fn filter_view(&self, e: usize) -> SubMonoidView {
        SubMonoidView {
            members: self.filter(e).clone(),
            identity: self.identity(),
        }
    }

    /// The interval `[e, f]` of idempotents.
    pub fn interval(&self, e: usize, f: usize) -> Vec<usize> {
        self.idem
            .iter()
            .copied()
            .filter(|&x| self.leq(e, x) && self.leq(x, f))
            .collect()
    }

    pub fn centre(&self) -> &ElemSet {
        &self.centre
    }

    pub fn is_central(&self, c: usize) -> bool {
        self.centre.contains(c)
    }

    /// Central idempotents in increasing index order.
    pub fn central_idempotents(&self) -> Vec<usize> {
        self.idem.iter().copied().filter(|&e| self.is_central(e)).collect()
    }

    /// `f` lies in `e^` and commutes with all of it.
    pub fn is_central_in_filter(&self, f: usize, e: usize) -> bool {
        let k = self.idem.len();
        self.central_in_filter[self.pos(e) * k + self.pos(f)]
    }

    pub fn is_factorizable(&self) -> bool {
        self.factorizable
    }

    pub fn green(&self) -> &GreenClasses {
        self.green.get_or_init(|| self.monoid.green_classes())
    }

    /// Idempotents covering `0` in the natural order.
    pub fn primitive_idempotents(&self) -> Vec<usize> {
        let z = self.zero();
        self.idem
            .iter()
            .copied()
            .filter(|&e| e != z && !self.idem.iter().any(|&x| x != z && x != e && self.leq(x, e)))
            .collect()
    }

    /// Number of idempotents `<= e`.
    pub fn down_degree(&self, e: usize) -> usize {
        self.idem.iter().filter(|&&x| self.leq(x, e)).count()
    }

    pub fn dual_isomorphism(&self) -> &DualIsoReport {
        self.dual.get_or_init(|| self.check_dual_isomorphism())
    }

    /// The standing hypothesis of the idempotent-series theory: factorizable
    /// with `theta` a dual isomorphism onto a sublattice of `L(G)`.
    pub fn satisfies_hypothesis(&self) -> bool {
        self.factorizable && self.dual_isomorphism().holds
    }

    fn check_dual_isomorphism(&self) -> DualIsoReport {
        let g = &self.units.group;
        let k = self.idem.len();
        let mut images: Vec<&ElemSet> = self.theta.iter().collect();
        images.sort();
        images.dedup();
        let image_size = images.len();
        let fail = |w: String| DualIsoReport {
            holds: false,
            witness: Some(w),
            image_size,
        };
        if !self.factorizable {
            return fail("monoid is not factorizable".into());
        }
        for i in 0..k {
            for j in 0..k {
                let (e, f) = (self.idem[i], self.idem[j]);
                let (te, tf) = (&self.theta[i], &self.theta[j]);
                if i < j && te == tf {
                    return fail(format!("theta is not injective: idempotents {e} and {f}"));
                }
                if self.leq(e, f) != tf.is_subset(te) {
                    return fail(format!("theta does not reverse order on ({e}, {f})"));
                }
                let meet = te.intersection(tf);
                if images.binary_search(&&meet).is_err() {
                    return fail(format!("image not closed under intersection at ({e}, {f})"));
                }
                let gen = g.join(&Subgroup::from_set(te.clone()), &Subgroup::from_set(tf.clone()));
                if images.binary_search(&gen.as_set()).is_err() {
                    return fail(format!("image not closed under join at ({e}, {f})"));
                }
                let ef = self.mul(e, f);
                if self.theta(ef) != gen.as_set() {
                    return fail(format!("(ef)theta differs from <e theta, f theta> at ({e}, {f})"));
                }
                if let Some(j) = self.join(e, f) {
                    if self.theta(j) != &meet {
                        return fail(format!("(e v f)theta differs from the intersection at ({e}, {f})"));
                    }
                }
            }
        }
        DualIsoReport {
            holds: true,
            witness: None,
            image_size,
        }
    }

    /// Covering pairs `(lower, upper)` of the natural order on idempotents.
    pub fn idempotent_hasse_edges(&self) -> Vec<(usize, usize)> {
        let idem = &self.idem;
        let mut edges = Vec::new();
        for &a in idem {
            for &b in idem {
                if a != b
                    && self.leq(a, b)
                    && !idem
                        .iter()
                        .any(|&c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// Hasse diagram of the idempotents in DOT, bottom to top. Central
    /// idempotents are boxes.
    pub fn idempotent_order_dot(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph idempotent_order {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for &e in &self.idem {
            let shape = if self.is_central(e) { "box" } else { "ellipse" };
            let _ = writeln!(out, "  e{e} [label=\"{}\", shape={shape}];", label(e));
        }
        for (a, b) in self.idempotent_hasse_edges() {
            let _ = writeln!(out, "  e{a} -> e{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{chain_semilattice, symmetric_inverse_monoid};

    #[test]
    fn chain_semilattice_has_trivial_theta() {
        let s = MonoidStructure::new(chain_semilattice(3));
        assert_eq!(s.units().group.order(), 1);
        let r = s.dual_isomorphism();
        assert!(!r.holds);
        assert!(r.witness.as_deref().unwrap().contains("injective"));
        assert_eq!(s.centre().len(), 3);
    }

    #[test]
    fn sim2_is_factorizable_but_theta_not_injective() {
        let s = MonoidStructure::new(symmetric_inverse_monoid(2));
        assert_eq!(s.size(), 7);
        assert!(s.is_factorizable());
        assert_eq!(s.units().group.order(), 2);
        assert_eq!(s.idempotents().len(), 4);
        // the two rank-one idempotents are both fixed only by the identity
        assert!(!s.dual_isomorphism().holds);
    }

    #[test]
    fn zero_theta_is_everything() {
        let s = MonoidStructure::new(symmetric_inverse_monoid(2));
        assert_eq!(s.theta(s.zero()).len(), 2);
        assert_eq!(s.theta(s.identity()).len(), 1);
        assert_eq!(s.filter(s.zero()).len(), 7);
    }
}

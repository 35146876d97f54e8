//! Isomorphism testing between inverse monoids: an invariant fingerprint
//! filter followed by backtracking search.

use serde::Serialize;

use super::FiniteInverseMonoid;
use crate::error::MonoidError;
use crate::iso;

/// Largest monoid accepted by [`monoid_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 512;

/// Isomorphism invariants of a whole monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub size: usize,
    pub idempotents: usize,
    /// Sorted `(|R|, |L|, |H|, |D|)` of the classes of each element.
    pub green_sizes: Vec<(usize, usize, usize, usize)>,
    /// Sorted orders of the units.
    pub unit_orders: Vec<usize>,
    /// Sorted pairs (idempotents below `aa^{-1}`, idempotents below `a^{-1}a`).
    pub degree_pairs: Vec<(usize, usize)>,
}

/// Per-element invariants used to restrict the candidate images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct ElementSig {
    idempotent: bool,
    unit: bool,
    green: (usize, usize, usize, usize),
    degrees: (usize, usize),
    up_degree: usize,
    index: usize,
    period: usize,
    centralizer: usize,
}

fn index_period(m: &FiniteInverseMonoid, a: usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; m.size()];
    let mut x = a;
    let mut k = 1;
    loop {
        if seen[x] != usize::MAX {
            return (seen[x], k - seen[x]);
        }
        seen[x] = k;
        x = m.mul(x, a);
        k += 1;
    }
}

fn invariants(m: &FiniteInverseMonoid) -> (Fingerprint, Vec<ElementSig>) {
    let n = m.size();
    let green = m.green_classes().class_sizes();
    let idem = m.idempotents();
    let down = |e: usize| idem.iter().filter(|&&x| m.leq(x, e)).count();
    let up = |e: usize| idem.iter().filter(|&&x| m.leq(e, x)).count();
    let sigs: Vec<ElementSig> = (0..n)
        .map(|a| {
            let (index, period) = index_period(m, a);
            ElementSig {
                idempotent: m.is_idempotent(a),
                unit: m.is_unit(a),
                green: green[a],
                degrees: (down(m.range_idempotent(a)), down(m.domain_idempotent(a))),
                up_degree: up(m.range_idempotent(a)),
                index,
                period,
                centralizer: (0..n).filter(|&b| m.mul(a, b) == m.mul(b, a)).count(),
            }
        })
        .collect();
    let mut green_sizes: Vec<_> = sigs.iter().map(|s| s.green).collect();
    green_sizes.sort_unstable();
    let mut unit_orders: Vec<usize> = sigs.iter().filter(|s| s.unit).map(|s| s.period).collect();
    unit_orders.sort_unstable();
    let mut degree_pairs: Vec<_> = sigs.iter().map(|s| s.degrees).collect();
    degree_pairs.sort_unstable();
    let fp = Fingerprint {
        size: n,
        idempotents: idem.len(),
        green_sizes,
        unit_orders,
        degree_pairs,
    };
    (fp, sigs)
}

impl FiniteInverseMonoid {
    pub fn fingerprint(&self) -> Fingerprint {
        invariants(self).0
    }
}

/// An explicit isomorphism `a -> b` if one exists. Both monoids must have
/// at most [`ISOMORPHISM_CAP`] elements.
pub fn monoid_isomorphic(a: &FiniteInverseMonoid, b: &FiniteInverseMonoid) -> Result<Option<Vec<usize>>, MonoidError> {
    for m in [a, b] {
        if m.size() > ISOMORPHISM_CAP {
            return Err(MonoidError::CapExceeded {
                size: m.size(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if a.size() != b.size() || a.idempotents().len() != b.idempotents().len() {
        return Ok(None);
    }
    let (fa, sa) = invariants(a);
    let (fb, sb) = invariants(b);
    if fa != fb {
        return Ok(None);
    }
    let mut fixed = vec![(a.identity(), b.identity())];
    if a.zero() != a.identity() {
        fixed.push((a.zero(), b.zero()));
    }
    Ok(iso::find_isomorphism(a, b, &sa, &sb, &fixed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphism;
    use crate::monoid::{chain_semilattice, symmetric_inverse_monoid};

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let m = symmetric_inverse_monoid(3);
        let n = m.size();
        let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
        let r = m.relabel(&perm);
        let map = monoid_isomorphic(&m, &r).unwrap().unwrap();
        assert!(is_isomorphism(&m, &r, &map));
    }

    #[test]
    fn semilattice_vs_sim() {
        assert!(monoid_isomorphic(&chain_semilattice(2), &symmetric_inverse_monoid(1))
            .unwrap()
            .is_some());
        assert!(monoid_isomorphic(&chain_semilattice(7), &symmetric_inverse_monoid(2))
            .unwrap()
            .is_none());
    }
}

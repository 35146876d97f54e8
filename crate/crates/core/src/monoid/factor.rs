//! Factors `F_{e,f} = f e^`, the homomorphisms `a -> fa`, quotients by
//! congruences, and a registry of factor isomorphism classes.

use std::collections::HashMap;

use super::{monoid_isomorphic, Fingerprint, FiniteInverseMonoid, MonoidStructure, SubMonoidView};
use crate::bitset::ElemSet;
use crate::error::MonoidError;

/// The factor `F_{e,f}` materialized as a monoid with identity `f`.
#[derive(Debug, Clone)]
pub struct Factor {
    pub lower: usize,
    pub upper: usize,
    pub members: ElemSet,
    pub monoid: FiniteInverseMonoid,
    /// Factor index to ambient index.
    pub embedding: Vec<usize>,
    /// Ambient indices of the units `UF_{e,f}`.
    pub units: Vec<usize>,
}

/// `a -> fa` on `e^`.
#[derive(Debug, Clone)]
pub struct PhiMap {
    pub lower: usize,
    pub upper: usize,
    pub domain: Vec<usize>,
    /// `image[i] = f * domain[i]`.
    pub image: Vec<usize>,
}

impl PhiMap {
    pub fn image_set(&self, capacity: usize) -> ElemSet {
        ElemSet::from_iter(capacity, self.image.iter().copied())
    }

    /// Kernel classes `{(a, b) : fa = fb}`, each sorted, ordered by least
    /// member.
    pub fn kernel_classes(&self) -> Vec<Vec<usize>> {
        let mut by_image: HashMap<usize, Vec<usize>> = HashMap::new();
        for (&a, &fa) in self.domain.iter().zip(&self.image) {
            by_image.entry(fa).or_default().push(a);
        }
        let mut classes: Vec<Vec<usize>> = by_image.into_values().collect();
        classes.sort();
        classes
    }

    /// `(ab)phi = (a phi)(b phi)` for all `a, b` in the domain; returns the
    /// first failing pair.
    pub fn homomorphism_violation(&self, s: &MonoidStructure) -> Option<(usize, usize)> {
        let pos: HashMap<usize, usize> = self.domain.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        for (i, &a) in self.domain.iter().enumerate() {
            for (j, &b) in self.domain.iter().enumerate() {
                let ab = s.mul(a, b);
                let ok = pos
                    .get(&ab)
                    .is_some_and(|&k| self.image[k] == s.mul(self.image[i], self.image[j]));
                if !ok {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// A quotient of a closed subset by a congruence, with minimal-index class
/// representatives.
#[derive(Debug, Clone)]
pub struct QuotientMonoid {
    pub monoid: FiniteInverseMonoid,
    /// Quotient index to the representative (least ambient index).
    pub representatives: Vec<usize>,
    /// Ambient index to quotient index, for members of the domain.
    pub class_of: HashMap<usize, usize>,
}

impl MonoidStructure {
    /// `{fa : a in e^}` without checking any precondition.
    pub fn factor_members(&self, e: usize, f: usize) -> ElemSet {
        ElemSet::from_iter(self.size(), self.filter(e).iter().map(|a| self.mul(f, a)))
    }

    fn check_factor_pair(&self, e: usize, f: usize) -> Result<(), MonoidError> {
        for x in [e, f] {
            if !self.is_idempotent(x) {
                return Err(MonoidError::NotIdempotent(x));
            }
        }
        if !self.is_central_in_filter(f, e) {
            return Err(MonoidError::Precondition(format!(
                "idempotent {f} is not central in the filter of {e}"
            )));
        }
        Ok(())
    }

    /// `F_{e,f}`; requires `f` central in `e^`.
    pub fn factor(&self, e: usize, f: usize) -> Result<Factor, MonoidError> {
        self.check_factor_pair(e, f)?;
        let members = self.factor_members(e, f);
        let (monoid, embedding) = self.monoid().restrict(&SubMonoidView {
            members: members.clone(),
            identity: f,
        })?;
        let m = self.monoid();
        let units = members
            .iter()
            .filter(|&x| m.range_idempotent(x) == f && m.domain_idempotent(x) == f)
            .collect();
        Ok(Factor {
            lower: e,
            upper: f,
            members,
            monoid,
            embedding,
            units,
        })
    }

    /// `phi_{e,f}`; requires `f` central in `e^`.
    pub fn phi(&self, e: usize, f: usize) -> Result<PhiMap, MonoidError> {
        self.check_factor_pair(e, f)?;
        let domain: Vec<usize> = self.filter(e).iter().collect();
        let image = domain.iter().map(|&a| self.mul(f, a)).collect();
        Ok(PhiMap {
            lower: e,
            upper: f,
            domain,
            image,
        })
    }

    /// Quotient of the closed subset `domain` by the equivalence `a ~ b iff
    /// key(a) = key(b)`, after checking that it is a congruence there.
    pub fn quotient(&self, domain: &ElemSet, key: impl Fn(usize) -> usize) -> Result<QuotientMonoid, MonoidError> {
        let members: Vec<usize> = domain.iter().collect();
        let mut rep_of_key: HashMap<usize, usize> = HashMap::new();
        let mut representatives = Vec::new();
        let mut class_of = HashMap::new();
        for &a in &members {
            let k = key(a);
            let q = *rep_of_key.entry(k).or_insert_with(|| {
                representatives.push(a);
                representatives.len() - 1
            });
            class_of.insert(a, q);
        }
        let c = representatives.len();
        let mut mul = vec![0; c * c];
        for &a in &members {
            for &b in &members {
                let ab = self.mul(a, b);
                let q = *class_of
                    .get(&ab)
                    .ok_or_else(|| MonoidError::NotClosed(format!("{a} * {b} = {ab} leaves the domain")))?;
                let (qa, qb) = (class_of[&a], class_of[&b]);
                let cell = &mut mul[qa * c + qb];
                if a == representatives[qa] && b == representatives[qb] {
                    *cell = q;
                }
            }
        }
        // compatibility: every product lands in the class of the product of
        // representatives
        for &a in &members {
            for &b in &members {
                let (qa, qb) = (class_of[&a], class_of[&b]);
                if class_of[&self.mul(a, b)] != mul[qa * c + qb] {
                    return Err(MonoidError::Precondition(format!(
                        "relation is not a congruence at ({a}, {b})"
                    )));
                }
            }
        }
        let m = self.monoid();
        let mut inv = Vec::with_capacity(c);
        for &r in &representatives {
            inv.push(
                *class_of
                    .get(&m.inv(r))
                    .ok_or_else(|| MonoidError::NotClosed(format!("inverse of {r} leaves the domain")))?,
            );
        }
        let identity = (0..c)
            .find(|&i| (0..c).all(|x| mul[i * c + x] == x && mul[x * c + i] == x))
            .ok_or_else(|| MonoidError::NotClosed("quotient has no identity".into()))?;
        let zero = (0..c)
            .find(|&z| (0..c).all(|x| mul[z * c + x] == z && mul[x * c + z] == z))
            .ok_or_else(|| MonoidError::NotClosed("quotient has no zero".into()))?;
        let labels = representatives.iter().map(|&r| format!("[{}]", m.label(r))).collect();
        Ok(QuotientMonoid {
            monoid: FiniteInverseMonoid::from_trusted(c, mul, inv, identity, zero, labels),
            representatives,
            class_of,
        })
    }
}

/// Assigns isomorphism-class ids to monoids, so repeated comparisons
/// between factors of one ambient monoid cost a lookup.
#[derive(Debug, Default)]
pub struct FactorCatalog {
    classes: Vec<(Fingerprint, FiniteInverseMonoid)>,
    by_pair: HashMap<(usize, usize), usize>,
}

impl FactorCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class id of an arbitrary monoid.
    pub fn classify(&mut self, m: FiniteInverseMonoid) -> Result<usize, MonoidError> {
        let fp = m.fingerprint();
        for (i, (f, rep)) in self.classes.iter().enumerate() {
            if *f == fp && monoid_isomorphic(rep, &m)?.is_some() {
                return Ok(i);
            }
        }
        self.classes.push((fp, m));
        Ok(self.classes.len() - 1)
    }

    /// Class id of the factor `F_{e,f}` of `s`. The memo is keyed by the
    /// pair only, so a catalog must stay with one ambient monoid.
    pub fn factor_class(&mut self, s: &MonoidStructure, e: usize, f: usize) -> Result<usize, MonoidError> {
        if let Some(&c) = self.by_pair.get(&(e, f)) {
            return Ok(c);
        }
        let factor = s.factor(e, f)?;
        let c = self.classify(factor.monoid)?;
        self.by_pair.insert((e, f), c);
        Ok(c)
    }

    pub fn representative(&self, class: usize) -> &FiniteInverseMonoid {
        &self.classes[class].1
    }

    pub fn fingerprint(&self, class: usize) -> &Fingerprint {
        &self.classes[class].0
    }
}

//! Finite inverse monoids with zero, given by dense multiplication tables.

mod constructions;
mod factor;
mod green;
mod isomorphism;
pub mod lemmas;
mod structure;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bitset::ElemSet;
use crate::error::MonoidError;
use crate::iso::Magma;

pub use constructions::{brandt_with_identity, chain_semilattice, group_with_zero, symmetric_inverse_monoid};
pub use factor::{Factor, FactorCatalog, PhiMap, QuotientMonoid};
pub use green::GreenClasses;
pub use isomorphism::{monoid_isomorphic, Fingerprint, ISOMORPHISM_CAP};
pub use structure::{DualIsoReport, MonoidStructure, UnitGroup};

/// Hard cap on the number of elements of a dense monoid table.
pub const MONOID_SIZE_CAP: usize = 4096;

#[derive(Debug, Clone)]
pub struct FiniteInverseMonoid {
    size: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    zero: usize,
    idempotents: Vec<usize>,
    is_idem: Vec<bool>,
    labels: Vec<String>,
}

impl Magma for FiniteInverseMonoid {
    fn size(&self) -> usize {
        self.size
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
}

/// A subset of a monoid closed under its product and inverse, with the
/// element acting as identity on the subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubMonoidView {
    pub members: ElemSet,
    pub identity: usize,
}

impl SubMonoidView {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }
}

impl FiniteInverseMonoid {
    /// Builds and exhaustively validates an inverse monoid with zero from a
    /// square table. The inverse map is derived, never supplied.
    pub fn validate(
        rows: Vec<Vec<usize>>,
        identity: usize,
        zero: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self, MonoidError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(MonoidError::Shape);
        }
        if n > MONOID_SIZE_CAP {
            return Err(MonoidError::CapExceeded {
                size: n,
                cap: MONOID_SIZE_CAP,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if v >= n {
                    return Err(MonoidError::OutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        size: n,
                    });
                }
                mul.push(v);
            }
        }
        Self::validate_flat(n, mul, identity, zero, labels)
    }

    fn validate_flat(
        n: usize,
        mul: Vec<usize>,
        identity: usize,
        zero: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self, MonoidError> {
        if identity >= n || zero >= n {
            return Err(MonoidError::Precondition(format!(
                "identity {identity} / zero {zero} out of range"
            )));
        }
        let at = |a: usize, b: usize| mul[a * n + b];
        if let Some(w) = (0..n).find(|&x| at(identity, x) != x || at(x, identity) != x) {
            return Err(MonoidError::BadIdentity { identity, witness: w });
        }
        if let Some(w) = (0..n).find(|&x| at(zero, x) != zero || at(x, zero) != zero) {
            return Err(MonoidError::BadZero { zero, witness: w });
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    let left = at(ab, c);
                    let right = at(a, at(b, c));
                    if left != right {
                        return Err(MonoidError::NotAssociative { a, b, c, left, right });
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            for b in 0..n {
                if at(at(a, b), a) == a && at(at(b, a), b) == b {
                    if *slot != usize::MAX {
                        return Err(MonoidError::InverseNotUnique {
                            element: a,
                            first: *slot,
                            second: b,
                        });
                    }
                    *slot = b;
                }
            }
            if *slot == usize::MAX {
                return Err(MonoidError::NoInverse(a));
            }
        }
        let is_idem: Vec<bool> = (0..n).map(|a| at(a, a) == a).collect();
        let idempotents: Vec<usize> = (0..n).filter(|&a| is_idem[a]).collect();
        for (i, &e) in idempotents.iter().enumerate() {
            for &f in &idempotents[i + 1..] {
                if at(e, f) != at(f, e) {
                    return Err(MonoidError::IdempotentsDoNotCommute(e, f));
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        Ok(FiniteInverseMonoid {
            size: n,
            mul,
            inv,
            identity,
            zero,
            idempotents,
            is_idem,
            labels,
        })
    }

    /// Restricts a table known to be an inverse monoid (a closed subset of
    /// one, or a quotient of one) without re-running the axiom suite.
    pub(crate) fn from_trusted(
        n: usize,
        mul: Vec<usize>,
        inv: Vec<usize>,
        identity: usize,
        zero: usize,
        labels: Vec<String>,
    ) -> Self {
        let is_idem: Vec<bool> = (0..n).map(|a| mul[a * n + a] == a).collect();
        let idempotents = (0..n).filter(|&a| is_idem[a]).collect();
        FiniteInverseMonoid {
            size: n,
            mul,
            inv,
            identity,
            zero,
            idempotents,
            is_idem,
            labels,
        }
    }

    /// Same monoid with elements renumbered: old element `i` becomes
    /// `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut back = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            back[p] = i;
        }
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[x * n + y] = perm[self.mul(back[x], back[y])];
            }
        }
        let inv = (0..n).map(|x| perm[self.inv[back[x]]]).collect();
        let labels = (0..n).map(|x| self.labels[back[x]].clone()).collect();
        Self::from_trusted(n, mul, inv, perm[self.identity], perm[self.zero], labels)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The one-element monoid, where identity and zero coincide.
    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.is_idem[a]
    }

    /// `a a^{-1}`.
    pub fn range_idempotent(&self, a: usize) -> usize {
        self.mul(a, self.inv(a))
    }

    /// `a^{-1} a`.
    pub fn domain_idempotent(&self, a: usize) -> usize {
        self.mul(self.inv(a), a)
    }

    /// Natural partial order: `a <= b` iff `a = (a a^{-1}) b`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.mul(self.range_idempotent(a), b) == a
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.range_idempotent(a) == self.identity && self.domain_idempotent(a) == self.identity
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `a^2 <= a`.
    pub fn is_pre_idempotent(&self, a: usize) -> bool {
        self.leq(self.mul(a, a), a)
    }

    /// The `R`-class of the idempotent `e` inside the inverse submonoid
    /// `view` holds exactly one pre-idempotent.
    pub fn is_anti_abnormal(&self, e: usize, view: &ElemSet) -> bool {
        view.iter()
            .filter(|&a| self.range_idempotent(a) == e && self.is_pre_idempotent(a))
            .count()
            == 1
    }

    /// Whether `c` commutes with every element of `scope`.
    pub fn commutes_with_all(&self, c: usize, scope: &ElemSet) -> bool {
        scope.iter().all(|s| self.mul(c, s) == self.mul(s, c))
    }

    pub fn centre(&self) -> ElemSet {
        let all = ElemSet::full(self.size);
        ElemSet::from_iter(self.size, (0..self.size).filter(|&c| self.commutes_with_all(c, &all)))
    }

    /// `a^` = `{s : a <= s}`; only defined here for idempotent `a`, where it
    /// is an inverse submonoid with least element `a` and identity `1`.
    pub fn filter_up(&self, a: usize) -> Result<SubMonoidView, MonoidError> {
        if !self.is_idempotent(a) {
            return Err(MonoidError::NotIdempotent(a));
        }
        Ok(SubMonoidView {
            members: ElemSet::from_iter(self.size, (0..self.size).filter(|&s| self.leq(a, s))),
            identity: self.identity,
        })
    }

    /// `eS` for an idempotent `e`; an inverse submonoid with identity `e`
    /// when `e` is central.
    pub fn principal_right_ideal(&self, e: usize) -> ElemSet {
        ElemSet::from_iter(self.size, (0..self.size).map(|s| self.mul(e, s)))
    }

    /// Units as a subset of the monoid.
    pub fn unit_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_unit(a)).collect()
    }

    /// Every element is an idempotent times a unit.
    pub fn is_factorizable(&self) -> bool {
        let units = self.unit_elements();
        let mut covered = ElemSet::new(self.size);
        for &e in &self.idempotents {
            for &g in &units {
                covered.insert(self.mul(e, g));
            }
        }
        covered.len() == self.size
    }

    /// Materializes a closed subset as a monoid in its own right. Returns
    /// the monoid and the embedding (new index `i` is old `embedding[i]`).
    /// The zero of the result is the subset's absorbing element.
    pub fn restrict(&self, view: &SubMonoidView) -> Result<(FiniteInverseMonoid, Vec<usize>), MonoidError> {
        let embedding: Vec<usize> = view.iter().collect();
        if !view.contains(view.identity) {
            return Err(MonoidError::NotClosed(format!(
                "identity {} is not in the subset",
                view.identity
            )));
        }
        let pos: HashMap<usize, usize> = embedding.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let m = embedding.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embedding {
            for &b in &embedding {
                let p = self.mul(a, b);
                mul.push(
                    *pos.get(&p)
                        .ok_or_else(|| MonoidError::NotClosed(format!("{a} * {b} = {p} leaves the subset")))?,
                );
            }
        }
        let mut inv = Vec::with_capacity(m);
        for &a in &embedding {
            inv.push(
                *pos.get(&self.inv(a))
                    .ok_or_else(|| MonoidError::NotClosed(format!("inverse of {a} leaves the subset")))?,
            );
        }
        let identity = pos[&view.identity];
        if let Some(w) = (0..m).find(|&x| mul[identity * m + x] != x || mul[x * m + identity] != x) {
            return Err(MonoidError::BadIdentity {
                identity: view.identity,
                witness: embedding[w],
            });
        }
        let zero = (0..m)
            .find(|&z| (0..m).all(|x| mul[z * m + x] == z && mul[x * m + z] == z))
            .ok_or_else(|| MonoidError::NotClosed("subset has no zero".into()))?;
        let labels = embedding.iter().map(|&a| self.labels[a].clone()).collect();
        Ok((Self::from_trusted(m, mul, inv, identity, zero, labels), embedding))
    }

    /// Renders the table in the `imonoid` text format.
    pub fn to_imonoid(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "imonoid {} identity={} zero={}",
            self.size, self.identity, self.zero
        );
        for a in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|b| self.mul(a, b).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Parses the `imonoid <n> identity=<i> zero=<z>` format followed by `n`
    /// rows of `n` indices, then validates.
    pub fn parse_imonoid(text: &str) -> Result<Self, MonoidError> {
        let perr = |line: usize, column: usize, message: String| MonoidError::Parse { line, column, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| perr(1, 1, "empty monoid spec".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("imonoid") {
            return Err(perr(hl, 1, "expected `imonoid <n> identity=<i> zero=<z>`".into()));
        }
        let n: usize = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| perr(hl, 9, "expected monoid size".into()))?;
        let mut identity = None;
        let mut zero = None;
        for f in fields {
            if let Some(v) = f.strip_prefix("identity=") {
                identity = v.parse().ok();
            } else if let Some(v) = f.strip_prefix("zero=") {
                zero = v.parse().ok();
            } else {
                let col = header.find(f).map_or(1, |c| c + 1);
                return Err(perr(hl, col, format!("unexpected field `{f}`")));
            }
        }
        let identity = identity.ok_or_else(|| perr(hl, 1, "missing identity=<i>".into()))?;
        let zero = zero.ok_or_else(|| perr(hl, 1, "missing zero=<z>".into()))?;
        let mut rows = Vec::with_capacity(n);
        for (l, text) in lines {
            let mut row = Vec::with_capacity(n);
            let mut col = 1;
            for tok in text.split_whitespace() {
                let at = text[col - 1..].find(tok).map_or(col, |c| c + col);
                col = at + tok.len();
                row.push(
                    tok.parse()
                        .map_err(|_| perr(l, at, format!("expected an element index, found `{tok}`")))?,
                );
            }
            if row.len() != n {
                return Err(perr(l, 1, format!("row has {} entries, expected {n}", row.len())));
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(perr(hl, 1, format!("expected {n} rows, found {}", rows.len())));
        }
        Self::validate(rows, identity, zero, None)
    }
}

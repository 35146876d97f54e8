//! G-nilpotent and G-solvable series, their shortest lengths, and checks
//! tying them to nilpotency and solvability of the unit group.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::check::{CheckOutcome, Tally};
use crate::group::{group_isomorphism, FiniteGroup, Subgroup};
use crate::monoid::MonoidStructure;
use crate::series::{self, SeriesKind};

/// Cap on the central chains enumerated by the exhaustive checks.
pub const CENTRAL_CHAIN_CAP: usize = 5_000;

/// `F_{e,f} <= Z(fS)` (G-nilpotent) or `F_{e,f}` commutative (G-solvable),
/// for central `e <= f`. Subcentral/central kinds always hold.
pub fn factor_condition(s: &MonoidStructure, e: usize, f: usize, kind: SeriesKind) -> bool {
    let m = s.monoid();
    let members = s.factor_members(e, f);
    match kind {
        SeriesKind::GNilpotent => {
            let scope = m.principal_right_ideal(f);
            members.iter().all(|x| m.commutes_with_all(x, &scope))
        }
        SeriesKind::GSolvable => members.iter().all(|x| m.commutes_with_all(x, &members)),
        SeriesKind::Subcentral | SeriesKind::Central => true,
    }
}

/// The unit criterion: `UF_{e,f} <= Z(S)` (G-nilpotent) or `UF_{e,f}`
/// abelian (G-solvable).
pub fn unit_condition(s: &MonoidStructure, e: usize, f: usize, kind: SeriesKind) -> bool {
    let m = s.monoid();
    let units: Vec<usize> = s.theta(e).iter().map(|g| s.mul(f, s.units().to_monoid(g))).collect();
    match kind {
        SeriesKind::GNilpotent => units.iter().all(|&x| s.is_central(x)),
        SeriesKind::GSolvable => units.iter().all(|&x| units.iter().all(|&y| m.mul(x, y) == m.mul(y, x))),
        SeriesKind::Subcentral | SeriesKind::Central => true,
    }
}

/// Shortest G-nilpotent or G-solvable series, by breadth-first search
/// over central idempotents with memoized step tests.
pub fn shortest_g_series(s: &MonoidStructure, kind: SeriesKind) -> Option<Vec<usize>> {
    let central = s.central_idempotents();
    let (zero, one) = (s.zero(), s.identity());
    let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
    let mut parent: HashMap<usize, usize> = HashMap::from([(zero, zero)]);
    let mut queue = VecDeque::from([zero]);
    while let Some(e) = queue.pop_front() {
        if e == one {
            let mut chain = vec![e];
            let mut x = e;
            while x != zero {
                x = parent[&x];
                chain.push(x);
            }
            chain.reverse();
            return Some(chain);
        }
        for &f in &central {
            if f == e || parent.contains_key(&f) || !s.leq(e, f) {
                continue;
            }
            let ok = *memo.entry((e, f)).or_insert_with(|| factor_condition(s, e, f, kind));
            if ok {
                parent.insert(f, e);
                queue.push_back(f);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub monoid: String,
    pub size: usize,
    pub commutative: bool,
    pub factorizable: bool,
    /// `theta` is a dual isomorphism onto a sublattice of `L(G)`.
    pub dual_isomorphism: bool,
    pub g_nilpotent: bool,
    pub g_nilpotent_length: Option<usize>,
    pub g_nilpotent_witness: Option<Vec<usize>>,
    pub g_solvable: bool,
    pub g_solvable_length: Option<usize>,
    pub g_solvable_witness: Option<Vec<usize>>,
    pub unit_group_order: usize,
    pub unit_nilpotency_class: Option<usize>,
    pub unit_derived_length: Option<usize>,
}

pub fn g_lengths(s: &MonoidStructure, name: &str) -> ClassificationReport {
    let nil = shortest_g_series(s, SeriesKind::GNilpotent);
    let sol = shortest_g_series(s, SeriesKind::GSolvable);
    let units = &s.units().group;
    ClassificationReport {
        monoid: name.to_string(),
        size: s.size(),
        commutative: s.monoid().is_commutative(),
        factorizable: s.is_factorizable(),
        dual_isomorphism: s.satisfies_hypothesis(),
        g_nilpotent: nil.is_some(),
        g_nilpotent_length: nil.as_ref().map(|c| c.len() - 1),
        g_nilpotent_witness: nil,
        g_solvable: sol.is_some(),
        g_solvable_length: sol.as_ref().map(|c| c.len() - 1),
        g_solvable_witness: sol,
        unit_group_order: units.order(),
        unit_nilpotency_class: units.nilpotency_class(),
        unit_derived_length: units.derived_length(),
    }
}

/// Length of the shortest G-solvable series, `d_s`.
pub fn g_solvable_length(s: &MonoidStructure) -> Option<usize> {
    shortest_g_series(s, SeriesKind::GSolvable).map(|c| c.len() - 1)
}

pub fn g_nilpotent_length(s: &MonoidStructure) -> Option<usize> {
    shortest_g_series(s, SeriesKind::GNilpotent).map(|c| c.len() - 1)
}

fn hypothesis_skip(s: &MonoidStructure) -> Option<CheckOutcome> {
    (!s.satisfies_hypothesis()).then(|| {
        CheckOutcome::skipped(format!(
            "hypothesis unmet: {}",
            s.dual_isomorphism()
                .witness
                .clone()
                .unwrap_or_else(|| "natural connection is not a dual isomorphism".into())
        ))
    })
}

/// Every strictly ascending central chain `0 -> 1` satisfies the series
/// definition exactly when it satisfies the unit criterion, for both kinds.
pub fn nseq_check(s: &MonoidStructure) -> CheckOutcome {
    if let Some(o) = hypothesis_skip(s) {
        return o;
    }
    let chains = series::full_series(s, SeriesKind::Central, CENTRAL_CHAIN_CAP);
    let mut memo: HashMap<(usize, usize, SeriesKind), (bool, bool)> = HashMap::new();
    let mut t = Tally::new();
    if chains.truncated {
        t.note(format!("central chains truncated at {CENTRAL_CHAIN_CAP}"));
    }
    for c in &chains.series {
        for kind in [SeriesKind::GNilpotent, SeriesKind::GSolvable] {
            let mut def = true;
            let mut unit = true;
            for (e, f) in c.steps() {
                let (a, b) = *memo
                    .entry((e, f, kind))
                    .or_insert_with(|| (factor_condition(s, e, f, kind), unit_condition(s, e, f, kind)));
                def &= a;
                unit &= b;
            }
            t.check(def == unit, || {
                format!(
                    "{} chain {:?}: definition {def}, unit criterion {unit}",
                    kind.name(),
                    c.chain
                )
            });
        }
    }
    t.finish()
}

/// In every G-nilpotent series, each idempotent between consecutive terms
/// is central and can be inserted keeping the series G-nilpotent.
pub fn sei_check(s: &MonoidStructure) -> CheckOutcome {
    if !s.is_factorizable() {
        return CheckOutcome::skipped("monoid is not factorizable");
    }
    if shortest_g_series(s, SeriesKind::GNilpotent).is_none() {
        return CheckOutcome::skipped("hypothesis unmet: monoid is not G-nilpotent");
    }
    let chains = series::full_series(s, SeriesKind::GNilpotent, CENTRAL_CHAIN_CAP);
    let mut t = Tally::new();
    if chains.truncated {
        t.note(format!("G-nilpotent series truncated at {CENTRAL_CHAIN_CAP}"));
    }
    for c in &chains.series {
        for i in 0..c.len() {
            for x in s.interval(c.chain[i], c.chain[i + 1]) {
                t.check(s.is_central(x), || {
                    format!("{x} in step {i} of {:?} is not central", c.chain)
                });
                let mut longer = c.chain.clone();
                longer.insert(i + 1, x);
                t.check(series::is_series(s, &longer, SeriesKind::GNilpotent), || {
                    format!("inserting {x} into {:?} breaks the series", c.chain)
                });
            }
        }
    }
    t.finish()
}

/// G-nilpotent length 1, G-solvable length 1 and commutativity coincide.
/// Lengths are compared as "at most 1" so that the trivial monoid, whose
/// series have length 0, is included.
pub fn nsl1eq_check(s: &MonoidStructure) -> CheckOutcome {
    if let Some(o) = hypothesis_skip(s) {
        return o;
    }
    let a = g_nilpotent_length(s).is_some_and(|n| n <= 1);
    let b = g_solvable_length(s).is_some_and(|n| n <= 1);
    let c = s.monoid().is_commutative();
    let mut t = Tally::new();
    t.check(a == b && b == c, || {
        format!("nilpotent length 1: {a}, solvable length 1: {b}, commutative: {c}")
    });
    t.finish()
}

/// The maximal subgroup `H_e` as a group with identity `e`.
pub fn h_class_group(s: &MonoidStructure, e: usize) -> FiniteGroup {
    let m = s.monoid();
    let members = s.green().h_class(e);
    FiniteGroup::from_closed_subset(
        format!("H{e}"),
        &members,
        e,
        |a, b| m.mul(a, b),
        |a| m.label(a).to_string(),
    )
    .expect("the H-class of an idempotent is a group")
}

/// Unit group and every maximal subgroup `H_e` are nilpotent of class at
/// most the G-nilpotent length (solvable of derived length at most the
/// G-solvable length).
pub fn gnilu_check(s: &MonoidStructure) -> CheckOutcome {
    if let Some(o) = hypothesis_skip(s) {
        return o;
    }
    let nil = g_nilpotent_length(s);
    let sol = g_solvable_length(s);
    if nil.is_none() && sol.is_none() {
        return CheckOutcome::skipped("hypothesis unmet: monoid is neither G-nilpotent nor G-solvable");
    }
    let mut groups: Vec<(String, FiniteGroup)> = vec![("units".into(), s.units().group.clone())];
    for &e in s.idempotents() {
        groups.push((format!("H_{e}"), h_class_group(s, e)));
    }
    let mut t = Tally::new();
    for (name, g) in &groups {
        if let Some(n) = nil {
            let c = g.nilpotency_class();
            t.check(c.is_some_and(|c| c <= n), || {
                format!("{name}: class {c:?} exceeds G-nilpotent length {n}")
            });
        }
        if let Some(n) = sol {
            let d = g.derived_length();
            t.check(d.is_some_and(|d| d <= n), || {
                format!("{name}: derived length {d:?} exceeds G-solvable length {n}")
            });
        }
    }
    t.finish()
}

/// `N_e = {g : g^{-1} e g = e}` in unit-group coordinates.
pub fn idempotent_normalizer(s: &MonoidStructure, e: usize) -> Subgroup {
    let u = s.units();
    let m = s.monoid();
    Subgroup::from_set(ElemSet::from_iter(
        u.group.order(),
        u.group.elements().filter(|&g| {
            let gm = u.to_monoid(g);
            m.mul(m.mul(m.inv(gm), e), gm) == e
        }),
    ))
}

/// `H_e ~ N_e / (e theta n N_e)` for every idempotent.
pub fn fasec_check(s: &MonoidStructure) -> CheckOutcome {
    if !s.is_factorizable() {
        return CheckOutcome::skipped("monoid is not factorizable");
    }
    let grp = &s.units().group;
    let mut t = Tally::new();
    for &e in s.idempotents() {
        let h = h_class_group(s, e);
        let ne = idempotent_normalizer(s, e);
        let kernel = ne.intersection(&s.natural_connection(e));
        let (ne_group, emb) = grp.subgroup_as_group(&ne);
        let pos: HashMap<usize, usize> = emb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let kernel_local = Subgroup::from_set(ElemSet::from_iter(ne_group.order(), kernel.members().map(|x| pos[&x])));
        match ne_group.quotient(&kernel_local) {
            Ok(q) => t.check(group_isomorphism(&h, &q.group).is_some(), || {
                format!(
                    "idempotent {e}: |H_e| = {}, |N_e / (e theta n N_e)| = {}",
                    h.order(),
                    q.group.order()
                )
            }),
            Err(err) => t.check(false, || format!("idempotent {e}: {err}")),
        }
    }
    t.finish()
}

/// Whether some chain `1 = G_0 < ... < G_n = G` of subgroups from `image`,
/// all normal in `G`, has every step central (`[G_{i+1}, G] <= G_i`) or
/// abelian (`[G_{i+1}, G_{i+1}] <= G_i`).
fn series_in_image(g: &FiniteGroup, image: &[Subgroup], kind: SeriesKind) -> bool {
    let normal: Vec<&Subgroup> = image.iter().filter(|h| g.is_normal(h)).collect();
    let whole = g.whole();
    let start = g.trivial_subgroup();
    let mut seen: Vec<bool> = vec![false; normal.len()];
    let mut queue: VecDeque<Subgroup> = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        if a.order() == g.order() {
            return true;
        }
        for (i, b) in normal.iter().enumerate() {
            if seen[i] || !a.is_subgroup_of(b) || a == **b {
                continue;
            }
            let comm = match kind {
                SeriesKind::GNilpotent => g.commutator_subgroup(b, &whole),
                _ => g.commutator_subgroup(b, b),
            };
            if comm.is_subgroup_of(&a) {
                seen[i] = true;
                queue.push_back((*b).clone());
            }
        }
    }
    g.order() == 1
}

/// G-nilpotent (G-solvable) iff the unit group is nilpotent (solvable) and
/// the image of `theta` contains a central (abelian) series.
pub fn niliff_check(s: &MonoidStructure) -> CheckOutcome {
    if let Some(o) = hypothesis_skip(s) {
        return o;
    }
    let g = &s.units().group;
    let image: Vec<Subgroup> = s.idempotents().iter().map(|&e| s.natural_connection(e)).collect();
    let mut t = Tally::new();
    for kind in [SeriesKind::GNilpotent, SeriesKind::GSolvable] {
        let monoid_side = shortest_g_series(s, kind).is_some();
        let group_ok = match kind {
            SeriesKind::GNilpotent => g.nilpotency_class().is_some(),
            _ => g.derived_length().is_some(),
        };
        let group_side = group_ok && series_in_image(g, &image, kind);
        t.check(monoid_side == group_side, || {
            format!("{}: monoid side {monoid_side}, group side {group_side}", kind.name())
        });
    }
    t.finish()
}

/// `nilpotency_class(G) = G-nilpotent length of K(G)` and
/// `derived_length(G) = G-solvable length of K(G)`, absent values included.
pub fn snchr_check(group: &FiniteGroup, k: &MonoidStructure) -> CheckOutcome {
    let mut t = Tally::new();
    let (c, n) = (group.nilpotency_class(), g_nilpotent_length(k));
    t.check(c == n, || format!("nilpotency class {c:?} vs G-nilpotent length {n:?}"));
    let (d, l) = (group.derived_length(), g_solvable_length(k));
    t.check(d == l, || format!("derived length {d:?} vs G-solvable length {l:?}"));
    t.finish()
}

/// Anti-abnormality is transitive along `e >= f >= g`.
pub fn aabtrans_check(s: &MonoidStructure) -> CheckOutcome {
    let idem = s.idempotents();
    let k = idem.len();
    let m = s.monoid();
    // aa[i * k + j]: idem[i] anti-abnormal in the filter of idem[j]
    let mut aa = vec![false; k * k];
    for (i, &e) in idem.iter().enumerate() {
        for (j, &f) in idem.iter().enumerate() {
            if s.leq(f, e) {
                aa[i * k + j] = m.is_anti_abnormal(e, s.filter(f));
            }
        }
    }
    let mut t = Tally::new();
    for (i, &e) in idem.iter().enumerate() {
        for (j, &f) in idem.iter().enumerate() {
            if !s.leq(f, e) || !aa[i * k + j] {
                continue;
            }
            for (l, &g) in idem.iter().enumerate() {
                if s.leq(g, f) && aa[j * k + l] {
                    t.check(aa[i * k + l], || format!("e={e}, f={f}, g={g}"));
                }
            }
        }
    }
    t.finish()
}

/// Every subcentral idempotent is anti-abnormal.
pub fn subcanti_check(s: &MonoidStructure) -> CheckOutcome {
    let all = ElemSet::full(s.size());
    let mut t = Tally::new();
    for e in series::subcentral_idempotents(s) {
        t.check(s.monoid().is_anti_abnormal(e, &all), || {
            format!("subcentral idempotent {e}")
        });
    }
    t.finish()
}

/// For G-nilpotent `S`: (i) every idempotent `f` is subcentral, with
/// `f_i = e_i f` a subcentral series to `f`; (ii) every nonzero `f` is
/// central in `e^` for some `e < f`; (iii) every 0-minimal idempotent is
/// central. E-reflexivity is not checked.
pub fn nilsubc_check(s: &MonoidStructure) -> CheckOutcome {
    if let Some(o) = hypothesis_skip(s) {
        return o;
    }
    let Some(witness) = shortest_g_series(s, SeriesKind::GNilpotent) else {
        return CheckOutcome::skipped("hypothesis unmet: monoid is not G-nilpotent");
    };
    let mut t = Tally::new();
    for &f in s.idempotents() {
        let chain: Vec<usize> = witness.iter().map(|&e| s.mul(e, f)).collect();
        t.check(series::is_series(s, &chain, SeriesKind::Subcentral), || {
            format!("chain e_i f for f={f} is not a subcentral series: {chain:?}")
        });
        t.check(series::is_subcentral(s, f), || format!("{f} is not subcentral"));
        if f != s.zero() {
            let found = s
                .idempotents()
                .iter()
                .any(|&e| e != f && s.leq(e, f) && s.is_central_in_filter(f, e));
            t.check(found, || format!("no e < {f} with {f} central in the filter of e"));
        }
    }
    for p in s.primitive_idempotents() {
        t.check(s.is_central(p), || format!("0-minimal idempotent {p} is not central"));
    }
    t.note("E-reflexivity not checked");
    t.finish()
}

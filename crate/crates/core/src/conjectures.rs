//! Exhaustive finite probes of the semigroup forms of open group-theory
//! problems. Probes report evidence and replayable witnesses, never proofs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::monoid::MonoidStructure;
use crate::nilpotency::shortest_g_series;
use crate::series::SeriesKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Problem {
    #[serde(rename = "1")]
    P1,
    #[serde(rename = "3")]
    P3,
    #[serde(rename = "4a")]
    P4a,
    #[serde(rename = "6")]
    P6,
}

/// Problems quantifying over infinite or torsion-free groups.
pub const NOT_FINITELY_PROBEABLE: &[(&str, &str)] = &[
    ("2", "quantifies over torsion-free groups"),
    ("5", "quantifies over infinite 2-groups"),
];

impl FromStr for Problem {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" => Ok(Problem::P1),
            "3" => Ok(Problem::P3),
            "4a" | "4" => Ok(Problem::P4a),
            "6" => Ok(Problem::P6),
            other => match NOT_FINITELY_PROBEABLE.iter().find(|(p, _)| *p == other) {
                Some((p, why)) => Err(format!("problem {p} is not finitely probeable: it {why}")),
                None => Err(format!("unknown problem `{other}`; expected 1, 3, 4a or 6")),
            },
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::P1 => "1",
            Problem::P3 => "3",
            Problem::P4a => "4a",
            Problem::P6 => "6",
        })
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProbeCaps {
    /// Conjugate tuples examined per idempotent (problem 3) or idempotent
    /// triples examined (problem 6).
    pub max_tuples: usize,
    /// Tuple size for problem 3 (5 or 7).
    pub k: usize,
}

impl Default for ProbeCaps {
    fn default() -> Self {
        ProbeCaps {
            max_tuples: 1_000_000,
            k: 7,
        }
    }
}

/// A stored outcome that can be re-evaluated against the monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `g^-1 (e^) g` over the listed units intersect in `{1}`.
    TrivialIntersection { e: usize, units: Vec<usize> },
    /// No choice of at most `k` units gives a trivial intersection.
    NoTrivialIntersection { e: usize, k: usize },
    /// `d_s(S) - d_s(e^)` for a primitive idempotent `e`.
    LengthGap {
        e: usize,
        ds_whole: usize,
        ds_filter: usize,
    },
    /// Problem 6: the bound is the product over `M` (`variant` "min" uses
    /// the elements of least `|x theta|`, "max" the maximal elements);
    /// `central` is a central idempotent `c <= bound` with `c^` of the
    /// kind, or `None` when none exists.
    CentralBound {
        e: usize,
        f: usize,
        h: usize,
        series: SeriesKind,
        variant: &'static str,
        bound: usize,
        central: Option<usize>,
    },
}

impl Witness {
    /// Re-evaluates the stored claim.
    pub fn replay(&self, s: &MonoidStructure) -> bool {
        let mut filters = FilterKinds::new(s);
        match self {
            Witness::TrivialIntersection { e, units } => {
                s.is_idempotent(*e) && units.iter().all(|&g| s.monoid().is_unit(g)) && intersection_is_one(s, *e, units)
            }
            Witness::NoTrivialIntersection { e, k } => {
                let (found, _, _) = search_intersection(s, *e, *k, usize::MAX);
                found.is_none()
            }
            Witness::LengthGap { e, ds_whole, ds_filter } => {
                s.primitive_idempotents().contains(e)
                    && filters.length(s.zero(), SeriesKind::GSolvable) == Some(*ds_whole)
                    && filters.length(*e, SeriesKind::GSolvable) == Some(*ds_filter)
            }
            Witness::CentralBound {
                e,
                f,
                h,
                series,
                variant,
                bound,
                central,
            } => {
                let Some(bounds) = problem6_bounds(s, *e, *f, *h) else {
                    return false;
                };
                let b = if *variant == "min" { bounds.0 } else { bounds.1 };
                if b != *bound {
                    return false;
                }
                match central {
                    Some(c) => {
                        s.is_idempotent(*c) && s.is_central(*c) && s.leq(*c, b) && filters.length(*c, *series).is_some()
                    }
                    None => find_central_below(s, &mut filters, b, *series).is_none(),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeResult {
    pub schema: u32,
    pub problem: Problem,
    pub group: String,
    /// Reason the probe did not run (hypothesis unmet, cap).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub instances: usize,
    pub witnesses: Vec<Witness>,
    pub counterexample_candidates: Vec<Witness>,
    pub truncated: bool,
    /// Problem 4a: the largest `d_s(S) - d_s(e^)` seen.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical_max: Option<i64>,
}

impl ProbeResult {
    fn new(problem: Problem, group: &str) -> Self {
        ProbeResult {
            schema: 1,
            problem,
            group: group.to_string(),
            skipped: None,
            instances: 0,
            witnesses: Vec::new(),
            counterexample_candidates: Vec::new(),
            truncated: false,
            empirical_max: None,
        }
    }

    fn skip(mut self, reason: impl Into<String>) -> Self {
        self.skipped = Some(reason.into());
        self
    }

    /// Every witness and candidate replays.
    pub fn replays(&self, s: &MonoidStructure) -> bool {
        self.witnesses
            .iter()
            .chain(&self.counterexample_candidates)
            .all(|w| w.replay(s))
    }
}

/// G-nilpotent and G-solvable lengths of filters `e^`, computed on demand.
pub struct FilterKinds<'a> {
    s: &'a MonoidStructure,
    memo: HashMap<(usize, SeriesKind), Option<usize>>,
}

impl<'a> FilterKinds<'a> {
    pub fn new(s: &'a MonoidStructure) -> Self {
        FilterKinds {
            s,
            memo: HashMap::new(),
        }
    }

    /// Shortest series length of the kind for `e^`, `None` if there is no
    /// such series.
    pub fn length(&mut self, e: usize, kind: SeriesKind) -> Option<usize> {
        let s = self.s;
        *self.memo.entry((e, kind)).or_insert_with(|| {
            let (m, _) = s
                .monoid()
                .restrict(&s.filter_view(e))
                .expect("a filter is an inverse submonoid");
            shortest_g_series(&MonoidStructure::new(m), kind).map(|c| c.len() - 1)
        })
    }
}

/// `g^-1 x g` for every `x` in `set`.
fn conjugate_set(s: &MonoidStructure, set: &ElemSet, g: usize) -> ElemSet {
    let m = s.monoid();
    let gi = m.inv(g);
    ElemSet::from_iter(s.size(), set.iter().map(|x| m.mul(m.mul(gi, x), g)))
}

fn intersection_is_one(s: &MonoidStructure, e: usize, units: &[usize]) -> bool {
    let filter = s.filter(e);
    let mut acc = ElemSet::full(s.size());
    for &g in units {
        acc = acc.intersection(&conjugate_set(s, filter, g));
    }
    acc.len() == 1 && acc.contains(s.identity())
}

/// Searches at most `k` units whose conjugates of `e^` meet in `{1}`. The
/// identity is always among them (conjugating the whole intersection by
/// `g_1^-1` keeps it trivial), and units giving the same conjugate are
/// tried once. Returns the witness, tuples examined and whether `cap`
/// stopped the search.
fn search_intersection(s: &MonoidStructure, e: usize, k: usize, cap: usize) -> (Option<Vec<usize>>, usize, bool) {
    let filter = s.filter(e);
    let mut conjugates: Vec<(ElemSet, usize)> = Vec::new();
    for &g in &s.units().elements {
        let c = conjugate_set(s, filter, g);
        if !conjugates.iter().any(|(d, _)| *d == c) {
            conjugates.push((c, g));
        }
    }
    let one = s.identity();
    let trivial = |x: &ElemSet| x.len() == 1 && x.contains(one);
    let first = filter.clone();
    if trivial(&first) {
        return (Some(vec![one]), 1, false);
    }
    // depth-first over increasing conjugate indices, stack of partial
    // intersections
    let mut examined = 0;
    let mut stack: Vec<(usize, ElemSet, Vec<usize>)> = vec![(0, first, vec![one])];
    while let Some((start, acc, units)) = stack.pop() {
        if units.len() >= k {
            continue;
        }
        for i in (start..conjugates.len()).rev() {
            examined += 1;
            if examined > cap {
                return (None, examined - 1, true);
            }
            let (c, g) = &conjugates[i];
            let next = acc.intersection(c);
            if next == acc {
                continue;
            }
            let mut us = units.clone();
            us.push(*g);
            if trivial(&next) {
                return (Some(us), examined, false);
            }
            stack.push((i + 1, next, us));
        }
    }
    (None, examined, false)
}

fn hypothesis(s: &MonoidStructure) -> Option<String> {
    (!s.satisfies_hypothesis()).then(|| "hypothesis unmet: monoid is not a coset monoid".to_string())
}

/// `E_c = {0, 1}`: for each `e` with G-nilpotent filter, a unit `g` with
/// `e^ n g^-1 (e^) g = {1}`.
pub fn probe_problem1(s: &MonoidStructure, group: &str) -> ProbeResult {
    let r = ProbeResult::new(Problem::P1, group);
    if let Some(reason) = hypothesis(s) {
        return r.skip(reason);
    }
    if s.central_idempotents().len() > 2 {
        return r.skip("hypothesis unmet: central idempotents other than 0 and 1 (group is not simple)");
    }
    intersection_probe(s, r, 2, SeriesKind::GNilpotent, usize::MAX)
}

/// Every central `f != 1` has a filter that is not G-solvable: for each `e`
/// with G-solvable filter, `k` units whose conjugates of `e^` meet in `{1}`.
pub fn probe_problem3(s: &MonoidStructure, group: &str, caps: ProbeCaps) -> ProbeResult {
    let r = ProbeResult::new(Problem::P3, group);
    if let Some(reason) = hypothesis(s) {
        return r.skip(reason);
    }
    let mut filters = FilterKinds::new(s);
    if let Some(f) = s
        .central_idempotents()
        .into_iter()
        .find(|&f| f != s.identity() && filters.length(f, SeriesKind::GSolvable).is_some())
    {
        return r.skip(format!(
            "hypothesis unmet: central idempotent {f} has a G-solvable filter"
        ));
    }
    intersection_probe(s, r, caps.k, SeriesKind::GSolvable, caps.max_tuples)
}

fn intersection_probe(s: &MonoidStructure, mut r: ProbeResult, k: usize, kind: SeriesKind, cap: usize) -> ProbeResult {
    let mut filters = FilterKinds::new(s);
    for &e in s.idempotents() {
        if filters.length(e, kind).is_none() {
            continue;
        }
        r.instances += 1;
        let (found, _, truncated) = search_intersection(s, e, k, cap);
        match found {
            Some(units) => r.witnesses.push(Witness::TrivialIntersection { e, units }),
            None if truncated => r.truncated = true,
            None => r
                .counterexample_candidates
                .push(Witness::NoTrivialIntersection { e, k }),
        }
    }
    r
}

/// `d_s(S) - d_s(e^)` over primitive idempotents of a G-solvable `S`.
pub fn probe_problem4a(s: &MonoidStructure, group: &str) -> ProbeResult {
    let mut r = ProbeResult::new(Problem::P4a, group);
    if let Some(reason) = hypothesis(s) {
        return r.skip(reason);
    }
    let mut filters = FilterKinds::new(s);
    let Some(ds_whole) = filters.length(s.zero(), SeriesKind::GSolvable) else {
        return r.skip("hypothesis unmet: monoid is not G-solvable");
    };
    for e in s.primitive_idempotents() {
        r.instances += 1;
        let ds_filter = filters
            .length(e, SeriesKind::GSolvable)
            .expect("filters of a G-solvable coset monoid are G-solvable");
        let gap = ds_whole as i64 - ds_filter as i64;
        r.empirical_max = Some(r.empirical_max.map_or(gap, |m| m.max(gap)));
        r.witnesses.push(Witness::LengthGap { e, ds_whole, ds_filter });
    }
    r
}

/// Product of idempotents in ascending index order.
fn product(s: &MonoidStructure, xs: &[usize]) -> usize {
    xs.iter().fold(s.identity(), |acc, &x| s.mul(acc, x))
}

/// `(max_S, Max_S)` for the triple, or `None` when a needed join is
/// missing.
pub fn problem6_bounds(s: &MonoidStructure, e: usize, f: usize, h: usize) -> Option<(usize, usize)> {
    let set = problem6_set(s, e, f, h)?;
    let order = |x: usize| s.theta(x).len();
    let m = set.iter().map(|&x| order(x)).min()?;
    let smallest: Vec<usize> = set.iter().copied().filter(|&x| order(x) == m).collect();
    let maximal: Vec<usize> = set
        .iter()
        .copied()
        .filter(|&x| !set.iter().any(|&y| y != x && s.leq(x, y)))
        .collect();
    Some((product(s, &smallest), product(s, &maximal)))
}

/// `M = {e v f' v h' : f' D f, h' D h}`, sorted.
pub fn problem6_set(s: &MonoidStructure, e: usize, f: usize, h: usize) -> Option<Vec<usize>> {
    let green = s.green();
    let class = |x: usize| -> Vec<usize> { green.d_class(x).into_iter().filter(|&y| s.is_idempotent(y)).collect() };
    let mut set = Vec::new();
    for fp in class(f) {
        let ef = s.join(e, fp)?;
        for &hp in &class(h) {
            set.push(s.join(ef, hp)?);
        }
    }
    set.sort_unstable();
    set.dedup();
    Some(set)
}

fn find_central_below(
    s: &MonoidStructure,
    filters: &mut FilterKinds<'_>,
    bound: usize,
    kind: SeriesKind,
) -> Option<usize> {
    s.central_idempotents()
        .into_iter()
        .find(|&c| s.leq(c, bound) && filters.length(c, kind).is_some())
}

/// All idempotent triples with filters of the kind, both kinds, variants
/// (a) `max_S` and (b) `Max_S`.
pub fn probe_problem6(s: &MonoidStructure, group: &str, caps: ProbeCaps) -> ProbeResult {
    let mut r = ProbeResult::new(Problem::P6, group);
    if let Some(reason) = hypothesis(s) {
        return r.skip(reason);
    }
    let mut filters = FilterKinds::new(s);
    let idem = s.idempotents();
    for series in [SeriesKind::GNilpotent, SeriesKind::GSolvable] {
        let admitted: Vec<usize> = idem
            .iter()
            .copied()
            .filter(|&e| filters.length(e, series).is_some())
            .collect();
        for &e in &admitted {
            for &f in &admitted {
                for &h in &admitted {
                    if r.instances >= caps.max_tuples {
                        r.truncated = true;
                        return r;
                    }
                    r.instances += 1;
                    let Some((small, big)) = problem6_bounds(s, e, f, h) else {
                        continue;
                    };
                    for (variant, bound) in [("min", small), ("max", big)] {
                        let central = find_central_below(s, &mut filters, bound, series);
                        let w = Witness::CentralBound {
                            e,
                            f,
                            h,
                            series,
                            variant,
                            bound,
                            central,
                        };
                        if central.is_some() {
                            r.witnesses.push(w);
                        } else {
                            r.counterexample_candidates.push(w);
                        }
                    }
                }
            }
        }
    }
    r
}

pub fn run_probe(s: &MonoidStructure, group: &str, problem: Problem, caps: ProbeCaps) -> ProbeResult {
    match problem {
        Problem::P1 => probe_problem1(s, group),
        Problem::P3 => probe_problem3(s, group, caps),
        Problem::P4a => probe_problem4a(s, group),
        Problem::P6 => probe_problem6(s, group, caps),
    }
}

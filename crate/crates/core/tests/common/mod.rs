//! Brute-force oracles. They use only the group multiplication and inverse
//! tables, never the lattice, monoid or series code under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use cosetlab::coset::CosetMonoid;
use cosetlab::{preset, FiniteGroup, FiniteInverseMonoid, SubgroupLattice};

pub fn coset_monoid(name: &str) -> CosetMonoid {
    let g = preset(name).unwrap();
    let l = SubgroupLattice::enumerate(g, usize::MAX).unwrap();
    CosetMonoid::build(l).unwrap()
}

/// Sorted closure of `gens` under multiplication.
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    let mut queue: VecDeque<usize> = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every subgroup, grown by adjoining one element at a time.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([vec![g.identity()]]);
    found.insert(vec![g.identity()]);
    while let Some(h) = queue.pop_front() {
        for x in g.elements() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let k = closure(g, &gens);
            if found.insert(k.clone()) {
                queue.push_back(k);
            }
        }
    }
    found.into_iter().collect()
}

/// Right cosets `Hg` of every subgroup, as sorted member lists.
pub fn all_cosets(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for h in all_subgroups(g) {
        for x in g.elements() {
            let mut c: Vec<usize> = h.iter().map(|&y| g.mul(y, x)).collect();
            c.sort_unstable();
            out.insert(c);
        }
    }
    out
}

pub fn is_normal(g: &FiniteGroup, h: &[usize]) -> bool {
    g.elements().all(|x| {
        h.iter()
            .all(|&y| h.binary_search(&g.mul(g.mul(g.inv(x), y), x)).is_ok())
    })
}

/// `[A, B]`, generated by all commutators.
pub fn commutator(g: &FiniteGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    for &x in a {
        for &y in b {
            gens.push(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
        }
    }
    closure(g, &gens)
}

/// Steps of `next` from the whole group down to `{1}`, or `None` if the
/// sequence stalls first.
fn steps_to_trivial(g: &FiniteGroup, next: impl Fn(&[usize]) -> Vec<usize>) -> Option<usize> {
    let mut cur: Vec<usize> = g.elements().collect();
    let mut n = 0;
    while cur.len() > 1 {
        let nxt = next(&cur);
        if nxt == cur {
            return None;
        }
        cur = nxt;
        n += 1;
    }
    Some(n)
}

pub fn nilpotency_class(g: &FiniteGroup) -> Option<usize> {
    let whole: Vec<usize> = g.elements().collect();
    steps_to_trivial(g, |c| commutator(g, c, &whole))
}

pub fn derived_length(g: &FiniteGroup) -> Option<usize> {
    steps_to_trivial(g, |c| commutator(g, c, c))
}

/// Shortest chain `H = H_0 < ... < H_d = G` with each term normal in the
/// next, found by walking down from `G` through normal subgroups.
pub fn subnormal_defect(g: &FiniteGroup, h: &[usize]) -> Option<usize> {
    let subs = all_subgroups(g);
    let whole: Vec<usize> = g.elements().collect();
    let mut dist = vec![usize::MAX; subs.len()];
    let start = subs.iter().position(|s| *s == whole)?;
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if subs[i] == h {
            return Some(dist[i]);
        }
        for (j, k) in subs.iter().enumerate() {
            let inside = k.iter().all(|x| subs[i].binary_search(x).is_ok());
            let normal = subs[i].iter().all(|&x| {
                k.iter()
                    .all(|&y| k.binary_search(&g.mul(g.mul(g.inv(x), y), x)).is_ok())
            });
            if dist[j] == usize::MAX && inside && normal {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    None
}

/// The inverse-monoid axioms checked from the table alone: associativity on
/// all triples, identity, zero, unique inverses, commuting idempotents.
pub fn inverse_monoid_axioms(m: &FiniteInverseMonoid) -> Result<(), String> {
    let n = m.size();
    let t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| m.mul(a, b)).collect()).collect();
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            for c in 0..n {
                if t[ab][c] != t[a][t[b][c]] {
                    return Err(format!("({a}{b}){c} != {a}({b}{c})"));
                }
            }
        }
    }
    let one: Vec<usize> = (0..n)
        .filter(|&e| (0..n).all(|a| t[e][a] == a && t[a][e] == a))
        .collect();
    if one.len() != 1 {
        return Err(format!("identities {one:?}"));
    }
    let zero: Vec<usize> = (0..n)
        .filter(|&z| (0..n).all(|a| t[z][a] == z && t[a][z] == z))
        .collect();
    if zero.len() != 1 {
        return Err(format!("zeros {zero:?}"));
    }
    for a in 0..n {
        let inv: Vec<usize> = (0..n).filter(|&b| t[t[a][b]][a] == a && t[t[b][a]][b] == b).collect();
        if inv.len() != 1 {
            return Err(format!("element {a} has inverses {inv:?}"));
        }
    }
    let idem: Vec<usize> = (0..n).filter(|&e| t[e][e] == e).collect();
    for &e in &idem {
        for &f in &idem {
            if t[e][f] != t[f][e] {
                return Err(format!("idempotents {e}, {f} do not commute"));
            }
        }
    }
    Ok(())
}

/// Products `Ha * Kb` recomputed from sets: the subgroup generated by `H`
/// and `aKa^-1`, then the coset containing `ab`.
pub fn coset_product(g: &FiniteGroup, h: &[usize], a: usize, k: &[usize], b: usize) -> Vec<usize> {
    let mut gens: Vec<usize> = h.to_vec();
    gens.extend(k.iter().map(|&y| g.mul(g.mul(a, y), g.inv(a))));
    let j = closure(g, &gens);
    let ab = g.mul(a, b);
    let mut c: Vec<usize> = j.iter().map(|&y| g.mul(y, ab)).collect();
    c.sort_unstable();
    c
}

/// All maximal chains of subgroups with prime indices, each term normal in
/// the one above and in `G`.
pub fn normal_prime_chains(g: &FiniteGroup) -> usize {
    let subs: Vec<Vec<usize>> = all_subgroups(g).into_iter().filter(|h| is_normal(g, h)).collect();
    let whole: Vec<usize> = g.elements().collect();
    fn count(subs: &[Vec<usize>], top: &[usize]) -> usize {
        if top.len() == 1 {
            return 1;
        }
        let top_set: HashSet<usize> = top.iter().copied().collect();
        subs.iter()
            .filter(|k| {
                let i = top.len() / k.len();
                k.len() < top.len()
                    && top.len().is_multiple_of(k.len())
                    && (2..i).all(|p| !i.is_multiple_of(p))
                    && k.iter().all(|x| top_set.contains(x))
            })
            .map(|k| count(subs, k))
            .sum()
    }
    count(&subs, &whole)
}

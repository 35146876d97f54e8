//! The coset monoid `K(G)`: all right cosets of all subgroups of `G` under
//! `Ha * Kb = <H, aKa^-1> ab`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::ElemSet;
use crate::check::{CheckOutcome, Tally};
use crate::error::MonoidError;
use crate::group::{FiniteGroup, PERMUTATION_CONVENTION};
use crate::iso::is_isomorphism;
use crate::lattice::SubgroupLattice;
use crate::monoid::{FiniteInverseMonoid, MonoidStructure, MONOID_SIZE_CAP};
use crate::series;

/// A right coset `Ha`, named by its subgroup id and least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetElement {
    pub subgroup: usize,
    pub representative: usize,
    #[serde(serialize_with = "serialize_set")]
    pub members: ElemSet,
}

fn serialize_set<S: serde::Serializer>(set: &ElemSet, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(set.iter())
}

#[derive(Debug)]
pub struct CosetMonoid {
    lattice: SubgroupLattice,
    structure: MonoidStructure,
    elements: Vec<CosetElement>,
    /// Subgroup ids that take part, ascending.
    family: Vec<usize>,
    /// `coset_index[h * |G| + g]` is the element `Hg` (`usize::MAX` when
    /// `h` is outside the family).
    coset_index: Vec<usize>,
}

struct Table {
    elements: Vec<CosetElement>,
    coset_index: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    zero: usize,
    labels: Vec<String>,
}

fn coset_table(lattice: &SubgroupLattice, family: &[usize]) -> Result<Table, MonoidError> {
    let g = lattice.group();
    let n = g.order();
    let total: usize = family.iter().map(|&h| n / lattice.subgroup(h).order()).sum();
    if total > MONOID_SIZE_CAP {
        return Err(MonoidError::CapExceeded {
            size: total,
            cap: MONOID_SIZE_CAP,
        });
    }
    let mut elements = Vec::with_capacity(total);
    let mut coset_index = vec![usize::MAX; lattice.len() * n];
    for &h in family {
        let sub = lattice.subgroup(h);
        for a in g.elements() {
            if coset_index[h * n + a] != usize::MAX {
                continue;
            }
            let members = ElemSet::from_iter(n, sub.members().map(|x| g.mul(x, a)));
            let idx = elements.len();
            for x in members.iter() {
                coset_index[h * n + x] = idx;
            }
            elements.push(CosetElement {
                subgroup: h,
                representative: a,
                members,
            });
        }
    }
    let size = elements.len();
    let mut mul = Vec::with_capacity(size * size);
    for x in &elements {
        let a = x.representative;
        for y in &elements {
            let l = lattice.join(x.subgroup, lattice.conj(y.subgroup, g.inv(a)));
            let idx = coset_index[l * n + g.mul(a, y.representative)];
            if idx == usize::MAX {
                return Err(MonoidError::NotClosed(format!(
                    "subgroup {l} generated by {} and a conjugate of {} is outside the family",
                    x.subgroup, y.subgroup
                )));
            }
            mul.push(idx);
        }
    }
    // (Ha)^-1 = a^-1 H = (a^-1 H a) a^-1
    let inv = elements
        .iter()
        .map(|x| {
            let a = x.representative;
            coset_index[lattice.conj(x.subgroup, a) * n + g.inv(a)]
        })
        .collect();
    let identity = coset_index[lattice.trivial_id() * n + g.identity()];
    let zero = coset_index[lattice.whole_id() * n + g.identity()];
    let labels = elements
        .iter()
        .map(|x| format!("H{}*{}", x.subgroup, g.label(x.representative)))
        .collect();
    Ok(Table {
        elements,
        coset_index,
        mul,
        inv,
        identity,
        zero,
        labels,
    })
}

impl CosetMonoid {
    /// Builds `K(G)` and runs the full inverse-monoid axiom suite on it.
    pub fn build(lattice: SubgroupLattice) -> Result<Self, MonoidError> {
        let family: Vec<usize> = (0..lattice.len()).collect();
        Self::build_family(lattice, family, true)
    }

    /// Builds `K(G)` without re-validating the table. Used for the many
    /// auxiliary copies `K(H)` whose tables are compared against a validated
    /// monoid anyway.
    pub fn build_trusted(lattice: SubgroupLattice) -> Result<Self, MonoidError> {
        let family: Vec<usize> = (0..lattice.len()).collect();
        Self::build_family(lattice, family, false)
    }

    /// The cosets of a subfamily of subgroups closed under conjugation and
    /// joins and containing `1` and `G` (for example all normal subgroups).
    /// The result is a validated factorizable inverse monoid whose units are
    /// `G` but whose idempotents are only the family.
    pub fn build_restricted(lattice: SubgroupLattice, family: &[usize]) -> Result<Self, MonoidError> {
        let mut family = family.to_vec();
        family.sort_unstable();
        family.dedup();
        for need in [lattice.trivial_id(), lattice.whole_id()] {
            if family.binary_search(&need).is_err() {
                return Err(MonoidError::Precondition(format!("family lacks subgroup {need}")));
            }
        }
        Self::build_family(lattice, family, true)
    }

    fn build_family(lattice: SubgroupLattice, family: Vec<usize>, validate: bool) -> Result<Self, MonoidError> {
        let t = coset_table(&lattice, &family)?;
        let n = t.elements.len();
        let monoid = if validate {
            let rows = t.mul.chunks(n).map(<[usize]>::to_vec).collect();
            FiniteInverseMonoid::validate(rows, t.identity, t.zero, Some(t.labels))?
        } else {
            FiniteInverseMonoid::from_trusted(n, t.mul, t.inv, t.identity, t.zero, t.labels)
        };
        Ok(CosetMonoid {
            lattice,
            structure: MonoidStructure::new(monoid),
            elements: t.elements,
            family,
            coset_index: t.coset_index,
        })
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    pub fn structure(&self) -> &MonoidStructure {
        &self.structure
    }

    pub fn monoid(&self) -> &FiniteInverseMonoid {
        self.structure.monoid()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CosetElement] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &CosetElement {
        &self.elements[x]
    }

    pub fn family(&self) -> &[usize] {
        &self.family
    }

    /// The element `Hg`, if `H` is in the family.
    pub fn coset(&self, h: usize, g: usize) -> Option<usize> {
        let idx = self.coset_index[h * self.group().order() + g];
        (idx != usize::MAX).then_some(idx)
    }

    /// The idempotent `H` itself.
    pub fn idempotent_of(&self, h: usize) -> Option<usize> {
        self.coset(h, self.group().identity())
    }

    pub fn subgroup_of(&self, x: usize) -> usize {
        self.elements[x].subgroup
    }

    /// The unit `{g}`.
    pub fn unit_of(&self, g: usize) -> usize {
        self.coset(self.lattice.trivial_id(), g)
            .expect("the trivial subgroup is always present")
    }

    /// Evaluates the product formula with arbitrary representatives
    /// `a in x` and `b in y`.
    pub fn product_with(&self, x: usize, a: usize, y: usize, b: usize) -> usize {
        let g = self.group();
        let (h, k) = (self.elements[x].subgroup, self.elements[y].subgroup);
        let l = self.lattice.join(h, self.lattice.conj(k, g.inv(a)));
        self.coset_index[l * g.order() + g.mul(a, b)]
    }

    pub fn sidecar(&self) -> CosetSidecar<'_> {
        CosetSidecar {
            schema: 1,
            group: self.group().name(),
            order: self.group().order(),
            convention: PERMUTATION_CONVENTION,
            identity: self.monoid().identity(),
            zero: self.monoid().zero(),
            subgroups: self
                .family
                .iter()
                .map(|&h| SubgroupEntry {
                    id: h,
                    members: self.lattice.subgroup(h).members().collect(),
                    normal: self.lattice.is_normal(h),
                })
                .collect(),
            elements: &self.elements,
        }
    }

    /// Hasse diagram of the idempotents, labelled by subgroup as in the
    /// lattice diagram.
    pub fn idempotent_dot(&self) -> String {
        self.structure.idempotent_order_dot(|e| {
            let h = self.subgroup_of(e);
            format!("#{h} |H|={}", self.lattice.subgroup(h).order())
        })
    }

    /// `x <= y` in the natural order iff `x` contains `y` as a set.
    pub fn check_reverse_inclusion(&self) -> CheckOutcome {
        let s = &self.structure;
        let mut t = Tally::new();
        for x in 0..self.size() {
            for y in 0..self.size() {
                let by_order = s.leq(x, y);
                let by_sets = self.elements[y].members.is_subset(&self.elements[x].members);
                t.check(by_order == by_sets, || {
                    format!("elements {x}, {y}: natural order {by_order}, containment {by_sets}")
                });
            }
        }
        t.finish()
    }

    /// `g -> {g}` is an isomorphism from `G` onto the unit group.
    pub fn check_units(&self) -> CheckOutcome {
        let g = self.group();
        let units = self.structure.units();
        let map: Vec<usize> = g
            .elements()
            .map(|x| units.index_of[self.unit_of(x)].unwrap_or(usize::MAX))
            .collect();
        let mut t = Tally::new();
        t.check(is_isomorphism(g, &units.group, &map), || {
            "g -> {g} is not an isomorphism onto the units".into()
        });
        t.finish()
    }

    /// `H theta = H` for every subgroup, so `theta` is onto the family.
    pub fn check_theta(&self) -> CheckOutcome {
        let s = &self.structure;
        let units = s.units();
        let mut t = Tally::new();
        for &h in &self.family {
            let e = self.idempotent_of(h).expect("family member");
            let image: Vec<usize> = s
                .theta(e)
                .iter()
                .map(|u| self.subgroup_elem(units.elements[u]))
                .collect();
            let mut image = image;
            image.sort_unstable();
            let want: Vec<usize> = self.lattice.subgroup(h).members().collect();
            t.check(image == want, || format!("theta of subgroup {h} is {image:?}"));
        }
        let dual = s.dual_isomorphism();
        t.check(dual.holds, || dual.witness.clone().unwrap_or_default());
        t.check(dual.image_size == self.family.len(), || {
            format!("theta hits {} of {} subgroups", dual.image_size, self.family.len())
        });
        t.finish()
    }

    fn subgroup_elem(&self, unit: usize) -> usize {
        self.elements[unit].representative
    }

    /// Every correspondence between subgroups of `G` and idempotents of
    /// `K(G)`.
    pub fn check_dictionary(&self) -> DictionaryReport {
        let s = &self.structure;
        let lat = &self.lattice;
        let g = self.group();
        let n = g.order();
        let idem = |h: usize| self.idempotent_of(h).expect("family member");
        let fam = &self.family;

        let mut t = Tally::new();
        let formula: usize = fam.iter().map(|&h| n / lat.subgroup(h).order()).sum();
        t.check(formula == self.size(), || {
            format!("sum of indices {formula}, size {}", self.size())
        });
        let size_formula = t.finish();

        let mut t = Tally::new();
        let mut from_subgroups: Vec<usize> = fam.iter().map(|&h| idem(h)).collect();
        from_subgroups.sort_unstable();
        t.check(from_subgroups == s.idempotents(), || {
            format!("idempotents {:?}, subgroup cosets {from_subgroups:?}", s.idempotents())
        });
        for (x, c) in self.elements.iter().enumerate() {
            let contains = lat.subgroup(c.subgroup).contains(c.representative);
            t.check(contains == s.is_idempotent(x), || {
                format!(
                    "coset {x}: representative in subgroup {contains}, idempotent {}",
                    !contains
                )
            });
        }
        let idempotents = t.finish();

        let mut t = Tally::new();
        for &h in fam {
            let (c, nm) = (s.is_central(idem(h)), lat.is_normal(h));
            t.check(c == nm, || format!("subgroup {h}: central {c}, normal {nm}"));
        }
        let central_normal = t.finish();

        let mut t = Tally::new();
        let green = s.green();
        for &h in fam {
            for &k in fam {
                let (d, c) = (green.d_equivalent(idem(h), idem(k)), lat.are_conjugate(h, k));
                t.check(d == c, || format!("subgroups {h}, {k}: D-related {d}, conjugate {c}"));
            }
        }
        let d_conjugacy = t.finish();

        let mut t = Tally::new();
        let mut u = Tally::new();
        for &h in fam {
            for &k in fam {
                let want = lat.meet(h, k);
                let got = s.join(idem(h), idem(k));
                let ok = fam.binary_search(&want).is_ok() && got == Some(idem(want));
                t.check(ok, || {
                    format!("join of {h}, {k} is {got:?}, intersection is subgroup {want}")
                });
                let want = lat.join(h, k);
                let got = s.mul(idem(h), idem(k));
                u.check(self.subgroup_of(got) == want && s.is_idempotent(got), || {
                    format!("product of {h}, {k} is element {got}, generated subgroup is {want}")
                });
            }
        }
        let joins = t.finish();
        let products = u.finish();

        let mut t = Tally::new();
        for &h in fam {
            let (d, sd) = (series::defect(s, idem(h)), lat.subnormal_defect(h));
            t.check(d == sd, || {
                format!("subgroup {h}: defect {d:?}, subnormal defect {sd:?}")
            });
        }
        let defects = t.finish();

        DictionaryReport {
            size_formula,
            idempotents,
            central_normal,
            d_conjugacy,
            filters: self.check_filters(),
            joins,
            products,
            defects,
        }
    }

    /// The filter of the idempotent `H` is a copy of `K(H)`: the coset of
    /// `L <= H` with representative `a in H` goes to the same coset in `G`.
    pub fn check_filters(&self) -> CheckOutcome {
        if self.family.len() != self.lattice.len() {
            return CheckOutcome::skipped("restricted family: filters are not coset monoids");
        }
        let s = &self.structure;
        let g = self.group();
        let mut t = Tally::new();
        for h in 0..self.lattice.len() {
            let sub = self.lattice.subgroup(h);
            let (hg, emb) = g.subgroup_as_group(sub);
            let local = match SubgroupLattice::enumerate(hg, usize::MAX)
                .map_err(|e| e.to_string())
                .and_then(|l| Self::build_trusted(l).map_err(|e| e.to_string()))
            {
                Ok(k) => k,
                Err(err) => {
                    t.check(false, || format!("K of subgroup {h}: {err}"));
                    continue;
                }
            };
            let e = self.idempotent_of(h).expect("full family");
            let (filter, filter_emb) = match self.monoid().restrict(&s.filter_view(e)) {
                Ok(r) => r,
                Err(err) => {
                    t.check(false, || format!("filter of subgroup {h}: {err}"));
                    continue;
                }
            };
            let pos: std::collections::HashMap<usize, usize> =
                filter_emb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let map: Option<Vec<usize>> = local
                .elements
                .iter()
                .map(|c| {
                    let members =
                        ElemSet::from_iter(g.order(), local.lattice.subgroup(c.subgroup).members().map(|x| emb[x]));
                    let l = self.lattice.id_of_set(&members)?;
                    let x = self.coset(l, emb[c.representative])?;
                    pos.get(&x).copied()
                })
                .collect();
            let ok = map.is_some_and(|m| is_isomorphism(local.monoid(), &filter, &m));
            t.check(ok, || {
                format!("filter of subgroup {h} is not K(H) under the natural map")
            });
        }
        t.finish()
    }

    /// Re-evaluates the product formula with random representatives and
    /// compares against the table.
    pub fn representative_swap_test(&self, swaps: usize, seed: u64) -> CheckOutcome {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = self.size();
        let mut t = Tally::new();
        for _ in 0..swaps {
            let x = rng.gen_range(0..size);
            let y = rng.gen_range(0..size);
            let xs: Vec<usize> = self.elements[x].members.iter().collect();
            let ys: Vec<usize> = self.elements[y].members.iter().collect();
            let a = xs[rng.gen_range(0..xs.len())];
            let b = ys[rng.gen_range(0..ys.len())];
            let got = self.product_with(x, a, y, b);
            let want = self.monoid().mul(x, y);
            t.check(got == want, || {
                format!("{x} * {y} with representatives {a}, {b} gives {got}, table {want}")
            });
        }
        t.finish()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DictionaryReport {
    pub size_formula: CheckOutcome,
    pub idempotents: CheckOutcome,
    pub central_normal: CheckOutcome,
    pub d_conjugacy: CheckOutcome,
    pub filters: CheckOutcome,
    pub joins: CheckOutcome,
    pub products: CheckOutcome,
    pub defects: CheckOutcome,
}

impl DictionaryReport {
    pub fn entries(&self) -> [(&'static str, &CheckOutcome); 8] {
        [
            ("size-formula", &self.size_formula),
            ("idempotents", &self.idempotents),
            ("central-normal", &self.central_normal),
            ("d-conjugacy", &self.d_conjugacy),
            ("filters", &self.filters),
            ("joins", &self.joins),
            ("products", &self.products),
            ("defects", &self.defects),
        ]
    }

    /// The first failing entry, or `Pass` summing the instances.
    pub fn summary(&self) -> CheckOutcome {
        let mut instances = 0;
        for (name, o) in self.entries() {
            match o {
                CheckOutcome::Pass { instances: k, .. } => instances += k,
                CheckOutcome::Fail { witness } => return CheckOutcome::fail(format!("{name}: {witness}")),
                CheckOutcome::Skipped { .. } => {}
            }
        }
        CheckOutcome::Pass { instances, note: None }
    }
}

#[derive(Debug, Serialize)]
pub struct SubgroupEntry {
    pub id: usize,
    pub members: Vec<usize>,
    pub normal: bool,
}

/// JSON companion of the `imonoid` table: element index to coset.
#[derive(Debug, Serialize)]
pub struct CosetSidecar<'a> {
    pub schema: u32,
    pub group: &'a str,
    pub order: usize,
    pub convention: &'static str,
    pub identity: usize,
    pub zero: usize,
    pub subgroups: Vec<SubgroupEntry>,
    pub elements: &'a [CosetElement],
}

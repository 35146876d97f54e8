mod common;

use cosetlab::coset::CosetMonoid;
use cosetlab::monoid::monoid_isomorphic;
use cosetlab::nilpotency::{g_nilpotent_length, g_solvable_length};
use cosetlab::verify::DEFAULT_CORPUS;
use cosetlab::{FiniteGroup, FiniteInverseMonoid, SubgroupLattice};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

fn perm(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

/// Groups generated by one to three random permutations of degree 4.
fn perm_group() -> impl Strategy<Value = FiniteGroup> {
    prop::collection::vec(perm(4), 1..=3)
        .prop_map(|gens| FiniteGroup::from_permutations("random", 4, &gens, 64).unwrap())
}

fn build(g: FiniteGroup) -> CosetMonoid {
    CosetMonoid::build(SubgroupLattice::enumerate(g, 64).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_groups_satisfy_the_dictionary(g in perm_group()) {
        let k = build(g);
        prop_assert_eq!(k.size(), common::all_cosets(k.group()).len());
        let report = k.check_dictionary();
        for (name, o) in report.entries() {
            prop_assert!(o.is_pass(), "{}: {:?}", name, o);
        }
    }

    #[test]
    fn random_groups_lengths_match_oracle(g in perm_group()) {
        let k = build(g);
        let s = k.structure();
        prop_assert_eq!(g_nilpotent_length(s), common::nilpotency_class(k.group()));
        prop_assert_eq!(g_solvable_length(s), common::derived_length(k.group()));
    }

    #[test]
    fn product_ignores_representatives(
        name in select(DEFAULT_CORPUS),
        x in any::<prop::sample::Index>(),
        y in any::<prop::sample::Index>(),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let k = common::coset_monoid(name);
        let (x, y) = (x.index(k.size()), y.index(k.size()));
        let xs: Vec<usize> = k.element(x).members.iter().collect();
        let ys: Vec<usize> = k.element(y).members.iter().collect();
        let (a, b) = (*a.get(&xs), *b.get(&ys));
        prop_assert_eq!(k.product_with(x, a, y, b), k.monoid().mul(x, y));
        let h: Vec<usize> = k.lattice().subgroup(k.subgroup_of(x)).members().collect();
        let l: Vec<usize> = k.lattice().subgroup(k.subgroup_of(y)).members().collect();
        let want = common::coset_product(k.group(), &h, a, &l, b);
        let got: Vec<usize> = k.element(k.monoid().mul(x, y)).members.iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn inverse_and_order_laws(
        name in select(DEFAULT_CORPUS),
        x in any::<prop::sample::Index>(),
        y in any::<prop::sample::Index>(),
    ) {
        let k = common::coset_monoid(name);
        let m = k.monoid();
        let (x, y) = (x.index(k.size()), y.index(k.size()));
        let xi = m.inv(x);
        prop_assert_eq!(m.mul(m.mul(x, xi), x), x);
        prop_assert_eq!(m.inv(m.mul(x, y)), m.mul(m.inv(y), xi));
        let (cx, cy) = (&k.element(x).members, &k.element(y).members);
        let contains = cx.iter().all(|g| cy.contains(g));
        prop_assert_eq!(m.leq(y, x), contains);
    }

    #[test]
    fn relabelled_monoid_is_isomorphic(
        (name, p) in select(&["C4", "V4", "S3", "C6"][..]).prop_flat_map(|n| {
            let size = common::coset_monoid(n).size();
            (Just(n), Just((0..size).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let k = common::coset_monoid(name);
        let m = k.monoid();
        let r = m.relabel(&p);
        prop_assert_eq!(m.fingerprint(), r.fingerprint());
        let iso = monoid_isomorphic(m, &r).unwrap();
        prop_assert!(iso.is_some());
        let back = FiniteInverseMonoid::parse_imonoid(&r.to_imonoid()).unwrap();
        prop_assert_eq!(back.to_imonoid(), r.to_imonoid());
    }

    #[test]
    fn closed_subgroup_families_build(
        name in select(&["S3", "D4", "Q8", "A4"][..]),
        pick in subsequence((0..10usize).collect::<Vec<_>>(), 0..4),
    ) {
        let g = cosetlab::preset(name).unwrap();
        let l = SubgroupLattice::enumerate(g, 64).unwrap();
        let mut family = vec![l.trivial_id(), l.whole_id()];
        family.extend(pick.into_iter().filter(|&h| h < l.len()));
        loop {
            let mut grown = family.clone();
            for &a in &family {
                grown.extend(l.conjugacy_class(a));
                for &b in &family {
                    grown.push(l.meet(a, b));
                    grown.push(l.join(a, b));
                }
            }
            grown.sort_unstable();
            grown.dedup();
            if grown == family {
                break;
            }
            family = grown;
        }
        let size: usize = family.iter().map(|&h| l.group().order() / l.subgroup(h).order()).sum();
        let k = CosetMonoid::build_restricted(l, &family).unwrap();
        prop_assert_eq!(k.size(), size);
        prop_assert!(k.structure().is_factorizable());
        prop_assert!(common::inverse_monoid_axioms(k.monoid()).is_ok());
    }
}

mod common;

use cosetlab::group::groups_isomorphic;
use cosetlab::series::{self, SeriesKind};
use cosetlab::{preset, FiniteGroup};

#[test]
fn s3_from_generators_has_six_elements() {
    let g = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 64).unwrap();
    let mut seen = vec![vec![0, 1, 2]];
    let gens = [[1, 0, 2], [1, 2, 0]];
    let mut i = 0;
    while i < seen.len() {
        for s in &gens {
            let p: Vec<usize> = seen[i].iter().map(|&x| s[x]).collect();
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        i += 1;
    }
    assert_eq!(g.order(), seen.len());
    assert_eq!(seen.len(), 6);
}

#[test]
fn q8_has_a_single_involution() {
    let g = preset("Q8").unwrap();
    let e = g.identity();
    let inv = g.elements().filter(|&x| x != e && g.mul(x, x) == e).count();
    assert_eq!(inv, 1);
}

#[test]
fn coset_count_matches_raw_enumeration() {
    for name in ["C1", "C4", "V4", "S3", "D4", "Q8", "A4"] {
        let k = common::coset_monoid(name);
        assert_eq!(k.size(), common::all_cosets(k.group()).len(), "{name}");
    }
}

#[test]
fn s4_defects_inside_the_klein_subgroup() {
    let k = common::coset_monoid("S4");
    let g = k.group();
    let subs = common::all_subgroups(g);
    let v4 = subs.iter().find(|h| h.len() == 4 && common::is_normal(g, h)).unwrap();
    let s = k.structure();
    let defect = |h: &[usize]| {
        let id = k
            .lattice()
            .subgroups()
            .iter()
            .position(|x| x.members().eq(h.iter().copied()))
            .unwrap();
        series::defect(s, k.idempotent_of(id).unwrap())
    };
    assert_eq!(common::subnormal_defect(g, v4), Some(1));
    assert_eq!(defect(v4), Some(1));
    for h in subs.iter().filter(|h| h.len() == 2 && h.iter().all(|x| v4.contains(x))) {
        assert_eq!(common::subnormal_defect(g, h), Some(2));
        assert_eq!(defect(h), Some(2));
    }
}

#[test]
fn c6_has_two_isomorphic_composition_central_series() {
    let k = common::coset_monoid("C6");
    let s = k.structure();
    let comp = series::composition_series(s, SeriesKind::Central, series::COMPOSITION_CAP);
    assert_eq!(comp.series.len(), common::normal_prime_chains(k.group()));
    assert_eq!(comp.series.len(), 2);
    let mut catalog = cosetlab::monoid::FactorCatalog::new();
    let m = series::series_isomorphic(s, &comp.series[0], &comp.series[1], &mut catalog).unwrap();
    assert!(m.is_some());
}

/// Along each composition subcentral series, the units of `F_{e_i, e_{i+1}}`
/// form a copy of `H_i / H_{i+1}`.
#[test]
fn factor_units_are_subgroup_quotients() {
    for name in ["S3", "D4", "Q8", "A4", "C2xC4"] {
        let k = common::coset_monoid(name);
        let s = k.structure();
        let g = k.group();
        let comp = series::composition_series(s, SeriesKind::Subcentral, series::COMPOSITION_CAP);
        assert!(!comp.series.is_empty());
        for chain in &comp.series {
            for w in chain.chain.windows(2) {
                let (e, f) = (w[0], w[1]);
                let factor = s.factor(e, f).unwrap();
                let m = s.monoid();
                let units =
                    FiniteGroup::from_closed_subset("UF", &factor.units, f, |a, b| m.mul(a, b), |a| a.to_string())
                        .unwrap();
                let (big, small) = (
                    k.lattice().subgroup(k.subgroup_of(e)),
                    k.lattice().subgroup(k.subgroup_of(f)),
                );
                let (hg, emb) = g.subgroup_as_group(big);
                let inner: Vec<usize> = hg.elements().filter(|&x| small.contains(emb[x])).collect();
                let n = hg.generate(&inner);
                let q = hg.quotient(&n).unwrap();
                assert!(groups_isomorphic(&units, &q.group), "{name}: factor {e} -> {f}");
            }
        }
    }
}

#[test]
fn lengths_match_group_oracle_on_products() {
    for name in ["S3xC2", "C2xC2xC2", "D6", "D5"] {
        let k = common::coset_monoid(name);
        let s = k.structure();
        assert_eq!(
            cosetlab::nilpotency::g_nilpotent_length(s),
            common::nilpotency_class(k.group()),
            "{name}"
        );
        assert_eq!(
            cosetlab::nilpotency::g_solvable_length(s),
            common::derived_length(k.group()),
            "{name}"
        );
    }
}

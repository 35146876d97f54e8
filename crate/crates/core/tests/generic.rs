//! Checks on inverse monoids that are not full coset monoids.

mod common;

use cosetlab::check::CheckOutcome;
use cosetlab::coset::CosetMonoid;
use cosetlab::monoid::{
    brandt_with_identity, chain_semilattice, group_with_zero, lemmas, symmetric_inverse_monoid, FactorCatalog,
};
use cosetlab::nilpotency::{self, g_nilpotent_length, g_solvable_length};
use cosetlab::{preset, series, FiniteInverseMonoid, MonoidStructure, SubgroupLattice};

fn all_checks(s: &MonoidStructure) -> Vec<(&'static str, CheckOutcome)> {
    let mut c = FactorCatalog::new();
    vec![
        ("fgeq-i", lemmas::fgeq_i(s)),
        ("fgeq-ii", lemmas::fgeq_ii(s)),
        ("fgeq-iii", lemmas::fgeq_iii(s)),
        ("thecon-i", lemmas::thecon_i(s)),
        ("thecon-ii", lemmas::thecon_ii(s)),
        ("thecon-iii", lemmas::thecon_iii(s)),
        ("thecon-iv", lemmas::thecon_iv(s)),
        ("thecon-v", lemmas::thecon_v(s)),
        ("phie", lemmas::phie(s)),
        ("iso2", lemmas::iso2(s)),
        ("iso2pe-i", lemmas::iso2pe_i(s, &mut c)),
        ("iso2pe-ii", lemmas::iso2pe_ii(s, &mut c)),
        ("subcs", series::check_subcs(s)),
        ("schre", series::check_schre(s, &mut c)),
        ("jorh", series::check_jorh(s, &mut c)),
        ("nseq", nilpotency::nseq_check(s)),
        ("sei", nilpotency::sei_check(s)),
        ("nsl1eq", nilpotency::nsl1eq_check(s)),
        ("gnilu", nilpotency::gnilu_check(s)),
        ("fasec", nilpotency::fasec_check(s)),
        ("niliff", nilpotency::niliff_check(s)),
        ("aabtrans", nilpotency::aabtrans_check(s)),
        ("subcanti", nilpotency::subcanti_check(s)),
        ("nilsubc", nilpotency::nilsubc_check(s)),
    ]
}

fn no_failures(name: &str, m: FiniteInverseMonoid) -> Vec<(&'static str, CheckOutcome)> {
    common::inverse_monoid_axioms(&m).unwrap();
    let s = MonoidStructure::new(m);
    let out = all_checks(&s);
    for (check, o) in &out {
        assert!(!o.is_fail(), "{name} {check}: {o:?}");
    }
    out
}

#[test]
fn classical_monoids_never_fail() {
    for n in 1..=3 {
        no_failures(&format!("SIM({n})"), symmetric_inverse_monoid(n));
    }
    no_failures("brandt", brandt_with_identity());
    no_failures("chain", chain_semilattice(4));
    for g in ["C3", "S3", "Q8"] {
        no_failures(g, group_with_zero(&preset(g).unwrap()));
    }
}

#[test]
fn sim_sizes() {
    let want = |n: u64| {
        (0..=n)
            .map(|k| binom(n, k).pow(2) * (1..=k).product::<u64>())
            .sum::<u64>()
    };
    for n in 1..=3 {
        assert_eq!(symmetric_inverse_monoid(n as usize).size() as u64, want(n));
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

/// `G^0` has the single idempotent series `0 < 1` whose factor is all of
/// `G^0`, so both lengths are 1 exactly when `G` is abelian.
#[test]
fn group_with_zero_lengths_follow_commutativity() {
    for name in ["C3", "S3", "Q8", "D4", "C2xC4"] {
        let g = preset(name).unwrap();
        let s = MonoidStructure::new(group_with_zero(&g));
        let want = common::nilpotency_class(&g).filter(|&c| c == 1);
        assert_eq!(g_nilpotent_length(&s), want, "{name}");
        assert_eq!(g_solvable_length(&s), want, "{name}");
    }
}

/// Cosets of normal subgroups only: units `G`, idempotents the normal
/// subgroups, so every idempotent is central.
#[test]
fn normal_family_monoids() {
    for name in ["S3", "D4", "Q8", "A4", "S4"] {
        let l = SubgroupLattice::enumerate(preset(name).unwrap(), 64).unwrap();
        let family: Vec<usize> = (0..l.len()).filter(|&h| l.is_normal(h)).collect();
        let k = CosetMonoid::build_restricted(l, &family).unwrap();
        let s = k.structure();
        assert!(s.satisfies_hypothesis(), "{name}");
        assert_eq!(s.central_idempotents().len(), family.len());
        let out = no_failures(name, k.monoid().clone());
        let applied = out.iter().filter(|(_, o)| o.is_pass()).count();
        assert!(applied > 20, "{name}: only {applied} checks applied");
    }
}

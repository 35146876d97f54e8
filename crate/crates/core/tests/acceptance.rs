//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cosetlab::check::CheckOutcome;
use cosetlab::conjectures::{probe_problem4a, probe_problem6, ProbeCaps};
use cosetlab::coset::CosetMonoid;
use cosetlab::nilpotency::{g_nilpotent_length, g_solvable_length};
use cosetlab::series::{self, SeriesKind};
use cosetlab::verify::{default_corpus, run_verify, VerificationMatrix, VerifyCaps, DEFAULT_CORPUS};
use cosetlab::{preset, SubgroupLattice};

type Outcome = Result<String, String>;
type Criterion = fn(&Corpus) -> Outcome;

struct Corpus {
    monoids: Vec<(&'static str, CosetMonoid)>,
    matrix: VerificationMatrix,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cells_pass(
    m: &VerificationMatrix,
    checks: &[&str],
    allow_skip: impl Fn(&str, &str) -> bool,
) -> Result<usize, String> {
    let mut n = 0;
    for row in &m.rows {
        ensure(row.error.is_none(), || {
            format!("{}: {}", row.group, row.error.clone().unwrap_or_default())
        })?;
        for &c in checks {
            match row.cell(c) {
                Some(CheckOutcome::Pass { instances, .. }) => n += instances,
                Some(CheckOutcome::Fail { witness }) => return Err(format!("{} {c}: {witness}", row.group)),
                Some(CheckOutcome::Skipped { reason }) => ensure(allow_skip(&row.group, c), || {
                    format!("{} {c} skipped: {reason}", row.group)
                })?,
                None => return Err(format!("{} has no {c} cell", row.group)),
            }
        }
    }
    Ok(n)
}

fn construction(c: &Corpus) -> Outcome {
    let start = Instant::now();
    for (name, k) in &c.monoids {
        ensure(k.group().order() <= 24, || format!("{name} exceeds order 24"))?;
        common::inverse_monoid_axioms(k.monoid()).map_err(|e| format!("{name}: {e}"))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("axiom suite took {secs:.1}s"))?;
    Ok(format!(
        "{} groups, axioms on all triples in {secs:.2}s",
        c.monoids.len()
    ))
}

fn dictionary(c: &Corpus) -> Outcome {
    for (name, k) in &c.monoids {
        let g = k.group();
        let report = k.check_dictionary();
        for (entry, o) in report.entries() {
            ensure(o.is_pass(), || format!("{name} {entry}: {o:?}"))?;
        }
        ensure(k.check_reverse_inclusion().is_pass(), || {
            format!("{name}: natural order")
        })?;

        let subs = common::all_subgroups(g);
        let formula: usize = subs.iter().map(|h| g.order() / h.len()).sum();
        ensure(formula == k.size(), || {
            format!("{name}: sum of indices {formula}, |K| {}", k.size())
        })?;
        let cosets = common::all_cosets(g);
        let built: BTreeSet<Vec<usize>> = k.elements().iter().map(|e| e.members.iter().collect()).collect();
        ensure(cosets == built, || {
            format!("{name}: coset sets differ from raw enumeration")
        })?;

        let s = k.structure();
        ensure(s.idempotents().len() == subs.len(), || {
            format!("{name}: idempotent count")
        })?;
        let normal = subs.iter().filter(|h| common::is_normal(g, h)).count();
        ensure(s.central_idempotents().len() == normal, || {
            format!("{name}: central idempotent count")
        })?;
        for h in 0..k.lattice().len() {
            let members: Vec<usize> = k.lattice().subgroup(h).members().collect();
            let e = k.idempotent_of(h).unwrap();
            let (got, want) = (series::defect(s, e), common::subnormal_defect(g, &members));
            ensure(got == want, || {
                format!("{name} subgroup {h}: defect {got:?}, oracle {want:?}")
            })?;
        }
    }
    Ok(format!("{} groups, every correspondence exact", c.monoids.len()))
}

fn lemmas(c: &Corpus) -> Outcome {
    let checks = [
        "fgeq-i",
        "fgeq-ii",
        "fgeq-iii",
        "thecon-i",
        "thecon-ii",
        "thecon-iii",
        "thecon-iv",
        "thecon-v",
        "phie",
        "iso2",
        "iso2pe-i",
        "iso2pe-ii",
    ];
    let n = cells_pass(&c.matrix, &checks, |_, _| false)?;
    Ok(format!("{n} instances"))
}

fn jordan_holder(c: &Corpus) -> Outcome {
    for (name, k) in &c.monoids {
        if k.lattice().len() <= 30 {
            let row = c.matrix.rows.iter().find(|r| r.group == *name).unwrap();
            ensure(row.cell("jorh").is_some_and(CheckOutcome::is_pass), || {
                format!("{name} jorh: {:?}", row.cell("jorh"))
            })?;
        }
        if k.group().is_abelian() {
            let got = series::composition_series(k.structure(), SeriesKind::Central, series::COMPOSITION_CAP);
            let want = common::normal_prime_chains(k.group());
            ensure(got.series.len() == want, || {
                format!("{name}: {} composition central series, oracle {want}", got.series.len())
            })?;
        }
    }
    let n = cells_pass(&c.matrix, &["jorh", "schre", "subcs", "jorhex"], |_, _| false)?;
    Ok(format!("{n} instances"))
}

fn snchr(c: &Corpus) -> Outcome {
    for (name, k) in &c.monoids {
        let (class, dl) = (common::nilpotency_class(k.group()), common::derived_length(k.group()));
        let s = k.structure();
        let (nl, sl) = (g_nilpotent_length(s), g_solvable_length(s));
        ensure(class == nl && dl == sl, || {
            format!("{name}: group {class:?}/{dl:?}, K(G) {nl:?}/{sl:?}")
        })?;
    }
    let spots: [(&str, Option<usize>, Option<usize>); 6] = [
        ("Q8", Some(2), Some(2)),
        ("D4", Some(2), Some(2)),
        ("S3", None, Some(2)),
        ("S4", None, Some(3)),
        ("C5", Some(1), Some(1)),
        ("C2xC4", Some(1), Some(1)),
    ];
    for (name, n, d) in spots {
        let (_, k) = c.monoids.iter().find(|(g, _)| *g == name).unwrap();
        let s = k.structure();
        ensure(g_nilpotent_length(s) == n && g_solvable_length(s) == d, || {
            format!("{name} spot value")
        })?;
    }
    cells_pass(&c.matrix, &["snchr"], |_, _| false)?;
    Ok(format!("{} groups agree with the group-side oracle", c.monoids.len()))
}

fn nilpotency_lemmas(c: &Corpus) -> Outcome {
    let checks = [
        "nseq", "sei", "nsl1eq", "gnilu", "fasec", "niliff", "aabtrans", "subcanti", "nilsubc",
    ];
    let nilpotent: BTreeSet<&str> = c
        .monoids
        .iter()
        .filter(|(_, k)| common::nilpotency_class(k.group()).is_some())
        .map(|(n, _)| *n)
        .collect();
    let n = cells_pass(&c.matrix, &checks, |g, check| {
        matches!(check, "sei" | "nilsubc") && !nilpotent.contains(g)
    })?;
    for check in checks {
        let passes = c
            .matrix
            .rows
            .iter()
            .filter(|r| r.cell(check).is_some_and(CheckOutcome::is_pass))
            .count();
        ensure(passes > 0, || format!("{check} never applies"))?;
    }
    Ok(format!("{n} instances"))
}

fn determinism(c: &Corpus) -> Outcome {
    let again = run_verify(&default_corpus(), VerifyCaps::default());
    ensure(again.to_json() == c.matrix.to_json(), || {
        "verify output differs between runs".into()
    })?;
    for row in &c.matrix.rows {
        match row.cell("swap") {
            Some(CheckOutcome::Pass { instances: 100, .. }) => {}
            other => return Err(format!("{} swap: {other:?}", row.group)),
        }
    }
    for (name, k) in &c.monoids {
        let g = k.group();
        for x in 0..k.size() {
            for y in 0..k.size() {
                let (ex, ey) = (k.element(x), k.element(y));
                let h: Vec<usize> = k.lattice().subgroup(ex.subgroup).members().collect();
                let l: Vec<usize> = k.lattice().subgroup(ey.subgroup).members().collect();
                let want = common::coset_product(g, &h, ex.representative, &l, ey.representative);
                let got: Vec<usize> = k.element(k.monoid().mul(x, y)).members.iter().collect();
                ensure(got == want, || {
                    format!("{name}: {x} * {y} differs from the set computation")
                })?;
            }
        }
    }
    Ok(format!(
        "byte-identical reruns, 100 swaps on {} groups",
        c.matrix.rows.len()
    ))
}

fn probes(c: &Corpus) -> Outcome {
    let mut max = i64::MIN;
    let mut solvable = 0;
    for (name, k) in &c.monoids {
        if common::derived_length(k.group()).is_none() {
            continue;
        }
        solvable += 1;
        let r = probe_problem4a(k.structure(), name);
        ensure(r.skipped.is_none(), || format!("{name} 4a skipped: {:?}", r.skipped))?;
        ensure(r.replays(k.structure()), || {
            format!("{name}: 4a witness does not replay")
        })?;
        match r.empirical_max {
            Some(m) => max = max.max(m),
            None => ensure(r.instances == 0, || format!("{name}: no empirical max"))?,
        }
    }

    ensure(max != i64::MIN, || "4a produced no instances".into())?;

    let (_, q8) = c.monoids.iter().find(|(g, _)| *g == "Q8").unwrap();
    let s = q8.structure();
    let r = probe_problem6(s, "Q8", ProbeCaps::default());
    ensure(!r.truncated && r.skipped.is_none(), || {
        "6 on Q8 did not complete".into()
    })?;
    let subs = common::all_subgroups(q8.group());
    let lat = q8.lattice();
    let mut want = 0;
    for oracle in [common::nilpotency_class, common::derived_length] {
        let admitted = subs
            .iter()
            .filter(|h| {
                let id = lat
                    .id_of_set(&cosetlab::bitset::ElemSet::from_iter(8, h.iter().copied()))
                    .unwrap();
                let (hg, _) = q8.group().subgroup_as_group(lat.subgroup(id));
                oracle(&hg).is_some()
            })
            .count();
        want += admitted.pow(3);
    }
    ensure(r.instances == want, || {
        format!("6 on Q8 ran {} triples, expected {want}", r.instances)
    })?;
    ensure(r.replays(s), || "6 on Q8: witness does not replay".into())?;
    Ok(format!(
        "4a max {max} over {solvable} groups; 6 on Q8 {} triples, {} witnesses replay",
        r.instances,
        r.witnesses.len() + r.counterexample_candidates.len()
    ))
}

fn main() -> ExitCode {
    let monoids = DEFAULT_CORPUS
        .iter()
        .map(|&n| {
            let l = SubgroupLattice::enumerate(preset(n).unwrap(), 24).unwrap();
            (n, CosetMonoid::build(l).unwrap())
        })
        .collect();
    let matrix = run_verify(&default_corpus(), VerifyCaps::default());
    let corpus = Corpus { monoids, matrix };

    let criteria: [(&str, Criterion); 8] = [
        ("construction soundness", construction),
        ("dictionary", dictionary),
        ("lemma suite", lemmas),
        ("jordan-holder and schreier", jordan_holder),
        ("nilpotency class and derived length", snchr),
        ("nilpotency lemmas", nilpotency_lemmas),
        ("determinism", determinism),
        ("probes", probes),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run(&corpus) {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

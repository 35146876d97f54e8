use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cosetlab::conjectures::{self, ProbeCaps, ProbeResult, Problem, NOT_FINITELY_PROBEABLE};
use cosetlab::coset::CosetMonoid;
use cosetlab::group::{hard_order_cap, CAP_ENV, PERMUTATION_CONVENTION};
use cosetlab::monoid::FactorCatalog;
use cosetlab::nilpotency;
use cosetlab::series::{self, IdempotentSeries, SeriesKind, COMPOSITION_CAP};
use cosetlab::verify::{self, VerifyCaps, VERIFY_ORDER_CAP};
use cosetlab::{parse_group, FiniteGroup, FiniteInverseMonoid, MonoidStructure, SubgroupLattice};

#[derive(Parser)]
#[command(name = "cosetlab", version)]
#[command(about = "Coset monoids of finite groups and their idempotent series")]
struct Cli {
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Largest group order accepted (at most the hard cap)
    #[arg(long, global = true)]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GroupArgs {
    /// Group spec text, a file holding one, or a preset name
    #[arg(long, conflicts_with = "preset")]
    group: Option<String>,

    /// Preset name such as S4, Q8 or C2xC4
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args, Clone)]
struct SubjectArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// An `imonoid` table file to use instead of a group
    #[arg(long, conflicts_with_all = ["group", "preset"])]
    monoid: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Subcentral,
    Central,
}

impl From<KindArg> for SeriesKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Subcentral => SeriesKind::Subcentral,
            KindArg::Central => SeriesKind::Central,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DotTarget {
    SubgroupLattice,
    IdempotentOrder,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a group, its subgroup lattice and its coset monoid
    Analyze(GroupArgs),
    /// Print K(G) as an imonoid table (with --json, the coset sidecar)
    CosetMonoid {
        #[command(flatten)]
        group: GroupArgs,
        /// Sidecar path; defaults to the --out path with `.json` appended
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Idempotent series: composition series, refinements and defects
    Series {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, value_enum, default_value = "subcentral")]
        kind: KindArg,
        /// Enumerate composition series (the default action)
        #[arg(long)]
        composition: bool,
        /// Refine a chain of subcentral idempotents, comma separated
        #[arg(long, value_delimiter = ',')]
        refine: Vec<usize>,
        /// Defect of one idempotent
        #[arg(long)]
        defect: Option<usize>,
        /// Cap on enumerated series
        #[arg(long, default_value_t = COMPOSITION_CAP)]
        cap: usize,
    },
    /// G-nilpotent and G-solvable lengths
    Classify(SubjectArgs),
    /// Run every check over a corpus and print the matrix
    Verify {
        /// Directory of group-spec files (default: the built-in corpus)
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Representative swaps per group
        #[arg(long, default_value_t = 100)]
        swaps: usize,
    },
    /// Finite probes of the open problems
    Probe {
        #[command(flatten)]
        group: GroupArgs,
        /// 1, 3, 4a or 6
        #[arg(long)]
        problem: Option<String>,
        /// Number of conjugates for problem 3
        #[arg(long, default_value_t = 7)]
        k: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_tuples: usize,
        /// List the problems, including those that cannot be probed
        #[arg(long)]
        list: bool,
    },
    /// Hasse diagram in DOT
    Dot {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "subgroup-lattice")]
        target: DotTarget,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn order_cap(cli: &Cli, default: usize) -> Result<usize> {
    let hard = hard_order_cap();
    match cli.max_order {
        Some(m) if m > hard => bail!("--max-order {m} exceeds the hard cap {hard}; raise it with {CAP_ENV}"),
        Some(m) => Ok(m),
        None => Ok(default.min(hard)),
    }
}

fn load_group(args: &GroupArgs, cap: usize) -> Result<FiniteGroup> {
    let text = match (&args.group, &args.preset) {
        (_, Some(p)) => format!("preset {p}"),
        (Some(g), None) if Path::new(g).is_file() => fs::read_to_string(g).with_context(|| format!("reading {g}"))?,
        (Some(g), None)
            if ["perm", "table", "preset"]
                .iter()
                .any(|k| g.trim_start().starts_with(k)) =>
        {
            g.clone()
        }
        (Some(g), None) => format!("preset {g}"),
        (None, None) => bail!("give --group or --preset"),
    };
    parse_group(&text, cap).map_err(|e| anyhow!("{e}"))
}

fn build(group: FiniteGroup, cap: usize) -> Result<CosetMonoid> {
    let lattice = SubgroupLattice::enumerate(group, cap)?;
    Ok(CosetMonoid::build(lattice)?)
}

/// A monoid to analyze, remembering the coset structure when there is one.
#[allow(clippy::large_enum_variant)]
enum Subject {
    Coset(CosetMonoid),
    Plain(String, MonoidStructure),
}

impl Subject {
    fn load(args: &SubjectArgs, cap: usize) -> Result<Self> {
        match &args.monoid {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let m = FiniteInverseMonoid::parse_imonoid(&text)?;
                Ok(Subject::Plain(path.display().to_string(), MonoidStructure::new(m)))
            }
            None => Ok(Subject::Coset(build(load_group(&args.group, cap)?, cap)?)),
        }
    }

    fn structure(&self) -> &MonoidStructure {
        match self {
            Subject::Coset(k) => k.structure(),
            Subject::Plain(_, s) => s,
        }
    }

    fn name(&self) -> String {
        match self {
            Subject::Coset(k) => format!("K({})", k.group().name()),
            Subject::Plain(n, _) => n.clone(),
        }
    }

    /// Idempotent named on the command line: a subgroup id for `K(G)`, an
    /// element index otherwise.
    fn idempotent(&self, id: usize) -> Result<usize> {
        let e = match self {
            Subject::Coset(k) => {
                if id >= k.lattice().len() {
                    bail!("no subgroup with id {id}");
                }
                k.idempotent_of(id).expect("full family")
            }
            Subject::Plain(..) => id,
        };
        if !self.structure().is_idempotent(e) {
            bail!("element {e} is not idempotent");
        }
        Ok(e)
    }

    fn subgroups(&self, chain: &[usize]) -> Option<Vec<usize>> {
        match self {
            Subject::Coset(k) => Some(chain.iter().map(|&e| k.subgroup_of(e)).collect()),
            Subject::Plain(..) => None,
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => match io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e).context("writing stdout"),
            _ => Ok(()),
        },
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Analyze(g) => analyze(cli, g),
        Command::CosetMonoid { group, sidecar } => coset_monoid(cli, group, sidecar.as_deref()),
        Command::Series {
            subject,
            kind,
            composition,
            refine,
            defect,
            cap,
        } => series_cmd(cli, subject, (*kind).into(), *composition, refine, *defect, *cap),
        Command::Classify(subject) => {
            let sub = Subject::load(subject, order_cap(cli, hard_order_cap())?)?;
            let report = nilpotency::g_lengths(sub.structure(), &sub.name());
            if cli.json {
                emit(cli, &pretty(&report))?;
            } else {
                let fmt = |x: Option<usize>| x.map_or("none".to_string(), |n| n.to_string());
                emit(
                    cli,
                    &format!(
                        "{}: size {}, G-nilpotent length {}, G-solvable length {}, units: order {}, class {}, derived length {}\n",
                        report.monoid,
                        report.size,
                        fmt(report.g_nilpotent_length),
                        fmt(report.g_solvable_length),
                        report.unit_group_order,
                        fmt(report.unit_nilpotency_class),
                        fmt(report.unit_derived_length),
                    ),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { corpus, swaps } => {
            let entries = match corpus {
                Some(dir) => verify::corpus_from_dir(dir).with_context(|| format!("reading {}", dir.display()))?,
                None => verify::default_corpus(),
            };
            let caps = VerifyCaps {
                max_order: order_cap(cli, VERIFY_ORDER_CAP)?,
                swaps: *swaps,
                ..VerifyCaps::default()
            };
            let matrix = verify::run_verify(&entries, caps);
            let text = if cli.json {
                let mut s = matrix.to_json();
                s.push('\n');
                s
            } else {
                matrix.render()
            };
            emit(cli, &text)?;
            Ok(if matrix.has_failures() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Probe {
            group,
            problem,
            k,
            max_tuples,
            list,
        } => probe(cli, group, problem.as_deref(), *k, *max_tuples, *list),
        Command::Dot { group, target } => {
            let cap = order_cap(cli, hard_order_cap())?;
            let g = load_group(group, cap)?;
            let text = match target {
                DotTarget::SubgroupLattice => SubgroupLattice::enumerate(g, cap)?.to_dot(),
                DotTarget::IdempotentOrder => build(g, cap)?.idempotent_dot(),
            };
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn analyze(cli: &Cli, args: &GroupArgs) -> Result<ExitCode> {
    let cap = order_cap(cli, hard_order_cap())?;
    let k = build(load_group(args, cap)?, cap)?;
    let g = k.group();
    let lat = k.lattice();
    let s = k.structure();
    let subgroups: Vec<_> = (0..lat.len())
        .map(|h| {
            let e = k.idempotent_of(h).expect("full family");
            json!({
                "id": h,
                "order": lat.subgroup(h).order(),
                "normal": lat.is_normal(h),
                "idempotent": e,
                "central": s.is_central(e),
                "subnormal_defect": lat.subnormal_defect(h),
                "defect": series::defect(s, e),
            })
        })
        .collect();
    let dictionary = k.check_dictionary();
    let report = json!({
        "schema": 1,
        "group": g.name(),
        "order": g.order(),
        "convention": PERMUTATION_CONVENTION,
        "nilpotency_class": g.nilpotency_class(),
        "derived_length": g.derived_length(),
        "subgroups": lat.len(),
        "normal_subgroups": (0..lat.len()).filter(|&h| lat.is_normal(h)).count(),
        "conjugacy_classes": lat.conjugacy_classes().len(),
        "monoid_size": k.size(),
        "idempotents": s.idempotents().len(),
        "central_idempotents": s.central_idempotents().len(),
        "subgroup_table": subgroups,
        "dictionary": dictionary,
    });
    if cli.json {
        emit(cli, &pretty(&report))?;
    } else {
        let mut out = format!(
            "{}: order {}, {} subgroups ({} normal, {} conjugacy classes)\n",
            g.name(),
            g.order(),
            lat.len(),
            report["normal_subgroups"],
            report["conjugacy_classes"]
        );
        out.push_str(&format!("{PERMUTATION_CONVENTION}\n"));
        out.push_str(&format!(
            "K({}): {} elements, {} idempotents, {} central\n",
            g.name(),
            k.size(),
            s.idempotents().len(),
            s.central_idempotents().len()
        ));
        out.push_str("id  |H|  normal  idempotent  defect\n");
        for h in 0..lat.len() {
            let e = k.idempotent_of(h).expect("full family");
            out.push_str(&format!(
                "{h:<3} {:<4} {:<7} {e:<11} {}\n",
                lat.subgroup(h).order(),
                lat.is_normal(h),
                series::defect(s, e).map_or("-".into(), |d| d.to_string())
            ));
        }
        for (name, o) in dictionary.entries() {
            out.push_str(&format!("{name}: {}\n", o.cell()));
        }
        emit(cli, &out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn coset_monoid(cli: &Cli, args: &GroupArgs, sidecar: Option<&Path>) -> Result<ExitCode> {
    let cap = order_cap(cli, hard_order_cap())?;
    let k = build(load_group(args, cap)?, cap)?;
    let side = pretty(&k.sidecar());
    match (&cli.out, cli.json) {
        (_, true) => emit(cli, &side)?,
        (Some(out), false) => {
            emit(cli, &k.monoid().to_imonoid())?;
            let path = sidecar.map(Path::to_path_buf).unwrap_or_else(|| {
                let mut p = out.clone().into_os_string();
                p.push(".json");
                p.into()
            });
            fs::write(&path, side).with_context(|| format!("writing {}", path.display()))?;
        }
        (None, false) => {
            emit(cli, &k.monoid().to_imonoid())?;
            if let Some(p) = sidecar {
                fs::write(p, side).with_context(|| format!("writing {}", p.display()))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn series_json(sub: &Subject, series: &IdempotentSeries, catalog: &mut FactorCatalog) -> Result<serde_json::Value> {
    let s = sub.structure();
    Ok(json!({
        "chain": series.chain,
        "subgroups": sub.subgroups(&series.chain),
        "length": series.len(),
        "factors": series::factors(s, series, catalog)?,
    }))
}

fn series_cmd(
    cli: &Cli,
    subject: &SubjectArgs,
    kind: SeriesKind,
    _composition: bool,
    refine: &[usize],
    defect: Option<usize>,
    cap: usize,
) -> Result<ExitCode> {
    let sub = Subject::load(subject, order_cap(cli, hard_order_cap())?)?;
    let s = sub.structure();
    let mut catalog = FactorCatalog::new();
    let hypothesis = s.satisfies_hypothesis();
    let report = if let Some(id) = defect {
        let e = sub.idempotent(id)?;
        let chain = series::defect_chain(s, e);
        json!({
            "schema": 1,
            "monoid": sub.name(),
            "idempotent": e,
            "defect": chain.as_ref().map(|c| c.len() - 1),
            "chain": chain,
            "subgroups": chain.as_ref().and_then(|c| sub.subgroups(c)),
        })
    } else if !refine.is_empty() {
        let chain: Vec<usize> = refine.iter().map(|&i| sub.idempotent(i)).collect::<Result<_>>()?;
        let refined = series::refine_chain(s, &chain)?;
        json!({
            "schema": 1,
            "monoid": sub.name(),
            "hypothesis": hypothesis,
            "input": chain,
            "series": series_json(&sub, &refined, &mut catalog)?,
        })
    } else {
        let found = series::composition_series(s, kind, cap);
        let mut list = Vec::new();
        for x in &found.series {
            let mut v = series_json(&sub, x, &mut catalog)?;
            let matching = match found.series.first() {
                Some(first) => series::series_isomorphic(s, first, x, &mut catalog)?,
                None => None,
            };
            v["matching_with_first"] = json!(matching);
            list.push(v);
        }
        json!({
            "schema": 1,
            "monoid": sub.name(),
            "kind": kind,
            "hypothesis": hypothesis,
            "truncated": found.truncated,
            "composition_series": list,
        })
    };
    if cli.json {
        emit(cli, &pretty(&report))?;
    } else {
        emit(cli, &render_series(&report))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn render_series(report: &serde_json::Value) -> String {
    let mut out = String::new();
    if !report["hypothesis"].as_bool().unwrap_or(true) {
        out.push_str("note: theta is not a dual isomorphism; series results are not asserted here\n");
    }
    if let Some(d) = report.get("defect") {
        if d.is_null() {
            out.push_str(&format!("idempotent {} is not subcentral\n", report["idempotent"]));
        } else {
            out.push_str(&format!(
                "idempotent {}: defect {d}, chain {}\n",
                report["idempotent"], report["chain"]
            ));
        }
    }
    if let Some(x) = report.get("series") {
        out.push_str(&format!("refined: {} (length {})\n", x["chain"], x["length"]));
    }
    if let Some(list) = report["composition_series"].as_array() {
        out.push_str(&format!(
            "{} composition {} series",
            list.len(),
            report["kind"].as_str().unwrap_or("")
        ));
        if report["truncated"].as_bool() == Some(true) {
            out.push_str(" (truncated)");
        }
        out.push('\n');
        for x in list {
            let classes: Vec<String> = x["factors"]
                .as_array()
                .map(|fs| fs.iter().map(|f| f["class"].to_string()).collect())
                .unwrap_or_default();
            out.push_str(&format!("  {} factors [{}]\n", x["chain"], classes.join(" ")));
        }
    }
    out
}

fn probe(
    cli: &Cli,
    args: &GroupArgs,
    problem: Option<&str>,
    k: usize,
    max_tuples: usize,
    list: bool,
) -> Result<ExitCode> {
    if list {
        let mut out = String::from("1  probeable\n3  probeable (--k 5 or 7)\n4a probeable\n6  probeable\n");
        for (p, why) in NOT_FINITELY_PROBEABLE {
            out.push_str(&format!("{p}  not finitely probeable: {why}\n"));
        }
        emit(cli, &out)?;
        return Ok(ExitCode::SUCCESS);
    }
    let problem: Problem = problem
        .ok_or_else(|| anyhow!("give --problem (1, 3, 4a or 6) or --list"))?
        .parse()
        .map_err(|e: String| anyhow!(e))?;
    if k != 5 && k != 7 {
        bail!("--k must be 5 or 7");
    }
    let caps = ProbeCaps { max_tuples, k };
    let cap = order_cap(cli, hard_order_cap())?;
    if args.group.is_some() || args.preset.is_some() {
        let km = build(load_group(args, cap)?, cap)?;
        let r = conjectures::run_probe(km.structure(), km.group().name(), problem, caps);
        emit(cli, &pretty(&r))?;
        return Ok(ExitCode::SUCCESS);
    }
    // no group: every default-corpus member within the cap
    let cap = cli
        .max_order
        .map_or(Ok(VERIFY_ORDER_CAP), |_| order_cap(cli, VERIFY_ORDER_CAP))?;
    let mut results: Vec<ProbeResult> = Vec::new();
    for name in verify::DEFAULT_CORPUS {
        let g = parse_group(&format!("preset {name}"), cap)?;
        let km = build(g, cap)?;
        results.push(conjectures::run_probe(km.structure(), name, problem, caps));
    }
    let empirical_max = results.iter().filter_map(|r| r.empirical_max).max();
    let summary = json!({
        "schema": 1,
        "problem": problem,
        "groups": results.len(),
        "admitted": results.iter().filter(|r| r.skipped.is_none()).count(),
        "instances": results.iter().map(|r| r.instances).sum::<usize>(),
        "counterexample_candidates": results.iter().map(|r| r.counterexample_candidates.len()).sum::<usize>(),
        "truncated": results.iter().any(|r| r.truncated),
        "empirical_max": empirical_max,
        "results": results,
    });
    emit(cli, &pretty(&summary))?;
    Ok(ExitCode::SUCCESS)
}

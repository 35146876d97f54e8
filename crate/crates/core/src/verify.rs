//! The verification matrix: every check over every corpus group.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckOutcome;
use crate::coset::CosetMonoid;
use crate::lattice::SubgroupLattice;
use crate::monoid::{lemmas, FactorCatalog};
use crate::parse::parse_group;
use crate::{nilpotency, series};

/// Presets making up the default corpus, in row order.
pub const DEFAULT_CORPUS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "V4", "S3", "D4", "D5", "D6", "Q8",
    "A4", "S4", "C2xC4", "C2xC2xC2", "S3xC2",
];

/// Default order cap for `verify`.
pub const VERIFY_ORDER_CAP: usize = 24;

/// Column names, in column order.
pub const CHECK_NAMES: &[&str] = &[
    "construction",
    "reverse-inclusion",
    "units",
    "theta",
    "swap",
    "dictionary",
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
    "subcs",
    "schre",
    "jorh",
    "jorhex",
    "nseq",
    "sei",
    "nsl1eq",
    "gnilu",
    "fasec",
    "niliff",
    "snchr",
    "aabtrans",
    "subcanti",
    "nilsubc",
];

#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyCaps {
    pub max_order: usize,
    /// Representative swaps per group.
    pub swaps: usize,
    pub seed: u64,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps {
            max_order: VERIFY_ORDER_CAP,
            swaps: 100,
            seed: 0x6b67,
        }
    }
}

/// A corpus row before evaluation: a name and the group-spec text, or the
/// error met while reading it.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: Result<String, String>,
}

impl CorpusEntry {
    pub fn preset(name: &str) -> Self {
        CorpusEntry {
            name: name.to_string(),
            spec: Ok(format!("preset {name}")),
        }
    }
}

pub fn default_corpus() -> Vec<CorpusEntry> {
    DEFAULT_CORPUS.iter().map(|n| CorpusEntry::preset(n)).collect()
}

/// Every regular file of `dir`, sorted by file name; the row name is the
/// file stem.
pub fn corpus_from_dir(dir: &Path) -> std::io::Result<Vec<CorpusEntry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|p| CorpusEntry {
            name: p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default(),
            spec: std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display())),
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub check: &'static str,
    #[serde(flatten)]
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monoid_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub cells: Vec<Cell>,
}

impl Row {
    fn errored(group: &str, error: String) -> Self {
        Row {
            group: group.to_string(),
            order: None,
            monoid_size: None,
            error: Some(error),
            cells: Vec::new(),
        }
    }

    pub fn cell(&self, check: &str) -> Option<&CheckOutcome> {
        self.cells.iter().find(|c| c.check == check).map(|c| &c.outcome)
    }

    pub fn has_failures(&self) -> bool {
        self.error.is_some() || self.cells.iter().any(|c| c.outcome.is_fail())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationMatrix {
    pub schema: u32,
    pub caps: VerifyCaps,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Row>,
}

impl VerificationMatrix {
    /// Whether any cell failed or any row errored.
    pub fn has_failures(&self) -> bool {
        self.rows.iter().any(Row::has_failures)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix serializes")
    }

    /// Plain-text table: one line per group, then every failure, skip
    /// reason and error in full.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self.rows.iter().map(|r| r.group.len()).max().unwrap_or(5).max(5);
        let _ = write!(out, "{:width$}", "group");
        for c in &self.columns {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(out, "{:width$}", r.group);
            if let Some(e) = &r.error {
                let _ = writeln!(out, " ERROR {e}");
                continue;
            }
            for (c, cell) in self.columns.iter().zip(&r.cells) {
                let _ = write!(out, " {:>w$}", cell.outcome.cell(), w = c.len());
            }
            out.push('\n');
        }
        for r in &self.rows {
            for c in &r.cells {
                match &c.outcome {
                    CheckOutcome::Fail { witness } => {
                        let _ = writeln!(out, "FAIL {} {}: {witness}", r.group, c.check);
                    }
                    CheckOutcome::Skipped { reason } => {
                        let _ = writeln!(out, "skip {} {}: {reason}", r.group, c.check);
                    }
                    CheckOutcome::Pass { .. } => {}
                }
            }
        }
        out
    }
}

/// Runs every check on every entry, in parallel across rows. Output order
/// follows the input order.
pub fn run_verify(corpus: &[CorpusEntry], caps: VerifyCaps) -> VerificationMatrix {
    let rows = corpus.par_iter().map(|e| verify_entry(e, caps)).collect();
    VerificationMatrix {
        schema: 1,
        caps,
        columns: CHECK_NAMES.to_vec(),
        rows,
    }
}

pub fn verify_entry(entry: &CorpusEntry, caps: VerifyCaps) -> Row {
    let text = match &entry.spec {
        Ok(t) => t,
        Err(e) => return Row::errored(&entry.name, e.clone()),
    };
    let group = match parse_group(text, caps.max_order) {
        Ok(g) => g,
        Err(e) => return Row::errored(&entry.name, e.to_string()),
    };
    let order = group.order();
    let lattice = match SubgroupLattice::enumerate(group, caps.max_order) {
        Ok(l) => l,
        Err(e) => return Row::errored(&entry.name, e.to_string()),
    };
    let mut cells = Vec::with_capacity(CHECK_NAMES.len());
    let mut push = |check: &'static str, outcome: CheckOutcome| cells.push(Cell { check, outcome });
    let k = match CosetMonoid::build(lattice) {
        Ok(k) => k,
        Err(e) => {
            push("construction", CheckOutcome::fail(e.to_string()));
            return Row {
                group: entry.name.clone(),
                order: Some(order),
                monoid_size: None,
                error: None,
                cells,
            };
        }
    };
    push(
        "construction",
        CheckOutcome::Pass {
            instances: k.size(),
            note: None,
        },
    );
    let s = k.structure();
    let mut catalog = FactorCatalog::new();
    push("reverse-inclusion", k.check_reverse_inclusion());
    push("units", k.check_units());
    push("theta", k.check_theta());
    push("swap", k.representative_swap_test(caps.swaps, caps.seed));
    push("dictionary", k.check_dictionary().summary());
    push("fgeq-i", lemmas::fgeq_i(s));
    push("fgeq-ii", lemmas::fgeq_ii(s));
    push("fgeq-iii", lemmas::fgeq_iii(s));
    push("thecon-i", lemmas::thecon_i(s));
    push("thecon-ii", lemmas::thecon_ii(s));
    push("thecon-iii", lemmas::thecon_iii(s));
    push("thecon-iv", lemmas::thecon_iv(s));
    push("thecon-v", lemmas::thecon_v(s));
    push("phie", lemmas::phie(s));
    push("iso2", lemmas::iso2(s));
    push("iso2pe-i", lemmas::iso2pe_i(s, &mut catalog));
    push("iso2pe-ii", lemmas::iso2pe_ii(s, &mut catalog));
    push("subcs", series::check_subcs(s));
    push("schre", series::check_schre(s, &mut catalog));
    push("jorh", series::check_jorh(s, &mut catalog));
    push("jorhex", series::check_jorhex(s));
    push("nseq", nilpotency::nseq_check(s));
    push("sei", nilpotency::sei_check(s));
    push("nsl1eq", nilpotency::nsl1eq_check(s));
    push("gnilu", nilpotency::gnilu_check(s));
    push("fasec", nilpotency::fasec_check(s));
    push("niliff", nilpotency::niliff_check(s));
    push("snchr", nilpotency::snchr_check(k.group(), s));
    push("aabtrans", nilpotency::aabtrans_check(s));
    push("subcanti", nilpotency::subcanti_check(s));
    push("nilsubc", nilpotency::nilsubc_check(s));
    Row {
        group: entry.name.clone(),
        order: Some(order),
        monoid_size: Some(k.size()),
        error: None,
        cells,
    }
}

//! Group-spec text format and the preset registry.
//!
//! ```text
//! perm degree=<n> gens=<cycles>(;<cycles>)*
//! table <n>
//!   <n rows of n whitespace-separated indices>
//! preset <name>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use crate::error::GroupError;
use crate::group::{hard_order_cap, FiniteGroup};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a group spec, rejecting groups larger than `cap`.
pub fn parse_group(text: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (lineno, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty group spec"))?;
    let indent = header.len() - header.trim_start().len();
    let header_t = header.trim();
    let (keyword, rest) = header_t.split_once(char::is_whitespace).unwrap_or((header_t, ""));
    let rest_col = indent + keyword.len() + 2;
    match keyword {
        "perm" => {
            let g = parse_perm(lineno, rest.trim(), rest_col, cap)?;
            if let Some((l, _)) = lines.next() {
                return Err(parse_err(l, 1, "unexpected content after perm declaration"));
            }
            Ok(g)
        }
        "table" => {
            let n: usize = rest.trim().parse().map_err(|_| {
                parse_err(
                    lineno,
                    rest_col,
                    format!("expected table order, found `{}`", rest.trim()),
                )
            })?;
            if n == 0 {
                return Err(parse_err(lineno, rest_col, "table order must be positive"));
            }
            if n > cap {
                return Err(GroupError::CapExceeded { order: n, cap });
            }
            let mut values = Vec::with_capacity(n * n);
            for (l, text) in lines {
                for (col, tok) in tokens(text) {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(l, col, format!("expected an element index, found `{tok}`")))?;
                    if v >= n {
                        return Err(parse_err(l, col, format!("index {v} out of range 0..{n}")));
                    }
                    if values.len() == n * n {
                        return Err(parse_err(l, col, "too many table entries"));
                    }
                    values.push(v);
                }
            }
            if values.len() != n * n {
                return Err(parse_err(
                    lineno,
                    1,
                    format!("table needs {} entries, found {}", n * n, values.len()),
                ));
            }
            let rows = values.chunks(n).map(|r| r.to_vec()).collect();
            FiniteGroup::from_table(format!("table{n}"), rows, None, cap)
        }
        "preset" => {
            let name = rest.trim();
            if name.is_empty() {
                return Err(parse_err(lineno, rest_col, "missing preset name"));
            }
            preset_with_cap(name, cap)
        }
        other => Err(parse_err(
            lineno,
            indent + 1,
            format!("unknown declaration `{other}` (expected perm, table or preset)"),
        )),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn parse_perm(line: usize, rest: &str, col0: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    let degree_part = rest
        .strip_prefix("degree=")
        .ok_or_else(|| parse_err(line, col0, "expected `degree=<n>`"))?;
    let (deg_text, after) = degree_part.split_once(char::is_whitespace).unwrap_or((degree_part, ""));
    let degree: usize = deg_text
        .parse()
        .map_err(|_| parse_err(line, col0 + 7, format!("bad degree `{deg_text}`")))?;
    if degree == 0 {
        return Err(parse_err(line, col0 + 7, "degree must be positive"));
    }
    let after_trim = after.trim_start();
    let gens_col = col0 + 7 + deg_text.len() + 1 + (after.len() - after_trim.len());
    let gens_text = after_trim
        .strip_prefix("gens=")
        .ok_or_else(|| parse_err(line, gens_col, "expected `gens=<cycles>(;<cycles>)*`"))?;
    let mut gens = Vec::new();
    let mut col = gens_col + 5;
    for part in gens_text.split(';') {
        let p = parse_cycles(part, degree).map_err(|(offset, msg)| parse_err(line, col + offset, msg))?;
        gens.push(p);
        col += part.len() + 1;
    }
    FiniteGroup::from_permutations(format!("perm{degree}"), degree, &gens, cap)
}

/// Parses cycle notation with 1-based points, e.g. `(1 2)(3 4)` or `()`.
/// Points may be separated by spaces or commas. Errors carry a 0-based
/// character offset into `text`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<usize>, (usize, String)> {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let mut saw_cycle = false;
    while i < chars.len() {
        let (off, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c != '(' {
            return Err((off, format!("expected `(`, found `{c}`")));
        }
        saw_cycle = true;
        i += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while i < chars.len() && (chars[i].1.is_whitespace() || chars[i].1 == ',') {
                i += 1;
            }
            if i >= chars.len() {
                return Err((text.len(), "unterminated cycle".into()));
            }
            let (off, c) = chars[i];
            if c == ')' {
                i += 1;
                break;
            }
            if !c.is_ascii_digit() {
                return Err((off, format!("unexpected `{c}` in cycle")));
            }
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let end = if i < chars.len() { chars[i].0 } else { text.len() };
            let num: usize = text[off..end]
                .parse()
                .map_err(|_| (chars[start].0, "bad point".to_string()))?;
            if num == 0 || num > degree {
                return Err((off, format!("point {num} outside 1..={degree}")));
            }
            if used[num - 1] {
                return Err((off, format!("point {num} repeated")));
            }
            used[num - 1] = true;
            cycle.push(num - 1);
        }
        for k in 0..cycle.len() {
            images[cycle[k]] = cycle[(k + 1) % cycle.len()];
        }
    }
    if !saw_cycle {
        return Err((0, "expected a cycle such as `(1 2)` or `()`".into()));
    }
    Ok(images)
}

/// Names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &["C1..C24", "S3", "S4", "A4", "A5", "D4", "D5", "D6", "Q8", "V4"];

pub fn preset(name: &str) -> Result<FiniteGroup, GroupError> {
    preset_with_cap(name, hard_order_cap())
}

/// Looks up a preset; `AxB` (left-associative, e.g. `C2xC2xC2`) is the
/// direct product.
pub fn preset_with_cap(name: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let mut g = single_preset(parts[0], cap)?;
        for p in &parts[1..] {
            let h = single_preset(p, cap)?;
            let order = g.order() * h.order();
            if order > cap {
                return Err(GroupError::CapExceeded { order, cap });
            }
            g = g.direct_product(&h);
        }
        g.set_name(name);
        return Ok(g);
    }
    single_preset(name, cap)
}

fn single_preset(name: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let perm = |degree: usize, gens: &[&str]| -> Result<FiniteGroup, GroupError> {
        let gens: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| parse_cycles(g, degree).expect("preset generators are well formed"))
            .collect();
        let mut g = FiniteGroup::from_permutations(name, degree, &gens, cap)?;
        g.set_name(name);
        Ok(g)
    };
    match name {
        "S3" => perm(3, &["(1 2)", "(1 2 3)"]),
        "S4" => perm(4, &["(1 2)", "(1 2 3 4)"]),
        "A4" => perm(4, &["(1 2 3)", "(2 3 4)"]),
        "A5" => perm(5, &["(1 2 3)", "(1 2 3 4 5)"]),
        "D4" => perm(4, &["(1 2 3 4)", "(1 3)"]),
        "D5" => perm(5, &["(1 2 3 4 5)", "(2 5)(3 4)"]),
        "D6" => perm(6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]),
        "V4" => perm(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
        "Q8" => quaternion(cap),
        _ => {
            let n: usize = name
                .strip_prefix('C')
                .and_then(|d| d.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| GroupError::UnknownPreset(name.to_string()))?;
            cyclic(n, cap)
        }
    }
}

/// `C_n` as a Cayley table with labels `e, a, a^2, ...`.
pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if n > cap {
        return Err(GroupError::CapExceeded { order: n, cap });
    }
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    FiniteGroup::from_table(format!("C{n}"), rows, Some(labels), cap)
}

/// The quaternion group on `1, -1, i, -i, j, -j, k, -k`.
fn quaternion(cap: usize) -> Result<FiniteGroup, GroupError> {
    // unit u in {1,i,j,k} = 0..4 with sign s; index = 2u + s
    const UNIT_MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let rows = (0..8)
        .map(|x: usize| {
            (0..8)
                .map(|y: usize| {
                    let (u, neg) = UNIT_MUL[x / 2][y / 2];
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * u + sign as usize
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table("Q8", rows, Some(labels), cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_three_forms() {
        let g = parse_group("perm degree=3 gens=(1 2);(1 2 3)", 64).unwrap();
        assert_eq!(g.order(), 6);
        let t = parse_group("table 2\n0 1\n1 0\n", 64).unwrap();
        assert_eq!(t.order(), 2);
        let p = parse_group("# comment\npreset C1\n", 64).unwrap();
        assert_eq!(p.order(), 1);
    }

    #[test]
    fn presets_have_expected_orders() {
        for (name, order) in [
            ("C1", 1),
            ("C24", 24),
            ("S3", 6),
            ("S4", 24),
            ("A4", 12),
            ("A5", 60),
            ("D4", 8),
            ("D5", 10),
            ("D6", 12),
            ("Q8", 8),
            ("V4", 4),
            ("C2xC4", 8),
            ("C2xC2xC2", 8),
            ("S3xC2", 12),
        ] {
            assert_eq!(preset_with_cap(name, 64).unwrap().order(), order, "{name}");
        }
        assert!(!preset("D4").unwrap().is_abelian());
        assert!(preset("C2xC4").unwrap().is_abelian());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_group("perm degree=3 gens=(1 4)", 64) {
            Err(GroupError::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 23);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_group("\ntable 2\n0 1\n1 x\n", 64) {
            Err(GroupError::Parse { line, column, .. }) => assert_eq!((line, column), (4, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_group("frobnicate 3", 64),
            Err(GroupError::Parse { line: 1, column: 1, .. })
        ));
        assert!(matches!(
            parse_group("preset Z9", 64),
            Err(GroupError::UnknownPreset(_))
        ));
    }

    #[test]
    fn non_group_table_reports_witness() {
        // constant table: no identity
        assert_eq!(
            parse_group("table 2\n0 0\n0 0", 64).unwrap_err(),
            GroupError::NoIdentity
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(preset_with_cap("S4", 12), Err(GroupError::CapExceeded { .. })));
        assert!(matches!(
            parse_group("table 3\n0 1 2\n1 2 0\n2 0 1", 2),
            Err(GroupError::CapExceeded { .. })
        ));
    }
}

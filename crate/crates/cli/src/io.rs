//! Plain-text input formats.
//!
//! Set files (facets, non-face generators, transactions): the first
//! nonempty line is the ground set size `w`, every further nonempty line is
//! one set as whitespace-separated 1-based positions. `#` starts a comment.
//! A line holding only `-` (or `{}`) is the empty set.
//!
//! Weights files: one `position weight` pair per line, same comment rules.
//! Positions not listed get weight 0.

use std::fs;
use std::path::Path;

use scrows::{FaceSet, GroundSet};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFile {
    pub ground: GroundSet,
    pub sets: Vec<FaceSet>,
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_set_file(text: &str) -> Result<SetFile, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip(l)))
        .filter(|(_, l)| !l.is_empty());
    let (no, first) = lines
        .next()
        .ok_or_else(|| CliError::Input("empty file: expected the ground set size".into()))?;
    let w: usize = first
        .parse()
        .map_err(|_| CliError::Input(format!("line {no}: expected ground set size, got {first:?}")))?;
    let ground = GroundSet::new(w).map_err(|e| CliError::Input(format!("line {no}: {e}")))?;
    let mut sets = Vec::new();
    for (no, line) in lines {
        if line == "-" || line == "{}" {
            sets.push(FaceSet::new());
            continue;
        }
        let mut x = FaceSet::new();
        for tok in line.split_whitespace() {
            let p: usize = tok
                .parse()
                .map_err(|_| CliError::Input(format!("line {no}: not a position: {tok:?}")))?;
            if p == 0 || p > w {
                return Err(CliError::Input(format!("line {no}: position {p} outside 1..={w}")));
            }
            x.insert(p);
        }
        sets.push(x);
    }
    if sets.is_empty() {
        return Err(CliError::Input("no sets after the ground set size".into()));
    }
    Ok(SetFile { ground, sets })
}

pub fn load_set_file(path: &Path) -> Result<SetFile, CliError> {
    parse_set_file(&read_to_string(path)?).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Renders sets in the set-file format.
pub fn render_set_file(w: usize, sets: &[FaceSet]) -> String {
    let mut out = format!("{w}\n");
    for x in sets {
        if x.is_empty() {
            out.push_str("-\n");
        } else {
            let v: Vec<String> = x.iter().map(|p| p.to_string()).collect();
            out.push_str(&v.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_weights(text: &str, w: usize) -> Result<Vec<i64>, CliError> {
    let mut weights = vec![0i64; w];
    let mut seen = vec![false; w];
    for (i, raw) in text.lines().enumerate() {
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        let no = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [p, v] = toks[..] else {
            return Err(CliError::Input(format!("line {no}: expected `position weight`")));
        };
        let p: usize = p
            .parse()
            .map_err(|_| CliError::Input(format!("line {no}: not a position: {p:?}")))?;
        let v: i64 = v
            .parse()
            .map_err(|_| CliError::Input(format!("line {no}: not an integer weight: {v:?}")))?;
        if p == 0 || p > w {
            return Err(CliError::Input(format!("line {no}: position {p} outside 1..={w}")));
        }
        if seen[p - 1] {
            return Err(CliError::Input(format!("line {no}: position {p} given twice")));
        }
        seen[p - 1] = true;
        weights[p - 1] = v;
    }
    Ok(weights)
}

/// `6,7,10,11` (spaces allowed, empty string for `∅`).
pub fn parse_face_arg(arg: &str, ground: GroundSet) -> Result<FaceSet, CliError> {
    let mut x = FaceSet::new();
    for tok in arg.split([',', ' ']).filter(|t| !t.is_empty()) {
        let p: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("not a position: {tok:?}")))?;
        if p == 0 || p > ground.size() {
            return Err(CliError::Usage(format!("position {p} outside 1..={}", ground.size())));
        }
        x.insert(p);
    }
    Ok(x)
}

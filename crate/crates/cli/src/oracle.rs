//! Exhaustive counterparts of the row-based commands, walking all `2^w`
//! subsets as bit masks.

use num_bigint::BigUint;
use scrows::complex::ORACLE_MAX_W;
use scrows::{CountVector, FaceSet, FacetFamily};

use crate::commands::{load_facets, OracleCommand};
use crate::error::CliError;
use crate::io;
use crate::report::*;

fn check_width(f: &FacetFamily) -> Result<(), CliError> {
    if f.width() > ORACLE_MAX_W {
        return Err(CliError::Guard(format!(
            "oracle needs w <= {ORACLE_MAX_W}, got {}",
            f.width()
        )));
    }
    Ok(())
}

fn masks(f: &FacetFamily) -> Vec<u64> {
    f.facets()
        .iter()
        .map(|x| x.to_mask().expect("w is within the oracle limit"))
        .collect()
}

/// All faces as masks, ascending.
pub fn faces(f: &FacetFamily) -> Result<Vec<u64>, CliError> {
    check_width(f)?;
    let fm = masks(f);
    Ok((0..1u64 << f.width())
        .filter(|&x| fm.iter().any(|&g| x & !g == 0))
        .collect())
}

pub fn fvector(f: &FacetFamily) -> Result<CountVector, CliError> {
    let mut counts = vec![0u64; f.width() + 1];
    for x in faces(f)? {
        counts[x.count_ones() as usize] += 1;
    }
    Ok(CountVector::from_u64s(&counts))
}

pub fn minimal_nonfaces(f: &FacetFamily) -> Result<Vec<FaceSet>, CliError> {
    check_width(f)?;
    let fm = masks(f);
    let is_face = |x: u64| fm.iter().any(|&g| x & !g == 0);
    let mut out: Vec<FaceSet> = (0..1u64 << f.width())
        .filter(|&x| !is_face(x) && (0..f.width()).all(|i| x >> i & 1 == 0 || is_face(x & !(1 << i))))
        .map(FaceSet::from_mask)
        .collect();
    out.sort();
    Ok(out)
}

pub fn link(f: &FacetFamily, x: u64) -> Result<Vec<u64>, CliError> {
    let all = faces(f)?;
    if all.binary_search(&x).is_err() {
        return Err(CliError::Usage(format!("{} is not a face", FaceSet::from_mask(x))));
    }
    Ok(all
        .iter()
        .copied()
        .filter(|&y| y & x == 0 && all.binary_search(&(x | y)).is_ok())
        .collect())
}

pub fn maximize(f: &FacetFamily, weights: &[i64]) -> Result<(i128, FaceSet), CliError> {
    let value = |x: u64| -> i128 {
        (0..weights.len())
            .filter(|i| x >> i & 1 == 1)
            .map(|i| weights[i] as i128)
            .sum()
    };
    let mut best: Option<(i128, u64)> = None;
    for x in faces(f)? {
        let v = value(x);
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, x));
        }
    }
    let (v, x) = best.expect("the empty set is always a face");
    Ok((v, FaceSet::from_mask(x)))
}

pub fn run(c: &OracleCommand) -> Result<Report, CliError> {
    match c {
        OracleCommand::Count(a) => {
            let f = load_facets(&a.facets)?;
            let n = faces(&f)?.len();
            Ok(Report::Count(CountReport {
                w: f.width(),
                count: n.to_string(),
                ie: None,
                partition: None,
                fvector_sum: None,
                tau_sum: Some(((BigUint::from(1u8) << f.width()) - BigUint::from(n)).to_string()),
                rows: None,
            }))
        }
        OracleCommand::Fvector(a) => {
            let f = load_facets(&a.facets)?;
            let fv = fvector(&f)?;
            Ok(Report::FVector(FVectorReport::new(&fv, None)))
        }
        OracleCommand::Nonfaces(a) => {
            let f = load_facets(&a.facets)?;
            Ok(Report::Sets(SetsReport::new(f.width(), &minimal_nonfaces(&f)?)))
        }
        OracleCommand::Link { facets, face } => {
            let f = load_facets(facets)?;
            let x = io::parse_face_arg(face, f.ground())?;
            let members = link(&f, x.to_mask().expect("w is within the oracle limit"))?;
            let sets: Vec<FaceSet> = members.into_iter().map(FaceSet::from_mask).collect();
            Ok(Report::Sets(SetsReport::new(f.width(), &sets)))
        }
        OracleCommand::Maximize { facets, weights } => {
            let f = load_facets(facets)?;
            let text = io::read_to_string(weights)?;
            let w = io::parse_weights(&text, f.width())?;
            let (value, x) = maximize(&f, &w)?;
            Ok(Report::Maximize(MaximizeReport {
                value,
                witness: x.to_vec(),
            }))
        }
    }
}

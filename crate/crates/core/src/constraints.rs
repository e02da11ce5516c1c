//! The splitting engine.
//!
//! Imposing a transversal constraint `X ∩ H ≠ ∅` on an `E` row yields a short
//! list of pairwise disjoint `E` rows whose union is exactly the members of
//! the input that satisfy the constraint. Noncover constraints `G ⊄ X` on `N`
//! rows are reduced to the transversal case by complementation.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::face::{FaceSet, GroundSet};
use crate::poly::CountVector;
use crate::rows::{Kind, Row, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `X ∩ H ≠ ∅`.
    Transversal(FaceSet),
    /// `G ⊄ X`.
    Noncover(FaceSet),
}

impl Constraint {
    pub fn transversal(h: FaceSet) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::InvalidArgument("transversal constraint with empty set".into()));
        }
        Ok(Constraint::Transversal(h))
    }

    pub fn noncover(g: FaceSet) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::InvalidArgument("noncover constraint with empty set".into()));
        }
        Ok(Constraint::Noncover(g))
    }

    fn set(&self) -> &FaceSet {
        match self {
            Constraint::Transversal(s) | Constraint::Noncover(s) => s,
        }
    }

    fn kind(&self) -> Kind {
        match self {
            Constraint::Transversal(_) => Kind::E,
            Constraint::Noncover(_) => Kind::N,
        }
    }
}

/// A list of pairwise disjoint rows of one width and kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    ground: GroundSet,
    kind: Kind,
    rows: Vec<Row>,
}

impl Partition {
    /// Wraps rows that the caller knows to be pairwise disjoint. Widths and
    /// kinds are checked; disjointness is not (see
    /// [`Partition::is_pairwise_disjoint`]).
    pub fn new(ground: GroundSet, kind: Kind, rows: Vec<Row>) -> Result<Self> {
        for r in &rows {
            if r.width() != ground.size() {
                return Err(Error::WidthMismatch {
                    expected: ground.size(),
                    found: r.width(),
                });
            }
            if r.kind() != kind {
                return Err(Error::KindMismatch);
            }
        }
        Ok(Partition { ground, kind, rows })
    }

    pub fn empty(ground: GroundSet, kind: Kind) -> Self {
        Partition {
            ground,
            kind,
            rows: Vec::new(),
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn width(&self) -> usize {
        self.ground.size()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Row> {
        self.rows
    }

    /// Number of rows, `R`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub(crate) fn push(&mut self, r: Row) {
        debug_assert_eq!(r.width(), self.width());
        debug_assert_eq!(r.kind(), self.kind);
        self.rows.push(r);
    }

    /// Σ |r_i|.
    pub fn cardinality(&self) -> BigUint {
        self.rows.iter().map(Row::cardinality).sum()
    }

    /// Σ Card(r_i, k) for every `k`.
    pub fn card_k(&self) -> CountVector {
        let w = self.width();
        let mut acc = CountVector::zeros(w);
        for r in &self.rows {
            acc.add_assign(&r.card_k(w));
        }
        acc
    }

    pub fn contains(&self, x: &FaceSet) -> Result<bool> {
        for r in &self.rows {
            if r.contains(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Row-by-row complement: a partition of `{[w] \ X : X ∈ self}` of the
    /// dual kind.
    pub fn complement(&self) -> Partition {
        Partition {
            ground: self.ground,
            kind: self.kind.dual(),
            rows: self.rows.iter().map(Row::complement).collect(),
        }
    }

    /// Structural disjointness check: every pair of rows has an empty
    /// intersection. Quadratic in the number of rows.
    pub fn is_pairwise_disjoint(&self) -> bool {
        for (i, a) in self.rows.iter().enumerate() {
            for b in &self.rows[i + 1..] {
                match intersect_rows(a, b) {
                    Ok(v) if v.is_empty() => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Header line plus one rendered row per line.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w={} kind={} rows={}", self.width(), self.kind, self.rows.len())?;
        for r in &self.rows {
            write!(f, "\n{r}")?;
        }
        Ok(())
    }
}

/// Appends to `out` the disjoint rows making up `{X ∈ r : X ∩ h ≠ ∅}`.
///
/// Pivot order: the first bubble (by id) that overlaps `h` without being
/// contained in it; once no such bubble is left, the `Two` positions inside
/// `h` are taken together as one fresh bubble. For a bubble `B` with overlap
/// `P = B ∩ h` the sons are
/// `r⁺` (P becomes a fresh bubble, `B \ P` is freed to `Two`) and
/// `r⁻` (P is set to `0`, `B \ P` stays a bubble). `r⁺` satisfies the
/// constraint and is emitted first, `r⁻` is split further.
pub(crate) fn split_transversal(r: &Row, h: &FaceSet, out: &mut Vec<Row>) {
    debug_assert_eq!(r.kind(), Kind::E);
    let mut cur = r.clone();
    loop {
        let syms = cur.symbols();
        let hit_one = h.iter().any(|p| p <= syms.len() && syms[p - 1] == Symbol::One);
        if hit_one || cur.bubbles().iter().any(|b| b.is_subset(h)) {
            out.push(cur);
            return;
        }
        let pivot = cur
            .bubbles()
            .iter()
            .enumerate()
            .find(|(_, b)| b.intersects(h))
            .map(|(j, b)| (j, b.intersection(h)));
        match pivot {
            Some((j, overlap)) => {
                let bubble = &cur.bubbles()[j];
                let rest = bubble.difference(&overlap);

                // r⁺: X meets the overlap, the remainder of B is free
                let mut plus_syms = cur.symbols().to_vec();
                for p in &rest {
                    plus_syms[p - 1] = Symbol::Two;
                }
                let mut plus_bubbles: Vec<FaceSet> = cur
                    .bubbles()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != j)
                    .map(|(_, b)| b.clone())
                    .collect();
                plus_bubbles.push(overlap.clone());
                if let Some(plus) = Row::from_parts(Kind::E, plus_syms, plus_bubbles) {
                    out.push(plus);
                }

                // r⁻: X avoids the overlap, so B \ P must still be hit
                let mut minus_syms = cur.symbols().to_vec();
                for p in &overlap {
                    minus_syms[p - 1] = Symbol::Zero;
                }
                let minus_bubbles: Vec<FaceSet> = cur
                    .bubbles()
                    .iter()
                    .enumerate()
                    .map(|(i, b)| if i == j { rest.clone() } else { b.clone() })
                    .collect();
                match Row::from_parts(Kind::E, minus_syms, minus_bubbles) {
                    Some(minus) => cur = minus,
                    None => return,
                }
            }
            None => {
                let free = h.intersection(&cur.twos());
                if free.is_empty() {
                    return;
                }
                let mut bubbles = cur.bubbles().to_vec();
                bubbles.push(free);
                if let Some(done) = Row::from_parts(Kind::E, cur.symbols().to_vec(), bubbles) {
                    out.push(done);
                }
                return;
            }
        }
    }
}

fn check_set(r: &Row, s: &FaceSet) -> Result<()> {
    match s.last() {
        Some(m) if m > r.width() => Err(Error::WidthMismatch {
            expected: r.width(),
            found: m,
        }),
        _ => Ok(()),
    }
}

/// Disjoint `E` rows whose union is `{X ∈ r : X ∩ h ≠ ∅}`. An empty result is
/// legal.
pub fn impose_transversal(r: &Row, h: &FaceSet) -> Result<Vec<Row>> {
    if r.kind() != Kind::E {
        return Err(Error::KindMismatch);
    }
    check_set(r, h)?;
    let mut out = Vec::new();
    split_transversal(r, h, &mut out);
    Ok(out)
}

/// Disjoint `N` rows whose union is `{X ∈ r : g ⊄ X}`, via complementation.
pub fn impose_noncover(r: &Row, g: &FaceSet) -> Result<Vec<Row>> {
    if r.kind() != Kind::N {
        return Err(Error::KindMismatch);
    }
    check_set(r, g)?;
    let mut out = Vec::new();
    split_transversal(&r.complement(), g, &mut out);
    Ok(out.iter().map(Row::complement).collect())
}

/// Runs the transversal engine depth-first over a LIFO work stack of
/// `(row, next constraint)` pairs. Sons are pushed so that they are popped
/// in emission order, which makes the output order depth-first with `r⁺`
/// before `r⁻`.
pub(crate) fn run_transversal(start: Vec<Row>, sets: &[FaceSet], out: &mut Vec<Row>) {
    let mut stack: Vec<(Row, usize)> = start.into_iter().rev().map(|r| (r, 0)).collect();
    let mut sons = Vec::new();
    while let Some((row, next)) = stack.pop() {
        if next == sets.len() {
            out.push(row);
            continue;
        }
        sons.clear();
        split_transversal(&row, &sets[next], &mut sons);
        stack.extend(sons.drain(..).rev().map(|r| (r, next + 1)));
    }
}

/// Imposes every constraint on every start row. All constraints must be of
/// one kind (`Transversal` for `E` rows, `Noncover` for `N` rows).
pub fn impose_all(
    ground: GroundSet,
    kind: Kind,
    start: Vec<Row>,
    cs: &[Constraint],
) -> Result<Partition> {
    for r in &start {
        if r.width() != ground.size() {
            return Err(Error::WidthMismatch {
                expected: ground.size(),
                found: r.width(),
            });
        }
        if r.kind() != kind {
            return Err(Error::KindMismatch);
        }
    }
    for c in cs {
        if c.kind() != kind {
            return Err(Error::KindMismatch);
        }
        ground.check(c.set())?;
    }
    let sets: Vec<FaceSet> = cs.iter().map(|c| c.set().clone()).collect();
    let mut out = Vec::new();
    match kind {
        Kind::E => run_transversal(start, &sets, &mut out),
        Kind::N => {
            let start = start.iter().map(Row::complement).collect();
            run_transversal(start, &sets, &mut out);
            for r in out.iter_mut() {
                *r = r.complement();
            }
        }
    }
    Ok(Partition {
        ground,
        kind,
        rows: out,
    })
}

/// Disjoint rows whose union is the intersection of the member families of
/// `a` and `b`.
///
/// The fixed symbols of both rows are merged (a `0` against a `1` means the
/// intersection is empty), then every bubble of `a` and then of `b` is
/// imposed on the merged skeleton as a constraint.
pub fn intersect_rows(a: &Row, b: &Row) -> Result<Vec<Row>> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch {
            expected: a.width(),
            found: b.width(),
        });
    }
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch);
    }
    if a.kind() == Kind::N {
        let out = intersect_rows(&a.complement(), &b.complement())?;
        return Ok(out.iter().map(Row::complement).collect());
    }
    let mut skel = Vec::with_capacity(a.width());
    for (sa, sb) in a.symbols().iter().zip(b.symbols()) {
        let s = match (fixed(*sa), fixed(*sb)) {
            (Symbol::Zero, Symbol::One) | (Symbol::One, Symbol::Zero) => return Ok(Vec::new()),
            (Symbol::Zero, _) | (_, Symbol::Zero) => Symbol::Zero,
            (Symbol::One, _) | (_, Symbol::One) => Symbol::One,
            _ => Symbol::Two,
        };
        skel.push(s);
    }
    let start = Row::normalize(Kind::E, skel, 0)?.expect("no bubbles declared");
    let sets: Vec<FaceSet> = a.bubbles().iter().chain(b.bubbles()).cloned().collect();
    let mut out = Vec::new();
    run_transversal(alloc::vec![start], &sets, &mut out);
    Ok(out)
}

fn fixed(s: Symbol) -> Symbol {
    match s {
        Symbol::Bubble(_) => Symbol::Two,
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_positions(v.iter().copied()).unwrap()
    }

    fn row(s: &str) -> Row {
        Row::parse(s, Kind::E).unwrap()
    }

    fn strs(rows: &[Row]) -> Vec<alloc::string::String> {
        rows.iter().map(alloc::string::ToString::to_string).collect()
    }

    fn members(rows: &[Row], w: usize) -> Vec<u64> {
        let mut v = Vec::new();
        for m in 0u64..(1 << w) {
            let x = FaceSet::from_mask(m);
            let hits = rows.iter().filter(|r| r.contains(&x).unwrap()).count();
            assert!(hits <= 1, "member {x} appears in {hits} rows");
            if hits == 1 {
                v.push(m);
            }
        }
        v
    }

    #[test]
    fn powerset_of_f2() {
        // P(F_2) with H_1 = {3,4,9}
        let f2 = fs(&[1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14]);
        let r = Row::powerset(14, &f2);
        let out = impose_transversal(&r, &fs(&[3, 4, 9])).unwrap();
        assert_eq!(strs(&out), ["2 2 e1 e1 0 2 2 2 e1 0 2 2 2 2"]);
    }

    #[test]
    fn candidate_sons() {
        let r = row("2 2 0 0 0 e3 e3 0 1 1 e3 0 0 1");
        let out = impose_transversal(&r, &fs(&[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(
            strs(&out),
            ["2 2 0 0 0 e1 e1 0 1 1 2 0 0 1", "e1 e1 0 0 0 0 0 0 1 1 1 0 0 1"]
        );
    }

    #[test]
    fn already_satisfied() {
        let r = row("1 2 2 e1 e1");
        assert_eq!(impose_transversal(&r, &fs(&[1, 2])).unwrap(), core::slice::from_ref(&r));
        // a bubble inside H also satisfies it
        assert_eq!(impose_transversal(&r, &fs(&[4, 5])).unwrap(), core::slice::from_ref(&r));
        // nothing left to hit
        let z = row("0 0 2");
        assert!(impose_transversal(&z, &fs(&[1, 2])).unwrap().is_empty());
    }

    #[test]
    fn noncover_on_full_cube() {
        let r = Row::full(Kind::N, 4);
        let out = impose_noncover(&r, &fs(&[1, 4])).unwrap();
        let m = members(&out, 4);
        let expected: Vec<u64> = (0u64..16).filter(|x| x & 0b1001 != 0b1001).collect();
        assert_eq!(m, expected);
        assert_eq!(m.len(), 12);
    }

    #[test]
    fn noncover_already_violating_zero() {
        let r = Row::parse("0 2 2 2", Kind::N).unwrap();
        assert_eq!(impose_noncover(&r, &fs(&[1, 4])).unwrap(), core::slice::from_ref(&r));
    }

    #[test]
    fn three_generators_nine_sets() {
        let g = GroundSet::new(4).unwrap();
        let cs = [
            Constraint::noncover(fs(&[1, 4])).unwrap(),
            Constraint::noncover(fs(&[3, 4])).unwrap(),
            Constraint::noncover(fs(&[1, 2, 3])).unwrap(),
        ];
        let p = impose_all(g, Kind::N, alloc::vec![Row::full(Kind::N, 4)], &cs).unwrap();
        assert_eq!(p.cardinality().to_u64(), Some(9));
        let got = members(p.rows(), 4);
        let expected: Vec<u64> = (0u64..16)
            .filter(|x| x & 0b1001 != 0b1001 && x & 0b1100 != 0b1100 && x & 0b0111 != 0b0111)
            .collect();
        assert_eq!(got, expected);
        // the rows (n,n,1,0) and (n,2,0,n) cover the same sets
        let reference = [
            Row::parse("n1 n1 1 0", Kind::N).unwrap(),
            Row::parse("n1 2 0 n1", Kind::N).unwrap(),
        ];
        assert_eq!(members(&reference, 4), expected);
    }

    #[test]
    fn impose_all_trivial_cases() {
        let g = GroundSet::new(5).unwrap();
        let start = alloc::vec![row("1 2 e1 e1 0"), row("0 1 2 2 2")];
        let p = impose_all(g, Kind::E, start.clone(), &[]).unwrap();
        assert_eq!(p.rows(), &start[..]);
        let c = [Constraint::transversal(fs(&[1, 2])).unwrap()];
        let p = impose_all(g, Kind::E, start.clone(), &c).unwrap();
        assert_eq!(p.rows(), &start[..]);
        assert!(impose_all(g, Kind::N, start, &c).is_err());
    }

    #[test]
    fn table5_intersections() {
        let rbar1 = row("2 2 0 0 2 0 0 2 0 0 0 2 2 2");
        let rbar2 = row("2 2 e1 e1 0 0 0 2 e1 0 0 2 2 2");
        let r4p = row("2 2 e1 e1 2 0 0 0 e1 0 0 2 0 0");
        assert_eq!(
            strs(&intersect_rows(&rbar2, &r4p).unwrap()),
            ["2 2 e1 e1 0 0 0 0 e1 0 0 2 0 0"]
        );
        assert!(intersect_rows(&rbar1, &r4p).unwrap().is_empty());
        let a = row("e1 e1 2 1 e2 e2");
        let aa = intersect_rows(&a, &a).unwrap();
        let total: BigUint = aa.iter().map(Row::cardinality).sum();
        assert_eq!(total, a.cardinality());
    }

    #[test]
    fn width_errors() {
        let a = row("2 2");
        let b = row("2 2 2");
        assert!(matches!(intersect_rows(&a, &b), Err(Error::WidthMismatch { .. })));
        assert!(impose_transversal(&a, &fs(&[3])).is_err());
        assert!(Constraint::transversal(FaceSet::new()).is_err());
    }

    #[test]
    fn partition_dump() {
        let g = GroundSet::new(3).unwrap();
        let p = Partition::new(g, Kind::E, alloc::vec![row("1 e1 e1"), row("0 2 2")]).unwrap();
        assert_eq!(alloc::format!("{p}"), "w=3 kind=E rows=2\n1 e1 e1\n0 2 2");
        assert!(p.is_pairwise_disjoint());
        let q = Partition::new(g, Kind::E, alloc::vec![row("2 e1 e1"), row("0 2 2")]).unwrap();
        assert!(!q.is_pairwise_disjoint());
    }
}

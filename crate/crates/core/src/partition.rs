//! Partitioning a complex into wildcard rows, and what partitions buy:
//! linear optimization over all faces and partitions of links.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::complex::{oracle_membership, FacetFamily, NonfaceFamily};
use crate::constraints::{impose_all, intersect_rows, run_transversal, Constraint, Partition};
use crate::error::{Error, Result};
use crate::face::{antichain_reduce, FaceSet};
use crate::rows::{Kind, Row, Symbol};

/// Kind-`E` partition of the complex generated by `f`.
///
/// Row block `p` is `P(F_p)` made disjoint from `P(F_1) ∪ … ∪ P(F_{p−1})` by
/// imposing `X ∩ (W \ F_i) ≠ ∅` for `i = 1..p−1` in ascending order. The
/// first `R_1 + … + R_p` rows therefore partition the subcomplex generated
/// by the first `p` facets.
pub fn partition_from_facets(f: &FacetFamily) -> Partition {
    let w = f.width();
    let hs = f.complements();
    let mut p = Partition::empty(f.ground(), Kind::E);
    let mut out = Vec::new();
    for (q, facet) in f.facets().iter().enumerate() {
        out.clear();
        run_transversal(alloc::vec![Row::powerset(w, facet)], &hs[..q], &mut out);
        for r in out.drain(..) {
            p.push(r);
        }
    }
    p
}

/// Kind-`N` partition of all noncovers of the generators, i.e. of the
/// complex whose minimal non-faces they are.
pub fn partition_from_nonfaces(g: &NonfaceFamily) -> Partition {
    let cs: Vec<Constraint> = g
        .generators()
        .iter()
        .map(|x| Constraint::Noncover(x.clone()))
        .collect();
    impose_all(g.ground(), Kind::N, alloc::vec![Row::full(Kind::N, g.width())], &cs)
        .expect("generators are validated against the ground set")
}

/// A linear target `f: [w] → Z`, extended to sets by summation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetFunction {
    weights: Vec<i64>,
}

impl TargetFunction {
    /// `weights[i]` is the weight of position `i + 1`.
    pub fn new(weights: Vec<i64>) -> Self {
        TargetFunction { weights }
    }

    pub fn width(&self) -> usize {
        self.weights.len()
    }

    /// Weight of 1-based position `p`.
    pub fn weight(&self, p: usize) -> i64 {
        self.weights[p - 1]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn eval(&self, x: &FaceSet) -> i128 {
        x.iter().map(|p| self.weight(p) as i128).sum()
    }

    fn negated(&self) -> TargetFunction {
        TargetFunction {
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }
}

/// Best value of `f` over the members of one `E` row, with a witness.
///
/// Ones contribute their weight, free positions contribute when positive,
/// and a bubble takes all of its positive positions, or its single best
/// position (lowest index on ties) when none is positive.
pub fn row_maximum(r: &Row, f: &TargetFunction) -> (i128, FaceSet) {
    debug_assert_eq!(r.kind(), Kind::E);
    let mut value = 0i128;
    let mut witness = FaceSet::new();
    for (i, s) in r.symbols().iter().enumerate() {
        let p = i + 1;
        let wt = f.weight(p) as i128;
        match s {
            Symbol::One => {
                value += wt;
                witness.insert(p);
            }
            Symbol::Two if wt > 0 => {
                value += wt;
                witness.insert(p);
            }
            _ => {}
        }
    }
    for b in r.bubbles() {
        let positives: Vec<usize> = b.iter().filter(|&p| f.weight(p) > 0).collect();
        if positives.is_empty() {
            let best = b
                .iter()
                .max_by(|&a, &c| f.weight(a).cmp(&f.weight(c)).then(c.cmp(&a)))
                .expect("bubbles have at least two positions");
            value += f.weight(best) as i128;
            witness.insert(best);
        } else {
            for p in positives {
                value += f.weight(p) as i128;
                witness.insert(p);
            }
        }
    }
    (value, witness)
}

/// `max { f(X) : X in the partition }` and one face attaining it; the first
/// row attaining the maximum supplies the witness.
///
/// `N` partitions are handled by complementation:
/// `max f(X) = f([w]) + max { −f(Y) : Y in the complemented rows }`.
pub fn maximize(p: &Partition, f: &TargetFunction) -> Result<(i128, FaceSet)> {
    if p.is_empty() {
        return Err(Error::EmptyInput("cannot maximize over an empty partition"));
    }
    if f.width() != p.width() {
        return Err(Error::WidthMismatch {
            expected: p.width(),
            found: f.width(),
        });
    }
    let w = p.width();
    let mut best: Option<(i128, FaceSet)> = None;
    match p.kind() {
        Kind::E => {
            for r in p.rows() {
                let cand = row_maximum(r, f);
                if best.as_ref().is_none_or(|b| cand.0 > b.0) {
                    best = Some(cand);
                }
            }
        }
        Kind::N => {
            let neg = f.negated();
            let total: i128 = f.weights().iter().map(|&x| x as i128).sum();
            for r in p.rows() {
                let (v, y) = row_maximum(&r.complement(), &neg);
                let cand = (total + v, y.complement(w));
                if best.as_ref().is_none_or(|b| cand.0 > b.0) {
                    best = Some(cand);
                }
            }
        }
    }
    Ok(best.expect("partition is nonempty"))
}

/// `Disjoint(Δ, X) = {Y ∈ Δ : Y ∩ X = ∅}`, row by row.
pub fn disjoint_part(p: &Partition, x: &FaceSet) -> Partition {
    let mut out = Partition::empty(p.ground(), p.kind());
    for r in p.rows() {
        if r.ones().intersects(x) {
            continue;
        }
        let mut syms = r.symbols().to_vec();
        for q in x {
            syms[q - 1] = Symbol::Zero;
        }
        let row = match r.kind() {
            Kind::E => {
                if r.bubbles().iter().any(|b| b.is_subset(x)) {
                    continue;
                }
                let bubbles = r.bubbles().iter().map(|b| b.difference(x)).collect();
                Row::from_parts(Kind::E, syms, bubbles)
            }
            Kind::N => {
                // a zero inside the bubble settles it
                let mut bubbles = Vec::new();
                for b in r.bubbles() {
                    if b.intersects(x) {
                        for q in &b.difference(x) {
                            syms[q - 1] = Symbol::Two;
                        }
                    } else {
                        bubbles.push(b.clone());
                    }
                }
                Row::from_parts(Kind::N, syms, bubbles)
            }
        };
        if let Some(row) = row {
            out.push(row);
        }
    }
    out
}

/// `Minus(Δ, X) = {Z \ X : Z ∈ Δ, X ⊆ Z}`, row by row. `X` positions end
/// up as `0` in every output row.
pub fn minus_part(p: &Partition, x: &FaceSet) -> Partition {
    let mut out = Partition::empty(p.ground(), p.kind());
    for r in p.rows() {
        if r.zeros().intersects(x) {
            continue;
        }
        let mut syms = r.symbols().to_vec();
        let row = match r.kind() {
            Kind::E => {
                // a one inside the bubble settles it
                let mut bubbles = Vec::new();
                for b in r.bubbles() {
                    if b.intersects(x) {
                        for q in &b.difference(x) {
                            syms[q - 1] = Symbol::Two;
                        }
                    } else {
                        bubbles.push(b.clone());
                    }
                }
                for q in x {
                    syms[q - 1] = Symbol::Zero;
                }
                Row::from_parts(Kind::E, syms, bubbles)
            }
            Kind::N => {
                let bubbles = r.bubbles().iter().map(|b| b.difference(x)).collect();
                for q in x {
                    syms[q - 1] = Symbol::Zero;
                }
                Row::from_parts(Kind::N, syms, bubbles)
            }
        };
        if let Some(row) = row {
            out.push(row);
        }
    }
    out
}

/// The pieces of a link computation, kept for inspection.
#[derive(Debug, Clone)]
pub struct LinkParts {
    pub disjoint: Partition,
    pub minus: Partition,
    /// `(i, j, ρ_i ∩ σ_j)` for every pair, `i`-major, including empty ones.
    pub intersections: Vec<(usize, usize, Vec<Row>)>,
    pub link: Partition,
}

impl LinkParts {
    pub fn empty_intersections(&self) -> usize {
        self.intersections.iter().filter(|(_, _, v)| v.is_empty()).count()
    }
}

fn check_face(f: &FacetFamily, x: &FaceSet) -> Result<()> {
    f.ground().check(x)?;
    if !oracle_membership(f, x) {
        return Err(Error::NotAFace(x.to_string()));
    }
    Ok(())
}

/// `link_Δ(X)` from an existing partition of `Δ`, as
/// `⊎ { ρ_i ∩ σ_j }` over the rows of `Disjoint(Δ,X)` and `Minus(Δ,X)`.
pub fn link_parts(p: &Partition, f: &FacetFamily, x: &FaceSet) -> Result<LinkParts> {
    if p.width() != f.width() {
        return Err(Error::WidthMismatch {
            expected: f.width(),
            found: p.width(),
        });
    }
    check_face(f, x)?;
    let disjoint = disjoint_part(p, x);
    let minus = minus_part(p, x);
    let mut intersections = Vec::with_capacity(disjoint.len() * minus.len());
    let mut link = Partition::empty(p.ground(), p.kind());
    for (i, a) in disjoint.rows().iter().enumerate() {
        for (j, b) in minus.rows().iter().enumerate() {
            let rows = intersect_rows(a, b)?;
            for r in &rows {
                link.push(r.clone());
            }
            intersections.push((i, j, rows));
        }
    }
    Ok(LinkParts {
        disjoint,
        minus,
        intersections,
        link,
    })
}

pub fn link(p: &Partition, f: &FacetFamily, x: &FaceSet) -> Result<Partition> {
    Ok(link_parts(p, f, x)?.link)
}

/// Facets of `link_Δ(X)`: the maximal sets among `F_i \ X` over facets
/// containing `X`.
pub fn link_facets(f: &FacetFamily, x: &FaceSet) -> Result<FacetFamily> {
    check_face(f, x)?;
    let candidates: Vec<FaceSet> = f
        .facets()
        .iter()
        .filter(|g| x.is_subset(g))
        .map(|g| g.difference(x))
        .collect();
    FacetFamily::new(f.ground(), antichain_reduce(&candidates)?)
}

/// The alternative link route: recompute a partition from the link's own
/// facets.
pub fn link_via_facets(f: &FacetFamily, x: &FaceSet) -> Result<Partition> {
    Ok(partition_from_facets(&link_facets(f, x)?))
}

//! Simplicial complexes given by facets or by minimal non-faces, plus the
//! exhaustive oracles used to check everything else at desk scale.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::face::{FaceSet, GroundSet};
use crate::poly::CountVector;

pub use crate::face::antichain_reduce;

/// Largest ground set the exhaustive scans accept.
pub const ORACLE_MAX_W: usize = 22;

/// Largest intermediate family tolerated during Berge multiplication.
pub const DUALIZE_MAX_FAMILY: usize = 1 << 20;

/// A simplicial complex given by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetFamily {
    ground: GroundSet,
    facets: Vec<FaceSet>,
    dropped: usize,
}

impl FacetFamily {
    /// Validates the facets and removes any that are contained in another.
    /// The number of removed sets is kept in [`FacetFamily::dropped`].
    pub fn new(ground: GroundSet, facets: Vec<FaceSet>) -> Result<Self> {
        for f in &facets {
            ground.check(f)?;
        }
        let reduced = antichain_reduce(&facets)?;
        let dropped = facets.len() - reduced.len();
        Ok(FacetFamily {
            ground,
            facets: reduced,
            dropped,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn width(&self) -> usize {
        self.ground.size()
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    /// Number of facets, `h`.
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// How many input sets were removed because they were not maximal.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// `H_i = [w] \ F_i`.
    pub fn complements(&self) -> Vec<FaceSet> {
        let w = self.width();
        self.facets.iter().map(|f| f.complement(w)).collect()
    }

    /// Largest facet cardinality.
    pub fn dimension_bound(&self) -> usize {
        self.facets.iter().map(FaceSet::len).max().unwrap_or(0)
    }

    /// `X` is a face iff it lies in some facet.
    pub fn contains(&self, x: &FaceSet) -> bool {
        self.facets.iter().any(|f| x.is_subset(f))
    }
}

/// A simplicial complex given by its minimal non-faces `G_1..G_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonfaceFamily {
    ground: GroundSet,
    generators: Vec<FaceSet>,
}

impl NonfaceFamily {
    /// Validates the generators and drops any that contain another one.
    /// An empty generator list describes the full power set.
    pub fn new(ground: GroundSet, generators: Vec<FaceSet>) -> Result<Self> {
        for g in &generators {
            if g.is_empty() {
                return Err(Error::InvalidArgument("empty minimal non-face".into()));
            }
            ground.check(g)?;
        }
        Ok(NonfaceFamily {
            ground,
            generators: minimal_reduce(generators),
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn width(&self) -> usize {
        self.ground.size()
    }

    pub fn generators(&self) -> &[FaceSet] {
        &self.generators
    }

    /// `q`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `X` is a face iff it contains no generator.
    pub fn contains(&self, x: &FaceSet) -> bool {
        !self.generators.iter().any(|g| g.is_subset(x))
    }
}

/// Keeps the inclusion-minimal sets, first occurrence wins, input order kept.
fn minimal_reduce(sets: Vec<FaceSet>) -> Vec<FaceSet> {
    let mut out = Vec::with_capacity(sets.len());
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, t)| j != i && t.is_subset(s) && (s != t || j < i));
        if !dominated {
            out.push(s.clone());
        }
    }
    out
}

/// Exhaustive membership: `X ⊆ F_i` for some `i`.
pub fn oracle_membership(f: &FacetFamily, x: &FaceSet) -> bool {
    f.contains(x)
}

/// Exact f-vector by scanning all `2^w` subsets.
pub fn oracle_fvector(f: &FacetFamily) -> Result<CountVector> {
    let w = f.width();
    if w > ORACLE_MAX_W {
        return Err(Error::GuardExceeded {
            what: "ground set size for exhaustive scan",
            limit: ORACLE_MAX_W as u128,
            got: w as u128,
        });
    }
    let masks: Vec<u64> = f.facets().iter().map(|x| x.to_mask().unwrap()).collect();
    let mut counts = alloc::vec![0u64; w + 1];
    for x in 0u64..(1u64 << w) {
        if masks.iter().any(|m| x & !m == 0) {
            counts[x.count_ones() as usize] += 1;
        }
    }
    Ok(CountVector::from_entries(counts.into_iter().map(BigUint::from).collect()))
}

/// The minimal non-faces: minimal transversals of the facet complements,
/// by Berge multiplication with minimization after every step.
pub fn minimal_nonfaces(f: &FacetFamily) -> Result<NonfaceFamily> {
    let mut family: Vec<FaceSet> = alloc::vec![FaceSet::new()];
    for h in f.complements() {
        if h.is_empty() {
            // some facet is the whole ground set
            return NonfaceFamily::new(f.ground(), Vec::new());
        }
        let mut next = Vec::new();
        for t in &family {
            if t.intersects(&h) {
                next.push(t.clone());
            } else {
                for v in &h {
                    let mut u = t.clone();
                    u.insert(v);
                    next.push(u);
                }
            }
            if next.len() > DUALIZE_MAX_FAMILY {
                return Err(Error::GuardExceeded {
                    what: "intermediate transversal family",
                    limit: DUALIZE_MAX_FAMILY as u128,
                    got: next.len() as u128,
                });
            }
        }
        family = minimize_sorted(next);
    }
    family.sort();
    NonfaceFamily::new(f.ground(), family)
}

fn minimize_sorted(mut sets: Vec<FaceSet>) -> Vec<FaceSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<FaceSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// All `k`-element faces in lexicographic order.
///
/// Binary recursion on the lowest vertex `u` still present in a facet: the
/// branch `u ∈ X` continues with the facets through `u` (minus `u`) and
/// `k − 1`, the branch `u ∉ X` deletes `u` everywhere. Branches whose largest
/// facet is smaller than the remaining `k` are cut, so every explored node
/// leads to at least one face.
pub fn enumerate_k_faces(f: &FacetFamily, k: usize) -> Vec<FaceSet> {
    let mut out = Vec::new();
    let mut prefix = FaceSet::new();
    enumerate_rec(f.facets().to_vec(), k, &mut prefix, &mut out);
    out
}

fn enumerate_rec(facets: Vec<FaceSet>, k: usize, prefix: &mut FaceSet, out: &mut Vec<FaceSet>) {
    if k == 0 {
        out.push(prefix.clone());
        return;
    }
    if facets.iter().all(|x| x.len() < k) {
        return;
    }
    let u = facets.iter().filter_map(FaceSet::first).min().expect("a facet of size >= k");

    let mut with_u = Vec::new();
    let mut without_u = Vec::new();
    for x in facets {
        if x.contains(u) {
            let mut y = x;
            y.remove(u);
            with_u.push(y.clone());
            without_u.push(y);
        } else {
            without_u.push(x);
        }
    }

    prefix.insert(u);
    enumerate_rec(with_u, k - 1, prefix, out);
    prefix.remove(u);
    enumerate_rec(without_u, k, prefix, out);
}

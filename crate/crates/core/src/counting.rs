//! Face numbers and complex cardinalities.
//!
//! Three independent routes to `|SC|` live here or next door:
//! inclusion-exclusion over the facets, the transversal route
//! `f_k = C(w,k) − τ_k`, and summing row cardinalities of a partition of the
//! complex itself ([`crate::partition`]).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::complex::{FacetFamily, NonfaceFamily};
use crate::constraints::{run_transversal, Partition};
use crate::error::{Error, Result};
use crate::poly::{binomial_row, CountVector};
use crate::rows::{Kind, Row};

/// Largest facet count accepted by [`ie_cardinality`].
pub const IE_MAX_FACETS: usize = 25;

/// The complementary set filter `P(W) \ SC` as a disjoint union of `E` rows:
/// all transversals of `{H_i = W \ F_i}`, starting from the full cube and
/// imposing the constraints in facet order.
pub fn transversal_partition(f: &FacetFamily) -> Partition {
    let w = f.width();
    let hs = f.complements();
    let mut p = Partition::empty(f.ground(), Kind::E);
    if hs.iter().any(|h| h.is_empty()) {
        return p;
    }
    let mut out = Vec::new();
    run_transversal(alloc::vec![Row::full(Kind::E, w)], &hs, &mut out);
    for r in out {
        p.push(r);
    }
    p
}

/// `τ_k`, the number of `k`-element transversals of the facet complements.
pub fn tau_vector(f: &FacetFamily) -> CountVector {
    transversal_partition(f).card_k()
}

/// `f_0 = 1` and `f_k = C(w,k) − τ_k` for `1 ≤ k ≤ w`.
pub fn face_numbers(f: &FacetFamily) -> CountVector {
    face_numbers_from_tau(&tau_vector(f))
}

pub fn face_numbers_from_tau(tau: &CountVector) -> CountVector {
    let w = tau.width();
    let binom = binomial_row(w);
    let mut out = CountVector::zeros(w);
    out.set(0, BigUint::one());
    for k in 1..=w {
        out.set(k, &binom[k] - &tau[k]);
    }
    out
}

/// `|P(F_1) ∪ … ∪ P(F_h)|` by inclusion-exclusion over all nonempty facet
/// subsets.
///
/// Subsets are visited in Gray-code order. A per-vertex counter of chosen
/// facets and a histogram of those counters give `|∩_{i∈S} F_i|` as the
/// number of vertices whose counter equals `|S|`, so each step costs
/// `O(|F_i|)`.
pub fn ie_cardinality(f: &FacetFamily) -> Result<BigUint> {
    let h = f.len();
    if h > IE_MAX_FACETS {
        return Err(Error::GuardExceeded {
            what: "facet count for inclusion-exclusion",
            limit: IE_MAX_FACETS as u128,
            got: h as u128,
        });
    }
    let w = f.width();
    let members: Vec<Vec<usize>> = f.facets().iter().map(|x| x.to_vec()).collect();
    let mut count = alloc::vec![0usize; w + 1];
    let mut hist = alloc::vec![0usize; h + 1];
    hist[0] = w;
    let mut chosen = 0usize;
    let mut total = BigInt::zero();
    let mut gray = 0u64;
    for step in 1u64..(1u64 << h) {
        let bit = step.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let adding = gray & (1 << bit) != 0;
        for &v in &members[bit] {
            hist[count[v]] -= 1;
            if adding {
                count[v] += 1;
            } else {
                count[v] -= 1;
            }
            hist[count[v]] += 1;
        }
        if adding {
            chosen += 1;
        } else {
            chosen -= 1;
        }
        let term = BigInt::one() << hist[chosen];
        if chosen % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total.to_biguint().expect("a union has nonnegative size"))
}

/// The index sets of the potentially nonzero terms of an inclusion-exclusion
/// expansion over `m` properties, given the minimal generators of the
/// filter of index sets known to vanish. The result is a kind-`N` partition
/// of the complementary complex and includes `∅` (the `N_0` term).
pub fn ie_nonzero_terms(irrelevant: &NonfaceFamily) -> Partition {
    crate::partition::partition_from_nonfaces(irrelevant)
}

/// `N = N_0 + Σ_{k=1}^{m} (−1)^k g(k) f_k`.
///
/// `g` must provide a value for every `k` in `1..=m`; a missing entry is an
/// error rather than an implicit zero.
pub fn ie_symmetric(
    n0: &BigInt,
    g: &BTreeMap<usize, BigInt>,
    f: &CountVector,
    m: usize,
) -> Result<BigInt> {
    if f.len() < m + 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "face vector has {} entries, need {}",
            f.len(),
            m + 1
        )));
    }
    let mut n = n0.clone();
    for k in 1..=m {
        let gk = g.get(&k).ok_or(Error::MissingEntry(k))?;
        let term = gk * BigInt::from(f[k].clone());
        if k % 2 == 0 {
            n += term;
        } else {
            n -= term;
        }
    }
    Ok(n)
}

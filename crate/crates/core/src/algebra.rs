//! h-polynomials and reduced homology ranks over prime fields.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::complex::{enumerate_k_faces, FacetFamily};
use crate::counting::face_numbers;
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::poly::{binomial, CountVector, Poly};

/// Largest total face count accepted by [`homology_dims`].
pub const HOMOLOGY_MAX_FACES: u64 = 50_000;

/// Which h-polynomial formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HConvention {
    /// `Σ_{i=0}^{d} f_i t^i (1−t)^{d−i}` with `f_i` the number of faces of
    /// cardinality `i` (so `f_0 = 1` is the empty face).
    #[default]
    Standard,
    /// `Σ_{i=1}^{w} f_{i−1} t^i (1−t)^{w−i}`, taken literally with the same
    /// cardinality-indexed `f`; `d` is ignored.
    Verbatim,
}

fn one_minus_t_pow(n: usize) -> Poly {
    let coeffs = (0..=n)
        .map(|j| {
            let c = BigInt::from(binomial(n, j));
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// h-polynomial of a face vector.
pub fn h_polynomial(f: &CountVector, d: usize, convention: HConvention) -> Result<Poly> {
    match convention {
        HConvention::Standard => {
            let needed = f.top().unwrap_or(0);
            if needed > d {
                return Err(Error::DegreeTooSmall { degree: d, needed });
            }
            let mut h = Poly::zero();
            for i in 0..=d {
                let fi = BigInt::from(f.get(i));
                let term = one_minus_t_pow(d - i).scale(&fi);
                h = h.add(&shift(&term, i));
            }
            Ok(h)
        }
        HConvention::Verbatim => {
            let w = f.width();
            let mut h = Poly::zero();
            for i in 1..=w {
                let fi = BigInt::from(f.get(i - 1));
                let term = one_minus_t_pow(w - i).scale(&fi);
                h = h.add(&shift(&term, i));
            }
            Ok(h)
        }
    }
}

fn shift(p: &Poly, by: usize) -> Poly {
    let mut coeffs = alloc::vec![BigInt::default(); by];
    coeffs.extend(p.coeffs().iter().cloned());
    Poly::from_coeffs(coeffs)
}

/// Inverse of the standard transform: `f_i = Σ_{j≤i} C(d−j, i−j) h_j`.
pub fn f_from_h(h: &Poly, d: usize) -> Vec<BigInt> {
    (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| h.coeff(j) * BigInt::from(binomial(d - j, i - j)))
                .sum()
        })
        .collect()
}

/// Sparse matrix over `GF(p)`, stored by columns with ascending row indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, u64)>>,
    prime: u64,
}

impl SparseMatrix {
    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, u64)] {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// `self · other`.
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != other.rows || self.prime != other.prime {
            return Err(Error::InvalidArgument("incompatible matrices".into()));
        }
        let p = self.prime;
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
                for &(k, b) in col {
                    for &(i, a) in &self.cols[k] {
                        let e = acc.entry(i).or_insert(0);
                        *e = (*e + a * b) % p;
                    }
                }
                acc.into_iter().filter(|(_, v)| *v != 0).collect()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols,
            prime: p,
        })
    }

    /// Rank by column reduction on the lowest nonzero row.
    pub fn rank(&self) -> usize {
        let p = self.prime;
        let mut pivot_col: Vec<Option<Vec<(usize, u64)>>> = alloc::vec![None; self.rows];
        let mut rank = 0;
        for col in &self.cols {
            let mut c = col.clone();
            while let Some(&(low, v)) = c.last() {
                match &pivot_col[low] {
                    Some(pc) => {
                        let pv = pc.last().unwrap().1;
                        let factor = v * inv_mod(pv, p) % p;
                        c = axpy(&c, pc, p - factor, p);
                    }
                    None => {
                        pivot_col[low] = Some(c);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

/// `a + s·b` for sparse vectors mod `p`.
fn axpy(a: &[(usize, u64)], b: &[(usize, u64)], s: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (idx, val) = match (a.get(i), b.get(j)) {
            (Some(&(ia, va)), Some(&(ib, _))) if ia < ib => {
                i += 1;
                (ia, va)
            }
            (Some(&(ia, _)), Some(&(ib, vb))) if ib < ia => {
                j += 1;
                (ib, s * vb % p)
            }
            (Some(&(ia, va)), Some(&(_, vb))) => {
                i += 1;
                j += 1;
                (ia, (va + s * vb) % p)
            }
            (Some(&(ia, va)), None) => {
                i += 1;
                (ia, va)
            }
            (None, Some(&(ib, vb))) => {
                j += 1;
                (ib, s * vb % p)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((idx, val));
        }
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    // entries are multiplied in u64 without overflow below 2^32
    if !is_prime(p) || p >= 1 << 32 {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Boundary map from cardinality-`k` faces to cardinality-`(k−1)` faces,
/// both listed lexicographically: `δ(F) = Σ_j (−1)^j (F minus its j-th
/// smallest element)`, `j` counted from 0. `k = 0` gives the zero map out of
/// the span of `∅`.
pub fn boundary_from_faces(upper: &[FaceSet], lower: &[FaceSet], p: u64) -> Result<SparseMatrix> {
    check_prime(p)?;
    let index: BTreeMap<&FaceSet, usize> = lower.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut cols = Vec::with_capacity(upper.len());
    for face in upper {
        let mut col = Vec::with_capacity(face.len());
        for (j, v) in face.iter().enumerate() {
            let mut g = face.clone();
            g.remove(v);
            let row = *index
                .get(&g)
                .ok_or_else(|| Error::InvalidArgument(alloc::format!("{g} missing from lower faces")))?;
            let val = if j % 2 == 0 { 1 } else { p - 1 };
            col.push((row, val));
        }
        col.sort_unstable();
        col.retain(|e| e.1 != 0);
        cols.push(col);
    }
    Ok(SparseMatrix {
        rows: lower.len(),
        cols,
        prime: p,
    })
}

/// `δ_k` of the complex over `GF(p)`.
pub fn boundary_matrix(f: &FacetFamily, k: usize, p: u64) -> Result<SparseMatrix> {
    if k == 0 {
        check_prime(p)?;
        return Ok(SparseMatrix {
            rows: 0,
            cols: alloc::vec![Vec::new()],
            prime: p,
        });
    }
    let upper = enumerate_k_faces(f, k);
    let lower = enumerate_k_faces(f, k - 1);
    boundary_from_faces(&upper, &lower, p)
}

/// Reduced homology dimensions over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    pub prime: u64,
    /// `dims[k] = dim H̃_{k−1}`, for `k = 0..=` the largest facet size; the
    /// first entry is `H̃_{−1}`.
    pub dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_i`, zero outside the computed range.
    pub fn dim(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    /// `Σ_i (−1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Reduced homology ranks of the complex over `GF(p)`, as
/// `dim H̃_{k−1} = f_k − rank δ_k − rank δ_{k+1}`.
pub fn homology_dims(f: &FacetFamily, p: u64) -> Result<ReducedHomology> {
    check_prime(p)?;
    let fv = face_numbers(f);
    let total = fv.total().to_u64().unwrap_or(u64::MAX);
    if total > HOMOLOGY_MAX_FACES {
        return Err(Error::GuardExceeded {
            what: "face count for homology",
            limit: HOMOLOGY_MAX_FACES as u128,
            got: total as u128,
        });
    }
    let top = f.dimension_bound();
    let faces: Vec<Vec<FaceSet>> = (0..=top).map(|k| enumerate_k_faces(f, k)).collect();
    // ranks[k] = rank δ_k, with δ_0 = δ_{top+1} = 0
    let mut ranks = alloc::vec![0usize; top + 2];
    for k in 1..=top {
        ranks[k] = boundary_from_faces(&faces[k], &faces[k - 1], p)?.rank();
    }
    let dims = (0..=top)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    Ok(ReducedHomology { prime: p, dims })
}

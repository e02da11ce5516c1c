//! Ground sets and face sets.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// The ground set `[w] = {1, ..., w}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    w: usize,
}

impl GroundSet {
    pub fn new(w: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(GroundSet { w })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.w
    }

    /// The whole ground set as a face set.
    pub fn full(&self) -> FaceSet {
        FaceSet::full(self.w)
    }

    /// Checks that every member of `x` lies in `[1, w]`.
    pub fn check(&self, x: &FaceSet) -> Result<()> {
        match x.last() {
            Some(p) if p > self.w => Err(Error::PositionOutOfRange {
                position: p,
                width: self.w,
            }),
            _ => Ok(()),
        }
    }
}

const BITS: usize = 64;

/// A finite set of 1-based positions, stored as a bitset.
///
/// The block vector never carries trailing zero blocks, so derived equality
/// and hashing are set equality. Ordering is lexicographic on the ascending
/// member sequence (`{1,2} < {1,3} < {2}`), with a proper prefix first.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FaceSet {
    blocks: Vec<u64>,
}

impl FaceSet {
    pub fn new() -> Self {
        FaceSet { blocks: Vec::new() }
    }

    /// `{1, ..., w}`.
    pub fn full(w: usize) -> Self {
        let mut blocks = alloc::vec![u64::MAX; w / BITS];
        if !w.is_multiple_of(BITS) {
            blocks.push((1u64 << (w % BITS)) - 1);
        }
        FaceSet { blocks }
    }

    /// Builds a set from 1-based positions; position 0 is rejected.
    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Result<Self> {
        let mut s = FaceSet::new();
        for p in positions {
            if p == 0 {
                return Err(Error::PositionOutOfRange {
                    position: 0,
                    width: 0,
                });
            }
            s.insert(p);
        }
        Ok(s)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = FaceSet::new();
        for i in indices {
            s.insert(i + 1);
        }
        s
    }

    /// Low `w` bits of `mask`, bit `i` standing for position `i + 1`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = FaceSet { blocks: alloc::vec![mask] };
        s.trim();
        s
    }

    /// The inverse of [`FaceSet::from_mask`], for sets inside `[64]`.
    pub fn to_mask(&self) -> Option<u64> {
        match self.blocks.len() {
            0 => Some(0),
            1 => Some(self.blocks[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }

    #[inline]
    fn locate(p: usize) -> (usize, u64) {
        debug_assert!(p >= 1);
        let i = p - 1;
        (i / BITS, 1u64 << (i % BITS))
    }

    pub fn insert(&mut self, p: usize) {
        let (b, m) = Self::locate(p);
        if self.blocks.len() <= b {
            self.blocks.resize(b + 1, 0);
        }
        self.blocks[b] |= m;
    }

    pub fn remove(&mut self, p: usize) {
        let (b, m) = Self::locate(p);
        if b < self.blocks.len() {
            self.blocks[b] &= !m;
            self.trim();
        }
    }

    #[inline]
    pub fn contains(&self, p: usize) -> bool {
        if p == 0 {
            return false;
        }
        let (b, m) = Self::locate(p);
        self.blocks.get(b).is_some_and(|x| x & m != 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        let last = *self.blocks.last()?;
        Some((self.blocks.len() - 1) * BITS + (BITS - last.leading_zeros() as usize))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.blocks.len() <= other.blocks.len()
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &FaceSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &FaceSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &FaceSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union(&self, other: &FaceSet) -> FaceSet {
        let (long, short) = if self.blocks.len() >= other.blocks.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut blocks = long.blocks.clone();
        for (a, b) in blocks.iter_mut().zip(&short.blocks) {
            *a |= b;
        }
        FaceSet { blocks }
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        let mut s = FaceSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &FaceSet) -> FaceSet {
        let mut blocks = self.blocks.clone();
        for (a, b) in blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
        let mut s = FaceSet { blocks };
        s.trim();
        s
    }

    /// `[w] \ self`.
    pub fn complement(&self, w: usize) -> FaceSet {
        FaceSet::full(w).difference(self)
    }

    /// Ascending 1-based members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            block: 0,
            cur: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    blocks: &'a [u64],
    block: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.block * BITS + tz + 1);
            }
            self.block += 1;
            if self.block >= self.blocks.len() {
                return None;
            }
            self.cur = self.blocks[self.block];
        }
    }
}

impl<'a> IntoIterator for &'a FaceSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders as `{1,3,4}`.
impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Removes every set contained in another one. Among equal sets the first
/// survives; survivors keep their input order.
pub fn antichain_reduce(sets: &[FaceSet]) -> Result<Vec<FaceSet>> {
    if sets.is_empty() {
        return Err(Error::EmptyInput("antichain_reduce needs at least one set"));
    }
    let mut out = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets.iter().enumerate().any(|(j, t)| {
            j != i && s.is_subset(t) && (s != t || j < i)
        });
        if !dominated {
            out.push(s.clone());
        }
    }
    Ok(out)
}

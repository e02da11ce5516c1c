//! Brute-force reference implementations over `u64` masks. Bit `i` stands for
//! position `i + 1`. Nothing here calls into the row machinery.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use scrows::{FaceSet, FacetFamily, GroundSet, Kind, Row, Symbol};

pub fn mask(x: &FaceSet) -> u64 {
    x.to_mask().expect("test sets fit in 64 bits")
}

pub fn set(m: u64) -> FaceSet {
    FaceSet::from_mask(m)
}

pub fn fs(v: &[usize]) -> FaceSet {
    FaceSet::from_positions(v.iter().copied()).unwrap()
}

/// Members of a row, read straight off its symbol string.
pub fn row_members(r: &Row) -> Vec<u64> {
    let w = r.width();
    let syms = r.symbols();
    let mut groups: Vec<u64> = Vec::new();
    let (mut zeros, mut ones) = (0u64, 0u64);
    for (i, s) in syms.iter().enumerate() {
        match *s {
            Symbol::Zero => zeros |= 1 << i,
            Symbol::One => ones |= 1 << i,
            Symbol::Two => {}
            Symbol::Bubble(id) => {
                let id = id as usize;
                if groups.len() < id {
                    groups.resize(id, 0);
                }
                groups[id - 1] |= 1 << i;
            }
        }
    }
    (0..1u64 << w)
        .filter(|&x| {
            x & zeros == 0
                && x & ones == ones
                && groups.iter().all(|&g| match r.kind() {
                    Kind::E => x & g != 0,
                    Kind::N => x & g != g,
                })
        })
        .collect()
}

pub fn popcount_histogram(members: &[u64], w: usize) -> Vec<u64> {
    let mut h = vec![0u64; w + 1];
    for &x in members {
        h[x.count_ones() as usize] += 1;
    }
    h
}

/// Every member of every row, with multiplicity.
pub fn rows_members(rows: &[Row]) -> Vec<u64> {
    let mut v: Vec<u64> = rows.iter().flat_map(row_members).collect();
    v.sort_unstable();
    v
}

pub fn complex_members(facets: &[u64], w: usize) -> Vec<u64> {
    (0..1u64 << w)
        .filter(|&x| facets.iter().any(|&f| x & !f == 0))
        .collect()
}

pub fn random_row(rng: &mut ChaCha8Rng, w: usize, kind: Kind) -> Row {
    loop {
        let count = rng.gen_range(0..=3usize);
        let syms: Vec<Symbol> = (0..w)
            .map(|_| match rng.gen_range(0..4 + count) {
                0 => Symbol::Zero,
                1 => Symbol::One,
                2 | 3 => Symbol::Two,
                k => Symbol::Bubble((k - 3) as u32),
            })
            .collect();
        if let Some(r) = Row::normalize(kind, syms, count).unwrap() {
            return r;
        }
    }
}

pub fn random_subset(rng: &mut ChaCha8Rng, w: usize, density: f64) -> u64 {
    (0..w).fold(0u64, |acc, i| if rng.gen_bool(density) { acc | 1 << i } else { acc })
}

/// A facet family with `h` random facets over `[w]` (reduced on construction).
pub fn random_complex(rng: &mut ChaCha8Rng, w: usize, h: usize) -> FacetFamily {
    let density = rng.gen_range(0.3..0.8);
    let facets = (0..h).map(|_| set(random_subset(rng, w, density))).collect();
    FacetFamily::new(GroundSet::new(w).unwrap(), facets).unwrap()
}

pub fn facet_masks(f: &FacetFamily) -> Vec<u64> {
    f.facets().iter().map(mask).collect()
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

//! Wildcard rows and their set semantics.
//!
//! A row of width `w` assigns one [`Symbol`] per position. For an `E` row a
//! set `X ⊆ [w]` is a member iff it contains every `One` position, avoids every
//! `Zero` position and meets every bubble. For an `N` row the fixed symbols
//! mean the same thing and every bubble must contain at least one position
//! outside `X`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::poly::{CountVector, Poly};

/// Which bubble semantics a row uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Bubble = "at least one 1 here".
    E,
    /// Bubble = "at least one 0 here".
    N,
}

impl Kind {
    pub fn dual(self) -> Kind {
        match self {
            Kind::E => Kind::N,
            Kind::N => Kind::E,
        }
    }

    fn letter(self) -> char {
        match self {
            Kind::E => 'e',
            Kind::N => 'n',
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::E => "E",
            Kind::N => "N",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Two,
    /// 1-based bubble id.
    Bubble(u32),
}

/// A normalized wildcard row.
///
/// Every bubble has at least two positions and bubble ids are numbered
/// `1..=t` in order of first occurrence, so derived equality is equality of
/// the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Row {
    kind: Kind,
    syms: Vec<Symbol>,
    bubbles: Vec<FaceSet>,
}

impl Row {
    /// The all-`Two` row: every subset of `[w]`.
    pub fn full(kind: Kind, w: usize) -> Row {
        Row {
            kind,
            syms: alloc::vec![Symbol::Two; w],
            bubbles: Vec::new(),
        }
    }

    /// The `{0,2}` row of all subsets of `face`, as an `E` row.
    pub fn powerset(w: usize, face: &FaceSet) -> Row {
        let syms = (1..=w)
            .map(|p| if face.contains(p) { Symbol::Two } else { Symbol::Zero })
            .collect();
        Row {
            kind: Kind::E,
            syms,
            bubbles: Vec::new(),
        }
    }

    /// Normalizes an arbitrary symbol vector.
    ///
    /// `bubble_count` declares how many bubble ids exist; ids must lie in
    /// `1..=bubble_count`. Singleton `E` bubbles become `One`, singleton `N`
    /// bubbles become `Zero`, and ids are renumbered. Returns `None` (the empty
    /// row) when a declared bubble has no position at all.
    pub fn normalize(kind: Kind, syms: Vec<Symbol>, bubble_count: usize) -> Result<Option<Row>> {
        let mut bubbles = alloc::vec![FaceSet::new(); bubble_count];
        let mut fixed = syms;
        for (i, s) in fixed.iter_mut().enumerate() {
            if let Symbol::Bubble(id) = *s {
                let id = id as usize;
                if id == 0 || id > bubble_count {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "bubble id {id} outside 1..={bubble_count}"
                    )));
                }
                bubbles[id - 1].insert(i + 1);
                *s = Symbol::Two;
            }
        }
        Ok(Row::from_parts(kind, fixed, bubbles))
    }

    /// Builds a row from fixed symbols (bubble positions may hold anything)
    /// and a list of bubble position sets. Bubbles are written over the
    /// symbol vector; singleton bubbles are resolved and empty ones make the
    /// whole row empty.
    pub(crate) fn from_parts(kind: Kind, mut syms: Vec<Symbol>, bubbles: Vec<FaceSet>) -> Option<Row> {
        let mut kept: Vec<FaceSet> = Vec::with_capacity(bubbles.len());
        for b in bubbles {
            match b.len() {
                0 => return None,
                1 => {
                    let p = b.first().unwrap();
                    syms[p - 1] = match kind {
                        Kind::E => Symbol::One,
                        Kind::N => Symbol::Zero,
                    };
                }
                _ => kept.push(b),
            }
        }
        // first-occurrence numbering
        kept.sort_by_key(|b| b.first());
        for (j, b) in kept.iter().enumerate() {
            for p in b {
                syms[p - 1] = Symbol::Bubble(j as u32 + 1);
            }
        }
        Some(Row {
            kind,
            syms,
            bubbles: kept,
        })
    }

    pub fn width(&self) -> usize {
        self.syms.len()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.syms
    }

    /// Symbol at 1-based position `p`.
    pub fn symbol(&self, p: usize) -> Symbol {
        self.syms[p - 1]
    }

    /// Bubble position sets; entry `j` is bubble `j + 1`.
    pub fn bubbles(&self) -> &[FaceSet] {
        &self.bubbles
    }

    fn positions_of(&self, sym: Symbol) -> FaceSet {
        FaceSet::from_indices(
            self.syms
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == sym)
                .map(|(i, _)| i),
        )
    }

    pub fn zeros(&self) -> FaceSet {
        self.positions_of(Symbol::Zero)
    }

    pub fn ones(&self) -> FaceSet {
        self.positions_of(Symbol::One)
    }

    pub fn twos(&self) -> FaceSet {
        self.positions_of(Symbol::Two)
    }

    fn count(&self, sym: Symbol) -> usize {
        self.syms.iter().filter(|s| **s == sym).count()
    }

    /// Membership test.
    pub fn contains(&self, x: &FaceSet) -> Result<bool> {
        if let Some(m) = x.last() {
            if m > self.width() {
                return Err(Error::WidthMismatch {
                    expected: self.width(),
                    found: m,
                });
            }
        }
        for (i, s) in self.syms.iter().enumerate() {
            let inside = x.contains(i + 1);
            match s {
                Symbol::Zero if inside => return Ok(false),
                Symbol::One if !inside => return Ok(false),
                _ => {}
            }
        }
        let bubbles_ok = self.bubbles.iter().all(|b| match self.kind {
            Kind::E => b.intersects(x),
            Kind::N => !b.is_subset(x),
        });
        Ok(bubbles_ok)
    }

    /// `|r| = 2^γ · Π (2^ε_j − 1)`, for either kind.
    pub fn cardinality(&self) -> BigUint {
        let mut acc = BigUint::one() << self.count(Symbol::Two);
        for b in &self.bubbles {
            acc *= (BigUint::one() << b.len()) - 1u32;
        }
        acc
    }

    /// Number of members of each cardinality `k ≤ upto`; entries above
    /// `upto` are left at zero. The result always has `w + 1` entries.
    ///
    /// Entry `k` is the coefficient of `x^(k−β)` in
    /// `(1+x)^γ · Π P_j(x)`, with `P_j = (1+x)^ε − 1` for `E` bubbles and
    /// `P_j = (1+x)^ε − x^ε` for `N` bubbles.
    pub fn card_k(&self, upto: usize) -> CountVector {
        let w = self.width();
        let upto = upto.min(w);
        let mut out = CountVector::zeros(w);
        let beta = self.count(Symbol::One);
        if upto < beta {
            return out;
        }
        let cap = upto - beta;
        let mut gf = Poly::one_plus_x_pow(self.count(Symbol::Two), cap);
        for b in &self.bubbles {
            let eps = b.len();
            let full = Poly::one_plus_x_pow(eps, cap);
            let factor = match self.kind {
                Kind::E => full.sub(&Poly::one()),
                Kind::N if eps <= cap => full.sub(&Poly::monomial(BigInt::one(), eps)),
                Kind::N => full,
            };
            gf = gf.mul_capped(&factor, cap);
        }
        for (d, c) in gf.coeffs().iter().enumerate() {
            // coefficients of a product of nonnegative counting series
            out.set(beta + d, c.to_biguint().unwrap_or_default());
        }
        out
    }

    /// Swaps `Zero` and `One` and flips the kind. Members of the result are
    /// exactly the complements `[w] \ X` of members `X` of `self`.
    pub fn complement(&self) -> Row {
        let syms = self
            .syms
            .iter()
            .map(|s| match s {
                Symbol::Zero => Symbol::One,
                Symbol::One => Symbol::Zero,
                other => *other,
            })
            .collect();
        Row {
            kind: self.kind.dual(),
            syms,
            bubbles: self.bubbles.clone(),
        }
    }

    /// Parses the whitespace-separated rendering produced by `Display`.
    ///
    /// Bubble tokens are `e<id>` / `n<id>` (a bare `e` or `n` means id 1).
    /// The kind is taken from the bubble letters; rows without bubbles get
    /// `default_kind`.
    pub fn parse(text: &str, default_kind: Kind) -> Result<Row> {
        let mut kind: Option<Kind> = None;
        let mut syms = Vec::new();
        let mut max_id = 0usize;
        for tok in text.split_whitespace() {
            let sym = match tok {
                "0" => Symbol::Zero,
                "1" => Symbol::One,
                "2" => Symbol::Two,
                _ => {
                    let (k, rest) = match tok.as_bytes()[0] {
                        b'e' => (Kind::E, &tok[1..]),
                        b'n' => (Kind::N, &tok[1..]),
                        _ => return Err(Error::Parse(alloc::format!("bad row symbol `{tok}`"))),
                    };
                    if kind.is_some_and(|prev| prev != k) {
                        return Err(Error::Parse("row mixes e and n bubbles".to_string()));
                    }
                    kind = Some(k);
                    let id: usize = if rest.is_empty() {
                        1
                    } else {
                        rest.parse()
                            .map_err(|_| Error::Parse(alloc::format!("bad bubble id `{tok}`")))?
                    };
                    if id == 0 {
                        return Err(Error::Parse(alloc::format!("bad bubble id `{tok}`")));
                    }
                    max_id = max_id.max(id);
                    Symbol::Bubble(id as u32)
                }
            };
            syms.push(sym);
        }
        if syms.is_empty() {
            return Err(Error::Parse("empty row".to_string()));
        }
        let kind = kind.unwrap_or(default_kind);
        // gaps in the numbering are allowed on input and simply renumbered
        let mut used = alloc::vec![false; max_id];
        for s in &syms {
            if let Symbol::Bubble(id) = s {
                used[*id as usize - 1] = true;
            }
        }
        let mut remap = alloc::vec![0u32; max_id];
        let mut next = 0u32;
        for (i, u) in used.iter().enumerate() {
            if *u {
                next += 1;
                remap[i] = next;
            }
        }
        let syms = syms
            .into_iter()
            .map(|s| match s {
                Symbol::Bubble(id) => Symbol::Bubble(remap[id as usize - 1]),
                other => other,
            })
            .collect();
        Row::normalize(kind, syms, next as usize)?
            .ok_or_else(|| Error::Parse("row is empty".to_string()))
    }

    /// The row rendering as a `String`, e.g. `2 2 e1 e1 0`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Cardinality as `u64` when it fits.
    pub fn cardinality_u64(&self) -> Option<u64> {
        self.cardinality().to_u64()
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match s {
                Symbol::Zero => f.write_str("0")?,
                Symbol::One => f.write_str("1")?,
                Symbol::Two => f.write_str("2")?,
                Symbol::Bubble(id) => write!(f, "{}{}", self.kind.letter(), id)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_positions(v.iter().copied()).unwrap()
    }

    fn row(s: &str) -> Row {
        Row::parse(s, Kind::E).unwrap()
    }

    // rows of the worked transversal example
    const TABLE1_R1: &str = "2 2 e1 e1 e2 e3 e3 e4 2 e2 e3 e3 e4 e4";
    const TABLE1_R6: &str = "e1 e1 0 0 0 0 0 0 1 1 2 1 e2 e2";

    #[test]
    fn member_of_r1() {
        let r = row(TABLE1_R1);
        assert!(r.contains(&fs(&[1, 3, 4, 5, 6, 13, 14])).unwrap());
        assert!(!r.contains(&fs(&[1, 2])).unwrap());
    }

    #[test]
    fn trivial_membership() {
        let r = Row::full(Kind::E, 5);
        assert!(r.contains(&FaceSet::new()).unwrap());
        assert!(r.contains(&fs(&[1, 5])).unwrap());
        let b = row("e1 e1 2");
        assert!(!b.contains(&FaceSet::new()).unwrap());
        assert!(matches!(
            b.contains(&fs(&[4])),
            Err(Error::WidthMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn cardinalities() {
        assert_eq!(row(TABLE1_R1).cardinality(), BigUint::from(7560u32));
        assert_eq!(Row::full(Kind::E, 20).cardinality(), BigUint::from(1u32 << 20));
        assert_eq!(row("e1 e1 e1").cardinality(), BigUint::from(7u32));
        assert_eq!(Row::full(Kind::N, 200).cardinality(), BigUint::one() << 200);
    }

    #[test]
    fn card_k_examples() {
        let r6 = row(TABLE1_R6);
        let c = r6.card_k(14);
        assert_eq!(c[8], BigUint::from(1u32));
        assert_eq!(c[6], BigUint::from(8u32));
        assert_eq!(Row::full(Kind::E, 3).card_k(3)[2], BigUint::from(3u32));
        // capped entries stay zero
        assert_eq!(r6.card_k(5)[6], BigUint::from(0u8));
    }

    #[test]
    fn table1_r1_column() {
        // Card(r_1, k) for k = 0..=14
        let expected = [0u64, 0, 0, 0, 48, 312, 916, 1606, 1868, 1509, 858, 339, 89, 14, 1];
        assert_eq!(row(TABLE1_R1).card_k(14), CountVector::from_u64s(&expected));
    }

    #[test]
    fn complement_examples() {
        let r = row("1 0 2 e1 e1");
        let c = r.complement();
        assert_eq!(c.kind(), Kind::N);
        assert_eq!(c.to_string(), "0 1 2 n1 n1");
        assert_eq!(c.complement(), r);
        assert_eq!(c.cardinality(), r.cardinality());
    }

    #[test]
    fn normalize_examples() {
        use Symbol::*;
        let e = Row::normalize(Kind::E, alloc::vec![Two, Two, Two, Two, Bubble(1)], 1)
            .unwrap()
            .unwrap();
        assert_eq!(e.to_string(), "2 2 2 2 1");
        let n = Row::normalize(Kind::N, alloc::vec![Two, Two, Two, Two, Bubble(1)], 1)
            .unwrap()
            .unwrap();
        assert_eq!(n.to_string(), "2 2 2 2 0");
        let already = row("e1 e1 2 e2 e2");
        let again = Row::normalize(Kind::E, already.symbols().to_vec(), 2).unwrap().unwrap();
        assert_eq!(again, already);
        // a declared bubble with no positions empties the row
        assert_eq!(Row::normalize(Kind::E, alloc::vec![Two, Bubble(1)], 2).unwrap(), None);
        // renumbering by first occurrence
        let r = Row::normalize(Kind::E, alloc::vec![Bubble(2), Bubble(1), Bubble(2), Bubble(1)], 2)
            .unwrap()
            .unwrap();
        assert_eq!(r.to_string(), "e1 e2 e1 e2");
    }

    #[test]
    fn parse_round_trip() {
        let text = "2 2 e1 e1 0 2 2 2 e1 0 2 2 2 2";
        assert_eq!(row(text).to_string(), text);
        assert_eq!(row("e e 0").to_string(), "e1 e1 0");
        assert_eq!(row("e3 e3 0 e5 e5").to_string(), "e1 e1 0 e2 e2");
        assert!(Row::parse("e1 n1", Kind::E).is_err());
        assert!(Row::parse("3", Kind::E).is_err());
        assert!(Row::parse("", Kind::E).is_err());
    }
}
